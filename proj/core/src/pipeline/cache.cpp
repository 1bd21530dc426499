#include "charvar/pipeline/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

PolyCache::PolyCache(std::filesystem::path dir, int version) : dir_(std::move(dir)), version_(version) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path PolyCache::entry_path(int n, const std::string& stage) const {
  return dir_ / ("v" + std::to_string(version_) + "-n" + std::to_string(n) + "-" + stage + ".poly");
}

std::optional<std::string> PolyCache::load(int n, const std::string& stage) {
  std::lock_guard lock(mu_);
  auto path = entry_path(n, stage);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::stringstream rest;
  rest << in.rdbuf();
  std::string body = rest.str();
  std::string expected = "charvar-cache " + std::to_string(version_) + " " + hex(fnv1a64(body));
  if (header != expected) {
    warnings_.push_back("cache entry " + path.string() + " failed its integrity check; recomputing");
    return std::nullopt;
  }
  return body;
}

void PolyCache::store(int n, const std::string& stage, const std::string& text) {
  std::lock_guard lock(mu_);
  auto path = entry_path(n, stage);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out << "charvar-cache " << version_ << " " << hex(fnv1a64(text)) << "\n" << text;
  }
  std::filesystem::rename(tmp, path);
}

std::vector<std::string> PolyCache::warnings() const {
  std::lock_guard lock(mu_);
  return warnings_;
}

}  // namespace charvar
