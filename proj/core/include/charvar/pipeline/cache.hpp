#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace charvar {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

/// Persistent store for intermediate polynomials, keyed by (n, stage) and
/// the cache format version. Each entry carries a content hash that is
/// checked on read.
class PolyCache {
 public:
  static constexpr int kVersion = 1;

  explicit PolyCache(std::filesystem::path dir, int version = kVersion);

  std::optional<std::string> load(int n, const std::string& stage);
  void store(int n, const std::string& stage, const std::string& text);

  /// Messages about corrupt entries seen so far.
  std::vector<std::string> warnings() const;

  std::filesystem::path entry_path(int n, const std::string& stage) const;

 private:
  std::filesystem::path dir_;
  int version_;
  mutable std::mutex mu_;
  std::vector<std::string> warnings_;
};

}  // namespace charvar
