#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "charvar/errors.hpp"
#include "charvar/pipeline/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStageFailure = 2;
constexpr int kExitTableMismatch = 3;

struct CommonFlags {
  std::string format = "text";
  std::string cache_dir;
  std::vector<std::int64_t> radicands;
};

std::unique_ptr<charvar::PolyCache> open_cache(const CommonFlags& f) {
  std::string dir = f.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CHARVAR_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<charvar::PolyCache>(dir);
}

void flush_warnings(const charvar::PolyCache* cache) {
  if (cache == nullptr) return;
  for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << "\n";
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--cache-dir", f.cache_dir, "Directory for cached intermediate polynomials (or CHARVAR_CACHE_DIR)");
  cmd->add_option("--radicands", f.radicands, "Admissible radicands d for Q(sqrt d); default admits all")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties of 1/n surgeries on the Borromean rings and their conic bundle components"};
  app.require_subcommand(1);

  CommonFlags pipeline_flags;
  std::optional<int> n;
  std::optional<std::string> word;
  std::optional<std::string> poly;
  auto* pipeline = app.add_subcommand("pipeline", "Run the full pipeline on one input");
  add_common(pipeline, pipeline_flags);
  auto* n_opt = pipeline->add_option("--n", n, "Surgery coefficient 1/n")->check(CLI::PositiveNumber);
  auto* word_opt = pipeline->add_option("--word", word, "Relator word in a, b, e.g. \"b a b^-1 a^-1\"");
  auto* poly_opt = pipeline->add_option("--poly", poly, "Trace polynomial in x, y, z");
  n_opt->excludes(word_opt)->excludes(poly_opt);
  word_opt->excludes(poly_opt);

  CommonFlags tables_flags;
  int max_n = 4;
  auto* tables = app.add_subcommand("tables", "Recompute both reference tables and diff them");
  add_common(tables, tables_flags);
  tables->add_option("--max-n", max_n, "Largest n to compute")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*pipeline && !n && !word && !poly) {
    std::cerr << "pipeline needs one of --n, --word, --poly\n";
    return kExitUsage;
  }

  try {
    if (*pipeline) {
      auto cache = open_cache(pipeline_flags);
      charvar::PipelineOptions opts;
      opts.policy.radicands = pipeline_flags.radicands;
      opts.cache = cache.get();
      charvar::PipelineSpec spec = n      ? charvar::PipelineSpec::surgery(*n)
                                   : word ? charvar::PipelineSpec::word(*word)
                                          : charvar::PipelineSpec::polynomial(*poly);
      charvar::SurfaceReport r = charvar::run_pipeline(spec, opts);
      flush_warnings(cache.get());
      if (pipeline_flags.format == "json") {
        std::cout << charvar::to_json(r).dump(2) << "\n";
      } else {
        std::cout << charvar::to_text(r);
      }
      if (!r.failures.empty()) {
        bool usage = r.failures.front().kind == "ParseError";
        return usage ? kExitUsage : kExitStageFailure;
      }
      return kExitOk;
    }
    auto cache = open_cache(tables_flags);
    charvar::PipelineOptions opts;
    opts.policy.radicands = tables_flags.radicands;
    opts.cache = cache.get();
    charvar::TablesReport t = charvar::cmd_tables(opts, max_n);
    flush_warnings(cache.get());
    if (tables_flags.format == "json") {
      std::cout << charvar::to_json(t).dump(2) << "\n";
    } else {
      std::cout << charvar::to_text(t);
    }
    return t.all_match() ? kExitOk : kExitTableMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStageFailure;
  }
}
