#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "charvar/pipeline/pipeline.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("charvar-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(PolyCache, StoreThenLoad) {
  TempDir dir;
  PolyCache cache(dir.path());
  EXPECT_FALSE(cache.load(1, "ftilde"));
  cache.store(1, "ftilde", testref::kWhiteheadTrace);
  auto got = cache.load(1, "ftilde");
  ASSERT_TRUE(got);
  EXPECT_EQ(*got, testref::kWhiteheadTrace);
  EXPECT_TRUE(cache.warnings().empty());
}

TEST(PolyCache, VersionBumpMisses) {
  TempDir dir;
  PolyCache(dir.path(), 1).store(1, "ftilde", "z");
  EXPECT_FALSE(PolyCache(dir.path(), 2).load(1, "ftilde"));
}

TEST(PolyCache, TamperedEntryIsRejectedAndRecomputed) {
  TempDir dir;
  PolyCache cache(dir.path());
  PipelineOptions opts;
  opts.cache = &cache;
  SurfaceReport first = run_pipeline(PipelineSpec::surgery(1), opts);
  auto path = cache.entry_path(1, "ftilde");
  {
    std::ofstream out(path, std::ios::app);
    out << "+x";
  }
  SurfaceReport second = run_pipeline(PipelineSpec::surgery(1), opts);
  EXPECT_EQ(cache.warnings().size(), 1u);
  EXPECT_EQ(to_json(first).dump(), to_json(second).dump());
  auto healed = cache.load(1, "ftilde");
  ASSERT_TRUE(healed);
  EXPECT_EQ(*healed, first.ftilde->to_string());
}

TEST(Pipeline, WhiteheadReport) {
  SurfaceReport r = run_pipeline(PipelineSpec::surgery(1));
  EXPECT_TRUE(r.failures.empty());
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(*r.verdict(), "P2 blown up at 10 points");
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_TRUE(r.components[0].canonical_annotated);
  auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["outcome"], "complete");
  EXPECT_EQ(j["components"][0]["conic_bundle"]["classification"]["chi_smooth"], 13);
}

TEST(Pipeline, PolynomialInput) {
  SurfaceReport r = run_pipeline(PipelineSpec::polynomial(testref::kSurgery2Trace));
  EXPECT_TRUE(r.failures.empty());
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(*r.verdict(), "P2 blown up at 7 points");
  const auto& cls = *r.components.at(0).bundle->classification;
  EXPECT_EQ(cls.chi_singular, 8);
  EXPECT_EQ(cls.chi_smooth, 10);
}

TEST(Pipeline, AbelianWord) {
  SurfaceReport r = run_pipeline(PipelineSpec::word("b"));
  EXPECT_FALSE(r.nonabelian);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(to_json(r)["outcome"], "no nonabelian component");
}

TEST(Pipeline, StageFailuresAreStructured) {
  SurfaceReport bad = run_pipeline(PipelineSpec::polynomial("x^2 + w"));
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0].stage, "parse");
  EXPECT_EQ(bad.failures[0].kind, "ParseError");

  // A surface whose branch curve has a non-rational component: the Euler
  // stage fails but the singular points are still reported.
  SurfaceReport partial = run_pipeline(PipelineSpec::polynomial("x^2*z^2 + y^2 + x*y*z + x^2 + z^2 - 1"));
  bool euler_failed = false;
  for (const auto& f : partial.failures) euler_failed = euler_failed || f.stage == "component[0].euler";
  EXPECT_TRUE(euler_failed) << to_text(partial);
  ASSERT_EQ(partial.components.size(), 1u);
  EXPECT_TRUE(partial.components[0].bundle->singular_points.has_value());
  EXPECT_FALSE(partial.verdict());
}

TEST(Pipeline, BeyondValidatedRange) {
  PipelineOptions opts;
  opts.max_validated_n = 1;
  SurfaceReport r = run_pipeline(PipelineSpec::surgery(2), opts);
  EXPECT_TRUE(r.beyond_validated_range);
  EXPECT_NE(to_text(r).find("beyond validated range"), std::string::npos);
}

TEST(Pipeline, DeterministicJson) {
  auto a = to_json(run_pipeline(PipelineSpec::surgery(2))).dump();
  auto b = to_json(run_pipeline(PipelineSpec::surgery(2))).dump();
  EXPECT_EQ(a, b);
}

TEST(Tables, AllCellsMatch) {
  TablesReport t = cmd_tables();
  EXPECT_TRUE(t.all_match()) << to_text(t);
  EXPECT_EQ(t.rows.size(), 4u);
  std::string text = to_text(t);
  EXPECT_EQ(text.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(to_json(t)["all_match"], true);
}
