#include <filesystem>

#include "doctest.h"
#include "inlsfs/error.hpp"
#include "inlsfs/features.hpp"
#include "inlsfs/sha256.hpp"
#include "inlsfs/synth.hpp"

using namespace inlsfs;

namespace {

size_t col(std::string_view name) {
  const auto& names = feature_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  FAIL("no feature " << name);
  return 0;
}

}  // namespace

TEST_SUITE("features") {

TEST_CASE("33 named features in a fixed order") {
  CHECK(feature_names().size() == 33);
  CHECK(feature_names().front() == "caller_stmt");
  CHECK(feature_names().back() == "cs_n_const_args");
  std::string joined;
  for (auto n : feature_names()) joined += std::string(n) + "\n";
  CHECK(feature_ordering_hash() == sha256_hex(joined));
  std::vector<std::string> swapped(feature_names().begin(), feature_names().end());
  std::swap(swapped[0], swapped[1]);
  CHECK(feature_ordering_hash(swapped) != feature_ordering_hash());
}

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("feature values of a small project") {
  const char* src =
      "static inline int leaf(int a) { return a; }\n"
      "int mid(int a) {\n"
      "  for (int i = 0; i < a; i++) {\n"
      "    if (a) a = leaf(3);\n"
      "  }\n"
      "  return leaf(a);\n"
      "}\n"
      "int top(void) { return mid(1); }\n";
  SourceFacts facts = parse_source("f.c", src);
  Fcg g = build_fcg(facts);
  FeatureVector v = featurize("f.c:mid:2/leaf#1", g, facts);
  CHECK(v[col("caller_stmt")] == 4);
  CHECK(v[col("caller_for")] == 1);
  CHECK(v[col("caller_if")] == 1);
  CHECK(v[col("caller_return")] == 1);
  CHECK(v[col("caller_calling_times")] == 2);
  CHECK(v[col("caller_called_times")] == 1);
  CHECK(v[col("callee_stmt")] == 1);
  CHECK(v[col("callee_inline_kw")] == 1);
  CHECK(v[col("callee_static_kw")] == 1);
  CHECK(v[col("callee_called_times")] == 2);
  CHECK(v[col("callee_calling_times")] == 0);
  CHECK(v[col("cs_in_for")] == 1);
  CHECK(v[col("cs_in_if")] == 1);
  CHECK(v[col("cs_path_length")] == 2);
  CHECK(v[col("cs_n_args")] == 1);
  CHECK(v[col("cs_n_const_args")] == 1);
  CHECK_THROWS_AS(featurize("f.c:top:8/printf#1", g, facts), Error);
}

TEST_CASE("the callee block depends only on the callee") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    synth::Project p = synth::make_project(seed);
    FeatureTable t = featurize_all(p.g, p.facts);
    REQUIRE(t.rows.size() == p.g.edges().size());
    std::map<std::string, std::vector<double>> seen;
    for (size_t i = 0; i < t.rows.size(); ++i) {
      const FcgEdge& e = p.g.edges()[i];
      std::vector<double> block(t.rows[i].begin() + kFunctionBlockSize,
                                t.rows[i].begin() + 2 * kFunctionBlockSize);
      auto [it, fresh] = seen.emplace(e.callee_id, block);
      if (!fresh) CHECK(it->second == block);
      for (double x : t.rows[i]) CHECK(x >= 0);
    }
  }
}

TEST_CASE("feature table csv round-trip and validation") {
  synth::Project p = synth::make_project(4);
  FeatureTable t = featurize_all(p.g, p.facts);
  auto path = std::filesystem::temp_directory_path() / "inlsfs_features.csv";
  dump_feature_table(t, path);
  FeatureTable back = load_feature_table(path);
  CHECK(back.call_ids == t.call_ids);
  CHECK(back.rows == t.rows);
  CHECK(feature_ordering_hash(back.names) == feature_ordering_hash());
  CHECK_THROWS_AS(feature_table_from_csv("call_id,caller_stmt\nx,1\n"), SchemaError);
}

}  // TEST_SUITE
