#include <filesystem>
#include <random>

#include "doctest.h"
#include "inlsfs/error.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/synth.hpp"
#include "oracles.hpp"

using namespace inlsfs;

namespace {

const char* kMergedCallee =
    "int C(void) { return 0; }\n"
    "int A(void) {\n"
    "  int x = C();\n"
    "  return x + B();\n"
    "}\n"
    "int B(void) {\n"
    "  return D();\n"
    "}\n"
    "int D(void) { return 1; }\n";

Label cell(const LabelColumn& col, const std::string& call_id) {
  auto it = col.cells.find(call_id);
  REQUIRE(it != col.cells.end());
  return it->second;
}

CompilationSetting gcc_o2() { return CompilationSetting::parse("gcc-8.2.0-O2"); }

}  // namespace

TEST_SUITE("labeler") {

TEST_CASE("single call into a merged function is inlined") {
  Fcg g = build_fcg(parse_source("a.c", kMergedCallee));
  MappingBundle b;
  b.setting = gcc_o2();
  b.func_map = {{"A", {"a.c:A:2", "a.c:C:1"}, {}}, {"B", {"a.c:B:6"}, {}}, {"D", {"a.c:D:9"}, {}}};
  b.line_map = {{0x10, "a.c", 4}, {0x20, "a.c", 7}};
  b.bin_callsites = {{"A", 0x10}, {"B", 0x20}};
  LabelColumn col = infer_labels(g, b);
  CHECK(cell(col, "a.c:A:2/C#1") == Label::kInlined);
  CHECK(cell(col, "a.c:A:2/B#1") == Label::kNotInlined);
  CHECK(cell(col, "a.c:B:6/D#1") == Label::kNotInlined);
  CHECK(col.setting == gcc_o2());
}

TEST_CASE("two calls to the same callee are split by the line rule") {
  Fcg g = build_fcg(parse_source("a.c", "int B(void) { return 0; }\nint A(void) {\n  int x = B();\n  return x + B();\n}\n"));
  MappingBundle b;
  b.setting = gcc_o2();
  b.func_map = {{"A", {"a.c:A:2", "a.c:B:1"}, {}}, {"B", {"a.c:B:1"}, {}}};
  b.line_map = {{0x10, "a.c", 4}};
  b.bin_callsites = {{"A", 0x10}};
  LabelColumn col = infer_labels(g, b);
  CHECK(cell(col, "a.c:A:2/B#1") == Label::kInlined);
  CHECK(cell(col, "a.c:A:2/B#2") == Label::kNotInlined);
}

TEST_CASE("call sites outside every mapping are unknown") {
  Fcg g = build_fcg(parse_source("a.c", kMergedCallee));
  MappingBundle b;
  b.setting = gcc_o2();
  b.func_map = {{"A", {"a.c:A:2", "a.c:C:1"}, {}}};
  LabelColumn col = infer_labels(g, b);
  CHECK(cell(col, "a.c:B:6/D#1") == Label::kUnknown);
}

TEST_CASE("unknown source functions are rejected") {
  Fcg g = build_fcg(parse_source("a.c", kMergedCallee));
  MappingBundle b;
  b.setting = gcc_o2();
  b.func_map = {{"A", {"a.c:A:2", "nowhere.c:Z:1"}, {}}};
  CHECK_THROWS_AS(infer_labels(g, b), Error);
}

TEST_CASE("random fixtures agree with the brute-force line rule") {
  std::mt19937_64 rng(42);
  auto roll = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 300; ++trial) {
    int n = roll(2, 6);
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back("f" + std::to_string(i));
    std::vector<FcgEdge> edges;
    int m = roll(1, 10);
    for (int k = 0; k < m; ++k) {
      FcgEdge e;
      e.edge_id = e.call_id = "c" + std::to_string(k);
      e.caller_id = nodes[static_cast<size_t>(roll(0, n - 1))];
      e.callee_id = nodes[static_cast<size_t>(roll(0, n - 1))];
      e.file = "x.c";
      e.line = roll(1, 8);  // collisions on purpose
      edges.push_back(e);
    }
    Fcg g(nodes, edges);
    MappingBundle b;
    b.setting = gcc_o2();
    int nb = roll(1, 4);
    std::uint64_t addr = 0x100;
    for (int i = 0; i < nb; ++i) {
      FunctionMapping fm;
      fm.binary_function = "b" + std::to_string(i);
      for (const std::string& id : nodes) {
        if (roll(0, 2) == 0) fm.sources.push_back(id);
      }
      if (fm.sources.empty()) fm.sources.push_back(nodes[static_cast<size_t>(roll(0, n - 1))]);
      int calls = roll(0, 3);
      for (int c = 0; c < calls; ++c) {
        addr += 4;
        b.bin_callsites.push_back({fm.binary_function, addr});
        b.line_map.push_back({addr, "x.c", roll(1, 8)});
      }
      b.func_map.push_back(fm);
    }
    LabelColumn col = infer_labels(g, b);
    auto expect = oracle::labels(g, b);
    for (const FcgEdge& e : g.edges()) {
      CHECK_MESSAGE(col.cells.at(e.call_id) == expect.at(e.call_id), "trial ", trial, " edge ", e.call_id);
    }
  }
}

TEST_CASE("labels recovered from simulated mappings match the simulator") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    synth::Project p = synth::make_project(seed);
    for (const CompilationSetting& s : synth::default_settings()) {
      auto d = synth::inline_decisions(p.g, p.facts, s);
      LabelColumn col = infer_labels(p.g, synth::compile(p.g, p.facts, s, d));
      for (const FcgEdge& e : p.g.edges()) {
        Label want = d.at(e.call_id) ? Label::kInlined : Label::kNotInlined;
        CHECK_MESSAGE(col.cells.at(e.call_id) == want, s.name(), " ", e.call_id);
      }
    }
  }
}

TEST_CASE("mapping bundle and label matrix files round-trip") {
  auto dir = std::filesystem::temp_directory_path() / "inlsfs_labeler";
  std::filesystem::create_directories(dir);
  synth::Project p = synth::make_project(2);
  std::vector<LabelColumn> cols;
  for (const CompilationSetting& s : synth::default_settings()) {
    MappingBundle b = synth::compile(p.g, p.facts, s, synth::inline_decisions(p.g, p.facts, s));
    dump_mapping_bundle(b, dir / "m.json");
    MappingBundle back = load_mapping_bundle(dir / "m.json");
    CHECK(mapping_bundle_to_json(back) == mapping_bundle_to_json(b));
    cols.push_back(infer_labels(p.g, back));
  }
  std::vector<std::string> rows;
  for (const FcgEdge& e : p.g.edges()) rows.push_back(e.call_id);
  LabelMatrix m = assemble_matrix(rows, cols);
  CHECK(m == synth::oracle_matrix(p.g, p.facts, synth::default_settings()));
  dump_label_matrix(m, dir / "labels.csv");
  CHECK(load_label_matrix(dir / "labels.csv") == m);
}

TEST_CASE("mapping setting accepts an object or a name") {
  const char* obj = R"({"setting":{"compiler_family":"clang","compiler_version":"7.0.0","opt_level":"O3"},
                       "func_map":[],"line_map":[],"bin_callsites":[]})";
  const char* str = R"({"setting":"clang-7.0.0-O3","func_map":[],"line_map":[],"bin_callsites":[]})";
  CHECK(mapping_bundle_from_json(obj).setting == mapping_bundle_from_json(str).setting);
  CHECK_THROWS_AS(mapping_bundle_from_json(R"({"setting":"icc-1-O2","func_map":[],"line_map":[],"bin_callsites":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(label_matrix_from_csv("call_id,gcc-8.2.0-O0\nx,2\n"), SchemaError);
}

}  // TEST_SUITE
