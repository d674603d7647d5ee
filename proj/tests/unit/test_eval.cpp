#include <random>

#include "doctest.h"
#include "inlsfs/error.hpp"
#include "inlsfs/eval.hpp"
#include "inlsfs/synth.hpp"
#include "oracles.hpp"

using namespace inlsfs;

namespace {

CompilationSetting S(const char* name) { return CompilationSetting::parse(name); }

LabelMatrix matrix(std::vector<std::string> rows, std::vector<CompilationSetting> cols,
                   const std::vector<std::string>& cells) {
  LabelMatrix m(std::move(rows), std::move(cols));
  for (size_t r = 0; r < cells.size(); ++r) {
    for (size_t c = 0; c < cells[r].size(); ++c) {
      char ch = cells[r][c];
      m.set(r, c, ch == '1' ? Label::kInlined : ch == '0' ? Label::kNotInlined : Label::kUnknown);
    }
  }
  return m;
}

LabelMatrix random_matrix(std::mt19937_64& rng, size_t rows, const std::vector<CompilationSetting>& cols,
                          bool allow_unknown) {
  std::vector<std::string> ids;
  for (size_t r = 0; r < rows; ++r) ids.push_back("c" + std::to_string(r));
  LabelMatrix m(ids, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      int roll = static_cast<int>(rng() % (allow_unknown ? 5 : 4));
      m.set(r, c, roll == 4 ? Label::kUnknown : roll < 2 ? Label::kInlined : Label::kNotInlined);
    }
  }
  return m;
}

Sfs sfs(std::vector<std::string> members) {
  Sfs s;
  s.root = members.front();
  s.members = std::move(members);
  return s;
}

GroundTruthSet gts(std::vector<std::string> members) {
  std::string root = members.front();
  std::sort(members.begin(), members.end());
  return {"bin_" + root, root, members};
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("perfect prediction scores 1") {
  std::mt19937_64 rng(1);
  LabelMatrix m = random_matrix(rng, 30, synth::default_settings(), true);
  MlcMetrics s = mlc_metrics(m, m);
  CHECK(s.precision == 1.0);
  CHECK(s.recall == 1.0);
  CHECK(s.f1 == 1.0);
}

TEST_CASE("all-negative prediction has zero recall") {
  LabelMatrix truth = matrix({"a", "b"}, {S("gcc-8.2.0-O2")}, {"1", "0"});
  LabelMatrix pred = matrix({"a", "b"}, {S("gcc-8.2.0-O2")}, {"0", "0"});
  MlcMetrics s = mlc_metrics(pred, truth);
  CHECK(s.labels[0].recall == 0.0);
  CHECK(s.recall == 0.0);
}

TEST_CASE("weighted F1 hand example") {
  // label 1: TP 2, FN 1 -> F1 0.8; label 2: TP 1, FP 3 -> F1 0.4
  std::vector<CompilationSetting> cols{S("gcc-8.2.0-O1"), S("gcc-8.2.0-O2")};
  LabelMatrix truth = matrix({"a", "b", "c", "d", "e", "f"}, cols, {"11", "10", "10", "00", "00", "00"});
  LabelMatrix pred = matrix({"a", "b", "c", "d", "e", "f"}, cols, {"11", "10", "00", "01", "01", "01"});
  MlcMetrics s = mlc_metrics(pred, truth);
  CHECK(s.labels[0].f1 == doctest::Approx(0.8));
  CHECK(s.labels[1].f1 == doctest::Approx(0.4));
  CHECK(s.f1 == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("unknown truth cells are skipped and missing predictions rejected") {
  std::vector<CompilationSetting> cols{S("gcc-8.2.0-O1")};
  LabelMatrix truth = matrix({"a", "b"}, cols, {"1", "?"});
  LabelMatrix pred = matrix({"a", "b"}, cols, {"1", "1"});
  CHECK(mlc_metrics(pred, truth).labels[0].fp == 0);
  CHECK_THROWS_AS(mlc_metrics(matrix({"b"}, cols, {"1"}), truth), Error);
  CHECK_THROWS_AS(mlc_metrics(matrix({"a", "b"}, {S("gcc-8.2.0-O2")}, {"1", "1"}), truth), Error);
}

TEST_CASE("mlc metrics agree with the oracle on random fixtures") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto cols = synth::default_settings();
    LabelMatrix truth = random_matrix(rng, 1 + rng() % 100, cols, true);
    LabelMatrix pred = random_matrix(rng, truth.num_rows(), cols, false);
    MlcMetrics s = mlc_metrics(pred, truth);
    oracle::Prf o = oracle::weighted_prf(pred, truth);
    CHECK(s.precision == doctest::Approx(o.p).epsilon(1e-12));
    CHECK(s.recall == doctest::Approx(o.r).epsilon(1e-12));
    CHECK(s.f1 == doctest::Approx(o.f1).epsilon(1e-12));
  }
}

TEST_CASE("sfs metrics examples") {
  std::vector<Sfs> gen{sfs({"A", "C", "E"}), sfs({"D", "E"})};
  std::vector<GroundTruthSet> gt{gts({"A", "C", "E"}), gts({"D", "E"})};
  SfsMetrics same = sfs_metrics(gen, gt);
  CHECK(same.precision_func == 1.0);
  CHECK(same.recall_func == 1.0);
  CHECK(same.precision_sfs == 1.0);
  CHECK(same.recall_sfs == 1.0);

  SfsMetrics partial = sfs_metrics({sfs({"A", "C"})}, {gts({"A", "C", "E"})});
  CHECK(partial.precision_sfs == 0.0);
  REQUIRE(partial.jaccard_unmatched.size() == 1);
  CHECK(partial.jaccard_unmatched[0] == doctest::Approx(2.0 / 3.0));
  CHECK(to_table(partial).find("Precision@Func") != std::string::npos);
  CHECK(to_table(same).find("100.00%") != std::string::npos);
}

TEST_CASE("sfs metrics agree with the oracle and swap symmetrically") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> names{"A", "B", "C", "D", "E", "F"};
  auto random_sets = [&](size_t count) {
    std::vector<std::vector<std::string>> out;
    for (size_t i = 0; i < count; ++i) {
      std::vector<std::string> m{names[rng() % 4]};
      for (const std::string& n : names) {
        if (n != m[0] && rng() % 3 == 0) m.push_back(n);
      }
      if (m.size() < 2) m.push_back(m[0] == "F" ? "E" : "F");
      out.push_back(m);
    }
    return out;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Sfs> gen;
    std::vector<GroundTruthSet> gt;
    for (auto& m : random_sets(rng() % 8)) gen.push_back(sfs(m));
    for (auto& m : random_sets(rng() % 8)) gt.push_back(gts(m));
    SfsMetrics s = sfs_metrics(gen, gt);
    oracle::SfsScores o = oracle::sfs_scores(gen, gt);
    CHECK(s.precision_func == doctest::Approx(o.pf));
    CHECK(s.recall_func == doctest::Approx(o.rf));
    CHECK(s.precision_sfs == doctest::Approx(o.ps));
    CHECK(s.recall_sfs == doctest::Approx(o.rs));
    CHECK(std::multiset<double>(s.jaccard_unmatched.begin(), s.jaccard_unmatched.end()) == o.jaccard);
    // swap sides
    std::vector<Sfs> gen2;
    std::vector<GroundTruthSet> gt2;
    for (const GroundTruthSet& g : gt) gen2.push_back(Sfs{g.root, g.members, {}, {}});
    for (const Sfs& g : gen) gt2.push_back({"b", g.root, g.members});
    SfsMetrics w = sfs_metrics(gen2, gt2);
    CHECK(w.precision_func == doctest::Approx(s.recall_func));
    CHECK(w.recall_func == doctest::Approx(s.precision_func));
    CHECK(s.precision_func >= 0);
    CHECK(s.precision_func <= 1);
  }
}

TEST_CASE("ground truth roots come from names or explicit fields") {
  SourceFacts f = parse_source("g.c", "int A(void) { return B(); }\nint B(void) { return 0; }\nint X(void) { return 0; }\n");
  MappingBundle b;
  b.setting = S("gcc-8.2.0-O2");
  b.func_map = {{"A", {"g.c:A:1", "g.c:B:2"}, {}},
                {"merged", {"g.c:B:2", "g.c:X:3"}, {}},
                {"Y", {"g.c:B:2", "g.c:X:3"}, std::string("g.c:X:3")},
                {"X", {"g.c:X:3"}, {}}};
  GroundTruth gt = ground_truth_sets(b, f);
  REQUIRE(gt.sets.size() == 2);
  CHECK(gt.sets[0].root == "g.c:A:1");
  CHECK(gt.sets[1].root == "g.c:X:3");
  CHECK(gt.unresolved == std::vector<std::string>{"merged"});
}

TEST_CASE("opt correlation counts") {
  std::vector<CompilationSetting> cols{S("gcc-8.2.0-O1"), S("gcc-8.2.0-O2")};
  LabelMatrix nested = matrix({"a", "b", "c", "d"}, cols, {"11", "01", "00", "?1"});
  OptCorrelationTable t = correlation_opts(nested, CompilerFamily::kGcc);
  REQUIRE(t.pairs.size() == 1);
  CHECK(t.pairs[0].only1 == 0);
  CHECK(t.pairs[0].both == 1);
  CHECK(t.pairs[0].only2 == 1);
  CHECK(t.pairs[0].common_rows == 3);
  CHECK(t.nested_ratio() == 1.0);
  CHECK_THROWS_AS(correlation_opts(nested, CompilerFamily::kClang), Error);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    LabelMatrix m = random_matrix(rng, 20, synth::default_settings(), true);
    OptCorrelationTable ct = correlation_opts(m, CompilerFamily::kClang);
    CHECK(ct.pairs.size() == 6);
    int sb = 0, sl = 0;
    for (const OptCorrelation& p : ct.pairs) {
      CompilationSetting a{CompilerFamily::kClang, "7.0.0", p.opt1};
      CompilationSetting b{CompilerFamily::kClang, "7.0.0", p.opt2};
      auto [o1, both, o2] = oracle::opt_counts(m, a, b);
      CHECK(p.only1 == o1);
      CHECK(p.both == both);
      CHECK(p.only2 == o2);
      sb += both;
      sl += o1 + both;
    }
    CHECK(ct.sum_both == sb);
    CHECK(ct.sum_lower == sl);
    CHECK(correlation_compilers(m, S("gcc-8.2.0-O0"), S("clang-7.0.0-O0")).jaccard() ==
          doctest::Approx(oracle::compiler_jaccard(m, "gcc-8.2.0", "clang-7.0.0")));
  }
}

TEST_CASE("sfs size") {
  CHECK(sfs_size(3, 12) == 0.25);
  CHECK(sfs_size(0, 5) == 0.0);
  CHECK_THROWS_AS(sfs_size(1, 0), Error);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    size_t a = rng() % 100, b = 1 + rng() % 100;
    CHECK(sfs_size(a, b) == static_cast<double>(a) / static_cast<double>(b));
  }
}

TEST_CASE("tokenizer and cosine") {
  CHECK(tokenize("int Foo_bar(x) { return 0x1F + y2; }") ==
        std::vector<std::string>{"int", "foo_bar", "x", "return", "y2"});
  CorpusEntry a = make_entry("a", "a", false, "x y y");
  CorpusEntry b = make_entry("b", "b", false, "x y y");
  CHECK(cosine(a.counts, b.counts) == doctest::Approx(1.0));
  CHECK(cosine(a.counts, {}) == 0.0);
}

TEST_CASE("ranking ties go to the smaller id and recall tolerates ties") {
  std::vector<CorpusEntry> corpus{make_entry("z", "z", false, "alpha beta"),
                                  make_entry("m", "m", false, "alpha beta"),
                                  make_entry("q", "q", false, "gamma")};
  auto query = make_entry("?", "", false, "alpha beta").counts;
  auto ranked = demo_match(query, corpus, 2);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].id == "m");
  CHECK(ranked[1].id == "z");
  auto full = demo_match(query, corpus, 0);
  CHECK(hit_at_k(full, "z", 1));  // ties the top score
  CHECK_FALSE(hit_at_k(full, "q", 2));
}

TEST_CASE("SFSs rooted at the answer count as hits") {
  SourceFacts f = parse_source("r.c",
      "int helper(int v) { int scratch = v * lookup_value; return scratch; }\n"
      "int outer(int v) { return helper(v) + other; }\n"
      "int scratch_outer(int v) { int scratch = v * lookup_value + other; return scratch; }\n");
  Query q{"q", "r.c:outer:2", aggregate({"r.c:outer:2", "r.c:helper:1"}, f)};
  Sfs s{"r.c:outer:2", {"r.c:outer:2", "r.c:helper:1"}, {}, q.text};
  RecallReport r = recall_at_k({q}, f, {s}, 1);
  CHECK(r.hits_with_sfs == 1);
  CHECK(r.recall_with_sfs() >= r.recall_without_sfs());
}

}  // TEST_SUITE
