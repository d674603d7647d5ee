#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inlsfs/labeler.hpp"
#include "inlsfs/setting.hpp"
#include "inlsfs/sfsgen.hpp"
#include "inlsfs/source_facts.hpp"

namespace inlsfs {

// ---------------------------------------------------------------------------
// Multi-label metrics

struct LabelScore {
  CompilationSetting setting;
  int tp = 0, fp = 0, fn = 0, tn = 0;
  int support() const { return tp + fn; }
  double precision = 0, recall = 0, f1 = 0;
};

struct MlcMetrics {
  double precision = 0, recall = 0, f1 = 0;  // support-weighted
  std::vector<LabelScore> labels;
};

// Scores every truth column over its known cells. 0/0 ratios are 0; when no
// label has support the weighted values are 1 if nothing was predicted
// positive, else 0. Throws Error when pred lacks a truth row or column.
// Unknown predicted cells count as negative.
MlcMetrics mlc_metrics(const LabelMatrix& pred, const LabelMatrix& truth);

// ---------------------------------------------------------------------------
// SFS quality

struct GroundTruthSet {
  std::string binary_function;
  std::string root;
  std::vector<std::string> members;  // sorted, contains root
};

struct GroundTruth {
  CompilationSetting setting;
  std::vector<GroundTruthSet> sets;
  // Binary functions with |S| >= 2 whose root could not be identified.
  std::vector<std::string> unresolved;
};

// From func_map entries with at least two sources. The root is the explicit
// one, else the unique source whose name equals the binary function's name.
GroundTruth ground_truth_sets(const MappingBundle& bundle, const SourceFacts& facts);

struct SfsMetrics {
  double precision_func = 0, recall_func = 0, precision_sfs = 0, recall_sfs = 0;
  int gen_roots = 0, gt_roots = 0, common_roots = 0;
  int gen_sets = 0, gt_sets = 0, matched_gen = 0, matched_gt = 0;
  std::vector<double> jaccard_unmatched;  // one per unmatched generated set with a gt root
};

// Sets are compared as (root, member set), duplicates collapsed. The SFS
// precision and recall only look at sets whose root appears on both sides;
// unmatched generated sets are scored by their best Jaccard against gt sets
// with the same root.
SfsMetrics sfs_metrics(const std::vector<Sfs>& gen, const std::vector<GroundTruthSet>& gt);

// ---------------------------------------------------------------------------
// Correlation

struct OptCorrelation {
  OptLevel opt1 = OptLevel::kO0, opt2 = OptLevel::kO0;
  int only1 = 0, both = 0, only2 = 0;
  int common_rows = 0;  // rows known in both columns
};

struct OptCorrelationTable {
  CompilerFamily family = CompilerFamily::kGcc;
  std::string version;
  std::vector<OptCorrelation> pairs;  // opt1 < opt2
  int sum_both = 0, sum_lower = 0;    // sum of both, sum of (only1 + both)
  double nested_ratio() const { return sum_lower ? double(sum_both) / sum_lower : 1.0; }
};

// One row per pair of opt levels of the family. `version` may be empty when
// the matrix holds a single version of the family.
OptCorrelationTable correlation_opts(const LabelMatrix& truth, CompilerFamily family,
                                     const std::string& version = {});

struct ColumnOverlap {
  CompilationSetting a, b;
  int intersection = 0, union_ = 0;
  double jaccard() const { return union_ ? double(intersection) / union_ : 1.0; }
};

// Jaccard of the inlined sets over rows known in both columns.
ColumnOverlap column_overlap(const LabelMatrix& truth, const CompilationSetting& a,
                             const CompilationSetting& b);

struct CompilerCorrelation {
  std::vector<ColumnOverlap> per_opt;  // O0..O3 where both columns exist
  int intersection = 0, union_ = 0;
  double jaccard() const { return union_ ? double(intersection) / union_ : 1.0; }
};

// Compares two compilers (family + version) opt by opt and in aggregate.
CompilerCorrelation correlation_compilers(const LabelMatrix& truth, const CompilationSetting& a,
                                          const CompilationSetting& b);

// ---------------------------------------------------------------------------
// SFS size

double sfs_size(size_t n_sfs, size_t n_original_functions);

// ---------------------------------------------------------------------------
// Token-similarity matcher

// Lowercased identifier and keyword tokens.
std::vector<std::string> tokenize(std::string_view text);

struct CorpusEntry {
  std::string id;
  std::string root;  // the function itself, or the SFS root
  bool is_sfs = false;
  std::map<std::string, int> counts;
};

CorpusEntry make_entry(std::string id, std::string root, bool is_sfs, std::string_view text);

struct Match {
  std::string id;
  std::string root;
  double score = 0;
};

double cosine(const std::map<std::string, int>& a, const std::map<std::string, int>& b);

// The whole corpus ranked by cosine similarity, ties by id. Only the first k
// are returned when k > 0.
std::vector<Match> demo_match(const std::map<std::string, int>& query,
                              const std::vector<CorpusEntry>& corpus, size_t k);

// Hit when an entry rooted at `answer` scores above zero and at least as high
// as the k-th ranked entry, so ties at the cut-off count.
bool hit_at_k(const std::vector<Match>& ranking, const std::string& answer, size_t k);

struct Query {
  std::string id;
  std::string answer;  // source function id
  std::string text;
};

// One query per ground-truth set: the member texts, root first.
std::vector<Query> queries_from_ground_truth(const GroundTruth& gt, const SourceFacts& facts);

struct RecallReport {
  size_t k = 1;
  size_t queries = 0;
  size_t hits_without_sfs = 0, hits_with_sfs = 0;
  double recall_without_sfs() const { return queries ? double(hits_without_sfs) / queries : 0.0; }
  double recall_with_sfs() const { return queries ? double(hits_with_sfs) / queries : 0.0; }
};

RecallReport recall_at_k(const std::vector<Query>& queries, const SourceFacts& facts,
                         const std::vector<Sfs>& sfss, size_t k);

// ---------------------------------------------------------------------------
// Reports: JSON documents and plain-text tables.

std::string to_json(const MlcMetrics& m);
std::string to_table(const MlcMetrics& m);
std::string to_json(const SfsMetrics& m);
std::string to_table(const SfsMetrics& m);
std::string to_json(const OptCorrelationTable& t);
std::string to_table(const OptCorrelationTable& t);
std::string to_json(const CompilerCorrelation& c);
std::string to_table(const CompilerCorrelation& c);
std::string to_json(const RecallReport& r);
std::string to_table(const RecallReport& r);

}  // namespace inlsfs
