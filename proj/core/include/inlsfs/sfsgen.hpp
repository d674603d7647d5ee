#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "inlsfs/fcg.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/setting.hpp"
#include "inlsfs/source_facts.hpp"

namespace inlsfs {

// An FCG with one setting's labels: the edges in `inlined` were inlined,
// every other edge is a normal call.
struct LabeledFcg {
  Fcg g;
  std::set<std::string> inlined;  // edge ids
  CompilationSetting setting;
  // Function bodies for aggregation when no SourceFacts are at hand.
  std::map<std::string, std::string> bodies;
};

// Unknown cells count as normal calls.
LabeledFcg labeled_fcg(const Fcg& g, const LabelMatrix& m, const CompilationSetting& s);

// Throws Error when an inlined id is not an edge.
void validate_labeled_fcg(const LabeledFcg& lf);

struct Sfs {
  std::string root;
  std::vector<std::string> members;  // root first
  std::vector<CompilationSetting> settings;
  std::string aggregated_text;

  friend bool operator==(const Sfs&, const Sfs&) = default;
};

struct Subgraph {
  std::vector<std::string> nodes;
  std::vector<FcgEdge> edges;
};

Subgraph inlining_subgraph(const LabeledFcg& lf);

// Roots: at least one inlined out-edge, and either no inlined in-edge or at
// least one normal in-edge.
std::vector<std::string> select_roots(const LabeledFcg& lf);

struct ExtendOptions {
  int max_branch_pairs = 8;
};

struct ExtendResult {
  std::vector<std::vector<std::string>> member_lists;  // sorted, deduplicated
  std::vector<std::string> diagnostics;
};

// Member lists of the SFSs rooted at `root`. Each (caller, callee) pair with
// both an inlined and a normal edge branches into a continue and a stop
// variant; pairs nearest the root are branched first and pairs beyond the cap
// continue. Lists with fewer than two members are dropped. Members are in DFS
// preorder from the root over inlined pairs inside the set, children ordered
// by their first inlined call site.
ExtendResult extend(const LabeledFcg& lf, const std::string& root, const ExtendOptions& opt = {});

struct SfsSet {
  std::vector<Sfs> sfss;  // sorted by (root, members)
  std::vector<std::string> diagnostics;
  size_t per_setting_count = 0;  // before merging across settings
};

// Every SFS of one labeled FCG. Texts are aggregated from `facts` when given,
// else from lf.bodies.
SfsSet generate_all(const LabeledFcg& lf, const SourceFacts* facts = nullptr,
                    const ExtendOptions& opt = {}, unsigned jobs = 1);

// Union over the matrix columns; identical member lists are merged and keep
// every setting that produced them.
SfsSet generate_for_matrix(const Fcg& g, const SourceFacts* facts, const LabelMatrix& m,
                           const ExtendOptions& opt = {}, unsigned jobs = 1);

// Member body texts in member order, separated by one blank line.
std::string aggregate(const std::vector<std::string>& members, const SourceFacts& facts);
std::string aggregate(const std::vector<std::string>& members,
                      const std::map<std::string, std::string>& bodies);

enum class BaselineKind { kBingoLike, kAsm2vecLike };

std::string_view to_string(BaselineKind kind);
BaselineKind parse_baseline_kind(std::string_view text);

struct BaselineThresholds {
  int max_callee_stmt = 10;     // T1
  int max_callee_out_degree = 2;  // T2, asm2vec_like only
};

// Callee-only heuristics. bingo_like inlines an edge when the callee is small
// or called exactly once; asm2vec_like also requires a small callee
// out-degree. The labels are the same for every setting.
std::vector<LabeledFcg> baseline_labels(BaselineKind kind, const Fcg& g, const SourceFacts& facts,
                                        const std::vector<CompilationSetting>& settings,
                                        const BaselineThresholds& t = {});

// Labeled-FCG file: the FCG document plus "setting", "inlined" (edge ids) and
// optional "bodies" (function id -> text).
std::string labeled_fcg_to_json(const LabeledFcg& lf);
LabeledFcg labeled_fcg_from_json(std::string_view text, std::string_view origin = "<labeled-fcg>");
LabeledFcg load_labeled_fcg(const std::filesystem::path& path);

// JSON lines, one {root, members, settings, aggregated_text_sha256} per SFS;
// texts go to "<stem>_texts/<sha256>.txt" next to `path`.
std::string sfs_record_json(const Sfs& sfs);
void write_sfs_file(const std::vector<Sfs>& sfss, const std::filesystem::path& path);
// Reads records back; texts are loaded when their files exist.
std::vector<Sfs> read_sfs_file(const std::filesystem::path& path);
std::filesystem::path sfs_text_dir(const std::filesystem::path& path);

}  // namespace inlsfs
