#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "inlsfs/decision_tree.hpp"
#include "inlsfs/features.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/setting.hpp"

namespace inlsfs {

// ECOCC: binary relevance across compiler families, each family an ensemble
// of opt-ordered classifier chains. The rest are the comparison baselines:
//   BR   one independent tree per label
//   CC   one chain over all labels (gcc before clang, opts ascending)
//   EBR  bagged BR
//   ECC  bagged CC
enum class MlcKind { kEcocc, kBr, kCc, kEbr, kEcc };

std::string_view to_string(MlcKind kind);
MlcKind parse_mlc_kind(std::string_view text);

struct MlcParams {
  TreeParams tree;
  int ensemble_size = 50;
  double vote_threshold = 0.5;  // ensemble positive iff vote fraction > threshold
  std::uint64_t seed = 0;

  friend bool operator==(const MlcParams&, const MlcParams&) = default;
};

// Trees for an ordered label list. When chained, the tree for label k sees
// the 33 features followed by labels 0..k-1: true labels in training,
// predicted ones at inference.
struct ChainModel {
  std::vector<CompilationSetting> labels;
  bool chained = true;
  std::uint64_t seed = 0;
  bool bootstrap = false;
  std::vector<DecisionTree> trees;

  std::vector<std::uint8_t> predict(const FeatureVector& x) const;

  friend bool operator==(const ChainModel&, const ChainModel&) = default;
};

// Chains voting on the same labels.
struct ChainGroup {
  std::string name;
  std::vector<ChainModel> chains;

  friend bool operator==(const ChainGroup&, const ChainGroup&) = default;
};

struct MlcModel {
  MlcKind kind = MlcKind::kEcocc;
  MlcParams params;
  std::string feature_hash;
  std::vector<CompilationSetting> settings;  // output columns, sorted
  std::vector<ChainGroup> groups;

  friend bool operator==(const MlcModel&, const MlcModel&) = default;
};

// Trains on the rows present in both `features` and `labels`. For a chained
// tree k a row is used only when labels 0..k are all known; otherwise rows
// with an unknown label k are dropped for that tree. Bagged chain i draws a
// bootstrap sample of the training rows with seed params.seed + i. The
// result depends only on the inputs, never on `jobs`.
//
// ECOCC requires every family present in `labels` to have exactly the four
// opt levels of a single compiler version.
MlcModel train_model(MlcKind kind, const FeatureTable& features, const LabelMatrix& labels,
                     const MlcParams& params, unsigned jobs = 1);

inline MlcModel train_ecoccj48(const FeatureTable& features, const LabelMatrix& labels,
                               const MlcParams& params, unsigned jobs = 1) {
  return train_model(MlcKind::kEcocc, features, labels, params, jobs);
}

// Label order a model of `kind` uses for each group.
std::vector<std::vector<CompilationSetting>> label_groups(MlcKind kind,
                                                          const std::vector<CompilationSetting>& columns);

// One row per feature row, one column per model setting. Throws Error when
// the table's feature ordering does not match the model's.
LabelMatrix predict(const MlcModel& model, const FeatureTable& features);

std::string model_to_json(const MlcModel& model);
MlcModel model_from_json(std::string_view text, std::string_view origin = "<model>");
void save_model(const MlcModel& model, const std::filesystem::path& path);
MlcModel load_model(const std::filesystem::path& path);

}  // namespace inlsfs
