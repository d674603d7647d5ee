#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "inlsfs/fcg.hpp"
#include "inlsfs/source_facts.hpp"

namespace inlsfs {

inline constexpr size_t kFunctionBlockSize = 13;
inline constexpr size_t kCallBlockSize = 7;
inline constexpr size_t kNumFeatures = 2 * kFunctionBlockSize + kCallBlockSize;  // 33

// Column layout:
//   [0, 13)  caller: 9 statement counts, inline_kw, static_kw, calling_times,
//            called_times
//   [13, 26) callee: same 13 fields
//   [26, 33) call site: path_length, in_for, in_while, in_switch, in_if,
//            n_args, n_const_args
// Booleans are 0/1. Values are raw counts, never scaled.
using FeatureVector = std::array<double, kNumFeatures>;

const std::array<std::string_view, kNumFeatures>& feature_names();

// Hex SHA-256 over the ordered feature names; models record it.
std::string feature_ordering_hash();
std::string feature_ordering_hash(const std::vector<std::string>& names);

// Throws Error when call_id is not a resolved edge of g.
FeatureVector featurize(const std::string& call_id, const Fcg& g, const SourceFacts& facts);

struct FeatureTable {
  std::vector<std::string> call_ids;
  std::vector<FeatureVector> rows;
  std::vector<std::string> names;  // column names as read or written

  int row_index(const std::string& call_id) const;
};

// One row per FCG edge, in edge order.
FeatureTable featurize_all(const Fcg& g, const SourceFacts& facts);

// CSV: "call_id" followed by the 33 feature names.
std::string feature_table_to_csv(const FeatureTable& t);
FeatureTable feature_table_from_csv(std::string_view text, std::string_view origin = "<features>");
void dump_feature_table(const FeatureTable& t, const std::filesystem::path& path);
FeatureTable load_feature_table(const std::filesystem::path& path);

}  // namespace inlsfs
