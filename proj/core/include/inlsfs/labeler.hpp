#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inlsfs/fcg.hpp"
#include "inlsfs/setting.hpp"

namespace inlsfs {

enum class Label : std::uint8_t { kNotInlined = 0, kInlined = 1, kUnknown = 2 };

char label_char(Label l);  // '0', '1', '?'

// One binary function and the source functions it was compiled from.
struct FunctionMapping {
  std::string binary_function;
  std::vector<std::string> sources;  // source function ids
  std::optional<std::string> root;   // explicit root when known
};

struct LineMapping {
  std::uint64_t address = 0;
  std::string file;
  int line = 0;
};

// A call instruction inside a binary function.
struct BinaryCallSite {
  std::string binary_function;
  std::uint64_t address = 0;
};

// Binary-to-source mappings of one compiled project under one setting.
struct MappingBundle {
  CompilationSetting setting;
  std::vector<FunctionMapping> func_map;
  std::vector<LineMapping> line_map;
  std::vector<BinaryCallSite> bin_callsites;
};

std::string mapping_bundle_to_json(const MappingBundle& bundle);
MappingBundle mapping_bundle_from_json(std::string_view text, std::string_view origin = "<mapping>");
void dump_mapping_bundle(const MappingBundle& bundle, const std::filesystem::path& path);
MappingBundle load_mapping_bundle(const std::filesystem::path& path);

// Labels of every resolved call site under one setting.
struct LabelColumn {
  CompilationSetting setting;
  std::map<std::string, Label> cells;  // call_id -> label
  std::vector<std::string> diagnostics;
};

// Ground-truth labels from the mappings. A call site u->v is examined in
// every binary function b whose source set S contains u. When |S| >= 2 and v
// is in S, the site is not inlined in b iff one of b's call instructions maps
// to the site's (file, line); otherwise it is inlined in b. When v is not in
// S the site is a normal call in b. Inlined evidence from any b wins; sites
// whose caller is in no source set are unknown.
//
// Throws Error when the bundle references source functions that are not FCG
// nodes.
LabelColumn infer_labels(const Fcg& g, const MappingBundle& bundle);

// Call-site x setting matrix.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(std::vector<std::string> rows, std::vector<CompilationSetting> columns);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<CompilationSetting>& columns() const { return columns_; }
  size_t num_rows() const { return rows_.size(); }
  size_t num_columns() const { return columns_.size(); }

  Label at(size_t row, size_t col) const { return cells_[row * columns_.size() + col]; }
  void set(size_t row, size_t col, Label l) { cells_[row * columns_.size() + col] = l; }

  int row_index(const std::string& call_id) const;
  int column_index(const CompilationSetting& s) const;

  // Keeps the given columns, in the given order.
  LabelMatrix select_columns(const std::vector<CompilationSetting>& keep) const;

  friend bool operator==(const LabelMatrix&, const LabelMatrix&) = default;

 private:
  std::vector<std::string> rows_;
  std::vector<CompilationSetting> columns_;
  std::vector<Label> cells_;
  std::map<std::string, int> row_index_;
};

// Columns ordered by setting; cells a column does not cover are unknown.
LabelMatrix assemble_matrix(const std::vector<std::string>& rows,
                            std::vector<LabelColumn> columns);

// CSV: header "call_id,<setting>...", cells in {0,1,?}.
std::string label_matrix_to_csv(const LabelMatrix& m);
LabelMatrix label_matrix_from_csv(std::string_view text, std::string_view origin = "<labels>");
void dump_label_matrix(const LabelMatrix& m, const std::filesystem::path& path);
LabelMatrix load_label_matrix(const std::filesystem::path& path);

}  // namespace inlsfs
