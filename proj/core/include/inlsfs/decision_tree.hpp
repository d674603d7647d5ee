#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace inlsfs {

// Dense row-major matrix of training features.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

struct TreeParams {
  int max_depth = 20;
  int min_leaf = 5;  // minimum rows in each child of a split

  friend bool operator==(const TreeParams&, const TreeParams&) = default;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;  // x[feature] <= threshold goes left
  int left = -1;
  int right = -1;
  double positive_fraction = 0.0;
  int n_train = 0;

  bool is_leaf() const { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Candidate binary split of one node, scored C4.5-style.
struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
  double gain_ratio = 0.0;
  int n_left = 0;
  int n_right = 0;
};

// Binary entropy in bits of a node with `pos` positives out of `n` rows.
double binary_entropy(double pos, double n);

// Every split of the rows `sample` (indices into x, duplicates allowed) on
// the first `n_features` columns: one per feature per midpoint between
// adjacent distinct values, ordered by (feature, threshold). Candidates that
// leave fewer than min_leaf rows on a side are omitted.
std::vector<SplitCandidate> split_candidates(const Matrix& x, std::span<const std::uint8_t> y,
                                             std::span<const size_t> sample, size_t n_features,
                                             int min_leaf);

// C4.5-style tree on numeric features. Splits maximize gain ratio; ties go to
// the lowest feature index, then the lowest threshold. An impure node splits
// even when the best gain is zero (this is what lets depth-2 trees fit XOR),
// so with min_leaf = 1 a consistent training set is fit exactly given enough
// depth. No pruning.
class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  // Trains on rows `sample` of x using columns [0, n_features). Throws Error
  // on an empty sample.
  static DecisionTree train(const Matrix& x, std::span<const std::uint8_t> y,
                            std::span<const size_t> sample, size_t n_features,
                            const TreeParams& params);
  // Convenience: all rows, all columns.
  static DecisionTree train(const Matrix& x, std::span<const std::uint8_t> y,
                            const TreeParams& params);

  // Positive fraction of the leaf reached by `row`.
  double predict_proba(std::span<const double> row) const;
  bool predict(std::span<const double> row) const { return predict_proba(row) > 0.5; }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int depth() const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  std::vector<TreeNode> nodes_;
};

}  // namespace inlsfs
