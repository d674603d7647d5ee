#include "inlsfs/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inlsfs/error.hpp"

namespace inlsfs {

namespace {

// Two gain ratios closer than this are treated as tied.
constexpr double kTieEpsilon = 1e-12;

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

struct Builder {
  const Matrix& x;
  std::span<const std::uint8_t> y;
  size_t n_features;
  const TreeParams& params;
  std::vector<TreeNode> nodes;

  int build(std::vector<size_t>& sample, int depth) {
    int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    int n = static_cast<int>(sample.size());
    int pos = 0;
    for (size_t i : sample) pos += y[i];
    nodes[id].n_train = n;
    nodes[id].positive_fraction = static_cast<double>(pos) / n;
    if (pos == 0 || pos == n || depth >= params.max_depth || n < 2 * params.min_leaf) return id;

    std::vector<SplitCandidate> candidates =
        split_candidates(x, y, sample, n_features, params.min_leaf);
    const SplitCandidate* best = nullptr;
    for (const SplitCandidate& c : candidates) {
      if (!best || c.gain_ratio > best->gain_ratio + kTieEpsilon) best = &c;
    }
    if (!best) return id;

    int feature = best->feature;
    double threshold = best->threshold;
    std::vector<size_t> left;
    std::vector<size_t> right;
    left.reserve(static_cast<size_t>(best->n_left));
    right.reserve(static_cast<size_t>(best->n_right));
    for (size_t i : sample) (x(i, feature) <= threshold ? left : right).push_back(i);
    sample.clear();
    sample.shrink_to_fit();

    int l = build(left, depth + 1);
    int r = build(right, depth + 1);
    nodes[id].feature = feature;
    nodes[id].threshold = threshold;
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  }
};

}  // namespace

double binary_entropy(double pos, double n) {
  if (n <= 0) return 0.0;
  double p = pos / n;
  return -(plogp(p) + plogp(1.0 - p));
}

std::vector<SplitCandidate> split_candidates(const Matrix& x, std::span<const std::uint8_t> y,
                                             std::span<const size_t> sample, size_t n_features,
                                             int min_leaf) {
  std::vector<SplitCandidate> out;
  const double n = static_cast<double>(sample.size());
  if (sample.size() < 2) return out;
  double total_pos = 0;
  for (size_t i : sample) total_pos += y[i];
  const double parent_entropy = binary_entropy(total_pos, n);

  std::vector<std::pair<double, std::uint8_t>> column(sample.size());
  for (size_t f = 0; f < n_features; ++f) {
    for (size_t k = 0; k < sample.size(); ++k) column[k] = {x(sample[k], f), y[sample[k]]};
    std::sort(column.begin(), column.end());
    double left_n = 0;
    double left_pos = 0;
    for (size_t k = 0; k + 1 < column.size(); ++k) {
      left_n += 1;
      left_pos += column[k].second;
      if (column[k].first == column[k + 1].first) continue;
      double right_n = n - left_n;
      if (left_n < min_leaf || right_n < min_leaf) continue;
      double right_pos = total_pos - left_pos;
      double children = (left_n / n) * binary_entropy(left_pos, left_n) +
                        (right_n / n) * binary_entropy(right_pos, right_n);
      double gain = parent_entropy - children;
      if (gain < 0) gain = 0;  // rounding
      double split_info = binary_entropy(left_n, n);
      SplitCandidate c;
      c.feature = static_cast<int>(f);
      c.threshold = column[k].first + (column[k + 1].first - column[k].first) / 2.0;
      c.gain = gain;
      c.gain_ratio = split_info > 0 ? gain / split_info : 0.0;
      c.n_left = static_cast<int>(left_n);
      c.n_right = static_cast<int>(right_n);
      out.push_back(c);
    }
  }
  return out;
}

DecisionTree DecisionTree::train(const Matrix& x, std::span<const std::uint8_t> y,
                                 std::span<const size_t> sample, size_t n_features,
                                 const TreeParams& params) {
  if (sample.empty()) throw Error("cannot train a decision tree on zero rows");
  if (n_features > x.cols()) throw Error("tree feature count exceeds matrix width");
  if (params.min_leaf < 1 || params.max_depth < 0) throw Error("invalid tree hyperparameters");
  Builder b{x, y, n_features, params, {}};
  std::vector<size_t> root(sample.begin(), sample.end());
  b.build(root, 0);
  return DecisionTree(std::move(b.nodes));
}

DecisionTree DecisionTree::train(const Matrix& x, std::span<const std::uint8_t> y,
                                 const TreeParams& params) {
  std::vector<size_t> all(x.rows());
  std::iota(all.begin(), all.end(), size_t{0});
  return train(x, y, all, x.cols(), params);
}

double DecisionTree::predict_proba(std::span<const double> row) const {
  if (nodes_.empty()) return 0.0;
  int id = 0;
  while (!nodes_[id].is_leaf()) {
    const TreeNode& node = nodes_[id];
    id = row[node.feature] <= node.threshold ? node.left : node.right;
  }
  return nodes_[id].positive_fraction;
}

int DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const TreeNode& node = nodes_[i];
    if (node.is_leaf()) continue;
    depth[node.left] = depth[node.right] = depth[i] + 1;
    deepest = std::max(deepest, depth[i] + 1);
  }
  return deepest;
}

}  // namespace inlsfs
