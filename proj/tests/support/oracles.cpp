#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

namespace oracle {

using namespace inlsfs;

namespace {

double entropy(const std::vector<std::uint8_t>& y, const std::vector<size_t>& rows) {
  if (rows.empty()) return 0;
  double pos = 0;
  for (size_t i : rows) pos += y[i];
  double h = 0;
  for (double p : {pos / rows.size(), 1 - pos / rows.size()}) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double gain_ratio(const Matrix& x, const std::vector<std::uint8_t>& y, const std::vector<size_t>& rows,
                  size_t feature, double threshold) {
  std::vector<size_t> left, right;
  for (size_t i : rows) (x(i, feature) <= threshold ? left : right).push_back(i);
  double n = static_cast<double>(rows.size());
  double wl = left.size() / n, wr = right.size() / n;
  double gain = entropy(y, rows) - wl * entropy(y, left) - wr * entropy(y, right);
  double split = 0;
  for (double w : {wl, wr}) {
    if (w > 0) split -= w * std::log2(w);
  }
  return split > 0 ? gain / split : 0;
}

bool consistent(const Matrix& x, const std::vector<std::uint8_t>& y) {
  std::map<std::vector<double>, int> seen;
  for (size_t i = 0; i < x.rows(); ++i) {
    auto r = x.row(i);
    std::vector<double> key(r.begin(), r.end());
    auto [it, fresh] = seen.emplace(key, y[i]);
    if (!fresh && it->second != y[i]) return false;
  }
  return true;
}

std::set<std::string> roots(const LabeledFcg& lf) {
  std::set<std::string> out;
  for (const std::string& n : lf.g.nodes()) {
    int out_inl = 0, in_inl = 0, in_norm = 0;
    for (const FcgEdge& e : lf.g.edges()) {
      bool inl = lf.inlined.count(e.edge_id) > 0;
      if (e.caller_id == n && inl) ++out_inl;
      if (e.callee_id == n) (inl ? in_inl : in_norm) += 1;
    }
    if (out_inl >= 1 && (in_inl == 0 || in_norm >= 1)) out.insert(n);
  }
  return out;
}

std::set<SfsKey> brute_force_sfs(const LabeledFcg& lf) {
  const auto& nodes = lf.g.nodes();
  auto index = [&](const std::string& id) { return static_cast<int>(std::find(nodes.begin(), nodes.end(), id) - nodes.begin()); };
  // inlined pairs, and those pairs that also have a normal edge; node sets
  // are bit masks over node indices
  std::set<std::pair<int, int>> inl, norm;
  for (const FcgEdge& e : lf.g.edges()) {
    (lf.inlined.count(e.edge_id) ? inl : norm).insert({index(e.caller_id), index(e.callee_id)});
  }
  auto has = [](std::uint64_t set, int i) { return (set >> i & 1) != 0; };
  std::set<SfsKey> out;
  for (const std::string& root : roots(lf)) {
    int r = index(root);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nodes.size()); ++m) {
      if (!has(m, r) || std::popcount(m) < 2) continue;
      // rule (1): an inlined-only pair out of the set forces its callee in
      bool closed = true;
      for (const auto& [u, w] : inl) {
        if (has(m, u) && !norm.count({u, w}) && !has(m, w)) closed = false;
      }
      if (!closed) continue;
      // every member reachable from the root along inlined pairs in the set
      std::uint64_t reached = std::uint64_t{1} << r;
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& [u, w] : inl) {
          if (has(reached, u) && has(m, w) && !has(reached, w)) {
            reached |= std::uint64_t{1} << w;
            grew = true;
          }
        }
      }
      if (reached != m) continue;
      std::set<std::string> members;
      for (size_t i = 0; i < nodes.size(); ++i) {
        if (has(m, static_cast<int>(i))) members.insert(nodes[i]);
      }
      out.insert({root, members});
    }
  }
  return out;
}

std::map<std::string, Label> labels(const Fcg& g, const MappingBundle& b) {
  std::map<std::uint64_t, std::pair<std::string, int>> lines;
  for (const LineMapping& l : b.line_map) lines[l.address] = {l.file, l.line};
  std::map<std::string, Label> out;
  for (const FcgEdge& e : g.edges()) {
    bool covered = false, inlined = false;
    for (const FunctionMapping& fm : b.func_map) {
      std::set<std::string> s(fm.sources.begin(), fm.sources.end());
      if (!s.count(e.caller_id)) continue;
      covered = true;
      if (s.size() < 2 || !s.count(e.callee_id) || e.caller_id == e.callee_id) continue;
      bool has_call = false;
      for (const BinaryCallSite& c : b.bin_callsites) {
        if (c.binary_function != fm.binary_function) continue;
        auto it = lines.find(c.address);
        if (it != lines.end() && it->second == std::make_pair(e.file, e.line)) has_call = true;
      }
      if (!has_call) inlined = true;
    }
    out[e.call_id] = !covered ? Label::kUnknown : inlined ? Label::kInlined : Label::kNotInlined;
  }
  return out;
}

Prf weighted_prf(const LabelMatrix& pred, const LabelMatrix& truth) {
  double total = 0, sp = 0, sr = 0, sf = 0;
  int predicted = 0;
  for (const CompilationSetting& s : truth.columns()) {
    int tp = 0, fp = 0, fn = 0;
    for (const std::string& row : truth.rows()) {
      Label t = truth.at(static_cast<size_t>(truth.row_index(row)), static_cast<size_t>(truth.column_index(s)));
      if (t == Label::kUnknown) continue;
      Label p = pred.at(static_cast<size_t>(pred.row_index(row)), static_cast<size_t>(pred.column_index(s)));
      bool yp = p == Label::kInlined, yt = t == Label::kInlined;
      tp += yp && yt;
      fp += yp && !yt;
      fn += !yp && yt;
    }
    predicted += tp + fp;
    double p = tp + fp ? double(tp) / (tp + fp) : 0;
    double r = tp + fn ? double(tp) / (tp + fn) : 0;
    double f = p + r ? 2 * p * r / (p + r) : 0;
    double w = tp + fn;
    total += w;
    sp += w * p;
    sr += w * r;
    sf += w * f;
  }
  if (total == 0) {
    double v = predicted ? 0 : 1;
    return {v, v, v};
  }
  return {sp / total, sr / total, sf / total};
}

SfsScores sfs_scores(const std::vector<Sfs>& gen, const std::vector<GroundTruthSet>& gt) {
  std::set<SfsKey> g, t;
  for (const Sfs& s : gen) g.insert({s.root, {s.members.begin(), s.members.end()}});
  for (const GroundTruthSet& s : gt) t.insert({s.root, {s.members.begin(), s.members.end()}});
  std::set<std::string> gr, tr;
  for (const auto& k : g) gr.insert(k.first);
  for (const auto& k : t) tr.insert(k.first);
  SfsScores out;
  if (g.empty() && t.empty()) {
    out.pf = out.rf = out.ps = out.rs = 1;
    return out;
  }
  double common = 0;
  for (const std::string& r : gr) common += tr.count(r);
  out.pf = gr.empty() ? 0 : common / gr.size();
  out.rf = tr.empty() ? 0 : common / tr.size();
  double gs = 0, gm = 0, ts = 0, tm = 0;
  for (const auto& k : g) {
    if (!tr.count(k.first)) continue;
    ++gs;
    if (t.count(k)) {
      ++gm;
      continue;
    }
    double best = 0;
    for (const auto& other : t) {
      if (other.first != k.first) continue;
      std::set<std::string> u = k.second, i;
      u.insert(other.second.begin(), other.second.end());
      for (const auto& x : k.second) {
        if (other.second.count(x)) i.insert(x);
      }
      best = std::max(best, double(i.size()) / u.size());
    }
    out.jaccard.insert(best);
  }
  for (const auto& k : t) {
    if (!gr.count(k.first)) continue;
    ++ts;
    tm += g.count(k);
  }
  out.ps = gs ? gm / gs : 0;
  out.rs = ts ? tm / ts : 0;
  return out;
}

std::tuple<int, int, int> opt_counts(const LabelMatrix& m, const CompilationSetting& a,
                                     const CompilationSetting& b) {
  int o1 = 0, both = 0, o2 = 0;
  size_t ca = static_cast<size_t>(m.column_index(a)), cb = static_cast<size_t>(m.column_index(b));
  for (size_t r = 0; r < m.num_rows(); ++r) {
    Label x = m.at(r, ca), y = m.at(r, cb);
    if (x == Label::kUnknown || y == Label::kUnknown) continue;
    if (x == Label::kInlined && y == Label::kInlined) ++both;
    if (x == Label::kInlined && y != Label::kInlined) ++o1;
    if (x != Label::kInlined && y == Label::kInlined) ++o2;
  }
  return {o1, both, o2};
}

double compiler_jaccard(const LabelMatrix& m, const std::string& compiler_a,
                        const std::string& compiler_b) {
  int inter = 0, uni = 0;
  for (const char* opt : {"O0", "O1", "O2", "O3"}) {
    auto a = CompilationSetting::parse(compiler_a + "-" + opt);
    auto b = CompilationSetting::parse(compiler_b + "-" + opt);
    if (m.column_index(a) < 0 || m.column_index(b) < 0) continue;
    auto [o1, both, o2] = opt_counts(m, a, b);
    inter += both;
    uni += o1 + both + o2;
  }
  return uni ? double(inter) / uni : 1.0;
}

}  // namespace oracle
