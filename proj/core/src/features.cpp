#include "inlsfs/features.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "csv.hpp"
#include "inlsfs/error.hpp"
#include "inlsfs/sha256.hpp"
#include "json_util.hpp"

namespace inlsfs {

namespace {

constexpr std::array<std::string_view, kNumFeatures> kNames = {
    "caller_stmt",        "caller_while",        "caller_switch",      "caller_switch_cases",
    "caller_if",          "caller_for",          "caller_return",      "caller_declare",
    "caller_expression",  "caller_inline_kw",    "caller_static_kw",   "caller_calling_times",
    "caller_called_times", "callee_stmt",        "callee_while",       "callee_switch",
    "callee_switch_cases", "callee_if",          "callee_for",         "callee_return",
    "callee_declare",     "callee_expression",   "callee_inline_kw",   "callee_static_kw",
    "callee_calling_times", "callee_called_times", "cs_path_length",   "cs_in_for",
    "cs_in_while",        "cs_in_switch",        "cs_in_if",           "cs_n_args",
    "cs_n_const_args"};

void fill_function_block(double* out, const FunctionFacts& f, const Fcg& g) {
  const StmtCounts& c = f.stmt_counts;
  out[0] = c.statement;
  out[1] = c.while_;
  out[2] = c.switch_;
  out[3] = c.switch_cases;
  out[4] = c.if_;
  out[5] = c.for_;
  out[6] = c.return_;
  out[7] = c.declare;
  out[8] = c.expression;
  out[9] = f.has_inline_kw ? 1 : 0;
  out[10] = f.has_static_kw ? 1 : 0;
  out[11] = g.calling_times(f.function_id);
  out[12] = g.called_times(f.function_id);
}

class FunctionLookup {
 public:
  explicit FunctionLookup(const SourceFacts& facts) {
    for (const FunctionFacts& f : facts.functions) functions_.emplace(f.function_id, &f);
    for (const RawCallSite& c : facts.call_sites) calls_.emplace(c.call_id, &c);
  }
  const FunctionFacts& function(const std::string& id) const {
    auto it = functions_.find(id);
    if (it == functions_.end()) throw Error("facts have no function '" + id + "'");
    return *it->second;
  }
  const RawCallSite& call(const std::string& id) const {
    auto it = calls_.find(id);
    if (it == calls_.end()) throw Error("facts have no call site '" + id + "'");
    return *it->second;
  }

 private:
  std::map<std::string, const FunctionFacts*, std::less<>> functions_;
  std::map<std::string, const RawCallSite*, std::less<>> calls_;
};

FeatureVector featurize_edge(const FcgEdge& e, const Fcg& g, const FunctionLookup& lookup) {
  FeatureVector v{};
  fill_function_block(v.data(), lookup.function(e.caller_id), g);
  fill_function_block(v.data() + kFunctionBlockSize, lookup.function(e.callee_id), g);
  const RawCallSite& cs = lookup.call(e.call_id);
  double* call = v.data() + 2 * kFunctionBlockSize;
  call[0] = cs.nesting.path_length;
  call[1] = cs.nesting.in_for ? 1 : 0;
  call[2] = cs.nesting.in_while ? 1 : 0;
  call[3] = cs.nesting.in_switch ? 1 : 0;
  call[4] = cs.nesting.in_if ? 1 : 0;
  call[5] = cs.n_args;
  call[6] = cs.n_const_args;
  return v;
}

std::string format_value(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

const std::array<std::string_view, kNumFeatures>& feature_names() { return kNames; }

std::string feature_ordering_hash(const std::vector<std::string>& names) {
  std::string joined;
  for (const std::string& n : names) joined += n + "\n";
  return sha256_hex(joined);
}

std::string feature_ordering_hash() {
  return feature_ordering_hash(std::vector<std::string>(kNames.begin(), kNames.end()));
}

FeatureVector featurize(const std::string& call_id, const Fcg& g, const SourceFacts& facts) {
  int idx = g.edge_index_by_call(call_id);
  if (idx < 0) throw Error("call site '" + call_id + "' is not a resolved FCG edge");
  return featurize_edge(g.edges()[static_cast<size_t>(idx)], g, FunctionLookup(facts));
}

int FeatureTable::row_index(const std::string& call_id) const {
  for (size_t i = 0; i < call_ids.size(); ++i) {
    if (call_ids[i] == call_id) return static_cast<int>(i);
  }
  return -1;
}

FeatureTable featurize_all(const Fcg& g, const SourceFacts& facts) {
  FunctionLookup lookup(facts);
  FeatureTable t;
  t.names.assign(kNames.begin(), kNames.end());
  for (const FcgEdge& e : g.edges()) {
    t.call_ids.push_back(e.call_id);
    t.rows.push_back(featurize_edge(e, g, lookup));
  }
  return t;
}

std::string feature_table_to_csv(const FeatureTable& t) {
  std::vector<std::string> header{"call_id"};
  header.insert(header.end(), kNames.begin(), kNames.end());
  std::string out = detail::csv_join(header) + "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out += detail::csv_escape(t.call_ids[r]);
    for (double v : t.rows[r]) {
      out += ',';
      out += format_value(v);
    }
    out += '\n';
  }
  return out;
}

FeatureTable feature_table_from_csv(std::string_view text, std::string_view origin) {
  auto rows = detail::csv_parse(text, origin);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "call_id") {
    throw SchemaError(std::string(origin) + ":1: header must start with 'call_id'");
  }
  if (rows[0].size() != kNumFeatures + 1) {
    throw SchemaError(std::string(origin) + ":1: expected " + std::to_string(kNumFeatures) +
                      " feature columns, got " + std::to_string(rows[0].size() - 1));
  }
  FeatureTable t;
  t.names.assign(rows[0].begin() + 1, rows[0].end());
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::string where = std::string(origin) + ":" + std::to_string(r + 1);
    if (row.size() != kNumFeatures + 1) {
      throw SchemaError(where + ": expected " + std::to_string(kNumFeatures + 1) + " fields");
    }
    FeatureVector v{};
    for (size_t c = 0; c < kNumFeatures; ++c) {
      const std::string& cell = row[c + 1];
      double x = 0;
      auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
      if (res.ec != std::errc() || res.ptr != cell.data() + cell.size() || !std::isfinite(x)) {
        throw SchemaError(where + ": column '" + t.names[c] + "': not a number '" + cell + "'");
      }
      if (x < 0) throw SchemaError(where + ": column '" + t.names[c] + "': negative value");
      v[c] = x;
    }
    t.call_ids.push_back(row[0]);
    t.rows.push_back(v);
  }
  return t;
}

void dump_feature_table(const FeatureTable& t, const std::filesystem::path& path) {
  detail::write_file(path, feature_table_to_csv(t));
}

FeatureTable load_feature_table(const std::filesystem::path& path) {
  return feature_table_from_csv(detail::read_file(path), path.string());
}

}  // namespace inlsfs
