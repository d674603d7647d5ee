#include "inlsfs/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>

#include "inlsfs/error.hpp"
#include "json_util.hpp"

namespace inlsfs {

namespace {

using detail::Json;

double ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

double f1_of(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
  return buf;
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

MlcMetrics mlc_metrics(const LabelMatrix& pred, const LabelMatrix& truth) {
  MlcMetrics m;
  std::vector<int> pred_rows(truth.num_rows());
  for (size_t r = 0; r < truth.num_rows(); ++r) {
    pred_rows[r] = pred.row_index(truth.rows()[r]);
  }
  long total_support = 0, predicted_positive = 0;
  double wp = 0, wr = 0, wf = 0;
  for (size_t c = 0; c < truth.num_columns(); ++c) {
    const CompilationSetting& s = truth.columns()[c];
    int pc = pred.column_index(s);
    if (pc < 0) throw Error("predictions lack column " + s.name());
    LabelScore ls;
    ls.setting = s;
    for (size_t r = 0; r < truth.num_rows(); ++r) {
      Label t = truth.at(r, c);
      if (t == Label::kUnknown) continue;
      if (pred_rows[r] < 0) throw Error("predictions lack call site " + truth.rows()[r]);
      bool p = pred.at(static_cast<size_t>(pred_rows[r]), static_cast<size_t>(pc)) == Label::kInlined;
      bool y = t == Label::kInlined;
      if (p && y) ++ls.tp;
      else if (p) ++ls.fp;
      else if (y) ++ls.fn;
      else ++ls.tn;
    }
    ls.precision = ratio(ls.tp, ls.tp + ls.fp);
    ls.recall = ratio(ls.tp, ls.tp + ls.fn);
    ls.f1 = f1_of(ls.precision, ls.recall);
    total_support += ls.support();
    predicted_positive += ls.tp + ls.fp;
    wp += ls.support() * ls.precision;
    wr += ls.support() * ls.recall;
    wf += ls.support() * ls.f1;
    m.labels.push_back(ls);
  }
  if (total_support > 0) {
    m.precision = wp / total_support;
    m.recall = wr / total_support;
    m.f1 = wf / total_support;
  } else {
    double v = predicted_positive == 0 ? 1.0 : 0.0;
    m.precision = m.recall = m.f1 = v;
  }
  return m;
}

GroundTruth ground_truth_sets(const MappingBundle& bundle, const SourceFacts& facts) {
  GroundTruth gt;
  gt.setting = bundle.setting;
  for (const FunctionMapping& fm : bundle.func_map) {
    std::set<std::string> members(fm.sources.begin(), fm.sources.end());
    if (members.size() < 2) continue;
    std::optional<std::string> root;
    if (fm.root) {
      if (members.count(*fm.root)) root = fm.root;
    } else {
      for (const std::string& id : members) {
        const FunctionFacts* f = facts.find_function(id);
        if (f && f->name == fm.binary_function) {
          if (root) {  // two candidates
            root.reset();
            break;
          }
          root = id;
        }
      }
    }
    if (!root) {
      gt.unresolved.push_back(fm.binary_function);
      continue;
    }
    gt.sets.push_back({fm.binary_function, *root, {members.begin(), members.end()}});
  }
  return gt;
}

SfsMetrics sfs_metrics(const std::vector<Sfs>& gen, const std::vector<GroundTruthSet>& gt) {
  using Key = std::pair<std::string, std::set<std::string>>;
  std::set<Key> g, t;
  for (const Sfs& s : gen) g.insert({s.root, {s.members.begin(), s.members.end()}});
  for (const GroundTruthSet& s : gt) t.insert({s.root, {s.members.begin(), s.members.end()}});
  std::set<std::string> groots, troots;
  for (const Key& k : g) groots.insert(k.first);
  for (const Key& k : t) troots.insert(k.first);

  SfsMetrics m;
  m.gen_roots = static_cast<int>(groots.size());
  m.gt_roots = static_cast<int>(troots.size());
  for (const std::string& r : groots) m.common_roots += troots.count(r) ? 1 : 0;
  bool both_empty = g.empty() && t.empty();
  m.precision_func = both_empty ? 1.0 : ratio(m.common_roots, m.gen_roots);
  m.recall_func = both_empty ? 1.0 : ratio(m.common_roots, m.gt_roots);

  for (const Key& k : g) {
    if (!troots.count(k.first)) continue;
    ++m.gen_sets;
    if (t.count(k)) {
      ++m.matched_gen;
      continue;
    }
    double best = 0;
    for (auto it = t.lower_bound({k.first, {}}); it != t.end() && it->first == k.first; ++it) {
      size_t inter = 0;
      for (const std::string& x : k.second) inter += it->second.count(x);
      size_t uni = k.second.size() + it->second.size() - inter;
      best = std::max(best, static_cast<double>(inter) / static_cast<double>(uni));
    }
    m.jaccard_unmatched.push_back(best);
  }
  for (const Key& k : t) {
    if (!groots.count(k.first)) continue;
    ++m.gt_sets;
    if (g.count(k)) ++m.matched_gt;
  }
  m.precision_sfs = both_empty ? 1.0 : ratio(m.matched_gen, m.gen_sets);
  m.recall_sfs = both_empty ? 1.0 : ratio(m.matched_gt, m.gt_sets);
  return m;
}

OptCorrelationTable correlation_opts(const LabelMatrix& truth, CompilerFamily family,
                                     const std::string& version) {
  std::set<std::string> versions;
  for (const CompilationSetting& s : truth.columns()) {
    if (s.family == family) versions.insert(s.version);
  }
  OptCorrelationTable t;
  t.family = family;
  if (!version.empty()) {
    if (!versions.count(version)) {
      throw Error("no " + std::string(to_string(family)) + " " + version + " columns");
    }
    t.version = version;
  } else if (versions.size() == 1) {
    t.version = *versions.begin();
  } else {
    throw Error(versions.empty() ? "no " + std::string(to_string(family)) + " columns"
                                 : "several " + std::string(to_string(family)) +
                                       " versions; pick one");
  }
  std::vector<std::pair<OptLevel, int>> cols;
  for (int o = 0; o < kNumOptLevels; ++o) {
    int c = truth.column_index({family, t.version, static_cast<OptLevel>(o)});
    if (c >= 0) cols.emplace_back(static_cast<OptLevel>(o), c);
  }
  for (size_t i = 0; i < cols.size(); ++i) {
    for (size_t j = i + 1; j < cols.size(); ++j) {
      OptCorrelation oc;
      oc.opt1 = cols[i].first;
      oc.opt2 = cols[j].first;
      for (size_t r = 0; r < truth.num_rows(); ++r) {
        Label a = truth.at(r, static_cast<size_t>(cols[i].second));
        Label b = truth.at(r, static_cast<size_t>(cols[j].second));
        if (a == Label::kUnknown || b == Label::kUnknown) continue;
        ++oc.common_rows;
        bool x = a == Label::kInlined, y = b == Label::kInlined;
        if (x && y) ++oc.both;
        else if (x) ++oc.only1;
        else if (y) ++oc.only2;
      }
      t.sum_both += oc.both;
      t.sum_lower += oc.only1 + oc.both;
      t.pairs.push_back(oc);
    }
  }
  return t;
}

ColumnOverlap column_overlap(const LabelMatrix& truth, const CompilationSetting& a,
                             const CompilationSetting& b) {
  int ca = truth.column_index(a), cb = truth.column_index(b);
  if (ca < 0) throw Error("no column " + a.name());
  if (cb < 0) throw Error("no column " + b.name());
  ColumnOverlap o{a, b};
  for (size_t r = 0; r < truth.num_rows(); ++r) {
    Label x = truth.at(r, static_cast<size_t>(ca)), y = truth.at(r, static_cast<size_t>(cb));
    if (x == Label::kUnknown || y == Label::kUnknown) continue;
    bool p = x == Label::kInlined, q = y == Label::kInlined;
    o.intersection += p && q;
    o.union_ += p || q;
  }
  return o;
}

CompilerCorrelation correlation_compilers(const LabelMatrix& truth, const CompilationSetting& a,
                                          const CompilationSetting& b) {
  CompilerCorrelation cc;
  for (int o = 0; o < kNumOptLevels; ++o) {
    CompilationSetting sa{a.family, a.version, static_cast<OptLevel>(o)};
    CompilationSetting sb{b.family, b.version, static_cast<OptLevel>(o)};
    if (truth.column_index(sa) < 0 || truth.column_index(sb) < 0) continue;
    ColumnOverlap ov = column_overlap(truth, sa, sb);
    cc.intersection += ov.intersection;
    cc.union_ += ov.union_;
    cc.per_opt.push_back(ov);
  }
  if (cc.per_opt.empty()) {
    throw Error("no opt level has both " + a.compiler() + " and " + b.compiler() + " columns");
  }
  return cc;
}

double sfs_size(size_t n_sfs, size_t n_original_functions) {
  if (n_original_functions == 0) throw Error("sfs size needs at least one original function");
  return static_cast<double>(n_sfs) / static_cast<double>(n_original_functions);
}

// ---------------------------------------------------------------------------

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      std::string tok;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        tok.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[j]))));
        ++j;
      }
      out.push_back(std::move(tok));
      i = j;
    } else if (std::isdigit(c)) {
      // skip numbers whole so "0x1f" is not read as identifier "x1f"
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == '_')) {
        ++i;
      }
    } else {
      ++i;
    }
  }
  return out;
}

CorpusEntry make_entry(std::string id, std::string root, bool is_sfs, std::string_view text) {
  CorpusEntry e{std::move(id), std::move(root), is_sfs, {}};
  for (std::string& t : tokenize(text)) ++e.counts[t];
  return e;
}

double cosine(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [k, v] : a) {
    na += double(v) * v;
    auto it = b.find(k);
    if (it != b.end()) dot += double(v) * it->second;
  }
  for (const auto& [k, v] : b) nb += double(v) * v;
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<Match> demo_match(const std::map<std::string, int>& query,
                              const std::vector<CorpusEntry>& corpus, size_t k) {
  std::vector<Match> ranking;
  ranking.reserve(corpus.size());
  for (const CorpusEntry& e : corpus) ranking.push_back({e.id, e.root, cosine(query, e.counts)});
  std::sort(ranking.begin(), ranking.end(), [](const Match& a, const Match& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  if (k > 0 && ranking.size() > k) ranking.resize(k);
  return ranking;
}

bool hit_at_k(const std::vector<Match>& ranking, const std::string& answer, size_t k) {
  if (ranking.empty() || k == 0) return false;
  double cutoff = ranking[std::min(k, ranking.size()) - 1].score;
  for (const Match& m : ranking) {
    if (m.score < cutoff) break;
    if (m.root == answer && m.score > 0) return true;
  }
  return false;
}

std::vector<Query> queries_from_ground_truth(const GroundTruth& gt, const SourceFacts& facts) {
  std::vector<Query> out;
  for (const GroundTruthSet& s : gt.sets) {
    std::vector<std::string> order{s.root};
    for (const std::string& m : s.members) {
      if (m != s.root) order.push_back(m);
    }
    out.push_back({gt.setting.name() + ":" + s.binary_function, s.root, aggregate(order, facts)});
  }
  return out;
}

RecallReport recall_at_k(const std::vector<Query>& queries, const SourceFacts& facts,
                         const std::vector<Sfs>& sfss, size_t k) {
  std::vector<CorpusEntry> plain;
  for (const FunctionFacts& f : facts.functions) {
    plain.push_back(make_entry(f.function_id, f.function_id, false, f.body_text));
  }
  std::vector<CorpusEntry> with = plain;
  for (const Sfs& s : sfss) {
    std::string id = "sfs:";
    for (size_t i = 0; i < s.members.size(); ++i) id += (i ? "+" : "") + s.members[i];
    with.push_back(make_entry(std::move(id), s.root, true, s.aggregated_text));
  }
  RecallReport r;
  r.k = k;
  for (const Query& q : queries) {
    CorpusEntry qe = make_entry(q.id, q.answer, false, q.text);
    ++r.queries;
    r.hits_without_sfs += hit_at_k(demo_match(qe.counts, plain, 0), q.answer, k);
    r.hits_with_sfs += hit_at_k(demo_match(qe.counts, with, 0), q.answer, k);
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string to_json(const MlcMetrics& m) {
  Json labels = Json::array();
  for (const LabelScore& l : m.labels) {
    labels.push_back({{"setting", l.setting.name()}, {"tp", l.tp}, {"fp", l.fp}, {"fn", l.fn},
                      {"tn", l.tn}, {"support", l.support()}, {"precision", l.precision},
                      {"recall", l.recall}, {"f1", l.f1}});
  }
  Json doc{{"metric", "mlc"},
           {"weighted", {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}}},
           {"labels", std::move(labels)}};
  return doc.dump(2) + "\n";
}

std::string to_table(const MlcMetrics& m) {
  std::string out = pad("setting", 22) + pad("support", 9) + pad("precision", 11) +
                    pad("recall", 10) + "f1\n";
  for (const LabelScore& l : m.labels) {
    out += pad(l.setting.name(), 22) + pad(std::to_string(l.support()), 9) +
           pad(pct(l.precision), 11) + pad(pct(l.recall), 10) + pct(l.f1) + "\n";
  }
  out += pad("weighted", 31) + pad(pct(m.precision), 11) + pad(pct(m.recall), 10) + pct(m.f1) + "\n";
  return out;
}

std::string to_json(const SfsMetrics& m) {
  Json doc{{"metric", "sfs"},
           {"precision_func", m.precision_func},
           {"recall_func", m.recall_func},
           {"precision_sfs", m.precision_sfs},
           {"recall_sfs", m.recall_sfs},
           {"gen_roots", m.gen_roots},
           {"gt_roots", m.gt_roots},
           {"common_roots", m.common_roots},
           {"gen_sets", m.gen_sets},
           {"gt_sets", m.gt_sets},
           {"matched_gen", m.matched_gen},
           {"matched_gt", m.matched_gt},
           {"jaccard_unmatched", m.jaccard_unmatched}};
  return doc.dump(2) + "\n";
}

std::string to_table(const SfsMetrics& m) {
  std::string out = pad("Precision@Func", 16) + pad("Recall@Func", 16) + pad("Precision@SFS", 16) +
                    "Recall@SFS\n";
  out += pad(pct(m.precision_func), 16) + pad(pct(m.recall_func), 16) +
         pad(pct(m.precision_sfs), 16) + pct(m.recall_sfs) + "\n";
  if (!m.jaccard_unmatched.empty()) {
    double sum = 0;
    for (double j : m.jaccard_unmatched) sum += j;
    char buf[96];
    std::snprintf(buf, sizeof buf, "unmatched SFSs: %zu, mean Jaccard %.4f\n",
                  m.jaccard_unmatched.size(), sum / double(m.jaccard_unmatched.size()));
    out += buf;
  }
  return out;
}

std::string to_json(const OptCorrelationTable& t) {
  Json pairs = Json::array();
  for (const OptCorrelation& p : t.pairs) {
    pairs.push_back({{"opt1", to_string(p.opt1)}, {"opt2", to_string(p.opt2)}, {"only1", p.only1},
                     {"both", p.both}, {"only2", p.only2}, {"common_rows", p.common_rows}});
  }
  Json doc{{"metric", "correlation_opts"},
           {"compiler_family", to_string(t.family)},
           {"compiler_version", t.version},
           {"pairs", std::move(pairs)},
           {"sum_both", t.sum_both},
           {"sum_lower", t.sum_lower},
           {"nested_ratio", t.nested_ratio()}};
  return doc.dump(2) + "\n";
}

std::string to_table(const OptCorrelationTable& t) {
  std::string out = std::string(to_string(t.family)) + "-" + t.version + "\n" + pad("opt1", 6) +
                    pad("opt2", 6) + pad("only1", 8) + pad("both", 8) + "only2\n";
  for (const OptCorrelation& p : t.pairs) {
    out += pad(std::string(to_string(p.opt1)), 6) + pad(std::string(to_string(p.opt2)), 6) +
           pad(std::to_string(p.only1), 8) + pad(std::to_string(p.both), 8) +
           std::to_string(p.only2) + "\n";
  }
  out += "lower-in-higher: " + pct(t.nested_ratio()) + " (" + std::to_string(t.sum_both) + " in " +
         std::to_string(t.sum_lower) + ")\n";
  return out;
}

std::string to_json(const CompilerCorrelation& c) {
  Json per = Json::array();
  for (const ColumnOverlap& o : c.per_opt) {
    per.push_back({{"a", o.a.name()}, {"b", o.b.name()}, {"intersection", o.intersection},
                   {"union", o.union_}, {"jaccard", o.jaccard()}});
  }
  Json doc{{"metric", "correlation_compilers"},
           {"per_opt", std::move(per)},
           {"intersection", c.intersection},
           {"union", c.union_},
           {"jaccard", c.jaccard()}};
  return doc.dump(2) + "\n";
}

std::string to_table(const CompilerCorrelation& c) {
  std::string out;
  for (const ColumnOverlap& o : c.per_opt) {
    out += pad(o.a.name() + " vs " + o.b.name(), 48) + pct(o.jaccard()) + "\n";
  }
  out += pad("all opts", 48) + pct(c.jaccard()) + " (" + std::to_string(c.intersection) + " in " +
         std::to_string(c.union_) + ")\n";
  return out;
}

std::string to_json(const RecallReport& r) {
  Json doc{{"metric", "recall_at_k"},
           {"k", r.k},
           {"queries", r.queries},
           {"hits_without_sfs", r.hits_without_sfs},
           {"hits_with_sfs", r.hits_with_sfs},
           {"recall_without_sfs", r.recall_without_sfs()},
           {"recall_with_sfs", r.recall_with_sfs()}};
  return doc.dump(2) + "\n";
}

std::string to_table(const RecallReport& r) {
  return "recall@" + std::to_string(r.k) + " over " + std::to_string(r.queries) +
         " queries: without SFSs " + pct(r.recall_without_sfs()) + ", with SFSs " +
         pct(r.recall_with_sfs()) + "\n";
}

}  // namespace inlsfs
