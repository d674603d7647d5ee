#include "inlsfs/sfsgen.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <fstream>

#include "inlsfs/error.hpp"
#include "inlsfs/parallel.hpp"
#include "inlsfs/sha256.hpp"
#include "json_util.hpp"

namespace inlsfs {

LabeledFcg labeled_fcg(const Fcg& g, const LabelMatrix& m, const CompilationSetting& s) {
  int col = m.column_index(s);
  if (col < 0) throw Error("label matrix has no column " + s.name());
  LabeledFcg lf;
  lf.g = g;
  lf.setting = s;
  for (const FcgEdge& e : g.edges()) {
    int row = m.row_index(e.call_id);
    if (row >= 0 && m.at(static_cast<size_t>(row), static_cast<size_t>(col)) == Label::kInlined) {
      lf.inlined.insert(e.edge_id);
    }
  }
  return lf;
}

void validate_labeled_fcg(const LabeledFcg& lf) {
  for (const std::string& id : lf.inlined) {
    if (lf.g.edge_index(id) < 0) throw Error("inlined edge '" + id + "' is not an FCG edge");
  }
}

Subgraph inlining_subgraph(const LabeledFcg& lf) {
  Subgraph sg;
  std::set<std::string> nodes;
  for (const FcgEdge& e : lf.g.edges()) {
    if (!lf.inlined.count(e.edge_id)) continue;
    sg.edges.push_back(e);
    nodes.insert(e.caller_id);
    nodes.insert(e.callee_id);
  }
  sg.nodes.assign(nodes.begin(), nodes.end());
  return sg;
}

namespace {

// Index-based view of a labeled FCG, collapsed to (caller, callee) pairs.
struct PairGraph {
  struct Pair {
    int u = 0;
    int w = 0;
    int first_inlined = INT_MAX;  // edge index of the earliest inlined call
    bool has_inlined = false;
    bool has_normal = false;
    bool mixed() const { return has_inlined && has_normal; }
  };

  size_t n = 0;
  std::vector<Pair> pairs;
  std::vector<std::vector<int>> out;  // pairs with an inlined edge, by first_inlined
  std::vector<int> out_inlined, in_inlined, in_normal;

  explicit PairGraph(const LabeledFcg& lf) {
    const Fcg& g = lf.g;
    n = g.nodes().size();
    out.resize(n);
    out_inlined.assign(n, 0);
    in_inlined.assign(n, 0);
    in_normal.assign(n, 0);
    std::map<std::pair<int, int>, int> index;
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
      int u = g.node_index(edges[i].caller_id);
      int w = g.node_index(edges[i].callee_id);
      bool inl = lf.inlined.count(edges[i].edge_id) > 0;
      auto [it, fresh] = index.try_emplace({u, w}, static_cast<int>(pairs.size()));
      if (fresh) pairs.push_back(Pair{u, w});
      Pair& p = pairs[static_cast<size_t>(it->second)];
      if (inl) {
        p.has_inlined = true;
        p.first_inlined = std::min(p.first_inlined, static_cast<int>(i));
        ++out_inlined[static_cast<size_t>(u)];
        ++in_inlined[static_cast<size_t>(w)];
      } else {
        p.has_normal = true;
        ++in_normal[static_cast<size_t>(w)];
      }
    }
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k].has_inlined) out[static_cast<size_t>(pairs[k].u)].push_back(static_cast<int>(k));
    }
    for (auto& list : out) {
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return pairs[static_cast<size_t>(a)].first_inlined < pairs[static_cast<size_t>(b)].first_inlined;
      });
    }
  }

  bool is_root(size_t v) const {
    return out_inlined[v] >= 1 && (in_inlined[v] == 0 || in_normal[v] >= 1);
  }

  // Nodes reachable from root over inlined pairs accepted by `take`.
  template <class Take>
  std::vector<char> reach(int root, Take take) const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{root};
    seen[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int k : out[static_cast<size_t>(v)]) {
        if (!take(k)) continue;
        int w = pairs[static_cast<size_t>(k)].w;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  // DFS preorder from root over inlined pairs inside `in_set`.
  std::vector<int> order(int root, const std::vector<char>& in_set) const {
    std::vector<int> result;
    std::vector<char> visited(n, 0);
    auto visit = [&](auto&& self, int v) -> void {
      visited[static_cast<size_t>(v)] = 1;
      result.push_back(v);
      for (int k : out[static_cast<size_t>(v)]) {
        int w = pairs[static_cast<size_t>(k)].w;
        if (in_set[static_cast<size_t>(w)] && !visited[static_cast<size_t>(w)]) self(self, w);
      }
    };
    visit(visit, root);
    return result;
  }
};

struct RootResult {
  std::vector<std::vector<int>> lists;
  std::vector<std::string> diagnostics;
};

RootResult extend_root(const PairGraph& pg, const Fcg& g, int root, const ExtendOptions& opt) {
  RootResult rr;
  // BFS distance over all inlined pairs, for branching priority.
  std::vector<int> dist(pg.n, -1);
  std::deque<int> queue{root};
  dist[static_cast<size_t>(root)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int k : pg.out[static_cast<size_t>(v)]) {
      int w = pg.pairs[static_cast<size_t>(k)].w;
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> mixed;
  for (size_t k = 0; k < pg.pairs.size(); ++k) {
    const auto& p = pg.pairs[k];
    if (p.mixed() && dist[static_cast<size_t>(p.u)] >= 0) mixed.push_back(static_cast<int>(k));
  }
  std::sort(mixed.begin(), mixed.end(), [&](int a, int b) {
    const auto& pa = pg.pairs[static_cast<size_t>(a)];
    const auto& pb = pg.pairs[static_cast<size_t>(b)];
    int da = dist[static_cast<size_t>(pa.u)], db = dist[static_cast<size_t>(pb.u)];
    if (da != db) return da < db;
    return pa.first_inlined < pb.first_inlined;
  });
  size_t branched = std::min(mixed.size(), static_cast<size_t>(std::max(0, opt.max_branch_pairs)));
  if (branched < mixed.size()) {
    rr.diagnostics.push_back("root " + g.nodes()[static_cast<size_t>(root)] + ": " +
                             std::to_string(mixed.size()) + " mixed pairs, branching on the first " +
                             std::to_string(branched) + ", the rest continue");
  }
  // stop[k] = 1 when pair k is cut in the current variant
  std::vector<char> stop(pg.pairs.size(), 0);
  std::set<std::vector<int>> seen;
  for (std::uint32_t mask = 0; mask < (1u << branched); ++mask) {
    for (size_t b = 0; b < branched; ++b) {
      stop[static_cast<size_t>(mixed[b])] = (mask >> b) & 1u;
    }
    std::vector<char> in_set =
        pg.reach(root, [&](int k) { return !stop[static_cast<size_t>(k)]; });
    std::vector<int> key;
    for (size_t v = 0; v < pg.n; ++v) {
      if (in_set[v]) key.push_back(static_cast<int>(v));
    }
    if (key.size() < 2 || !seen.insert(key).second) continue;
    rr.lists.push_back(pg.order(root, in_set));
  }
  return rr;
}

std::vector<std::string> ids(const Fcg& g, const std::vector<int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (int i : v) out.push_back(g.nodes()[static_cast<size_t>(i)]);
  return out;
}

bool sfs_less(const Sfs& a, const Sfs& b) {
  if (a.root != b.root) return a.root < b.root;
  return a.members < b.members;
}

}  // namespace

std::vector<std::string> select_roots(const LabeledFcg& lf) {
  PairGraph pg(lf);
  std::vector<std::string> roots;
  for (size_t v = 0; v < pg.n; ++v) {
    if (pg.is_root(v)) roots.push_back(lf.g.nodes()[v]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ExtendResult extend(const LabeledFcg& lf, const std::string& root, const ExtendOptions& opt) {
  int r = lf.g.node_index(root);
  if (r < 0) throw Error("unknown root '" + root + "'");
  PairGraph pg(lf);
  RootResult rr = extend_root(pg, lf.g, r, opt);
  ExtendResult out;
  for (const auto& list : rr.lists) out.member_lists.push_back(ids(lf.g, list));
  std::sort(out.member_lists.begin(), out.member_lists.end());
  out.diagnostics = std::move(rr.diagnostics);
  return out;
}

std::string aggregate(const std::vector<std::string>& members, const SourceFacts& facts) {
  std::string text;
  for (size_t i = 0; i < members.size(); ++i) {
    const FunctionFacts* f = facts.find_function(members[i]);
    if (!f) throw Error("no facts for SFS member '" + members[i] + "'");
    if (i) text += "\n\n";
    text += f->body_text;
  }
  return text;
}

std::string aggregate(const std::vector<std::string>& members,
                      const std::map<std::string, std::string>& bodies) {
  std::string text;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) text += "\n\n";
    auto it = bodies.find(members[i]);
    if (it != bodies.end()) text += it->second;
  }
  return text;
}

SfsSet generate_all(const LabeledFcg& lf, const SourceFacts* facts, const ExtendOptions& opt,
                    unsigned jobs) {
  validate_labeled_fcg(lf);
  PairGraph pg(lf);
  std::vector<int> roots;
  for (size_t v = 0; v < pg.n; ++v) {
    if (pg.is_root(v)) roots.push_back(static_cast<int>(v));
  }
  std::vector<RootResult> results(roots.size());
  parallel_for(roots.size(), jobs,
               [&](size_t i) { results[i] = extend_root(pg, lf.g, roots[i], opt); });

  SfsSet out;
  for (size_t i = 0; i < roots.size(); ++i) {
    for (const auto& list : results[i].lists) {
      Sfs s;
      s.root = lf.g.nodes()[static_cast<size_t>(roots[i])];
      s.members = ids(lf.g, list);
      s.settings = {lf.setting};
      s.aggregated_text = facts ? aggregate(s.members, *facts) : aggregate(s.members, lf.bodies);
      out.sfss.push_back(std::move(s));
    }
    for (auto& d : results[i].diagnostics) out.diagnostics.push_back(lf.setting.name() + ": " + d);
  }
  std::sort(out.sfss.begin(), out.sfss.end(), sfs_less);
  out.per_setting_count = out.sfss.size();
  return out;
}

SfsSet generate_for_matrix(const Fcg& g, const SourceFacts* facts, const LabelMatrix& m,
                           const ExtendOptions& opt, unsigned jobs) {
  std::map<std::pair<std::string, std::vector<std::string>>, Sfs> merged;
  SfsSet out;
  for (const CompilationSetting& s : m.columns()) {
    SfsSet one = generate_all(labeled_fcg(g, m, s), facts, opt, jobs);
    out.per_setting_count += one.per_setting_count;
    out.diagnostics.insert(out.diagnostics.end(), one.diagnostics.begin(), one.diagnostics.end());
    for (Sfs& sfs : one.sfss) {
      auto key = std::make_pair(sfs.root, sfs.members);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(std::move(key), std::move(sfs));
      } else {
        it->second.settings.push_back(s);
      }
    }
  }
  for (auto& [key, sfs] : merged) {
    std::sort(sfs.settings.begin(), sfs.settings.end());
    out.sfss.push_back(std::move(sfs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Baselines

std::string_view to_string(BaselineKind kind) {
  return kind == BaselineKind::kBingoLike ? "bingo_like" : "asm2vec_like";
}

BaselineKind parse_baseline_kind(std::string_view text) {
  if (text == "bingo_like") return BaselineKind::kBingoLike;
  if (text == "asm2vec_like") return BaselineKind::kAsm2vecLike;
  throw Error("unknown baseline '" + std::string(text) + "' (expected bingo_like or asm2vec_like)");
}

std::vector<LabeledFcg> baseline_labels(BaselineKind kind, const Fcg& g, const SourceFacts& facts,
                                        const std::vector<CompilationSetting>& settings,
                                        const BaselineThresholds& t) {
  if (settings.empty()) throw Error("baseline labels need at least one setting");
  std::set<std::string> inlined;
  for (const FcgEdge& e : g.edges()) {
    const FunctionFacts* callee = facts.find_function(e.callee_id);
    if (!callee) throw Error("no facts for callee '" + e.callee_id + "'");
    bool yes = callee->stmt_counts.statement <= t.max_callee_stmt || g.called_times(e.callee_id) == 1;
    if (kind == BaselineKind::kAsm2vecLike) {
      yes = yes && g.calling_times(e.callee_id) <= t.max_callee_out_degree;
    }
    if (yes) inlined.insert(e.edge_id);
  }
  std::vector<LabeledFcg> out;
  for (const CompilationSetting& s : settings) out.push_back(LabeledFcg{g, inlined, s, {}});
  return out;
}

// ---------------------------------------------------------------------------
// Files

namespace {

using detail::Fields;
using detail::Json;

constexpr int kSfsSchemaVersion = 1;

CompilationSetting setting_field(const Json& j, const std::string& origin, const std::string& where) {
  if (!j.is_string()) throw SchemaError(origin + ": " + where + ": expected a setting name");
  try {
    return CompilationSetting::parse(j.get<std::string>());
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(origin + ": " + where + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& origin,
                                     const std::string& where) {
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw SchemaError(origin + ": " + where + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

std::string labeled_fcg_to_json(const LabeledFcg& lf) {
  Json doc = Json::parse(fcg_to_json(lf.g));
  doc["setting"] = lf.setting.name();
  doc["inlined"] = Json(std::vector<std::string>(lf.inlined.begin(), lf.inlined.end()));
  if (!lf.bodies.empty()) doc["bodies"] = Json(lf.bodies);
  return doc.dump(1) + "\n";
}

LabeledFcg labeled_fcg_from_json(std::string_view text, std::string_view origin) {
  LabeledFcg lf;
  lf.g = fcg_from_json(text, origin);
  Json doc = detail::parse_json(text, origin);
  Fields top(doc, std::string(origin), "labeled_fcg");
  lf.setting = setting_field(top.raw("setting"), top.origin(), "labeled_fcg.setting");
  for (std::string& id : string_list(top.array("inlined"), top.origin(), "labeled_fcg.inlined")) {
    if (lf.g.edge_index(id) < 0) top.fail("inlined", "'" + id + "' is not an edge id");
    lf.inlined.insert(std::move(id));
  }
  if (top.has("bodies")) {
    const Json& b = top.object("bodies");
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!it.value().is_string()) top.fail("bodies", "'" + it.key() + "' is not a string");
      lf.bodies[it.key()] = it.value().get<std::string>();
    }
  }
  return lf;
}

LabeledFcg load_labeled_fcg(const std::filesystem::path& path) {
  return labeled_fcg_from_json(detail::read_file(path), path.string());
}

std::filesystem::path sfs_text_dir(const std::filesystem::path& path) {
  return path.parent_path() / (path.stem().string() + "_texts");
}

std::string sfs_record_json(const Sfs& sfs) {
  Json settings = Json::array();
  for (const CompilationSetting& s : sfs.settings) settings.push_back(s.name());
  Json rec{{"schema_version", kSfsSchemaVersion},
           {"root", sfs.root},
           {"members", sfs.members},
           {"settings", std::move(settings)},
           {"aggregated_text_sha256", sha256_hex(sfs.aggregated_text)}};
  return rec.dump();
}

void write_sfs_file(const std::vector<Sfs>& sfss, const std::filesystem::path& path) {
  std::string lines;
  std::filesystem::path dir = sfs_text_dir(path);
  std::filesystem::create_directories(dir);
  for (const Sfs& s : sfss) {
    lines += sfs_record_json(s) + "\n";
    detail::write_file(dir / (sha256_hex(s.aggregated_text) + ".txt"), s.aggregated_text);
  }
  detail::write_file(path, lines);
}

std::vector<Sfs> read_sfs_file(const std::filesystem::path& path) {
  std::string text = detail::read_file(path);
  std::filesystem::path dir = sfs_text_dir(path);
  std::vector<Sfs> out;
  size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::string origin = path.string() + ":" + std::to_string(lineno);
    Json rec = detail::parse_json(line, origin);
    detail::check_schema_version(rec, kSfsSchemaVersion, origin);
    Fields f(rec, origin, "sfs");
    Sfs s;
    s.root = f.str("root");
    s.members = string_list(f.array("members"), origin, "sfs.members");
    if (s.members.size() < 2 || s.members.front() != s.root) {
      f.fail("members", "must start with the root and hold at least two functions");
    }
    if (std::set<std::string>(s.members.begin(), s.members.end()).size() != s.members.size()) {
      f.fail("members", "duplicate member");
    }
    const Json& settings = f.array("settings");
    for (size_t i = 0; i < settings.size(); ++i) {
      s.settings.push_back(setting_field(settings[i], origin, "sfs.settings[" + std::to_string(i) + "]"));
    }
    std::string sha = f.str("aggregated_text_sha256");
    if (sha.size() != 64 || sha.find_first_not_of("0123456789abcdef") != std::string::npos) {
      f.fail("aggregated_text_sha256", "not a lowercase hex SHA-256");
    }
    std::filesystem::path tp = dir / (sha + ".txt");
    if (std::filesystem::exists(tp)) {
      s.aggregated_text = detail::read_file(tp);
      if (sha256_hex(s.aggregated_text) != sha) f.fail("aggregated_text_sha256", "text file hash mismatch");
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace inlsfs
