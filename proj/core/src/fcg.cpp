#include "inlsfs/fcg.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "facts_json.hpp"
#include "json_util.hpp"

namespace inlsfs {

namespace {

auto edge_key(const FcgEdge& e) {
  return std::tie(e.file, e.line, e.col, e.ordinal, e.edge_id);
}

}  // namespace

Fcg::Fcg(std::vector<std::string> nodes, std::vector<FcgEdge> edges,
         std::vector<UnresolvedCall> unresolved)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), unresolved_(std::move(unresolved)) {
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const FcgEdge& a, const FcgEdge& b) { return edge_key(a) < edge_key(b); });
  for (size_t i = 0; i < nodes_.size(); ++i) node_index_.emplace(nodes_[i], static_cast<int>(i));
  out_degree_.assign(nodes_.size(), 0);
  in_degree_.assign(nodes_.size(), 0);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const FcgEdge& e = edges_[i];
    edge_index_.emplace(e.edge_id, static_cast<int>(i));
    call_index_.emplace(e.call_id, static_cast<int>(i));
    int u = node_index(e.caller_id);
    int v = node_index(e.callee_id);
    if (u >= 0) ++out_degree_[u];
    if (v >= 0) ++in_degree_[v];
  }
}

int Fcg::node_index(const std::string& id) const {
  auto it = node_index_.find(id);
  return it == node_index_.end() ? -1 : it->second;
}

int Fcg::edge_index(const std::string& edge_id) const {
  auto it = edge_index_.find(edge_id);
  return it == edge_index_.end() ? -1 : it->second;
}

int Fcg::edge_index_by_call(const std::string& call_id) const {
  auto it = call_index_.find(call_id);
  return it == call_index_.end() ? -1 : it->second;
}

int Fcg::calling_times(const std::string& id) const {
  int i = node_index(id);
  return i < 0 ? 0 : out_degree_[i];
}

int Fcg::called_times(const std::string& id) const {
  int i = node_index(id);
  return i < 0 ? 0 : in_degree_[i];
}

Fcg build_fcg(const SourceFacts& facts) {
  std::vector<std::string> nodes;
  std::map<std::string, std::vector<const FunctionFacts*>, std::less<>> by_name;
  for (const FunctionFacts& f : facts.functions) {
    nodes.push_back(f.function_id);
    by_name[f.name].push_back(&f);
  }

  std::vector<FcgEdge> edges;
  std::vector<UnresolvedCall> unresolved;
  for (const RawCallSite& cs : facts.call_sites) {
    auto it = by_name.find(cs.callee_name);
    const FunctionFacts* target = nullptr;
    std::string reason = "external";
    if (it != by_name.end()) {
      if (it->second.size() == 1) {
        target = it->second.front();
      } else {
        const FunctionFacts* caller = facts.find_function(cs.caller_id);
        std::vector<const FunctionFacts*> same_file;
        for (const FunctionFacts* f : it->second) {
          if (caller && f->file == caller->file) same_file.push_back(f);
        }
        if (same_file.size() == 1) {
          target = same_file.front();
        } else {
          reason = "ambiguous";
        }
      }
    }
    if (!target) {
      unresolved.push_back({cs, reason});
      continue;
    }
    edges.push_back(FcgEdge{cs.call_id, cs.caller_id, target->function_id, cs.call_id, cs.file,
                            cs.line, cs.col, cs.ordinal});
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(unresolved.begin(), unresolved.end(), [](const UnresolvedCall& a, const UnresolvedCall& b) {
    return a.call.call_id < b.call.call_id;
  });
  return Fcg(std::move(nodes), std::move(edges), std::move(unresolved));
}

std::vector<std::string> validate_fcg(const Fcg& g) {
  std::vector<std::string> problems;
  std::set<std::string> seen_nodes;
  for (const std::string& n : g.nodes()) {
    if (!seen_nodes.insert(n).second) problems.push_back("duplicate node '" + n + "'");
  }
  std::set<std::string> seen_edges;
  size_t total_out = 0;
  size_t total_in = 0;
  for (const FcgEdge& e : g.edges()) {
    if (!seen_edges.insert(e.edge_id).second) {
      problems.push_back("duplicate edge_id '" + e.edge_id + "'");
    }
    if (!g.has_node(e.caller_id)) {
      problems.push_back("edge '" + e.edge_id + "': caller '" + e.caller_id + "' is not a node");
    }
    if (!g.has_node(e.callee_id)) {
      problems.push_back("edge '" + e.edge_id + "': callee '" + e.callee_id + "' is not a node");
    }
  }
  for (const std::string& n : g.nodes()) {
    total_out += static_cast<size_t>(g.calling_times(n));
    total_in += static_cast<size_t>(g.called_times(n));
  }
  if (problems.empty() && (total_out != g.edges().size() || total_in != g.edges().size())) {
    problems.push_back("degree sums do not match the edge count");
  }
  return problems;
}

// ---------------------------------------------------------------------------

namespace {

using detail::Fields;
using detail::Json;

constexpr int kFcgSchemaVersion = 1;

}  // namespace

std::string fcg_to_json(const Fcg& g) {
  Json edges = Json::array();
  for (const FcgEdge& e : g.edges()) {
    edges.push_back(Json{{"edge_id", e.edge_id},
                         {"caller_id", e.caller_id},
                         {"callee_id", e.callee_id},
                         {"call_id", e.call_id},
                         {"file", e.file},
                         {"line", e.line},
                         {"col", e.col},
                         {"ordinal", e.ordinal}});
  }
  Json unresolved = Json::array();
  for (const UnresolvedCall& u : g.unresolved()) {
    Json rec = detail::call_site_to_json(u.call);
    rec["reason"] = u.reason;
    unresolved.push_back(std::move(rec));
  }
  Json doc{{"schema_version", kFcgSchemaVersion},
           {"nodes", g.nodes()},
           {"edges", std::move(edges)},
           {"unresolved", std::move(unresolved)}};
  return doc.dump(1) + "\n";
}

Fcg fcg_from_json(std::string_view text, std::string_view origin) {
  Json doc = detail::parse_json(text, origin);
  detail::check_schema_version(doc, kFcgSchemaVersion, origin);
  Fields top(doc, std::string(origin), "fcg");

  std::vector<std::string> nodes;
  const Json& jn = top.array("nodes");
  for (size_t i = 0; i < jn.size(); ++i) {
    if (!jn[i].is_string()) {
      throw SchemaError(std::string(origin) + ": fcg.nodes[" + std::to_string(i) +
                        "]: expected a string");
    }
    nodes.push_back(jn[i].get<std::string>());
  }

  std::vector<FcgEdge> edges;
  const Json& je = top.array("edges");
  for (size_t i = 0; i < je.size(); ++i) {
    Fields f(je[i], top.origin(), "edges[" + std::to_string(i) + "]");
    FcgEdge e;
    e.edge_id = f.str("edge_id");
    e.caller_id = f.str("caller_id");
    e.callee_id = f.str("callee_id");
    e.call_id = f.has("call_id") ? f.str("call_id") : e.edge_id;
    e.file = f.has("file") ? f.str("file") : std::string();
    e.line = f.has("line") ? static_cast<int>(f.integer("line", 0)) : 0;
    e.col = f.has("col") ? static_cast<int>(f.integer("col", 0)) : 0;
    e.ordinal = f.has("ordinal") ? static_cast<int>(f.integer("ordinal", 1)) : 1;
    edges.push_back(std::move(e));
  }

  std::vector<UnresolvedCall> unresolved;
  if (top.has("unresolved")) {
    const Json& ju = top.array("unresolved");
    for (size_t i = 0; i < ju.size(); ++i) {
      Fields f(ju[i], top.origin(), "unresolved[" + std::to_string(i) + "]");
      unresolved.push_back({detail::call_site_from_json(f), f.str("reason")});
    }
  }

  Fcg g(std::move(nodes), std::move(edges), std::move(unresolved));
  std::vector<std::string> problems = validate_fcg(g);
  if (!problems.empty()) throw SchemaError(std::string(origin) + ": " + problems.front());
  return g;
}

void dump_fcg(const Fcg& g, const std::filesystem::path& path) {
  detail::write_file(path, fcg_to_json(g));
}

Fcg load_fcg(const std::filesystem::path& path) {
  return fcg_from_json(detail::read_file(path), path.string());
}

}  // namespace inlsfs
