#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "inlsfs/source_facts.hpp"

namespace inlsfs {

// One call site resolved to a project function: a directed edge of the
// multi-digraph. Position fields order edges and SFS traversal.
struct FcgEdge {
  std::string edge_id;
  std::string caller_id;
  std::string callee_id;
  std::string call_id;
  std::string file;
  int line = 0;
  int col = 0;
  int ordinal = 1;

  friend bool operator==(const FcgEdge&, const FcgEdge&) = default;
};

struct UnresolvedCall {
  RawCallSite call;
  std::string reason;  // "external" or "ambiguous"

  friend bool operator==(const UnresolvedCall&, const UnresolvedCall&) = default;
};

// Function call graph. Parallel edges are distinct call sites.
class Fcg {
 public:
  Fcg() = default;
  // Edges are sorted into (file, line, col, ordinal, edge_id) order.
  Fcg(std::vector<std::string> nodes, std::vector<FcgEdge> edges,
      std::vector<UnresolvedCall> unresolved = {});

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<FcgEdge>& edges() const { return edges_; }
  const std::vector<UnresolvedCall>& unresolved() const { return unresolved_; }

  bool has_node(const std::string& id) const { return node_index_.count(id) > 0; }
  int node_index(const std::string& id) const;
  // Index into edges() by edge_id or call_id, -1 when absent.
  int edge_index(const std::string& edge_id) const;
  int edge_index_by_call(const std::string& call_id) const;

  int calling_times(const std::string& id) const;  // out-degree
  int called_times(const std::string& id) const;   // in-degree

  friend bool operator==(const Fcg& a, const Fcg& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.unresolved_ == b.unresolved_;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<FcgEdge> edges_;
  std::vector<UnresolvedCall> unresolved_;
  std::map<std::string, int, std::less<>> node_index_;
  std::map<std::string, int, std::less<>> edge_index_;
  std::map<std::string, int, std::less<>> call_index_;
  std::vector<int> out_degree_;
  std::vector<int> in_degree_;
};

// Resolves callee names to project functions by exact name. When several
// functions share a name, one in the caller's file wins; otherwise the call is
// left unresolved as ambiguous. Edge ids are the call ids.
Fcg build_fcg(const SourceFacts& facts);

// Empty iff every graph invariant holds.
std::vector<std::string> validate_fcg(const Fcg& g);

std::string fcg_to_json(const Fcg& g);
Fcg fcg_from_json(std::string_view text, std::string_view origin = "<fcg>");
void dump_fcg(const Fcg& g, const std::filesystem::path& path);
Fcg load_fcg(const std::filesystem::path& path);

}  // namespace inlsfs
