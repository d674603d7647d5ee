#include "inlsfs/synth.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "inlsfs/error.hpp"

namespace inlsfs::synth {

namespace {

const char* const kVerbs[] = {"parse", "read", "write", "scan", "hash", "copy", "merge", "split",
                              "load", "store", "check", "find", "update", "reset", "pack", "fold"};
const char* const kNouns[] = {"buffer", "header", "token", "entry", "node", "table", "block", "frame",
                              "chunk", "record", "field", "queue", "state", "index", "range", "key"};
const char* const kLocals[] = {"count", "len", "total", "flags", "mask", "size", "offset", "limit",
                               "step", "width", "depth", "score", "pos", "acc", "tmp", "bits"};

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

template <size_t N>
const char* pick(Rng& rng, const char* const (&words)[N]) {
  return words[static_cast<size_t>(uniform(rng, 0, static_cast<int>(N) - 1))];
}

enum class Kind { kDecl, kAssign, kIf, kFor, kWhile, kSwitch };

struct Stmt {
  Kind kind = Kind::kAssign;
  std::vector<Stmt> body;
  std::vector<Stmt> alt;  // else branch, or the second switch case
  int call = -1;          // index into the function's call list
  int value = 0;
};

struct Function {
  std::string name;
  int file = 0;
  int n_params = 1;
  bool is_static = false;
  bool is_inline = false;
  std::vector<int> callees;  // -1 = library call
  std::vector<Stmt> body;
};

Stmt random_stmt(Rng& rng, int depth) {
  Stmt s;
  s.value = uniform(rng, 1, 9);
  int roll = uniform(rng, 0, depth >= 2 ? 1 : 9);
  if (roll <= 2) {
    s.kind = Kind::kDecl;
  } else if (roll <= 4 || depth >= 2) {
    s.kind = Kind::kAssign;
  } else {
    s.kind = static_cast<Kind>(roll - 3);  // kIf .. kSwitch
    if (s.kind > Kind::kSwitch) s.kind = Kind::kIf;
    int n = uniform(rng, 1, 2);
    for (int i = 0; i < n; ++i) s.body.push_back(random_stmt(rng, depth + 1));
    if (s.kind == Kind::kSwitch || (s.kind == Kind::kIf && chance(rng, 0.3))) {
      s.alt.push_back(random_stmt(rng, depth + 1));
    }
  }
  return s;
}

void collect_slots(std::vector<Stmt>& list, std::vector<Stmt*>& slots) {
  for (Stmt& s : list) {
    if (s.kind == Kind::kDecl || s.kind == Kind::kAssign) {
      slots.push_back(&s);
    } else {
      collect_slots(s.body, slots);
      collect_slots(s.alt, slots);
    }
  }
}

std::string params_of(int n) { return n == 1 ? "int a" : "int a, int b"; }

std::string signature(const Function& f) {
  std::string sig;
  if (f.is_static) sig += "static ";
  if (f.is_inline) sig += "inline ";
  return sig + "int " + f.name + "(" + params_of(f.n_params) + ")";
}

class Renderer {
 public:
  Renderer(const std::vector<Function>& fns, Rng& rng) : fns_(fns), rng_(rng) {}

  void function(const Function& f, std::string& out) {
    locals_ = 0;
    out += signature(f) + "\n{\n";
    out += "  int r = a;\n";
    for (const Stmt& s : f.body) stmt(f, s, 1, out);
    out += "  return r;\n}\n";
  }

 private:
  void line(int indent, const std::string& text, std::string& out) {
    out.append(static_cast<size_t>(indent) * 2, ' ');
    out += text + "\n";
  }

  std::string call_text(const Function& f, int call) {
    int callee = f.callees[static_cast<size_t>(call)];
    if (callee < 0) return "printf(\"%d\\n\", r)";
    const Function& g = fns_[static_cast<size_t>(callee)];
    std::string args;
    for (int i = 0; i < g.n_params; ++i) {
      if (i) args += ", ";
      int roll = uniform(rng_, 0, 2);
      args += roll == 0 ? std::to_string(uniform(rng_, 0, 64)) : roll == 1 ? "r" : "a";
    }
    return g.name + "(" + args + ")";
  }

  void stmt(const Function& f, const Stmt& s, int indent, std::string& out) {
    const std::string v = std::to_string(s.value);
    switch (s.kind) {
      case Kind::kDecl: {
        std::string name = std::string(pick(rng_, kLocals)) + std::to_string(++locals_);
        std::string init = s.call >= 0 ? call_text(f, s.call) : "r * " + v;
        line(indent, "int " + name + " = " + init + ";", out);
        line(indent, "r += " + name + ";", out);
        break;
      }
      case Kind::kAssign:
        if (s.call >= 0 && f.callees[static_cast<size_t>(s.call)] < 0) {
          line(indent, call_text(f, s.call) + ";", out);
        } else if (s.call >= 0) {
          line(indent, "r += " + call_text(f, s.call) + ";", out);
        } else {
          line(indent, "r = r * " + v + " + a;", out);
        }
        break;
      case Kind::kIf:
        line(indent, "if (r > " + v + ") {", out);
        for (const Stmt& c : s.body) stmt(f, c, indent + 1, out);
        if (!s.alt.empty()) {
          line(indent, "} else {", out);
          for (const Stmt& c : s.alt) stmt(f, c, indent + 1, out);
        }
        line(indent, "}", out);
        break;
      case Kind::kFor:
        line(indent, "for (int i" + std::to_string(++locals_) + " = 0; r < " + v + "; r++) {", out);
        for (const Stmt& c : s.body) stmt(f, c, indent + 1, out);
        line(indent, "}", out);
        break;
      case Kind::kWhile:
        line(indent, "while (r < " + v + ") {", out);
        for (const Stmt& c : s.body) stmt(f, c, indent + 1, out);
        line(indent + 1, "r++;", out);
        line(indent, "}", out);
        break;
      case Kind::kSwitch:
        line(indent, "switch (r & 3) {", out);
        line(indent, "case 0: {", out);
        for (const Stmt& c : s.body) stmt(f, c, indent + 1, out);
        line(indent + 1, "break;", out);
        line(indent, "}", out);
        line(indent, "case 1: {", out);
        for (const Stmt& c : s.alt) stmt(f, c, indent + 1, out);
        line(indent + 1, "break;", out);
        line(indent, "}", out);
        line(indent, "default:", out);
        line(indent + 1, "r = " + v + ";", out);
        line(indent, "}", out);
        break;
    }
  }

  const std::vector<Function>& fns_;
  Rng& rng_;
  int locals_ = 0;
};

}  // namespace

std::map<std::string, std::string> generate_sources(std::uint64_t seed, const ProjectParams& p) {
  if (p.n_functions < 1 || p.n_files < 1) throw Error("synthetic project needs functions and files");
  Rng rng(seed);
  const int n = p.n_functions;
  std::vector<Function> fns(static_cast<size_t>(n));
  std::set<std::string> names;
  for (int i = 0; i < n; ++i) {
    Function& f = fns[static_cast<size_t>(i)];
    do {
      f.name = std::string(pick(rng, kVerbs)) + "_" + pick(rng, kNouns);
      if (names.count(f.name)) f.name += "_" + std::to_string(i);
    } while (names.count(f.name));
    names.insert(f.name);
    f.file = uniform(rng, 0, p.n_files - 1);
    f.n_params = uniform(rng, 1, 2);
    int calls = i + 1 < n ? uniform(rng, 0, p.max_calls) : 0;
    for (int c = 0; c < calls; ++c) f.callees.push_back(uniform(rng, i + 1, n - 1));
    if (chance(rng, p.p_external_call)) f.callees.push_back(-1);
    if (chance(rng, p.p_self_call)) f.callees.push_back(i);
    // plenty of tiny helpers, as in real code
    int k = chance(rng, 0.35) ? 1 : uniform(rng, 1, std::max(1, p.max_statements));
    for (int s = 0; s < k; ++s) f.body.push_back(random_stmt(rng, 0));
  }
  // Files are in increasing function order, so every function has a lower
  // index than its callees; calls are shuffled into the statement slots.
  for (Function& f : fns) {
    std::vector<Stmt*> slots;
    collect_slots(f.body, slots);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (size_t c = 0; c < f.callees.size(); ++c) {
      if (c < slots.size()) {
        slots[c]->call = static_cast<int>(c);
      } else {
        Stmt extra;
        extra.kind = Kind::kAssign;
        extra.call = static_cast<int>(c);
        f.body.push_back(extra);
      }
    }
  }
  std::vector<std::set<int>> caller_files(static_cast<size_t>(n));
  for (const Function& f : fns) {
    for (int c : f.callees) {
      if (c >= 0) caller_files[static_cast<size_t>(c)].insert(f.file);
    }
  }
  for (int i = 0; i < n; ++i) {
    Function& f = fns[static_cast<size_t>(i)];
    const auto& files = caller_files[static_cast<size_t>(i)];
    bool local = !files.empty() && files.size() == 1 && *files.begin() == f.file;
    f.is_static = local && chance(rng, p.p_static);
    f.is_inline = f.is_static && chance(rng, p.p_inline_kw);
  }

  std::map<std::string, std::string> out;
  Renderer render(fns, rng);
  for (int file = 0; file < p.n_files; ++file) {
    std::string text = "#include <stdio.h>\n\n";
    std::set<int> used;
    for (const Function& f : fns) {
      if (f.file != file) continue;
      for (int c : f.callees) {
        if (c >= 0) used.insert(c);
      }
    }
    for (int c : used) text += signature(fns[static_cast<size_t>(c)]) + ";\n";
    for (const Function& f : fns) {
      if (f.file != file) continue;
      text += "\n";
      render.function(f, text);
    }
    out["src/unit" + std::to_string(file) + ".c"] = std::move(text);
  }
  return out;
}

SourceFacts parse_sources(const std::map<std::string, std::string>& sources) {
  SourceFacts merged;
  for (const auto& [file, text] : sources) {
    SourceFacts one = parse_source(file, text);
    std::move(one.functions.begin(), one.functions.end(), std::back_inserter(merged.functions));
    std::move(one.call_sites.begin(), one.call_sites.end(), std::back_inserter(merged.call_sites));
    std::move(one.diagnostics.begin(), one.diagnostics.end(), std::back_inserter(merged.diagnostics));
  }
  canonicalize(merged);
  return merged;
}

Project make_project(std::uint64_t seed, const ProjectParams& p) {
  Project proj;
  proj.sources = generate_sources(seed, p);
  proj.facts = parse_sources(proj.sources);
  proj.g = build_fcg(proj.facts);
  return proj;
}

std::vector<CompilationSetting> default_settings() {
  std::vector<CompilationSetting> out;
  for (CompilerFamily fam : {CompilerFamily::kGcc, CompilerFamily::kClang}) {
    for (int o = 0; o < kNumOptLevels; ++o) {
      out.push_back({fam, fam == CompilerFamily::kGcc ? "8.2.0" : "7.0.0", static_cast<OptLevel>(o)});
    }
  }
  return out;
}

namespace {

struct Site {
  int stmt = 0;
  bool inline_kw = false;
  bool is_static = false;
  int called = 0;
  bool in_loop = false;
};

// Each level ORs in more cases, so the inlined sets nest across opt levels.
bool rule(const CompilationSetting& s, const Site& c) {
  int level = static_cast<int>(s.opt);
  bool yes = false;
  if (s.family == CompilerFamily::kGcc) {
    yes = c.inline_kw && c.stmt <= 6;
    if (level >= 1) yes = yes || c.stmt <= 4 || (c.is_static && c.called == 1 && c.stmt <= 30);
    if (level >= 2) yes = yes || c.stmt <= 12 || (c.inline_kw && c.stmt <= 30);
    if (level >= 3) yes = yes || c.stmt <= 20 || (c.is_static && c.stmt <= 40);
  } else {
    yes = c.inline_kw && c.stmt <= 4;
    if (level >= 1) yes = yes || c.stmt <= 6 || (c.inline_kw && c.stmt <= 16);
    if (level >= 2) yes = yes || c.stmt <= 14 || (c.is_static && c.called == 1 && c.stmt <= 40);
    if (level >= 3) yes = yes || (c.in_loop && c.stmt <= 30) || c.stmt <= 22;
  }
  return yes;
}

}  // namespace

std::map<std::string, bool> inline_decisions(const Fcg& g, const SourceFacts& facts,
                                             const CompilationSetting& s) {
  std::map<std::string, const RawCallSite*> sites;
  for (const RawCallSite& c : facts.call_sites) sites[c.call_id] = &c;
  const size_t n = g.nodes().size();
  std::vector<std::vector<int>> adj(n);
  for (const FcgEdge& e : g.edges()) {
    adj[static_cast<size_t>(g.node_index(e.caller_id))].push_back(g.node_index(e.callee_id));
  }
  // reaches[v] = nodes reachable from v, computed on demand
  std::map<int, std::vector<char>> reaches;
  auto reach = [&](int v) -> const std::vector<char>& {
    auto it = reaches.find(v);
    if (it != reaches.end()) return it->second;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<size_t>(x)]) {
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    return reaches.emplace(v, std::move(seen)).first->second;
  };

  std::map<std::string, bool> out;
  for (const FcgEdge& e : g.edges()) {
    const FunctionFacts* callee = facts.find_function(e.callee_id);
    if (!callee) throw Error("no facts for '" + e.callee_id + "'");
    int u = g.node_index(e.caller_id), v = g.node_index(e.callee_id);
    bool recursive = u == v || reach(v)[static_cast<size_t>(u)];
    Site site;
    site.stmt = callee->stmt_counts.statement;
    site.inline_kw = callee->has_inline_kw;
    site.is_static = callee->has_static_kw;
    site.called = g.called_times(e.callee_id);
    auto it = sites.find(e.call_id);
    if (it != sites.end()) site.in_loop = it->second->nesting.in_for || it->second->nesting.in_while;
    out[e.call_id] = !recursive && rule(s, site);
  }
  return out;
}

MappingBundle compile(const Fcg& g, const SourceFacts& facts, const CompilationSetting& s,
                      const std::map<std::string, bool>& decisions) {
  const size_t n = g.nodes().size();
  std::vector<std::vector<const FcgEdge*>> out_edges(n);
  std::vector<int> in_total(n, 0), in_inlined(n, 0);
  for (const FcgEdge& e : g.edges()) {
    size_t u = static_cast<size_t>(g.node_index(e.caller_id));
    size_t v = static_cast<size_t>(g.node_index(e.callee_id));
    out_edges[u].push_back(&e);
    ++in_total[v];
    auto it = decisions.find(e.call_id);
    if (it != decisions.end() && it->second) ++in_inlined[v];
  }
  auto inlined = [&](const FcgEdge& e) {
    auto it = decisions.find(e.call_id);
    return it != decisions.end() && it->second;
  };
  // Library calls also leave call instructions behind.
  std::map<std::string, std::vector<const RawCallSite*>> external;
  for (const UnresolvedCall& u : g.unresolved()) {
    for (const RawCallSite& c : facts.call_sites) {
      if (c.call_id == u.call.call_id) external[c.caller_id].push_back(&c);
    }
  }

  MappingBundle b;
  b.setting = s;
  std::uint64_t base = 0x401000;
  for (size_t f = 0; f < n; ++f) {
    const std::string& id = g.nodes()[f];
    const FunctionFacts* ff = facts.find_function(id);
    if (!ff) throw Error("no facts for '" + id + "'");
    bool emitted = !ff->has_static_kw || in_total[f] == 0 || in_inlined[f] < in_total[f];
    if (!emitted) continue;

    std::set<size_t> members{f};
    std::vector<size_t> stack{f};
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (const FcgEdge* e : out_edges[x]) {
        size_t y = static_cast<size_t>(g.node_index(e->callee_id));
        if (inlined(*e) && members.insert(y).second) stack.push_back(y);
      }
    }
    FunctionMapping fm;
    fm.binary_function = ff->name;
    std::uint64_t addr = base;
    b.line_map.push_back({addr, ff->file, ff->start_line});
    for (size_t m : members) {
      fm.sources.push_back(g.nodes()[m]);
      auto emit = [&](const std::string& file, int line) {
        addr += 8;
        b.bin_callsites.push_back({ff->name, addr});
        b.line_map.push_back({addr, file, line});
      };
      for (const FcgEdge* e : out_edges[m]) {
        if (!inlined(*e)) emit(e->file, e->line);
      }
      for (const RawCallSite* c : external[g.nodes()[m]]) emit(c->file, c->line);
    }
    b.func_map.push_back(std::move(fm));
    base = (addr + 0x100) & ~std::uint64_t{0xff};
  }
  return b;
}

LabelMatrix oracle_matrix(const Fcg& g, const SourceFacts& facts,
                          const std::vector<CompilationSetting>& settings) {
  std::vector<std::string> rows;
  for (const FcgEdge& e : g.edges()) rows.push_back(e.call_id);
  std::vector<CompilationSetting> cols = settings;
  std::sort(cols.begin(), cols.end());
  LabelMatrix m(rows, cols);
  for (size_t c = 0; c < cols.size(); ++c) {
    auto d = inline_decisions(g, facts, cols[c]);
    for (size_t r = 0; r < rows.size(); ++r) {
      m.set(r, c, d.at(rows[r]) ? Label::kInlined : Label::kNotInlined);
    }
  }
  return m;
}

}  // namespace inlsfs::synth
