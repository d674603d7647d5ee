#include "inlsfs/source_facts.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "c_lexer.hpp"
#include "inlsfs/error.hpp"
#include "inlsfs/parallel.hpp"
#include "facts_json.hpp"
#include "json_util.hpp"

namespace inlsfs {

using detail::Token;
using detail::TokKind;

namespace {

struct ParseFailure {
  int line;
  std::string reason;
};

bool is_type_start_keyword(std::string_view w) {
  static constexpr std::string_view kWords[] = {
      "void",     "char",     "short",    "int",          "long",      "float",
      "double",   "signed",   "unsigned", "_Bool",        "bool",      "_Complex",
      "struct",   "union",    "enum",     "const",        "volatile",  "static",
      "extern",   "register", "auto",     "typedef",      "inline",    "restrict",
      "_Atomic",  "_Alignas", "_Thread_local", "__extension__", "__const", "__signed__",
      "__inline", "__inline__", "_Noreturn", "_Static_assert", "__typeof__", "typeof"};
  return std::find(std::begin(kWords), std::end(kWords), w) != std::end(kWords);
}

// Identifiers that look like calls when followed by '(' but are not.
bool is_call_like_keyword(std::string_view w) {
  return detail::is_c_keyword(w) || w == "defined";
}

class FileParser {
 public:
  FileParser(std::string_view file, std::string_view text, std::vector<Token> tokens,
             SourceFacts& out)
      : file_(file), text_(text), toks_(std::move(tokens)), out_(out) {}

  void run() {
    size_t i = 0;
    const size_t n = toks_.size();
    while (i < n) {
      size_t decl_start = i;
      size_t j = i;
      int depth = 0;
      for (; j < n; ++j) {
        const Token& t = toks_[j];
        if (t.is("(") || t.is("[")) ++depth;
        if (t.is(")") || t.is("]")) --depth;
        if (depth <= 0 && (t.is(";") || t.is("{") || t.is("}"))) break;
      }
      if (j >= n) break;
      if (!toks_[j].is("{")) {
        i = j + 1;
        continue;
      }
      size_t close = match_brace(j);
      if (close == npos) {
        out_.diagnostics.push_back(
            {std::string(file_), toks_[j].line, "unbalanced braces; rest of file skipped"});
        break;
      }
      if (auto name_idx = function_name_index(decl_start, j)) {
        parse_function(decl_start, *name_idx, j, close);
        i = close + 1;
      } else {
        // struct/union/enum body or aggregate initializer; continue the
        // enclosing declaration after it.
        i = close + 1;
      }
    }
  }

 private:
  static constexpr size_t npos = static_cast<size_t>(-1);

  size_t match_brace(size_t open) const {
    int depth = 0;
    for (size_t k = open; k < toks_.size(); ++k) {
      if (toks_[k].is("{")) ++depth;
      if (toks_[k].is("}") && --depth == 0) return k;
    }
    return npos;
  }

  size_t match_paren(size_t open, size_t limit) const {
    int depth = 0;
    for (size_t k = open; k < limit; ++k) {
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) {
        if (--depth == 0) return k;
      }
    }
    return npos;
  }

  // Index of the function name token when [begin, brace) is a function
  // definition header.
  std::optional<size_t> function_name_index(size_t begin, size_t brace) const {
    if (brace <= begin) return std::nullopt;
    size_t end = brace;
    // Drop trailing attribute / asm-label groups.
    while (end > begin && toks_[end - 1].is(")")) {
      size_t open = find_open(end - 1, begin);
      if (open == npos || open == begin) return std::nullopt;
      const Token& before = toks_[open - 1];
      if (before.text == "__attribute__" || before.text == "__asm__" || before.text == "asm" ||
          before.text == "__asm" || before.text == "__declspec") {
        end = open - 1;
        continue;
      }
      break;
    }
    if (end <= begin || !toks_[end - 1].is(")")) return std::nullopt;
    int depth = 0;
    for (size_t k = begin; k < end; ++k) {
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[")) ++depth;
      if (t.is(")") || t.is("]")) --depth;
      if (depth == 0 && (t.is("=") || t.is(","))) return std::nullopt;
      if (t.text == "typedef") return std::nullopt;
    }
    size_t open = find_open(end - 1, begin);
    if (open == npos || open == begin) return std::nullopt;
    const Token& name = toks_[open - 1];
    if (!name.is_ident() || detail::is_c_keyword(name.text)) return std::nullopt;
    return open - 1;
  }

  size_t find_open(size_t close, size_t begin) const {
    int depth = 0;
    for (size_t k = close + 1; k-- > begin;) {
      if (toks_[k].is(")")) ++depth;
      if (toks_[k].is("(") && --depth == 0) return k;
    }
    return npos;
  }

  void parse_function(size_t begin, size_t name_idx, size_t open, size_t close) {
    FunctionFacts fn;
    fn.name = std::string(toks_[name_idx].text);
    fn.file = std::string(file_);
    fn.start_line = toks_[begin].line;
    fn.end_line = toks_[close].line;
    fn.function_id = fn.file + ":" + fn.name + ":" + std::to_string(fn.start_line);
    for (size_t k = begin; k < name_idx; ++k) {
      std::string_view w = toks_[k].text;
      if (w == "inline" || w == "__inline" || w == "__inline__") fn.has_inline_kw = true;
      if (w == "static") fn.has_static_kw = true;
    }
    fn.body_text = std::string(text_.substr(toks_[begin].offset,
                                            toks_[close].end_offset() - toks_[begin].offset));

    counts_ = {};
    calls_.clear();
    try {
      Context top;
      parse_block_items(open + 1, close, top);
    } catch (const ParseFailure& failure) {
      out_.diagnostics.push_back({std::string(file_), failure.line,
                                  "function '" + fn.name + "' skipped: " + failure.reason});
      return;
    }
    fn.stmt_counts = counts_;

    std::map<std::string, int> ordinals;
    for (RawCallSite& cs : calls_) {
      cs.caller_id = fn.function_id;
      cs.file = fn.file;
      cs.ordinal = ++ordinals[cs.callee_name];
      cs.call_id = fn.function_id + "/" + cs.callee_name + "#" + std::to_string(cs.ordinal);
      out_.call_sites.push_back(std::move(cs));
    }
    out_.functions.push_back(std::move(fn));
  }

  struct Context {
    bool in_for = false;
    bool in_while = false;
    bool in_switch = false;
    bool in_if = false;
    int depth = 0;
  };

  [[noreturn]] void fail(size_t at, const std::string& reason) const {
    int line = at < toks_.size() ? toks_[at].line : (toks_.empty() ? 0 : toks_.back().line);
    throw ParseFailure{line, reason};
  }

  void expect(size_t at, size_t end, std::string_view punct) const {
    if (at >= end || !toks_[at].is(punct)) {
      fail(at, "expected '" + std::string(punct) + "'");
    }
  }

  void parse_block_items(size_t begin, size_t end, const Context& ctx) {
    size_t k = begin;
    while (k < end) k = parse_statement(k, end, ctx);
  }

  // Body of a control statement: a braced body shares the statement's level.
  size_t parse_substatement(size_t k, size_t end, const Context& ctx) {
    if (k >= end) fail(k, "missing statement body");
    if (toks_[k].is("{")) {
      size_t close = match_brace(k);
      if (close == npos || close >= end) fail(k, "unbalanced braces");
      parse_block_items(k + 1, close, ctx);
      return close + 1;
    }
    return parse_statement(k, end, ctx);
  }

  // Parenthesized control expression starting at `k`; returns index after ')'.
  size_t parse_condition(size_t k, size_t end, const Context& ctx) {
    expect(k, end, "(");
    size_t close = match_paren(k, end);
    if (close == npos) fail(k, "unbalanced parentheses");
    scan_calls(k + 1, close, ctx);
    return close + 1;
  }

  size_t find_semicolon(size_t k, size_t end) const {
    int depth = 0;
    for (; k < end; ++k) {
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) {
        if (--depth < 0) fail(k, "unexpected '" + std::string(t.text) + "'");
      }
      if (depth == 0 && t.is(";")) return k;
    }
    fail(k, "missing ';'");
  }

  size_t parse_statement(size_t k, size_t end, const Context& ctx) {
    const Token& t = toks_[k];
    Context inner = ctx;
    inner.depth = ctx.depth + 1;

    if (t.is("{")) {
      size_t close = match_brace(k);
      if (close == npos || close >= end) fail(k, "unbalanced braces");
      parse_block_items(k + 1, close, inner);
      return close + 1;
    }
    if (t.is(";")) {
      ++counts_.statement;
      return k + 1;
    }
    if (t.is_ident()) {
      std::string_view w = t.text;
      if (w == "if") {
        ++counts_.statement;
        ++counts_.if_;
        inner.in_if = true;
        size_t next = parse_condition(k + 1, end, inner);
        next = parse_substatement(next, end, inner);
        if (next < end && toks_[next].is_ident() && toks_[next].text == "else") {
          next = parse_substatement(next + 1, end, inner);
        }
        return next;
      }
      if (w == "for") {
        ++counts_.statement;
        ++counts_.for_;
        inner.in_for = true;
        size_t next = parse_condition(k + 1, end, inner);
        return parse_substatement(next, end, inner);
      }
      if (w == "while") {
        ++counts_.statement;
        ++counts_.while_;
        inner.in_while = true;
        size_t next = parse_condition(k + 1, end, inner);
        return parse_substatement(next, end, inner);
      }
      if (w == "do") {
        ++counts_.statement;
        ++counts_.while_;
        inner.in_while = true;
        size_t next = parse_substatement(k + 1, end, inner);
        if (next >= end || toks_[next].text != "while") fail(next, "expected 'while' after do body");
        next = parse_condition(next + 1, end, inner);
        expect(next, end, ";");
        return next + 1;
      }
      if (w == "switch") {
        ++counts_.statement;
        ++counts_.switch_;
        inner.in_switch = true;
        size_t next = parse_condition(k + 1, end, inner);
        return parse_substatement(next, end, inner);
      }
      if (w == "case" || w == "default") {
        ++counts_.switch_cases;
        size_t colon = find_label_colon(k + 1, end);
        scan_calls(k + 1, colon, ctx);
        return labeled_tail(colon + 1, end, ctx);
      }
      if (w == "return") {
        ++counts_.statement;
        ++counts_.return_;
        size_t semi = find_semicolon(k + 1, end);
        scan_calls(k + 1, semi, ctx);
        return semi + 1;
      }
      if (w == "break" || w == "continue" || w == "goto") {
        ++counts_.statement;
        return find_semicolon(k + 1, end) + 1;
      }
      if (w == "else") fail(k, "'else' without 'if'");
      if (!detail::is_c_keyword(w) && k + 1 < end && toks_[k + 1].is(":")) {
        return labeled_tail(k + 2, end, ctx);
      }
      if (is_declaration(k, end)) {
        ++counts_.statement;
        ++counts_.declare;
        size_t semi = find_semicolon(k, end);
        scan_initializers(k, semi, ctx);
        return semi + 1;
      }
    }
    if (t.is("}")) fail(k, "unexpected '}'");
    ++counts_.statement;
    ++counts_.expression;
    size_t semi = find_semicolon(k, end);
    scan_calls(k, semi, ctx);
    return semi + 1;
  }

  // Statement after a label; a label directly before '}' labels nothing.
  size_t labeled_tail(size_t k, size_t end, const Context& ctx) {
    if (k >= end) return k;
    return parse_statement(k, end, ctx);
  }

  size_t find_label_colon(size_t k, size_t end) const {
    int depth = 0;
    int ternary = 0;
    for (; k < end; ++k) {
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[")) ++depth;
      if (t.is(")") || t.is("]")) --depth;
      if (depth == 0 && t.is("?")) ++ternary;
      if (depth == 0 && t.is(":")) {
        if (ternary == 0) return k;
        --ternary;
      }
      if (t.is("...")) continue;
    }
    fail(k, "case label without ':'");
  }

  bool is_declaration(size_t k, size_t end) const {
    const Token& t0 = toks_[k];
    if (is_type_start_keyword(t0.text)) return true;
    if (detail::is_c_keyword(t0.text)) return false;
    if (k + 1 >= end) return false;
    const Token& t1 = toks_[k + 1];
    if (t1.is_ident() && !detail::is_c_keyword(t1.text)) return true;
    if (t1.is_ident() && (t1.text == "const" || t1.text == "volatile")) return true;
    if (t1.is("*")) {
      size_t m = k + 1;
      while (m < end && (toks_[m].is("*") || toks_[m].text == "const")) ++m;
      if (m + 1 < end && toks_[m].is_ident() && !detail::is_c_keyword(toks_[m].text)) {
        const Token& after = toks_[m + 1];
        return after.is("=") || after.is(";") || after.is(",") || after.is("[");
      }
    }
    return false;
  }

  // In a declaration only initializer expressions can contain calls.
  void scan_initializers(size_t begin, size_t end, const Context& ctx) {
    int depth = 0;
    size_t k = begin;
    while (k < end) {
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) --depth;
      if (depth == 0 && t.is("=")) {
        size_t stop = k + 1;
        int d = 0;
        for (; stop < end; ++stop) {
          const Token& u = toks_[stop];
          if (u.is("(") || u.is("[") || u.is("{")) ++d;
          if (u.is(")") || u.is("]") || u.is("}")) --d;
          if (d == 0 && u.is(",")) break;
        }
        scan_calls(k + 1, stop, ctx);
        k = stop;
        continue;
      }
      ++k;
    }
  }

  void scan_calls(size_t begin, size_t end, const Context& ctx) {
    for (size_t k = begin; k < end; ++k) {
      if (k + 1 >= end || !toks_[k + 1].is("(")) continue;
      const Token& t = toks_[k];
      std::string callee;
      size_t callee_start = k;
      if (t.is_ident() && !is_call_like_keyword(t.text)) {
        // Member calls keep their access path: s->ops.fn
        size_t m = k;
        while (m >= begin + 2 && (toks_[m - 1].is(".") || toks_[m - 1].is("->")) &&
               toks_[m - 2].is_ident()) {
          m -= 2;
        }
        callee_start = m;
        for (size_t q = m; q <= k; ++q) callee += toks_[q].text;
      } else if (t.is(")") && k >= begin + 3 && toks_[k - 1].is_ident() &&
                 toks_[k - 2].is("*") && toks_[k - 3].is("(")) {
        callee_start = k - 3;
        callee = "(*" + std::string(toks_[k - 1].text) + ")";
      } else {
        continue;
      }
      size_t close = match_paren(k + 1, end);
      if (close == npos) fail(k + 1, "unbalanced call parentheses");

      RawCallSite cs;
      cs.callee_name = std::move(callee);
      cs.line = toks_[callee_start].line;
      cs.col = toks_[callee_start].col;
      cs.nesting = {ctx.in_for, ctx.in_while, ctx.in_switch, ctx.in_if, ctx.depth};
      count_arguments(k + 2, close, cs);
      calls_.push_back(std::move(cs));
      // Arguments are scanned by the continuing loop, so nested calls follow
      // their enclosing call in textual order.
    }
  }

  void count_arguments(size_t begin, size_t end, RawCallSite& cs) const {
    if (begin >= end) return;
    int depth = 0;
    size_t arg_start = begin;
    for (size_t k = begin; k <= end; ++k) {
      if (k == end || (depth == 0 && toks_[k].is(","))) {
        ++cs.n_args;
        if (is_constant(arg_start, k)) ++cs.n_const_args;
        arg_start = k + 1;
        continue;
      }
      const Token& t = toks_[k];
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) --depth;
    }
  }

  // Literal, optionally parenthesized and/or with a unary sign.
  bool is_constant(size_t begin, size_t end) const {
    while (begin < end) {
      if (toks_[begin].is("+") || toks_[begin].is("-")) {
        ++begin;
        continue;
      }
      if (toks_[begin].is("(") && match_paren(begin, end) == end - 1) {
        ++begin;
        --end;
        continue;
      }
      break;
    }
    if (begin >= end) return false;
    if (end - begin == 1) {
      TokKind kind = toks_[begin].kind;
      return kind == TokKind::kNumber || kind == TokKind::kChar || kind == TokKind::kString;
    }
    for (size_t k = begin; k < end; ++k) {
      if (toks_[k].kind != TokKind::kString) return false;
    }
    return true;
  }

  std::string_view file_;
  std::string_view text_;
  std::vector<Token> toks_;
  SourceFacts& out_;
  StmtCounts counts_;
  std::vector<RawCallSite> calls_;
};

auto function_key(const FunctionFacts& f) {
  return std::tie(f.file, f.start_line, f.name);
}

auto call_key(const RawCallSite& c) {
  return std::tie(c.file, c.line, c.col, c.caller_id, c.callee_name, c.ordinal);
}

}  // namespace

const FunctionFacts* SourceFacts::find_function(std::string_view function_id) const {
  for (const FunctionFacts& f : functions) {
    if (f.function_id == function_id) return &f;
  }
  return nullptr;
}

SourceFacts parse_source(std::string_view file, std::string_view text) {
  SourceFacts facts;
  std::vector<Token> tokens = detail::lex_c(file, text, facts.diagnostics);
  FileParser(file, text, std::move(tokens), facts).run();
  canonicalize(facts);
  return facts;
}

void canonicalize(SourceFacts& facts) {
  std::stable_sort(facts.functions.begin(), facts.functions.end(),
                   [](const auto& a, const auto& b) { return function_key(a) < function_key(b); });
  std::stable_sort(facts.call_sites.begin(), facts.call_sites.end(),
                   [](const auto& a, const auto& b) { return call_key(a) < call_key(b); });
  std::stable_sort(facts.diagnostics.begin(), facts.diagnostics.end(), [](const auto& a, const auto& b) {
    return std::tie(a.file, a.line) < std::tie(b.file, b.line);
  });
}

SourceFacts parse_project(const std::filesystem::path& root, const ParserConfig& config) {
  namespace fs = std::filesystem;
  if (!fs::exists(root)) throw Error("project root does not exist: " + root.string());

  std::vector<fs::path> files;
  if (fs::is_regular_file(root)) {
    files.push_back(root);
  } else {
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      std::string ext = entry.path().extension().string();
      if (std::find(config.extensions.begin(), config.extensions.end(), ext) !=
          config.extensions.end()) {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<SourceFacts> parts(files.size());
  parallel_for(files.size(), config.jobs, [&](size_t i) {
    std::string rel = fs::is_regular_file(root)
                          ? files[i].filename().generic_string()
                          : files[i].lexically_relative(root).generic_string();
    std::string text;
    try {
      text = detail::read_file(files[i]);
    } catch (const Error& e) {
      parts[i].diagnostics.push_back({rel, 0, e.what()});
      return;
    }
    parts[i] = parse_source(rel, text);
  });

  SourceFacts merged;
  for (SourceFacts& part : parts) {
    std::move(part.functions.begin(), part.functions.end(), std::back_inserter(merged.functions));
    std::move(part.call_sites.begin(), part.call_sites.end(),
              std::back_inserter(merged.call_sites));
    std::move(part.diagnostics.begin(), part.diagnostics.end(),
              std::back_inserter(merged.diagnostics));
  }
  canonicalize(merged);
  if (merged.functions.empty()) {
    throw Error("empty project: no function definitions found under " + root.string());
  }
  return merged;
}

// ---------------------------------------------------------------------------
// Facts file

namespace {

using detail::Fields;
using detail::Json;

constexpr int kFactsSchemaVersion = 1;

Json counts_to_json(const StmtCounts& c) {
  return Json{{"statement", c.statement}, {"while", c.while_},
              {"switch", c.switch_},      {"switch_cases", c.switch_cases},
              {"if", c.if_},              {"for", c.for_},
              {"return", c.return_},      {"declare", c.declare},
              {"expression", c.expression}};
}

StmtCounts counts_from_json(const Fields& f) {
  StmtCounts c;
  c.statement = static_cast<int>(f.integer("statement", 0));
  c.while_ = static_cast<int>(f.integer("while", 0));
  c.switch_ = static_cast<int>(f.integer("switch", 0));
  c.switch_cases = static_cast<int>(f.integer("switch_cases", 0));
  c.if_ = static_cast<int>(f.integer("if", 0));
  c.for_ = static_cast<int>(f.integer("for", 0));
  c.return_ = static_cast<int>(f.integer("return", 0));
  c.declare = static_cast<int>(f.integer("declare", 0));
  c.expression = static_cast<int>(f.integer("expression", 0));
  return c;
}

}  // namespace

namespace detail {

Json call_site_to_json(const RawCallSite& c) {
  return Json{{"call_id", c.call_id},
              {"caller_id", c.caller_id},
              {"callee_name", c.callee_name},
              {"file", c.file},
              {"line", c.line},
              {"col", c.col},
              {"ordinal", c.ordinal},
              {"nesting",
               {{"in_for", c.nesting.in_for},
                {"in_while", c.nesting.in_while},
                {"in_switch", c.nesting.in_switch},
                {"in_if", c.nesting.in_if},
                {"path_length", c.nesting.path_length}}},
              {"n_args", c.n_args},
              {"n_const_args", c.n_const_args}};
}

RawCallSite call_site_from_json(const Fields& f) {
  RawCallSite cs;
  cs.call_id = f.str("call_id");
  cs.caller_id = f.str("caller_id");
  cs.callee_name = f.str("callee_name");
  cs.file = f.str("file");
  cs.line = static_cast<int>(f.integer("line", 1));
  cs.col = static_cast<int>(f.integer("col", 1));
  cs.ordinal = static_cast<int>(f.integer("ordinal", 1));
  Fields nest = f.sub("nesting");
  cs.nesting.in_for = nest.boolean("in_for");
  cs.nesting.in_while = nest.boolean("in_while");
  cs.nesting.in_switch = nest.boolean("in_switch");
  cs.nesting.in_if = nest.boolean("in_if");
  cs.nesting.path_length = static_cast<int>(nest.integer("path_length", 0));
  cs.n_args = static_cast<int>(f.integer("n_args", 0));
  cs.n_const_args = static_cast<int>(f.integer("n_const_args", 0));
  if (cs.n_const_args > cs.n_args) f.fail("n_const_args", "exceeds n_args");
  return cs;
}

}  // namespace detail

std::string facts_to_json(const SourceFacts& facts) {
  Json functions = Json::array();
  for (const FunctionFacts& f : facts.functions) {
    functions.push_back(Json{{"function_id", f.function_id},
                             {"name", f.name},
                             {"file", f.file},
                             {"start_line", f.start_line},
                             {"end_line", f.end_line},
                             {"stmt_counts", counts_to_json(f.stmt_counts)},
                             {"has_inline_kw", f.has_inline_kw},
                             {"has_static_kw", f.has_static_kw},
                             {"body_text", f.body_text}});
  }
  Json calls = Json::array();
  for (const RawCallSite& c : facts.call_sites) calls.push_back(detail::call_site_to_json(c));
  Json diags = Json::array();
  for (const Diagnostic& d : facts.diagnostics) {
    diags.push_back(Json{{"file", d.file}, {"line", d.line}, {"message", d.message}});
  }
  Json doc{{"schema_version", kFactsSchemaVersion},
           {"functions", std::move(functions)},
           {"call_sites", std::move(calls)},
           {"diagnostics", std::move(diags)}};
  return doc.dump(1) + "\n";
}

SourceFacts facts_from_json(std::string_view text, std::string_view origin) {
  Json doc = detail::parse_json(text, origin);
  detail::check_schema_version(doc, kFactsSchemaVersion, origin);
  Fields top(doc, std::string(origin), "facts");
  SourceFacts facts;

  const Json& functions = top.array("functions");
  for (size_t i = 0; i < functions.size(); ++i) {
    Fields f(functions[i], top.origin(), "functions[" + std::to_string(i) + "]");
    FunctionFacts fn;
    fn.function_id = f.str("function_id");
    fn.name = f.str("name");
    fn.file = f.str("file");
    fn.start_line = static_cast<int>(f.integer("start_line", 1));
    fn.end_line = static_cast<int>(f.integer("end_line", 1));
    if (fn.end_line < fn.start_line) f.fail("end_line", "must be >= start_line");
    fn.stmt_counts = counts_from_json(f.sub("stmt_counts"));
    fn.has_inline_kw = f.boolean("has_inline_kw");
    fn.has_static_kw = f.boolean("has_static_kw");
    fn.body_text = f.str("body_text");
    facts.functions.push_back(std::move(fn));
  }

  const Json& calls = top.array("call_sites");
  for (size_t i = 0; i < calls.size(); ++i) {
    Fields f(calls[i], top.origin(), "call_sites[" + std::to_string(i) + "]");
    RawCallSite cs = detail::call_site_from_json(f);
    facts.call_sites.push_back(std::move(cs));
  }

  if (top.has("diagnostics")) {
    const Json& diags = top.array("diagnostics");
    for (size_t i = 0; i < diags.size(); ++i) {
      Fields f(diags[i], top.origin(), "diagnostics[" + std::to_string(i) + "]");
      facts.diagnostics.push_back({f.str("file"), static_cast<int>(f.integer("line", 0)),
                                   f.str("message")});
    }
  }

  std::vector<std::string> problems = validate_facts(facts);
  if (!problems.empty()) throw SchemaError(std::string(origin) + ": " + problems.front());
  return facts;
}

std::vector<std::string> validate_facts(const SourceFacts& facts) {
  std::vector<std::string> problems;
  std::map<std::string_view, size_t> ids;
  for (size_t i = 0; i < facts.functions.size(); ++i) {
    const FunctionFacts& f = facts.functions[i];
    std::string where = "functions[" + std::to_string(i) + "]";
    if (!ids.emplace(f.function_id, i).second) {
      problems.push_back(where + ".function_id: duplicate '" + f.function_id + "'");
    }
    if (f.end_line < f.start_line) problems.push_back(where + ".end_line: before start_line");
    const StmtCounts& c = f.stmt_counts;
    if (c.statement < c.return_ + c.while_ + c.for_ + c.switch_ + c.if_) {
      problems.push_back(where + ".stmt_counts.statement: smaller than its control statements");
    }
  }
  std::map<std::tuple<std::string_view, std::string_view, int>, size_t> keys;
  std::map<std::string_view, size_t> call_ids;
  for (size_t i = 0; i < facts.call_sites.size(); ++i) {
    const RawCallSite& c = facts.call_sites[i];
    std::string where = "call_sites[" + std::to_string(i) + "]";
    if (!ids.count(c.caller_id)) {
      problems.push_back(where + ".caller_id: unknown function '" + c.caller_id + "'");
    }
    if (!keys.emplace(std::tuple{std::string_view(c.caller_id),
                                 std::string_view(c.callee_name), c.ordinal},
                      i)
             .second) {
      problems.push_back(where + ".ordinal: duplicate (caller_id, callee_name, ordinal)");
    }
    if (!call_ids.emplace(c.call_id, i).second) {
      problems.push_back(where + ".call_id: duplicate '" + c.call_id + "'");
    }
    if (c.n_const_args > c.n_args) problems.push_back(where + ".n_const_args: exceeds n_args");
    if (c.nesting.path_length < 0) problems.push_back(where + ".nesting.path_length: negative");
  }
  return problems;
}

void dump_facts(const SourceFacts& facts, const std::filesystem::path& path) {
  detail::write_file(path, facts_to_json(facts));
}

SourceFacts load_facts(const std::filesystem::path& path) {
  return facts_from_json(detail::read_file(path), path.string());
}

}  // namespace inlsfs
