#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace inlsfs {

// Syntactic statement counts of one function body.
//
// `statement` counts every statement in the body recursively, excluding
// compound blocks themselves and treating a labeled statement as the statement
// it labels. `declare` counts local declaration statements, `expression`
// counts expression statements, `while` covers both while and do-while loops
// and `switch_cases` counts case and default labels.
struct StmtCounts {
  int statement = 0;
  int while_ = 0;
  int switch_ = 0;
  int switch_cases = 0;
  int if_ = 0;
  int for_ = 0;
  int return_ = 0;
  int declare = 0;
  int expression = 0;

  friend bool operator==(const StmtCounts&, const StmtCounts&) = default;
};

struct FunctionFacts {
  std::string function_id;  // "<file>:<name>:<start_line>"
  std::string name;
  std::string file;  // relative to the project root, '/'-separated
  int start_line = 0;
  int end_line = 0;
  StmtCounts stmt_counts;
  bool has_inline_kw = false;
  bool has_static_kw = false;
  std::string body_text;

  friend bool operator==(const FunctionFacts&, const FunctionFacts&) = default;
};

// Control-flow context of a call expression. Everything syntactically inside
// a for/while/do/switch/if statement (header or body) is "in" it, and each
// enclosing control statement or nested bare block adds one to path_length.
struct CallNesting {
  bool in_for = false;
  bool in_while = false;
  bool in_switch = false;
  bool in_if = false;
  int path_length = 0;

  friend bool operator==(const CallNesting&, const CallNesting&) = default;
};

struct RawCallSite {
  std::string call_id;  // "<caller_id>/<callee_name>#<ordinal>"
  std::string caller_id;
  std::string callee_name;
  std::string file;
  int line = 0;
  int col = 0;
  int ordinal = 1;  // k-th textual call from this caller to this callee name
  CallNesting nesting;
  int n_args = 0;
  int n_const_args = 0;

  friend bool operator==(const RawCallSite&, const RawCallSite&) = default;
};

struct Diagnostic {
  std::string file;
  int line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct SourceFacts {
  std::vector<FunctionFacts> functions;  // sorted by (file, start_line)
  std::vector<RawCallSite> call_sites;   // sorted by (file, line, col)
  std::vector<Diagnostic> diagnostics;

  const FunctionFacts* find_function(std::string_view function_id) const;

  friend bool operator==(const SourceFacts&, const SourceFacts&) = default;
};

struct ParserConfig {
  std::vector<std::string> extensions = {".c", ".h"};
  unsigned jobs = 1;
};

// Facts for a single translation unit. `file` is recorded verbatim in every
// produced record. Never throws on malformed code; problems become
// diagnostics.
SourceFacts parse_source(std::string_view file, std::string_view text);

// Walks `root` recursively and parses every file with a configured
// extension. Throws Error when root is missing or no function is found.
SourceFacts parse_project(const std::filesystem::path& root, const ParserConfig& config = {});

// Sorts records into canonical order and assigns call ordinals and ids.
void canonicalize(SourceFacts& facts);

// JSON facts file: {"schema_version", "functions", "call_sites", "diagnostics"}.
std::string facts_to_json(const SourceFacts& facts);
SourceFacts facts_from_json(std::string_view text, std::string_view origin = "<facts>");
void dump_facts(const SourceFacts& facts, const std::filesystem::path& path);
SourceFacts load_facts(const std::filesystem::path& path);

// Empty when the facts satisfy every record invariant.
std::vector<std::string> validate_facts(const SourceFacts& facts);

}  // namespace inlsfs
