#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "inlsfs/source_facts.hpp"

namespace inlsfs::detail {

enum class TokKind { kIdent, kNumber, kString, kChar, kPunct };

struct Token {
  TokKind kind;
  std::string_view text;  // view into the source buffer
  int line;
  int col;
  size_t offset;

  bool is(std::string_view p) const { return kind == TokKind::kPunct && text == p; }
  bool is_ident() const { return kind == TokKind::kIdent; }
  size_t end_offset() const { return offset + text.size(); }
};

// Tokenizes C source. Comments vanish, preprocessor directives are consumed
// (keeping only the first branch of each conditional) and tokens in dropped
// branches never appear. Problems are appended to `diags`.
std::vector<Token> lex_c(std::string_view file, std::string_view text,
                         std::vector<Diagnostic>& diags);

bool is_c_keyword(std::string_view word);

}  // namespace inlsfs::detail
