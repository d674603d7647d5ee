#include "c_lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace inlsfs::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

constexpr std::array<std::string_view, 22> kMultiPunct = {
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==",
    "!=",  "&&",  "||",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};

struct CondFrame {
  bool in_first_branch = true;
  int line = 0;
};

class Lexer {
 public:
  Lexer(std::string_view file, std::string_view text, std::vector<Diagnostic>& diags)
      : file_(file), text_(text), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool line_start = true;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        advance();
        line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
        continue;
      }
      if (c == '\\' && peek(1) == '\n') {
        advance();
        advance();
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        skip_line_comment();
        continue;
      }
      if (c == '#' && line_start) {
        directive();
        line_start = true;
        continue;
      }
      line_start = false;
      Token tok = next_token();
      if (active()) out.push_back(tok);
    }
    for (const CondFrame& frame : conds_) {
      diags_.push_back({std::string(file_), frame.line, "unterminated preprocessor conditional"});
    }
    return out;
  }

 private:
  char peek(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool active() const {
    for (const CondFrame& f : conds_) {
      if (!f.in_first_branch) return false;
    }
    return true;
  }

  void skip_block_comment() {
    int start_line = line_;
    advance();
    advance();
    while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) advance();
    if (pos_ >= text_.size()) {
      diags_.push_back({std::string(file_), start_line, "unterminated block comment"});
      return;
    }
    advance();
    advance();
  }

  void skip_line_comment() {
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      if (text_[pos_] == '\\' && peek(1) == '\n') advance();
      advance();
    }
  }

  // Consumes a directive through its (possibly continued) end of line.
  void directive() {
    int start_line = line_;
    advance();  // '#'
    std::string name;
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      name.push_back(text_[pos_]);
      advance();
    }
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      if (text_[pos_] == '\\' && peek(1) == '\n') {
        advance();
        advance();
        continue;
      }
      if (text_[pos_] == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (text_[pos_] == '/' && peek(1) == '/') {
        skip_line_comment();
        continue;
      }
      advance();
    }
    if (name == "if" || name == "ifdef" || name == "ifndef") {
      conds_.push_back({true, start_line});
    } else if (name == "elif" || name == "else") {
      if (conds_.empty()) {
        diags_.push_back({std::string(file_), start_line, "#" + name + " without #if"});
        return;
      }
      if (conds_.back().in_first_branch && active_outside_top()) {
        diags_.push_back({std::string(file_), start_line,
                          "preprocessor conditional: kept first branch, dropped #" + name});
      }
      conds_.back().in_first_branch = false;
    } else if (name == "endif") {
      if (conds_.empty()) {
        diags_.push_back({std::string(file_), start_line, "#endif without #if"});
        return;
      }
      conds_.pop_back();
    }
  }

  bool active_outside_top() const {
    for (size_t i = 0; i + 1 < conds_.size(); ++i) {
      if (!conds_[i].in_first_branch) return false;
    }
    return true;
  }

  Token next_token() {
    size_t start = pos_;
    int line = line_;
    int col = col_;
    char c = text_[pos_];
    TokKind kind = TokKind::kPunct;

    // Encoding prefixes on string and char literals.
    size_t prefix = 0;
    if (c == 'L' || c == 'U') prefix = 1;
    if (c == 'u') prefix = peek(1) == '8' ? 2 : 1;
    if (prefix && (peek(prefix) == '"' || peek(prefix) == '\'')) {
      for (size_t i = 0; i < prefix; ++i) advance();
      c = text_[pos_];
    }

    if (c == '"' || c == '\'') {
      kind = c == '"' ? TokKind::kString : TokKind::kChar;
      char quote = c;
      advance();
      while (pos_ < text_.size() && text_[pos_] != quote && text_[pos_] != '\n') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == quote) {
        advance();
      } else {
        diags_.push_back({std::string(file_), line, "unterminated literal"});
      }
    } else if (ident_start(c)) {
      kind = TokKind::kIdent;
      while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      kind = TokKind::kNumber;
      advance();
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        char prev = text_[pos_ - 1];
        if ((d == '+' || d == '-') &&
            (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')) {
          advance();
        } else if (ident_char(d) || d == '.' || d == '\'') {
          advance();
        } else {
          break;
        }
      }
    } else {
      size_t len = 1;
      for (std::string_view p : kMultiPunct) {
        if (text_.substr(pos_, p.size()) == p) {
          len = p.size();
          break;
        }
      }
      for (size_t i = 0; i < len; ++i) advance();
    }
    return Token{kind, text_.substr(start, pos_ - start), line, col, start};
  }

  std::string_view file_;
  std::string_view text_;
  std::vector<Diagnostic>& diags_;
  std::vector<CondFrame> conds_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex_c(std::string_view file, std::string_view text,
                         std::vector<Diagnostic>& diags) {
  return Lexer(file, text, diags).run();
}

bool is_c_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "auto",          "break",        "case",          "char",       "const",
      "continue",      "default",      "do",            "double",     "else",
      "enum",          "extern",       "float",         "for",        "goto",
      "if",            "inline",       "int",           "long",       "register",
      "restrict",      "return",       "short",         "signed",     "sizeof",
      "static",        "struct",       "switch",        "typedef",    "union",
      "unsigned",      "void",         "volatile",      "while",      "_Bool",
      "_Complex",      "_Imaginary",   "_Alignas",      "_Alignof",   "_Atomic",
      "_Generic",      "_Noreturn",    "_Static_assert", "_Thread_local", "__inline",
      "__inline__",    "__restrict",   "__restrict__",  "__attribute__", "__asm__",
      "__asm",         "asm",          "__extension__", "__typeof__", "__typeof",
      "typeof",        "__const",      "__volatile__",  "__signed__", "__alignof__",
      "__builtin_offsetof", "__declspec"};
  return kKeywords.count(word) > 0;
}

}  // namespace inlsfs::detail
