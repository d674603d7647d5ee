#include "inlsfs/setting.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "inlsfs/error.hpp"

namespace inlsfs {

std::string_view to_string(CompilerFamily family) {
  return family == CompilerFamily::kGcc ? "gcc" : "clang";
}

std::string_view to_string(OptLevel opt) {
  switch (opt) {
    case OptLevel::kO0: return "O0";
    case OptLevel::kO1: return "O1";
    case OptLevel::kO2: return "O2";
    case OptLevel::kO3: return "O3";
  }
  return "O?";
}

CompilerFamily parse_family(std::string_view text) {
  if (text == "gcc") return CompilerFamily::kGcc;
  if (text == "clang") return CompilerFamily::kClang;
  throw Error("unknown compiler family '" + std::string(text) + "' (expected gcc or clang)");
}

OptLevel parse_opt(std::string_view text) {
  if (text == "O0") return OptLevel::kO0;
  if (text == "O1") return OptLevel::kO1;
  if (text == "O2") return OptLevel::kO2;
  if (text == "O3") return OptLevel::kO3;
  throw Error("unknown optimization level '" + std::string(text) + "' (expected O0..O3)");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view next_component(std::string_view& rest) {
  size_t dot = rest.find_first_of(".-");
  std::string_view head = rest.substr(0, dot);
  rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  return head;
}

}  // namespace

std::strong_ordering compare_versions(std::string_view a, std::string_view b) {
  while (!a.empty() || !b.empty()) {
    std::string_view ca = next_component(a);
    std::string_view cb = next_component(b);
    if (all_digits(ca) && all_digits(cb)) {
      // Compare by length first so arbitrarily long numbers work.
      std::string_view ta = ca.substr(std::min(ca.find_first_not_of('0'), ca.size()));
      std::string_view tb = cb.substr(std::min(cb.find_first_not_of('0'), cb.size()));
      if (ta.size() != tb.size()) return ta.size() <=> tb.size();
      if (auto c = ta.compare(tb); c != 0) return c <=> 0;
    } else if (auto c = ca.compare(cb); c != 0) {
      return c <=> 0;
    }
  }
  return std::strong_ordering::equal;
}

std::string CompilationSetting::name() const {
  return compiler() + "-" + std::string(to_string(opt));
}

std::string CompilationSetting::compiler() const {
  return std::string(to_string(family)) + "-" + version;
}

CompilationSetting CompilationSetting::parse(std::string_view name) {
  size_t first = name.find('-');
  size_t last = name.rfind('-');
  if (first == std::string_view::npos || first == last) {
    throw Error("malformed compilation setting '" + std::string(name) +
                "' (expected <family>-<version>-O<n>)");
  }
  CompilationSetting s;
  s.family = parse_family(name.substr(0, first));
  s.version = std::string(name.substr(first + 1, last - first - 1));
  s.opt = parse_opt(name.substr(last + 1));
  if (s.version.empty()) {
    throw Error("malformed compilation setting '" + std::string(name) + "': empty version");
  }
  return s;
}

std::strong_ordering operator<=>(const CompilationSetting& a, const CompilationSetting& b) {
  if (auto c = a.family <=> b.family; c != 0) return c;
  if (auto c = compare_versions(a.version, b.version); c != 0) return c;
  if (auto c = a.version <=> b.version; c != 0) return c;
  return a.opt <=> b.opt;
}

}  // namespace inlsfs
