#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace inlsfs {

enum class CompilerFamily { kGcc = 0, kClang = 1 };
enum class OptLevel { kO0 = 0, kO1 = 1, kO2 = 2, kO3 = 3 };

inline constexpr int kNumOptLevels = 4;

std::string_view to_string(CompilerFamily family);
std::string_view to_string(OptLevel opt);
CompilerFamily parse_family(std::string_view text);
OptLevel parse_opt(std::string_view text);

// Compares dotted version strings component-wise, numerically where both
// components are digits ("9.0" < "10.0").
std::strong_ordering compare_versions(std::string_view a, std::string_view b);

// (compiler family, compiler version, optimization level). Ordered by
// family, then version, then opt level.
struct CompilationSetting {
  CompilerFamily family = CompilerFamily::kGcc;
  std::string version;
  OptLevel opt = OptLevel::kO0;

  // "gcc-8.2.0-O2". The version may itself contain dashes.
  std::string name() const;
  static CompilationSetting parse(std::string_view name);

  // "gcc-8.2.0": the setting without its opt level.
  std::string compiler() const;

  friend bool operator==(const CompilationSetting&, const CompilationSetting&) = default;
  friend std::strong_ordering operator<=>(const CompilationSetting& a,
                                          const CompilationSetting& b);
};

}  // namespace inlsfs
