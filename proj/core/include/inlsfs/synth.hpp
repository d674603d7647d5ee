#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inlsfs/fcg.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/source_facts.hpp"

// Synthetic projects and a toy compiler that inlines by fixed rules, for
// tests, benchmarks and the bundled demo data.
namespace inlsfs::synth {

struct ProjectParams {
  int n_functions = 40;
  int n_files = 3;
  int max_calls = 4;       // calls made by one function, uniform in [0, max_calls]
  int max_statements = 10;  // top-level statements before the return
  double p_inline_kw = 0.3;
  double p_static = 0.5;
  double p_external_call = 0.15;
  double p_self_call = 0.03;
};

// C sources keyed by relative path. Function i only calls functions j > i
// (plus the odd self call and library call), one call per line.
std::map<std::string, std::string> generate_sources(std::uint64_t seed, const ProjectParams& p = {});

// Parses in-memory sources the way parse_project parses a tree.
SourceFacts parse_sources(const std::map<std::string, std::string>& sources);

struct Project {
  std::map<std::string, std::string> sources;
  SourceFacts facts;
  Fcg g;
};

Project make_project(std::uint64_t seed, const ProjectParams& p = {});

// gcc-8.2.0 and clang-7.0.0 at O0..O3.
std::vector<CompilationSetting> default_settings();

// The toy compiler's decision for every FCG edge (call_id -> inlined). Each
// family's rule at a higher opt level accepts everything the lower level
// accepts. Calls inside a recursive cycle are never inlined.
std::map<std::string, bool> inline_decisions(const Fcg& g, const SourceFacts& facts,
                                             const CompilationSetting& s);

// Mappings the toy compiler would leave in debug info: one binary function
// per emitted source function (static functions whose every call was inlined
// disappear), holding the function and everything inlined into it, with call
// instructions line-mapped to the calls that stayed.
MappingBundle compile(const Fcg& g, const SourceFacts& facts, const CompilationSetting& s,
                      const std::map<std::string, bool>& decisions);

// Oracle labels: rows are the FCG edges, columns the given settings.
LabelMatrix oracle_matrix(const Fcg& g, const SourceFacts& facts,
                          const std::vector<CompilationSetting>& settings);

}  // namespace inlsfs::synth
