#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "inlsfs/error.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/synth.hpp"

namespace fs = std::filesystem;
using namespace inlsfs;

// Writes a synthetic C project and the mappings the toy compiler leaves for
// each default setting:
//   <out>/src/unit<k>.c
//   <out>/mappings/<setting>.json
int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic C project with simulated binary-to-source mappings"};
  app.name("inlsfs-synth");
  std::uint64_t seed = 1;
  std::string out;
  synth::ProjectParams pp;
  app.add_option("--seed", seed, "generator seed")->required();
  app.add_option("-o,--out", out, "output directory")->required();
  app.add_option("--functions", pp.n_functions, "number of functions")->check(CLI::Range(2, 100000))->capture_default_str();
  app.add_option("--files", pp.n_files, "number of .c files")->check(CLI::Range(1, 1000))->capture_default_str();
  app.add_option("--max-calls", pp.max_calls, "calls per function, at most")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    synth::Project p = synth::make_project(seed, pp);
    for (const auto& [rel, text] : p.sources) {
      fs::path path = fs::path(out) / rel;
      fs::create_directories(path.parent_path());
      std::ofstream(path, std::ios::binary) << text;
    }
    fs::create_directories(fs::path(out) / "mappings");
    for (const CompilationSetting& s : synth::default_settings()) {
      MappingBundle b = synth::compile(p.g, p.facts, s, synth::inline_decisions(p.g, p.facts, s));
      dump_mapping_bundle(b, fs::path(out) / "mappings" / (s.name() + ".json"));
    }
  } catch (const std::exception& e) {
    std::cerr << "inlsfs-synth: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
