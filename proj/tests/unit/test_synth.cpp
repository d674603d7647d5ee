#include "doctest.h"
#include "inlsfs/synth.hpp"

using namespace inlsfs;

TEST_SUITE("synth") {

TEST_CASE("generated projects are deterministic and parse cleanly") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(synth::generate_sources(seed) == synth::generate_sources(seed));
    synth::Project p = synth::make_project(seed);
    CHECK(p.facts.functions.size() == 40);
    CHECK(p.facts.diagnostics.empty());
    CHECK_FALSE(p.g.edges().empty());
  }
  CHECK(synth::generate_sources(1) != synth::generate_sources(2));
}

TEST_CASE("inlining decisions nest across opt levels") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    synth::Project p = synth::make_project(seed);
    auto settings = synth::default_settings();
    for (size_t i = 0; i + 1 < settings.size(); ++i) {
      if (settings[i].family != settings[i + 1].family) continue;
      auto lo = synth::inline_decisions(p.g, p.facts, settings[i]);
      auto hi = synth::inline_decisions(p.g, p.facts, settings[i + 1]);
      for (const auto& [id, yes] : lo) {
        if (yes) CHECK(hi.at(id));
      }
    }
  }
}

TEST_CASE("recursive calls are never inlined") {
  synth::ProjectParams pp;
  pp.p_self_call = 1.0;
  synth::Project p = synth::make_project(3, pp);
  auto d = synth::inline_decisions(p.g, p.facts, synth::default_settings().back());
  int self = 0;
  for (const FcgEdge& e : p.g.edges()) {
    if (e.caller_id == e.callee_id) {
      ++self;
      CHECK_FALSE(d.at(e.call_id));
    }
  }
  CHECK(self > 0);
}

TEST_CASE("compiled mappings merge inlined callees") {
  synth::Project p = synth::make_project(4);
  auto s = synth::default_settings()[3];
  auto d = synth::inline_decisions(p.g, p.facts, s);
  MappingBundle b = synth::compile(p.g, p.facts, s, d);
  bool merged = false;
  for (const FunctionMapping& fm : b.func_map) merged = merged || fm.sources.size() >= 2;
  CHECK(merged);
  for (const BinaryCallSite& c : b.bin_callsites) {
    bool mapped = false;
    for (const LineMapping& l : b.line_map) mapped = mapped || l.address == c.address;
    CHECK(mapped);
  }
}

}  // TEST_SUITE
