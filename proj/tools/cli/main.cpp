#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "inlsfs/error.hpp"
#include "inlsfs/eval.hpp"
#include "inlsfs/features.hpp"
#include "inlsfs/fcg.hpp"
#include "inlsfs/labeler.hpp"
#include "inlsfs/mlc.hpp"
#include "inlsfs/sfsgen.hpp"
#include "inlsfs/source_facts.hpp"

namespace fs = std::filesystem;
using namespace inlsfs;

namespace {

// Everything a run can be configured with. Filled from flags and the
// optional --config file.
struct RunConfig {
  unsigned jobs = 1;

  std::string root, facts, fcg, labels, model, features, out, pred, truth, sfs, labeled_fcg, queries;
  std::vector<std::string> mappings;
  std::vector<std::string> extensions{".c", ".h"};
  std::vector<std::string> settings;

  std::string kind = "ecocc";
  int max_depth = 20;
  int min_leaf = 5;
  int ensemble_size = 50;
  double vote_threshold = 0.5;
  std::uint64_t seed = 0;

  std::string baseline;
  int t1 = 10;
  int t2 = 2;
  int max_branch_pairs = 8;

  std::string family;
  std::string version;
  std::vector<std::string> compilers;
  size_t k = 1;
  bool json = false;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("inlsfs");
  logger->set_pattern("inlsfs: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("INLSFS_LOG")) {
    auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; keep the default instead
    if (level != spdlog::level::off || std::string(env) == "off") spdlog::set_level(level);
  }
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(p.string() + ": cannot read");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Refuses to overwrite an input and creates the output's directory.
void prepare_output(const std::string& out, const std::vector<std::string>& inputs) {
  fs::path o = fs::weakly_canonical(out);
  for (const std::string& in : inputs) {
    if (!in.empty() && fs::exists(in) && fs::equivalent(in, o)) {
      throw Error(out + ": output would overwrite an input");
    }
  }
  if (o.has_parent_path()) fs::create_directories(o.parent_path());
}

// Table on stdout (JSON with --json); --out always gets the JSON document.
void write_report(const RunConfig& c, std::string json, const std::string& table) {
  if (json.empty() || json.back() != '\n') json += "\n";
  std::cout << (c.json ? json : table);
  if (c.out.empty()) return;
  prepare_output(c.out, {});
  std::ofstream(c.out, std::ios::binary) << json;
}

std::vector<CompilationSetting> parse_settings(const std::vector<std::string>& names) {
  std::vector<CompilationSetting> out;
  for (const std::string& n : names) out.push_back(CompilationSetting::parse(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void log_diagnostics(const std::string& what, const std::vector<std::string>& diags) {
  for (const std::string& d : diags) spdlog::warn("{}: {}", what, d);
}

// ---------------------------------------------------------------------------

void cmd_parse(const RunConfig& c) {
  ParserConfig pc;
  pc.extensions = c.extensions;
  pc.jobs = c.jobs;
  SourceFacts f = parse_project(c.root, pc);
  for (const Diagnostic& d : f.diagnostics) spdlog::warn("{}:{}: {}", d.file, d.line, d.message);
  prepare_output(c.out, {});
  dump_facts(f, c.out);
  spdlog::info("{} functions, {} call sites, {} diagnostics", f.functions.size(), f.call_sites.size(),
               f.diagnostics.size());
}

void cmd_fcg(const RunConfig& c) {
  Fcg g = build_fcg(load_facts(c.facts));
  prepare_output(c.out, {c.facts});
  dump_fcg(g, c.out);
  spdlog::info("{} nodes, {} edges, {} unresolved", g.nodes().size(), g.edges().size(), g.unresolved().size());
}

void cmd_label(const RunConfig& c) {
  Fcg g = load_fcg(c.fcg);
  std::vector<LabelColumn> cols;
  std::set<CompilationSetting> seen;
  for (const std::string& path : c.mappings) {
    MappingBundle b = load_mapping_bundle(path);
    if (!seen.insert(b.setting).second) throw Error(path + ": setting " + b.setting.name() + " given twice");
    LabelColumn col = infer_labels(g, b);
    log_diagnostics(path, col.diagnostics);
    cols.push_back(std::move(col));
  }
  std::vector<std::string> rows;
  for (const FcgEdge& e : g.edges()) rows.push_back(e.edge_id);
  std::vector<std::string> inputs = c.mappings;
  inputs.push_back(c.fcg);
  prepare_output(c.out, inputs);
  dump_label_matrix(assemble_matrix(rows, std::move(cols)), c.out);
}

void cmd_featurize(const RunConfig& c) {
  FeatureTable t = featurize_all(load_fcg(c.fcg), load_facts(c.facts));
  prepare_output(c.out, {c.fcg, c.facts});
  dump_feature_table(t, c.out);
}

void cmd_train(const RunConfig& c) {
  FeatureTable t = load_feature_table(c.features);
  LabelMatrix m = load_label_matrix(c.labels);
  if (!c.settings.empty()) m = m.select_columns(parse_settings(c.settings));
  MlcParams p;
  p.tree.max_depth = c.max_depth;
  p.tree.min_leaf = c.min_leaf;
  p.ensemble_size = c.ensemble_size;
  p.vote_threshold = c.vote_threshold;
  p.seed = c.seed;
  MlcModel model = train_model(parse_mlc_kind(c.kind), t, m, p, c.jobs);
  prepare_output(c.out, {c.features, c.labels});
  save_model(model, c.out);
}

void cmd_predict(const RunConfig& c) {
  MlcModel model = load_model(c.model);
  LabelMatrix m = predict(model, load_feature_table(c.features));
  prepare_output(c.out, {c.model, c.features});
  dump_label_matrix(m, c.out);
}

void cmd_gen_sfs(const RunConfig& c) {
  int sources = !c.labels.empty() + !c.labeled_fcg.empty() + !c.baseline.empty();
  if (sources != 1) throw CLI::ValidationError("exactly one of --labels, --labeled-fcg, --baseline is required");
  ExtendOptions opt;
  opt.max_branch_pairs = c.max_branch_pairs;

  SourceFacts facts;
  if (!c.facts.empty()) facts = load_facts(c.facts);
  const SourceFacts* fp = c.facts.empty() ? nullptr : &facts;

  SfsSet out;
  if (!c.labeled_fcg.empty()) {
    out = generate_all(load_labeled_fcg(c.labeled_fcg), fp, opt, c.jobs);
  } else {
    if (c.fcg.empty()) throw CLI::ValidationError("--fcg is required with --labels or --baseline");
    Fcg g = load_fcg(c.fcg);
    LabelMatrix m;
    if (!c.labels.empty()) {
      m = load_label_matrix(c.labels);
      if (!c.settings.empty()) m = m.select_columns(parse_settings(c.settings));
    } else {
      if (!fp) throw CLI::ValidationError("--baseline needs --facts");
      std::vector<CompilationSetting> settings =
          parse_settings(c.settings.empty() ? std::vector<std::string>{"gcc-8.2.0-O2"} : c.settings);
      BaselineThresholds th{c.t1, c.t2};
      std::vector<LabeledFcg> lfs = baseline_labels(parse_baseline_kind(c.baseline), g, facts, settings, th);
      std::vector<std::string> rows;
      for (const FcgEdge& e : g.edges()) rows.push_back(e.edge_id);
      std::vector<LabelColumn> cols;
      for (const LabeledFcg& lf : lfs) {
        LabelColumn col{lf.setting, {}, {}};
        for (const FcgEdge& e : g.edges()) {
          col.cells[e.edge_id] = lf.inlined.count(e.edge_id) ? Label::kInlined : Label::kNotInlined;
        }
        cols.push_back(std::move(col));
      }
      m = assemble_matrix(rows, std::move(cols));
    }
    out = generate_for_matrix(g, fp, m, opt, c.jobs);
  }
  log_diagnostics("gen-sfs", out.diagnostics);
  prepare_output(c.out, {c.fcg, c.facts, c.labels, c.labeled_fcg});
  write_sfs_file(out.sfss, c.out);
  spdlog::info("{} SFSs ({} before merging settings)", out.sfss.size(), out.per_setting_count);
}

void cmd_eval_mlc(const RunConfig& c) {
  MlcMetrics m = mlc_metrics(load_label_matrix(c.pred), load_label_matrix(c.truth));
  write_report(c, to_json(m), to_table(m));
}

void cmd_eval_sfs(const RunConfig& c) {
  SourceFacts facts = load_facts(c.facts);
  std::vector<Sfs> all = read_sfs_file(c.sfs);
  nlohmann::json doc = nlohmann::json::array();
  std::string table;
  for (const std::string& path : c.mappings) {
    MappingBundle b = load_mapping_bundle(path);
    GroundTruth gt = ground_truth_sets(b, facts);
    for (const std::string& u : gt.unresolved) spdlog::info("{}: no root for binary function {}", path, u);
    std::vector<Sfs> gen;
    for (const Sfs& s : all) {
      if (s.settings.empty() || std::find(s.settings.begin(), s.settings.end(), b.setting) != s.settings.end()) {
        gen.push_back(s);
      }
    }
    SfsMetrics m = sfs_metrics(gen, gt.sets);
    double size = facts.functions.empty() ? 0.0 : sfs_size(gen.size(), facts.functions.size());
    nlohmann::json entry = nlohmann::json::parse(to_json(m));
    entry["setting"] = b.setting.name();
    entry["unresolved_roots"] = gt.unresolved.size();
    entry["sfs_size"] = size;
    doc.push_back(entry);
    table += "== " + b.setting.name() + "\n" + to_table(m);
    std::ostringstream line;
    line << "SFS size: " << std::fixed << std::setprecision(2) << size * 100 << "%\n";
    table += line.str();
  }
  // identical sets from several settings are stored once
  size_t per_setting = 0;
  for (const Sfs& s : all) per_setting += std::max<size_t>(1, s.settings.size());
  nlohmann::json report{{"settings", doc}, {"distinct_sfs", all.size()}, {"per_setting_sfs", per_setting},
                        {"functions", facts.functions.size()}};
  table += "SFSs: " + std::to_string(all.size()) + " distinct, " + std::to_string(per_setting) +
           " counted per setting, over " + std::to_string(facts.functions.size()) + " functions\n";
  write_report(c, report.dump(2), table);
}

void cmd_correlate(const RunConfig& c) {
  LabelMatrix m = load_label_matrix(c.labels);
  nlohmann::json doc;
  doc["opts"] = nlohmann::json::array();
  std::string table;
  std::set<std::pair<CompilerFamily, std::string>> compilers;
  for (const CompilationSetting& s : m.columns()) compilers.insert({s.family, s.version});
  for (const auto& [family, version] : compilers) {
    if (!c.family.empty() && parse_family(c.family) != family) continue;
    if (!c.version.empty() && c.version != version) continue;
    OptCorrelationTable t = correlation_opts(m, family, version);
    doc["opts"].push_back(nlohmann::json::parse(to_json(t)));
    table += to_table(t) + "\n";
  }
  if (!c.compilers.empty()) {
    if (c.compilers.size() != 2) throw CLI::ValidationError("--compilers takes two compilers");
    // "gcc-8.2.0" names a compiler; any opt level picks it out
    CompilationSetting a = CompilationSetting::parse(c.compilers[0] + "-O0");
    CompilationSetting b = CompilationSetting::parse(c.compilers[1] + "-O0");
    CompilerCorrelation cc = correlation_compilers(m, a, b);
    doc["compilers"] = nlohmann::json::parse(to_json(cc));
    table += to_table(cc);
  }
  write_report(c, doc.dump(2), table);
}

std::vector<Query> load_queries(const std::string& path) {
  std::vector<Query> out;
  std::istringstream in(read_text(path));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      out.push_back({j.at("id").get<std::string>(), j.at("answer").get<std::string>(), j.at("text").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(path + ": record " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void cmd_demo_match(const RunConfig& c) {
  if (c.queries.empty() == c.mappings.empty()) {
    throw CLI::ValidationError("give either --queries or --mappings");
  }
  SourceFacts facts = load_facts(c.facts);
  std::vector<Sfs> sfss = read_sfs_file(c.sfs);
  std::vector<Query> queries;
  if (!c.queries.empty()) {
    queries = load_queries(c.queries);
  } else {
    // the same inlined function usually shows up under several settings
    std::set<std::pair<std::string, std::string>> seen;
    for (const std::string& path : c.mappings) {
      MappingBundle b = load_mapping_bundle(path);
      for (Query& q : queries_from_ground_truth(ground_truth_sets(b, facts), facts)) {
        if (!seen.insert({q.answer, q.text}).second) continue;
        q.id = b.setting.name() + ":" + q.id;
        queries.push_back(std::move(q));
      }
    }
  }
  for (const Sfs& s : sfss) {
    if (s.aggregated_text.empty()) throw Error(c.sfs + ": SFS rooted at " + s.root + " has no text");
  }
  RecallReport r = recall_at_k(queries, facts, sfss, c.k);
  write_report(c, to_json(r), to_table(r));
}

// ---------------------------------------------------------------------------

CLI::Option* in_file(CLI::App* app, const std::string& name, std::string& dst, const std::string& help) {
  return app->add_option(name, dst, help)->check(CLI::ExistingFile);
}

int run(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Inlining-aware source function sets: labeling, training and SFS generation"};
  app.name("inlsfs");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file, [command] sections for command flags; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("-j,--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.set_version_flag("--version", "inlsfs 0.1.0");
  app.footer("Set INLSFS_LOG=debug|info|warn|error|off for log verbosity.");

  auto jobs = [&](CLI::App* s) {
    s->add_option("-j,--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  };
  auto out = [&](CLI::App* s, const std::string& help) { s->add_option("-o,--out", c.out, help)->required(); };
  auto settings = [&](CLI::App* s, const std::string& help) {
    s->add_option("--settings", c.settings, help)->delimiter(',');
  };

  CLI::App* parse = app.add_subcommand("parse", "extract source facts from a C project");
  parse->add_option("root", c.root, "project root")->required()->check(CLI::ExistingDirectory);
  parse->add_option("--ext", c.extensions, "file extensions to parse")->delimiter(',')->capture_default_str();
  out(parse, "facts JSON");
  jobs(parse);

  CLI::App* fcg = app.add_subcommand("fcg", "build the function call graph");
  in_file(fcg, "--facts", c.facts, "facts JSON")->required();
  out(fcg, "FCG JSON");

  CLI::App* label = app.add_subcommand("label", "infer inlining labels from binary-to-source mappings");
  in_file(label, "--fcg", c.fcg, "FCG JSON")->required();
  label->add_option("mappings", c.mappings, "mapping bundle JSON, one per setting")
      ->required()
      ->check(CLI::ExistingFile);
  out(label, "label matrix CSV");

  CLI::App* feat = app.add_subcommand("featurize", "compute call-site feature vectors");
  in_file(feat, "--facts", c.facts, "facts JSON")->required();
  in_file(feat, "--fcg", c.fcg, "FCG JSON")->required();
  out(feat, "feature CSV");

  CLI::App* train = app.add_subcommand("train", "train a multi-label inlining classifier");
  in_file(train, "--features", c.features, "feature CSV")->required();
  in_file(train, "--labels", c.labels, "label matrix CSV")->required();
  train->add_option("--seed", c.seed, "random seed (mandatory)")->required();
  train->add_option("--kind", c.kind, "ecocc, br, cc, ebr or ecc")
      ->check(CLI::IsMember({"ecocc", "br", "cc", "ebr", "ecc"}))
      ->capture_default_str();
  train->add_option("--max-depth", c.max_depth, "tree depth limit")->check(CLI::PositiveNumber)->capture_default_str();
  train->add_option("--min-leaf", c.min_leaf, "minimum rows per leaf")->check(CLI::PositiveNumber)->capture_default_str();
  train->add_option("--ensemble-size", c.ensemble_size, "chains per ensemble")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--vote-threshold", c.vote_threshold, "positive when the vote fraction exceeds this")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  settings(train, "train on these label columns only (comma separated)");
  out(train, "model JSON");
  jobs(train);

  CLI::App* pred = app.add_subcommand("predict", "label call sites with a trained model");
  in_file(pred, "--model", c.model, "model JSON")->required();
  in_file(pred, "--features", c.features, "feature CSV")->required();
  out(pred, "label matrix CSV");

  CLI::App* gen = app.add_subcommand("gen-sfs", "generate source function sets");
  in_file(gen, "--fcg", c.fcg, "FCG JSON");
  in_file(gen, "--facts", c.facts, "facts JSON, for aggregated texts");
  in_file(gen, "--labels", c.labels, "label matrix CSV (predicted or true)");
  in_file(gen, "--labeled-fcg", c.labeled_fcg, "labeled FCG JSON");
  gen->add_option("--baseline", c.baseline, "label edges with a callee heuristic instead")
      ->check(CLI::IsMember({"bingo_like", "asm2vec_like"}));
  gen->add_option("--t1", c.t1, "baseline: callee statement limit")->capture_default_str();
  gen->add_option("--t2", c.t2, "asm2vec_like: callee out-degree limit")->capture_default_str();
  settings(gen, "settings to use (comma separated)");
  gen->add_option("--max-branch-pairs", c.max_branch_pairs, "mixed caller-callee pairs branched per root")
      ->check(CLI::Range(0, 20))
      ->capture_default_str();
  out(gen, "SFS JSONL; texts go to <stem>_texts/");
  jobs(gen);

  CLI::App* eval = app.add_subcommand("eval", "score predictions or SFSs");
  eval->require_subcommand(1);
  CLI::App* eval_mlc = eval->add_subcommand("mlc", "weighted precision, recall and F1 of a label matrix");
  in_file(eval_mlc, "--pred", c.pred, "predicted label matrix CSV")->required();
  in_file(eval_mlc, "--truth", c.truth, "true label matrix CSV")->required();
  CLI::App* eval_sfs = eval->add_subcommand("sfs", "compare SFSs with the sets seen in binaries");
  in_file(eval_sfs, "--sfs", c.sfs, "SFS JSONL")->required();
  in_file(eval_sfs, "--facts", c.facts, "facts JSON")->required();
  eval_sfs->add_option("mappings", c.mappings, "mapping bundle JSON")->required()->check(CLI::ExistingFile);
  for (CLI::App* s : {eval_mlc, eval_sfs}) {
    s->add_flag("--json", c.json, "JSON instead of a table");
    s->add_option("-o,--out", c.out, "also write the JSON report here");
  }

  CLI::App* corr = app.add_subcommand("correlate", "inlining overlap across opt levels and compilers");
  in_file(corr, "--labels", c.labels, "true label matrix CSV")->required();
  corr->add_option("--family", c.family, "only this family")->check(CLI::IsMember({"gcc", "clang"}));
  corr->add_option("--version", c.version, "only this compiler version");
  corr->add_option("--compilers", c.compilers, "two compilers to compare, e.g. gcc-8.2.0 clang-7.0.0")
      ->expected(2);
  corr->add_flag("--json", c.json, "JSON instead of a table");
  corr->add_option("-o,--out", c.out, "also write the JSON report here");

  CLI::App* demo = app.add_subcommand("demo-match", "recall@k of source matching with and without SFSs");
  in_file(demo, "--facts", c.facts, "facts JSON")->required();
  in_file(demo, "--sfs", c.sfs, "SFS JSONL")->required();
  in_file(demo, "--queries", c.queries, "query JSONL with id, answer, text");
  demo->add_option("mappings", c.mappings, "mapping bundles to build queries from")->check(CLI::ExistingFile);
  demo->add_option("-k", c.k, "cut-off rank")->check(CLI::PositiveNumber)->capture_default_str();
  demo->add_flag("--json", c.json, "JSON instead of a table");
  demo->add_option("-o,--out", c.out, "also write the JSON report here");

  for (CLI::App* s : app.get_subcommands({})) s->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*parse) cmd_parse(c);
    if (*fcg) cmd_fcg(c);
    if (*label) cmd_label(c);
    if (*feat) cmd_featurize(c);
    if (*train) cmd_train(c);
    if (*pred) cmd_predict(c);
    if (*gen) cmd_gen_sfs(c);
    if (*eval_mlc) cmd_eval_mlc(c);
    if (*eval_sfs) cmd_eval_sfs(c);
    if (*corr) cmd_correlate(c);
    if (*demo) cmd_demo_match(c);
  } catch (const CLI::ParseError& e) {
    std::cerr << "inlsfs: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "inlsfs: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  return run(argc, argv);
}
