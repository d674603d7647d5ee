#include "inlsfs/mlc.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "inlsfs/error.hpp"
#include "inlsfs/parallel.hpp"
#include "json_util.hpp"

namespace inlsfs {

std::string_view to_string(MlcKind kind) {
  switch (kind) {
    case MlcKind::kEcocc: return "ecocc";
    case MlcKind::kBr: return "br";
    case MlcKind::kCc: return "cc";
    case MlcKind::kEbr: return "ebr";
    case MlcKind::kEcc: return "ecc";
  }
  return "?";
}

MlcKind parse_mlc_kind(std::string_view text) {
  for (MlcKind k : {MlcKind::kEcocc, MlcKind::kBr, MlcKind::kCc, MlcKind::kEbr, MlcKind::kEcc}) {
    if (to_string(k) == text) return k;
  }
  throw Error("unknown model kind '" + std::string(text) + "' (expected ecocc, br, cc, ebr or ecc)");
}

namespace {

bool is_bagged(MlcKind kind) {
  return kind == MlcKind::kEcocc || kind == MlcKind::kEbr || kind == MlcKind::kEcc;
}

bool is_chained(MlcKind kind) { return kind != MlcKind::kBr && kind != MlcKind::kEbr; }

// Training data of one group: features with the group's true labels appended.
struct GroupData {
  Matrix x;
  std::vector<std::vector<std::uint8_t>> y;      // per label, per row
  std::vector<std::vector<std::uint8_t>> known;  // per label, per row
};

ChainModel train_chain(const GroupData& data, const std::vector<CompilationSetting>& labels,
                       bool chained, bool bootstrap, std::uint64_t seed,
                       const TreeParams& params) {
  const size_t n = data.x.rows();
  std::vector<size_t> sample(n);
  if (bootstrap && n > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (size_t& s : sample) s = pick(rng);
  } else {
    for (size_t i = 0; i < n; ++i) sample[i] = i;
  }

  ChainModel chain;
  chain.labels = labels;
  chain.chained = chained;
  chain.seed = seed;
  chain.bootstrap = bootstrap;
  for (size_t k = 0; k < labels.size(); ++k) {
    std::vector<size_t> rows;
    rows.reserve(sample.size());
    for (size_t i : sample) {
      bool usable = data.known[k][i] != 0;
      if (chained) {
        for (size_t j = 0; j < k && usable; ++j) usable = data.known[j][i] != 0;
      }
      if (usable) rows.push_back(i);
    }
    if (rows.empty()) {
      chain.trees.emplace_back(std::vector<TreeNode>{TreeNode{}});
      continue;
    }
    size_t n_features = kNumFeatures + (chained ? k : 0);
    chain.trees.push_back(DecisionTree::train(data.x, data.y[k], rows, n_features, params));
  }
  return chain;
}

}  // namespace

std::vector<std::uint8_t> ChainModel::predict(const FeatureVector& x) const {
  std::vector<double> buf(kNumFeatures + labels.size(), 0.0);
  std::copy(x.begin(), x.end(), buf.begin());
  std::vector<std::uint8_t> out(labels.size(), 0);
  for (size_t k = 0; k < trees.size(); ++k) {
    out[k] = trees[k].predict(buf) ? 1 : 0;
    if (chained) buf[kNumFeatures + k] = out[k];
  }
  return out;
}

std::vector<std::vector<CompilationSetting>> label_groups(
    MlcKind kind, const std::vector<CompilationSetting>& columns) {
  std::vector<CompilationSetting> sorted = columns;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw Error("label matrix has no columns to train on");
  if (kind != MlcKind::kEcocc) {
    // gcc before clang, versions ascending, opts ascending within each.
    return {sorted};
  }
  std::map<CompilerFamily, std::vector<CompilationSetting>> by_family;
  for (const CompilationSetting& s : sorted) by_family[s.family].push_back(s);
  std::vector<std::vector<CompilationSetting>> groups;
  for (auto& [family, settings] : by_family) {
    bool ok = settings.size() == static_cast<size_t>(kNumOptLevels);
    for (size_t k = 0; ok && k < settings.size(); ++k) {
      ok = settings[k].opt == static_cast<OptLevel>(k) && settings[k].version == settings[0].version;
    }
    if (!ok) {
      std::string names;
      for (const CompilationSetting& s : settings) names += " " + s.name();
      throw Error("ECOCC needs exactly O0..O3 of one " + std::string(to_string(family)) +
                  " version; got" + names + " (restrict the training settings)");
    }
    groups.push_back(settings);
  }
  return groups;
}

MlcModel train_model(MlcKind kind, const FeatureTable& features, const LabelMatrix& labels,
                     const MlcParams& params, unsigned jobs) {
  if (params.ensemble_size < 1) throw Error("ensemble size must be >= 1");
  std::string hash = feature_ordering_hash(features.names);
  if (hash != feature_ordering_hash()) throw Error("feature table columns are not in canonical order");

  std::vector<std::pair<size_t, size_t>> joined;  // (feature row, label row)
  for (size_t r = 0; r < features.call_ids.size(); ++r) {
    int lr = labels.row_index(features.call_ids[r]);
    if (lr >= 0) joined.emplace_back(r, static_cast<size_t>(lr));
  }
  if (joined.empty()) throw Error("no call site has both features and labels");

  MlcModel model;
  model.kind = kind;
  model.params = params;
  model.feature_hash = hash;
  auto group_labels = label_groups(kind, labels.columns());
  for (const auto& g : group_labels) {
    model.settings.insert(model.settings.end(), g.begin(), g.end());
  }
  std::sort(model.settings.begin(), model.settings.end());

  std::vector<GroupData> data(group_labels.size());
  for (size_t g = 0; g < group_labels.size(); ++g) {
    const auto& glabels = group_labels[g];
    GroupData& d = data[g];
    d.x = Matrix(joined.size(), kNumFeatures + glabels.size());
    d.y.assign(glabels.size(), std::vector<std::uint8_t>(joined.size(), 0));
    d.known.assign(glabels.size(), std::vector<std::uint8_t>(joined.size(), 0));
    for (size_t k = 0; k < glabels.size(); ++k) {
      size_t col = static_cast<size_t>(labels.column_index(glabels[k]));
      for (size_t i = 0; i < joined.size(); ++i) {
        Label l = labels.at(joined[i].second, col);
        d.known[k][i] = l != Label::kUnknown;
        d.y[k][i] = l == Label::kInlined;
        d.x(i, kNumFeatures + k) = d.y[k][i];
      }
    }
    for (size_t i = 0; i < joined.size(); ++i) {
      const FeatureVector& v = features.rows[joined[i].first];
      for (size_t c = 0; c < kNumFeatures; ++c) d.x(i, c) = v[c];
    }
  }

  const bool bagged = is_bagged(kind);
  const bool chained = is_chained(kind);
  const size_t per_group = bagged ? static_cast<size_t>(params.ensemble_size) : 1;
  std::vector<ChainModel> trained(group_labels.size() * per_group);
  parallel_for(trained.size(), jobs, [&](size_t task) {
    size_t g = task / per_group;
    size_t i = task % per_group;
    trained[task] = train_chain(data[g], group_labels[g], chained, bagged, params.seed + i,
                                params.tree);
  });

  for (size_t g = 0; g < group_labels.size(); ++g) {
    ChainGroup group;
    group.name = kind == MlcKind::kEcocc ? std::string(to_string(group_labels[g][0].family)) : "all";
    for (size_t i = 0; i < per_group; ++i) group.chains.push_back(std::move(trained[g * per_group + i]));
    model.groups.push_back(std::move(group));
  }
  return model;
}

LabelMatrix predict(const MlcModel& model, const FeatureTable& features) {
  if (feature_ordering_hash(features.names) != model.feature_hash) {
    throw Error("feature table ordering hash does not match the model's");
  }
  LabelMatrix out(features.call_ids, model.settings);
  for (const ChainGroup& group : model.groups) {
    if (group.chains.empty()) continue;
    const auto& glabels = group.chains.front().labels;
    std::vector<int> cols;
    for (const CompilationSetting& s : glabels) cols.push_back(out.column_index(s));
    std::vector<int> votes(glabels.size());
    for (size_t r = 0; r < features.rows.size(); ++r) {
      std::fill(votes.begin(), votes.end(), 0);
      for (const ChainModel& chain : group.chains) {
        std::vector<std::uint8_t> y = chain.predict(features.rows[r]);
        for (size_t k = 0; k < y.size(); ++k) votes[k] += y[k];
      }
      for (size_t k = 0; k < glabels.size(); ++k) {
        double fraction = static_cast<double>(votes[k]) / static_cast<double>(group.chains.size());
        out.set(r, static_cast<size_t>(cols[k]),
                fraction > model.params.vote_threshold ? Label::kInlined : Label::kNotInlined);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model file

namespace {

using detail::Fields;
using detail::Json;

constexpr int kModelSchemaVersion = 1;
constexpr const char* kModelFormat = "inlsfs-model";

Json tree_to_json(const DecisionTree& tree) {
  Json nodes = Json::array();
  for (const TreeNode& n : tree.nodes()) {
    nodes.push_back(Json::array({n.feature, n.threshold, n.left, n.right, n.positive_fraction,
                                 n.n_train}));
  }
  return nodes;
}

DecisionTree tree_from_json(const Json& j, const std::string& where, size_t n_features) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a non-empty node array");
  std::vector<TreeNode> nodes;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& a = j[i];
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!a.is_array() || a.size() != 6 || !a[0].is_number_integer() || !a[1].is_number() ||
        !a[2].is_number_integer() || !a[3].is_number_integer() || !a[4].is_number() ||
        !a[5].is_number_integer()) {
      throw SchemaError(at + ": expected [feature, threshold, left, right, positive_fraction, n_train]");
    }
    TreeNode n;
    n.feature = a[0].get<int>();
    n.threshold = a[1].get<double>();
    n.left = a[2].get<int>();
    n.right = a[3].get<int>();
    n.positive_fraction = a[4].get<double>();
    n.n_train = a[5].get<int>();
    if (n.positive_fraction < 0 || n.positive_fraction > 1) {
      throw SchemaError(at + ": positive_fraction outside [0,1]");
    }
    if (n.feature >= 0) {
      int size = static_cast<int>(j.size());
      if (static_cast<size_t>(n.feature) >= n_features || n.left <= static_cast<int>(i) ||
          n.right <= static_cast<int>(i) || n.left >= size || n.right >= size) {
        throw SchemaError(at + ": invalid split node");
      }
    }
    nodes.push_back(n);
  }
  return DecisionTree(std::move(nodes));
}

}  // namespace

std::string model_to_json(const MlcModel& model) {
  Json settings = Json::array();
  for (const CompilationSetting& s : model.settings) settings.push_back(s.name());
  Json groups = Json::array();
  for (const ChainGroup& g : model.groups) {
    Json chains = Json::array();
    for (const ChainModel& c : g.chains) {
      Json labels = Json::array();
      for (const CompilationSetting& s : c.labels) labels.push_back(s.name());
      Json trees = Json::array();
      for (const DecisionTree& t : c.trees) trees.push_back(tree_to_json(t));
      chains.push_back(Json{{"labels", std::move(labels)},
                            {"chained", c.chained},
                            {"bootstrap", c.bootstrap},
                            {"seed", c.seed},
                            {"trees", std::move(trees)}});
    }
    groups.push_back(Json{{"name", g.name}, {"chains", std::move(chains)}});
  }
  Json names = Json::array();
  for (std::string_view n : feature_names()) names.push_back(std::string(n));
  Json doc{{"format", kModelFormat},
           {"schema_version", kModelSchemaVersion},
           {"kind", to_string(model.kind)},
           {"hyperparameters",
            {{"max_depth", model.params.tree.max_depth},
             {"min_leaf", model.params.tree.min_leaf},
             {"ensemble_size", model.params.ensemble_size},
             {"vote_threshold", model.params.vote_threshold}}},
           {"seed", model.params.seed},
           {"feature_hash", model.feature_hash},
           {"feature_names", std::move(names)},
           {"settings", std::move(settings)},
           {"groups", std::move(groups)}};
  return doc.dump() + "\n";
}

MlcModel model_from_json(std::string_view text, std::string_view origin) {
  Json doc = detail::parse_json(text, origin);
  Fields top(doc, std::string(origin), "model");
  if (top.str("format") != kModelFormat) top.fail("format", "not an inlsfs model file");
  if (top.integer("schema_version", 0) != kModelSchemaVersion) {
    top.fail("schema_version", "unsupported version");
  }
  MlcModel model;
  try {
    model.kind = parse_mlc_kind(top.str("kind"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    top.fail("kind", e.what());
  }
  Fields hp = top.sub("hyperparameters");
  model.params.tree.max_depth = static_cast<int>(hp.integer("max_depth", 0));
  model.params.tree.min_leaf = static_cast<int>(hp.integer("min_leaf", 1));
  model.params.ensemble_size = static_cast<int>(hp.integer("ensemble_size", 1));
  model.params.vote_threshold = hp.number("vote_threshold");
  const Json& seed = top.raw("seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    top.fail("seed", "expected a nonnegative integer");
  }
  model.params.seed = seed.get<std::uint64_t>();
  model.feature_hash = top.str("feature_hash");

  auto parse_setting = [&](const Json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(top.origin() + ": " + where + ": expected a setting name");
    try {
      return CompilationSetting::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(top.origin() + ": " + where + ": " + e.what());
    }
  };

  const Json& settings = top.array("settings");
  for (size_t i = 0; i < settings.size(); ++i) {
    model.settings.push_back(parse_setting(settings[i], "model.settings[" + std::to_string(i) + "]"));
  }

  const Json& groups = top.array("groups");
  for (size_t g = 0; g < groups.size(); ++g) {
    std::string gwhere = "groups[" + std::to_string(g) + "]";
    Fields gf(groups[g], top.origin(), gwhere);
    ChainGroup group;
    group.name = gf.str("name");
    const Json& chains = gf.array("chains");
    for (size_t c = 0; c < chains.size(); ++c) {
      std::string cwhere = gwhere + ".chains[" + std::to_string(c) + "]";
      Fields cf(chains[c], top.origin(), cwhere);
      ChainModel chain;
      const Json& labels = cf.array("labels");
      for (size_t k = 0; k < labels.size(); ++k) {
        chain.labels.push_back(parse_setting(labels[k], cwhere + ".labels[" + std::to_string(k) + "]"));
        if (std::find(model.settings.begin(), model.settings.end(), chain.labels.back()) ==
            model.settings.end()) {
          cf.fail("labels", "label '" + chain.labels.back().name() + "' not among model settings");
        }
      }
      chain.chained = cf.boolean("chained");
      chain.bootstrap = cf.boolean("bootstrap");
      const Json& cseed = cf.raw("seed");
      if (!cseed.is_number_integer() || cseed.get<long long>() < 0) {
        cf.fail("seed", "expected a nonnegative integer");
      }
      chain.seed = cseed.get<std::uint64_t>();
      const Json& trees = cf.array("trees");
      if (trees.size() != chain.labels.size()) cf.fail("trees", "one tree per label required");
      for (size_t k = 0; k < trees.size(); ++k) {
        size_t width = kNumFeatures + (chain.chained ? k : 0);
        chain.trees.push_back(tree_from_json(
            trees[k], top.origin() + ": " + cwhere + ".trees[" + std::to_string(k) + "]", width));
      }
      if (!group.chains.empty() && group.chains.front().labels != chain.labels) {
        cf.fail("labels", "differs from the first chain of the group");
      }
      group.chains.push_back(std::move(chain));
    }
    model.groups.push_back(std::move(group));
  }
  return model;
}

void save_model(const MlcModel& model, const std::filesystem::path& path) {
  detail::write_file(path, model_to_json(model));
}

MlcModel load_model(const std::filesystem::path& path) {
  return model_from_json(detail::read_file(path), path.string());
}

}  // namespace inlsfs
