#include "inlsfs/labeler.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "csv.hpp"
#include "json_util.hpp"

namespace inlsfs {

char label_char(Label l) {
  switch (l) {
    case Label::kNotInlined: return '0';
    case Label::kInlined: return '1';
    case Label::kUnknown: return '?';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// Mapping bundles

namespace {

using detail::Fields;
using detail::Json;

constexpr int kMappingSchemaVersion = 1;

Json setting_to_json(const CompilationSetting& s) {
  return Json{{"compiler_family", to_string(s.family)},
              {"compiler_version", s.version},
              {"opt_level", to_string(s.opt)}};
}

CompilationSetting setting_from_json(const Fields& top) {
  const Json& raw = top.raw("setting");
  try {
    if (raw.is_string()) return CompilationSetting::parse(raw.get<std::string>());
    Fields f = top.sub("setting");
    CompilationSetting s;
    s.family = parse_family(f.str("compiler_family"));
    s.version = f.str("compiler_version");
    s.opt = parse_opt(f.str("opt_level"));
    return s;
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    top.fail("setting", e.what());
  }
}

}  // namespace

std::string mapping_bundle_to_json(const MappingBundle& bundle) {
  Json func_map = Json::array();
  for (const FunctionMapping& fm : bundle.func_map) {
    Json rec{{"binary_function", fm.binary_function}, {"sources", fm.sources}};
    if (fm.root) rec["root"] = *fm.root;
    func_map.push_back(std::move(rec));
  }
  Json line_map = Json::array();
  for (const LineMapping& lm : bundle.line_map) {
    line_map.push_back(Json{{"address", lm.address}, {"file", lm.file}, {"line", lm.line}});
  }
  Json calls = Json::array();
  for (const BinaryCallSite& bc : bundle.bin_callsites) {
    calls.push_back(Json{{"binary_function", bc.binary_function}, {"address", bc.address}});
  }
  Json doc{{"schema_version", kMappingSchemaVersion},
           {"setting", setting_to_json(bundle.setting)},
           {"func_map", std::move(func_map)},
           {"line_map", std::move(line_map)},
           {"bin_callsites", std::move(calls)}};
  return doc.dump(1) + "\n";
}

MappingBundle mapping_bundle_from_json(std::string_view text, std::string_view origin) {
  Json doc = detail::parse_json(text, origin);
  detail::check_schema_version(doc, kMappingSchemaVersion, origin);
  Fields top(doc, std::string(origin), "mapping");
  MappingBundle bundle;
  bundle.setting = setting_from_json(top);

  const Json& fm = top.array("func_map");
  for (size_t i = 0; i < fm.size(); ++i) {
    Fields f(fm[i], top.origin(), "func_map[" + std::to_string(i) + "]");
    FunctionMapping m;
    m.binary_function = f.str("binary_function");
    const Json& sources = f.array("sources");
    for (const Json& s : sources) {
      if (!s.is_string()) f.fail("sources", "expected an array of strings");
      m.sources.push_back(s.get<std::string>());
    }
    if (m.sources.empty()) f.fail("sources", "must not be empty");
    if (f.has("root")) m.root = f.str("root");
    bundle.func_map.push_back(std::move(m));
  }

  const Json& lm = top.array("line_map");
  for (size_t i = 0; i < lm.size(); ++i) {
    Fields f(lm[i], top.origin(), "line_map[" + std::to_string(i) + "]");
    bundle.line_map.push_back({static_cast<std::uint64_t>(f.integer("address", 0)), f.str("file"),
                               static_cast<int>(f.integer("line", 1))});
  }

  const Json& bc = top.array("bin_callsites");
  for (size_t i = 0; i < bc.size(); ++i) {
    Fields f(bc[i], top.origin(), "bin_callsites[" + std::to_string(i) + "]");
    bundle.bin_callsites.push_back(
        {f.str("binary_function"), static_cast<std::uint64_t>(f.integer("address", 0))});
  }
  return bundle;
}

void dump_mapping_bundle(const MappingBundle& bundle, const std::filesystem::path& path) {
  detail::write_file(path, mapping_bundle_to_json(bundle));
}

MappingBundle load_mapping_bundle(const std::filesystem::path& path) {
  return mapping_bundle_from_json(detail::read_file(path), path.string());
}

// ---------------------------------------------------------------------------
// Inference

LabelColumn infer_labels(const Fcg& g, const MappingBundle& bundle) {
  std::set<std::string> missing;
  for (const FunctionMapping& fm : bundle.func_map) {
    for (const std::string& s : fm.sources) {
      if (!g.has_node(s)) missing.insert(s);
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const std::string& s : missing) list += (list.empty() ? "" : ", ") + s;
    throw Error("mapping " + bundle.setting.name() + " references unknown source functions: " +
                list);
  }

  using SourceLine = std::pair<std::string, int>;
  std::multimap<std::uint64_t, SourceLine> lines_at;
  for (const LineMapping& lm : bundle.line_map) lines_at.emplace(lm.address, SourceLine{lm.file, lm.line});

  std::map<std::string, std::set<SourceLine>> call_lines;  // binary function -> lines
  for (const BinaryCallSite& bc : bundle.bin_callsites) {
    auto& dst = call_lines[bc.binary_function];
    auto [lo, hi] = lines_at.equal_range(bc.address);
    for (auto it = lo; it != hi; ++it) dst.insert(it->second);
  }

  std::vector<std::set<std::string>> source_sets;
  std::map<std::string, std::vector<size_t>> containing;  // source fn -> binary indices
  for (size_t b = 0; b < bundle.func_map.size(); ++b) {
    const FunctionMapping& fm = bundle.func_map[b];
    source_sets.emplace_back(fm.sources.begin(), fm.sources.end());
    for (const std::string& s : source_sets.back()) containing[s].push_back(b);
  }

  LabelColumn column;
  column.setting = bundle.setting;
  std::map<SourceLine, std::vector<std::string>> line_rule_sites;
  static const std::set<SourceLine> kNoLines;

  for (const FcgEdge& e : g.edges()) {
    auto it = containing.find(e.caller_id);
    if (it == containing.end()) {
      column.cells[e.call_id] = Label::kUnknown;
      continue;
    }
    bool inlined_evidence = false;
    bool normal_evidence = false;
    for (size_t b : it->second) {
      const std::set<std::string>& sources = source_sets[b];
      if (sources.size() >= 2 && e.caller_id != e.callee_id && sources.count(e.callee_id)) {
        auto cl = call_lines.find(bundle.func_map[b].binary_function);
        const std::set<SourceLine>& lines = cl == call_lines.end() ? kNoLines : cl->second;
        line_rule_sites[{e.file, e.line}].push_back(e.call_id);
        if (lines.count({e.file, e.line})) {
          normal_evidence = true;
        } else {
          inlined_evidence = true;
        }
      } else {
        normal_evidence = true;
      }
    }
    column.cells[e.call_id] = inlined_evidence ? Label::kInlined : Label::kNotInlined;
    if (inlined_evidence && normal_evidence) {
      column.diagnostics.push_back(e.call_id + ": inlined in some binary functions and called in "
                                   "others; labeled inlined");
    }
  }

  for (auto& [where, sites] : line_rule_sites) {
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    if (sites.size() < 2) continue;
    std::string list;
    for (const std::string& s : sites) list += (list.empty() ? "" : ", ") + s;
    column.diagnostics.push_back(where.first + ":" + std::to_string(where.second) +
                                 ": call sites share one line and cannot be told apart: " + list);
  }
  return column;
}

// ---------------------------------------------------------------------------
// Matrix

LabelMatrix::LabelMatrix(std::vector<std::string> rows, std::vector<CompilationSetting> columns)
    : rows_(std::move(rows)),
      columns_(std::move(columns)),
      cells_(rows_.size() * columns_.size(), Label::kUnknown) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (!row_index_.emplace(rows_[i], static_cast<int>(i)).second) {
      throw Error("duplicate label matrix row '" + rows_[i] + "'");
    }
  }
  for (size_t i = 0; i < columns_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (columns_[i] == columns_[j]) {
        throw Error("duplicate label matrix column '" + columns_[i].name() + "'");
      }
    }
  }
}

int LabelMatrix::row_index(const std::string& call_id) const {
  auto it = row_index_.find(call_id);
  return it == row_index_.end() ? -1 : it->second;
}

int LabelMatrix::column_index(const CompilationSetting& s) const {
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

LabelMatrix LabelMatrix::select_columns(const std::vector<CompilationSetting>& keep) const {
  LabelMatrix out(rows_, keep);
  for (size_t c = 0; c < keep.size(); ++c) {
    int src = column_index(keep[c]);
    if (src < 0) throw Error("label matrix has no column '" + keep[c].name() + "'");
    for (size_t r = 0; r < rows_.size(); ++r) out.set(r, c, at(r, static_cast<size_t>(src)));
  }
  return out;
}

LabelMatrix assemble_matrix(const std::vector<std::string>& rows,
                            std::vector<LabelColumn> columns) {
  std::sort(columns.begin(), columns.end(),
            [](const LabelColumn& a, const LabelColumn& b) { return a.setting < b.setting; });
  std::vector<CompilationSetting> settings;
  for (const LabelColumn& c : columns) settings.push_back(c.setting);
  LabelMatrix m(rows, std::move(settings));
  for (size_t c = 0; c < columns.size(); ++c) {
    for (size_t r = 0; r < rows.size(); ++r) {
      auto it = columns[c].cells.find(rows[r]);
      if (it != columns[c].cells.end()) m.set(r, c, it->second);
    }
  }
  return m;
}

std::string label_matrix_to_csv(const LabelMatrix& m) {
  std::vector<std::string> header{"call_id"};
  for (const CompilationSetting& s : m.columns()) header.push_back(s.name());
  std::string out = detail::csv_join(header) + "\n";
  for (size_t r = 0; r < m.num_rows(); ++r) {
    out += detail::csv_escape(m.rows()[r]);
    for (size_t c = 0; c < m.num_columns(); ++c) {
      out += ',';
      out += label_char(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

LabelMatrix label_matrix_from_csv(std::string_view text, std::string_view origin) {
  auto rows = detail::csv_parse(text, origin);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "call_id") {
    throw SchemaError(std::string(origin) + ":1: header must start with 'call_id'");
  }
  std::vector<CompilationSetting> settings;
  for (size_t c = 1; c < rows[0].size(); ++c) {
    try {
      settings.push_back(CompilationSetting::parse(rows[0][c]));
    } catch (const Error& e) {
      throw SchemaError(std::string(origin) + ":1: column " + std::to_string(c + 1) + ": " +
                        e.what());
    }
  }
  std::vector<std::string> ids;
  for (size_t r = 1; r < rows.size(); ++r) ids.push_back(rows[r].empty() ? "" : rows[r][0]);
  LabelMatrix m;
  try {
    m = LabelMatrix(ids, settings);
  } catch (const Error& e) {
    throw SchemaError(std::string(origin) + ": " + e.what());
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != settings.size() + 1) {
      throw SchemaError(std::string(origin) + ":" + std::to_string(r + 1) + ": expected " +
                        std::to_string(settings.size() + 1) + " fields, got " +
                        std::to_string(rows[r].size()));
    }
    for (size_t c = 0; c < settings.size(); ++c) {
      const std::string& cell = rows[r][c + 1];
      Label l;
      if (cell == "0") {
        l = Label::kNotInlined;
      } else if (cell == "1") {
        l = Label::kInlined;
      } else if (cell == "?") {
        l = Label::kUnknown;
      } else {
        throw SchemaError(std::string(origin) + ":" + std::to_string(r + 1) + ": column '" +
                          settings[c].name() + "': invalid cell '" + cell + "'");
      }
      m.set(r - 1, c, l);
    }
  }
  return m;
}

void dump_label_matrix(const LabelMatrix& m, const std::filesystem::path& path) {
  detail::write_file(path, label_matrix_to_csv(m));
}

LabelMatrix load_label_matrix(const std::filesystem::path& path) {
  return label_matrix_from_csv(detail::read_file(path), path.string());
}

}  // namespace inlsfs
