#include "json_util.hpp"

#include <fstream>
#include <sstream>

namespace inlsfs::detail {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string(origin) + ": invalid JSON: " + e.what());
  }
}

Fields::Fields(const Json& obj, std::string origin, std::string where)
    : obj_(obj), origin_(std::move(origin)), where_(std::move(where)) {
  if (!obj_.is_object()) {
    throw SchemaError(origin_ + ": " + where_ + ": expected an object");
  }
}

void Fields::fail(const char* key, const std::string& problem) const {
  throw SchemaError(origin_ + ": " + where_ + "." + key + ": " + problem);
}

const Json& Fields::raw(const char* key) const {
  auto it = obj_.find(key);
  if (it == obj_.end()) fail(key, "missing field");
  return *it;
}

std::string Fields::str(const char* key) const {
  const Json& v = raw(key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

long long Fields::integer(const char* key, long long min_value) const {
  const Json& v = raw(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  long long x = v.get<long long>();
  if (x < min_value) fail(key, "must be >= " + std::to_string(min_value));
  return x;
}

double Fields::number(const char* key) const {
  const Json& v = raw(key);
  if (!v.is_number()) fail(key, "expected a number");
  return v.get<double>();
}

bool Fields::boolean(const char* key) const {
  const Json& v = raw(key);
  if (!v.is_boolean()) fail(key, "expected a boolean");
  return v.get<bool>();
}

const Json& Fields::array(const char* key) const {
  const Json& v = raw(key);
  if (!v.is_array()) fail(key, "expected an array");
  return v;
}

const Json& Fields::object(const char* key) const {
  const Json& v = raw(key);
  if (!v.is_object()) fail(key, "expected an object");
  return v;
}

Fields Fields::sub(const char* key) const {
  return Fields(object(key), origin_, where_ + "." + key);
}

void check_schema_version(const Json& doc, int expected, std::string_view origin) {
  if (!doc.is_object()) throw SchemaError(std::string(origin) + ": expected a JSON object");
  auto it = doc.find("schema_version");
  if (it == doc.end()) return;
  if (!it->is_number_integer() || it->get<int>() != expected) {
    throw SchemaError(std::string(origin) + ": unsupported schema_version " + it->dump() +
                      " (expected " + std::to_string(expected) + ")");
  }
}

}  // namespace inlsfs::detail
