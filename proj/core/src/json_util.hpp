#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "inlsfs/error.hpp"

namespace inlsfs::detail {

using Json = nlohmann::json;

std::string read_file(const std::filesystem::path& path);
// Writes atomically enough for our purposes: to a temp sibling, then rename.
void write_file(const std::filesystem::path& path, std::string_view content);

Json parse_json(std::string_view text, std::string_view origin);

// Typed field access that reports "<origin>: <where>.<key>: <problem>".
class Fields {
 public:
  Fields(const Json& obj, std::string origin, std::string where);

  const Json& raw(const char* key) const;
  bool has(const char* key) const { return obj_.contains(key); }
  std::string str(const char* key) const;
  long long integer(const char* key, long long min_value) const;
  double number(const char* key) const;
  bool boolean(const char* key) const;
  const Json& array(const char* key) const;
  const Json& object(const char* key) const;
  Fields sub(const char* key) const;

  [[noreturn]] void fail(const char* key, const std::string& problem) const;
  const std::string& where() const { return where_; }
  const std::string& origin() const { return origin_; }

 private:
  const Json& obj_;
  std::string origin_;
  std::string where_;
};

// Validates an optional "schema_version" member against `expected`.
void check_schema_version(const Json& doc, int expected, std::string_view origin);

}  // namespace inlsfs::detail
