#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace inlsfs::detail {

// Minimal RFC 4180 handling: fields containing ',', '"' or newlines are
// quoted on output; quoted fields are accepted on input.
std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> csv_parse(std::string_view text, std::string_view origin);

}  // namespace inlsfs::detail
