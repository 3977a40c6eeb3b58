#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ndi::csv {

using Row = std::vector<std::string>;

/// RFC 4180-style parse: quoted fields, doubled quotes, CRLF or LF line ends.
/// Blank lines are skipped.
std::vector<Row> parse(std::string_view text);

/// Quotes a field if it contains a comma, quote, or line break.
std::string escape(std::string_view field);

std::string join(const Row& row);

}  // namespace ndi::csv
