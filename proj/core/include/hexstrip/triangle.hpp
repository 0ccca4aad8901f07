#pragma once

#include <hexstrip/big_count.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hexstrip {

/// Row-indexed number triangle: rows[n][k].
struct Triangle {
  std::string name;
  std::vector<std::vector<BigCount>> rows;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// One row per line, comma-separated decimals with no spaces: "1,13,46,43,5".
std::string to_csv(const Triangle& triangle);
/// Inverse of to_csv. Throws ParseError on anything but digits and commas.
Triangle triangle_from_csv(std::string_view name, std::string_view csv);

/// {"name":"c","rows":[[1],[1],[1,1]]}; values are exact JSON number literals.
std::string to_json(const Triangle& triangle);

/// Space-separated values, one row per line.
std::string to_plain(const Triangle& triangle);

/// OEIS b-file lines "index value" for a linear sequence; the first value is
/// given index `offset`.
std::string to_bfile(const std::vector<BigCount>& values, long offset = 0);

/// Row-major flattening of a triangle as a b-file.
std::string to_bfile(const Triangle& triangle, long offset = 0);

/// Exact decimal JSON number literal.
std::string json_number(const BigCount& value);

}  // namespace hexstrip
