#include <hexstrip/errors.hpp>
#include <hexstrip/triangle.hpp>

#include <sstream>
#include <string>

namespace hexstrip {

std::string json_number(const BigCount& value) { return value.get_str(10); }

std::string to_csv(const Triangle& triangle) {
  std::string out;
  for (const auto& row : triangle.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += row[k].get_str(10);
    }
    out += '\n';
  }
  return out;
}

Triangle triangle_from_csv(std::string_view name, std::string_view csv) {
  Triangle triangle{std::string(name), {}};
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const std::size_t eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<BigCount> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      if (field.empty() || field.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": bad value '" + std::string(field) + "'");
      }
      row.emplace_back(std::string(field), 10);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    triangle.rows.push_back(std::move(row));
  }
  return triangle;
}

std::string to_json(const Triangle& triangle) {
  std::string out = "{\"name\":\"" + triangle.name + "\",\"rows\":[";
  for (std::size_t n = 0; n < triangle.rows.size(); ++n) {
    if (n) out += ',';
    out += '[';
    for (std::size_t k = 0; k < triangle.rows[n].size(); ++k) {
      if (k) out += ',';
      out += json_number(triangle.rows[n][k]);
    }
    out += ']';
  }
  return out + "]}";
}

std::string to_plain(const Triangle& triangle) {
  std::string out;
  for (const auto& row : triangle.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += row[k].get_str(10);
    }
    out += '\n';
  }
  return out;
}

std::string to_bfile(const std::vector<BigCount>& values, long offset) {
  std::ostringstream out;
  long index = offset;
  for (const auto& value : values) out << index++ << ' ' << value.get_str(10) << '\n';
  return out.str();
}

std::string to_bfile(const Triangle& triangle, long offset) {
  std::vector<BigCount> flat;
  for (const auto& row : triangle.rows) flat.insert(flat.end(), row.begin(), row.end());
  return to_bfile(flat, offset);
}

}  // namespace hexstrip
