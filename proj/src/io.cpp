#include "diamond/io.hpp"

#include "diamond/common.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace diamond {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream &os, const Table &t) {
  for (const auto &c : t.comments)
    os << "# " << c << "\n";
  for (std::size_t k = 0; k < t.columns.size(); ++k)
    os << (k ? "," : "") << t.columns[k];
  os << "\n";
  for (const auto &row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::invalid_argument("row width does not match header");
    for (std::size_t k = 0; k < row.size(); ++k)
      os << (k ? "," : "") << format_double(row[k]);
    os << "\n";
  }
}

void write_jsonl(std::ostream &os, const Table &t) {
  nlohmann::ordered_json meta;
  meta["version"] = kVersion;
  meta["columns"] = t.columns;
  meta["notes"] = t.comments;
  os << meta.dump() << "\n";
  for (const auto &row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::invalid_argument("row width does not match header");
    nlohmann::ordered_json obj;
    for (std::size_t k = 0; k < row.size(); ++k)
      obj[t.columns[k]] = row[k];
    os << obj.dump() << "\n";
  }
}

} // namespace diamond
