#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diamond {

// flat numeric table, the common carrier for every CLI command
struct Table {
  std::vector<std::string> comments; // emitted with a leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows; // each row.size() == columns.size()
};

// shortest decimal string that round-trips the exact double,
// locale-independent ('.' separator always)
std::string format_double(double v);

void write_csv(std::ostream &os, const Table &t);

// first line is a meta object (version, columns, notes), then one
// object per row keyed by column name, insertion-ordered
void write_jsonl(std::ostream &os, const Table &t);

} // namespace diamond
