#pragma once

#include "diamond/common.hpp"
#include "diamond/io.hpp"

#include <string>
#include <vector>

namespace diamond {

// Canned parameter grids reproducing the survey plots that motivated this
// code.  Each preset returns a ready-to-write table; the comment block on
// the table records the fixed couplings.
std::vector<std::string> preset_names();

Table run_figure(const std::string &name, Exec exec = Exec::parallel);

} // namespace diamond
