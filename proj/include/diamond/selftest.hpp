#pragma once

#include "diamond/common.hpp"

#include <string>

namespace diamond {

struct SelftestReport {
  bool passed = false;
  std::string text; // one line per suite plus a summary line
};

// Cross-checks every closed form against its slow reference: block
// levels vs dense diagonalization, chain elements vs exhaustive
// enumeration, measure closed forms vs direct maximization, and the
// N2 = N1^2/2 identity on model states.  Deterministic for a given
// seed.  Setting DIAMOND_MIN_SELFTEST_FAULT in the environment injects
// an artificial error so the failure path can be exercised.
SelftestReport run_selftest(unsigned long long seed, Exec exec = Exec::parallel);

} // namespace diamond
