// Timing harness for the two execution paths. The parallel path must give
// bit-identical results to the serial reference, so this doubles as a
// determinism check; any mismatch exits nonzero.

#include "diamond/analysis.hpp"
#include "diamond/min.hpp"
#include "diamond/transfer.hpp"

#include <chrono>
#include <cstdio>

using namespace diamond;

namespace {

template <class F> double timed(F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main() {
  int mismatches = 0;

  {
    SweepSpec spec;
    spec.axes = {Axis{"delta", 0.0, 2.0, 161}, Axis{"T", 0.05, 2.0, 161}};
    spec.observable = Observable::n1;
    spec.fixed.J = 1;
    spec.fixed.J1 = 1;
    spec.fixed.h = 1;
    spec.fixed.D = 1;

    SweepResult serial, parallel;
    const double ts = timed([&] { serial = sweep(spec, Exec::serial); });
    const double tp = timed([&] { parallel = sweep(spec, Exec::parallel); });
    bool same = serial.values.size() == parallel.values.size();
    for (std::size_t k = 0; same && k < serial.values.size(); ++k)
      same = serial.values[k] == parallel.values[k];
    if (!same)
      ++mismatches;
    std::printf("sweep 161x161      serial %7.3fs  parallel %7.3fs  x%.2f  %s\n",
                ts, tp, ts / tp, same ? "identical" : "MISMATCH");
  }

  {
    // degenerate first-qubit marginal forces the full direction search
    const ThermalState st =
        make_x_state(0.35, 0.15, 0.15, 0.35, cplx(0.05, 0.08));
    double vs = 0, vp = 0;
    const double ts = timed(
        [&] { vs = min_bruteforce(st, MinNorm::trace, 192, Exec::serial); });
    const double tp = timed(
        [&] { vp = min_bruteforce(st, MinNorm::trace, 192, Exec::parallel); });
    const bool same = vs == vp;
    if (!same)
      ++mismatches;
    std::printf("direction search   serial %7.3fs  parallel %7.3fs  x%.2f  %s\n",
                ts, tp, ts / tp, same ? "identical" : "MISMATCH");
  }

  if (mismatches)
    std::printf("%d path mismatches\n", mismatches);
  return mismatches;
}
