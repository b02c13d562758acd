#pragma once

// shared helpers for the unit and acceptance binaries

#include "diamond/min.hpp"
#include "diamond/model.hpp"
#include "diamond/numeric.hpp"
#include "diamond/transfer.hpp"

#include <cmath>
#include <random>

namespace support {

using namespace diamond;

inline ModelParams random_params(std::mt19937_64 &rng, double t_lo = 0.05,
                                 double t_hi = 5.0) {
  ModelParams p;
  p.J = uniform(rng, -3, 3);
  p.J1 = uniform(rng, -3, 3);
  p.delta = uniform(rng, -3, 3);
  p.D = uniform(rng, -3, 3);
  p.h = uniform(rng, -3, 3);
  p.T = uniform(rng, t_lo, t_hi);
  return p;
}

// physical X state; balanced marginals when `degenerate`
inline ThermalState random_x_state(std::mt19937_64 &rng, bool degenerate) {
  double pop[4];
  if (degenerate) {
    pop[0] = 0.5 * unit_uniform(rng);
    pop[1] = 0.5 - pop[0];
    pop[2] = 0.5 * unit_uniform(rng);
    pop[3] = 0.5 - pop[2];
  } else {
    double sum = 0;
    for (auto &v : pop) {
      v = 0.05 + unit_uniform(rng);
      sum += v;
    }
    for (auto &v : pop)
      v /= sum;
  }
  const double mag = 0.95 * unit_uniform(rng) * std::sqrt(pop[1] * pop[2]);
  const double ang = uniform(rng, 0, 6.283185307179586);
  return make_x_state(pop[0], pop[1], pop[2], pop[3],
                      mag * cplx(std::cos(ang), std::sin(ang)));
}

inline Mat4 kron2(const CMat<2> &a, const CMat<2> &b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

inline double max_entry_dev(const Mat4 &a, const Mat4 &b) {
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

// physicality audit: trace close to 1 and no eigenvalue below -tol
struct StateAudit {
  double worst_trace = 0;  // max |tr - 1|
  double worst_eig = 0;    // most negative eigenvalue, as a positive number

  void feed(const ThermalState &st) {
    worst_trace = std::max(worst_trace, std::abs(st.trace() - 1.0));
    const auto e = jacobi_eigh<4>(st.rho, false);
    worst_eig = std::max(worst_eig, -e.values[0]);
  }
  bool ok(double tol = 1e-12) const {
    return worst_trace <= tol && worst_eig <= tol;
  }
};

} // namespace support
