#include "diamond/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diamond {

void ModelParams::validate_couplings() const {
  auto need_finite = [](double v, const char *name) {
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(name) + " must be finite");
  };
  need_finite(J, "J");
  need_finite(J1, "J1");
  need_finite(delta, "delta");
  need_finite(D, "D");
  need_finite(h, "h");
}

void ModelParams::validate_thermal() const {
  validate_couplings();
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("T must be > 0");
}

void IsingPair::validate() const {
  auto ok = [](double m) { return m == 0.5 || m == -0.5; };
  if (!ok(mu_i) || !ok(mu_ip1))
    throw std::invalid_argument("node spins must be +0.5 or -0.5");
}

Mat4 block_hamiltonian(const ModelParams &p, const IsingPair &pair) {
  p.validate_couplings();
  pair.validate();
  const double ms = pair.sum();
  const double jz = p.J * p.delta;

  Mat4 H{};
  // |00>: dimer fully up
  H[0][0] = cplx(0.25 * jz + (p.J1 - 0.5 * p.h) * ms - p.h, 0.0);
  // |11>: dimer fully down
  H[3][3] = cplx(0.25 * jz - (p.J1 + 0.5 * p.h) * ms + p.h, 0.0);
  // {|01>,|10>}: XY sector, field acts on the nodes only
  const double mid = -0.25 * jz - 0.5 * p.h * ms;
  H[1][1] = cplx(mid, 0.0);
  H[2][2] = cplx(mid, 0.0);
  H[1][2] = 0.5 * cplx(p.J, p.D);
  H[2][1] = std::conj(H[1][2]);
  return H;
}

BlockSpectrum block_spectrum(const ModelParams &p, const IsingPair &pair) {
  p.validate_couplings();
  pair.validate();
  const double ms = pair.sum();
  const double jz = p.J * p.delta;
  const double eta = std::hypot(p.J, p.D);

  BlockSpectrum s;
  s.eta = eta;
  s.a_degenerate = (eta == 0.0);
  s.a = s.a_degenerate ? cplx(1.0, 0.0) : cplx(p.J, p.D) / eta;

  const double mid = -0.25 * jz - 0.5 * p.h * ms;
  s.lambdas[0] = 0.25 * jz + (p.J1 - 0.5 * p.h) * ms - p.h;
  s.lambdas[1] = mid - 0.5 * eta;
  s.lambdas[2] = mid + 0.5 * eta;
  s.lambdas[3] = 0.25 * jz - (p.J1 + 0.5 * p.h) * ms + p.h;

  const double r = 1.0 / std::sqrt(2.0);
  s.vectors[0] = {cplx(1, 0), 0, 0, 0};
  s.vectors[1] = {0, -r * s.a, cplx(r, 0), 0};
  s.vectors[2] = {0, r * s.a, cplx(r, 0), 0};
  s.vectors[3] = {0, 0, 0, cplx(1, 0)};
  return s;
}

BlockSpectrum spectrum_oracle(const ModelParams &p, const IsingPair &pair) {
  const auto e = jacobi_eigh<4>(block_hamiltonian(p, pair));
  BlockSpectrum s;
  s.lambdas = e.values;
  s.vectors = e.vectors;
  s.eta = std::hypot(p.J, p.D);
  s.a_degenerate = (s.eta == 0.0);
  s.a = s.a_degenerate ? cplx(1.0, 0.0) : cplx(p.J, p.D) / s.eta;
  return s;
}

} // namespace diamond
