#include "diamond/min.hpp"

#include "diamond/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace diamond {
namespace {

void validate_x(const Mat4 &r) {
  const int zero_pairs[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (auto [i, j] : zero_pairs)
    if (r[i][j] != cplx(0.0, 0.0) || r[j][i] != cplx(0.0, 0.0))
      throw std::invalid_argument("state does not have the X pattern");
  for (int i = 0; i < 4; ++i)
    if (r[i][i].imag() != 0.0)
      throw std::invalid_argument("state diagonal is not real");
  if (r[2][1] != std::conj(r[1][2]) || r[3][0] != std::conj(r[0][3]))
    throw std::invalid_argument("state is not Hermitian");
}

// bare Pauli traces of an arbitrary two-qubit matrix,
// basis index m = 2a + b, first factor = measured qubit
struct PauliData {
  Vec3 x{}, y{};
  Mat3 t{};
};

PauliData pauli_data(const Mat4 &r) {
  PauliData d;
  const cplx s02 = r[0][2] + r[1][3], d02 = r[0][2] - r[1][3];
  const cplx s01 = r[0][1] + r[2][3], d01 = r[0][1] - r[2][3];
  const cplx s03 = r[0][3] + r[1][2], d12 = r[1][2] - r[0][3];
  const double p0 = r[0][0].real(), p1 = r[1][1].real(),
               p2 = r[2][2].real(), p3 = r[3][3].real();

  d.x = {2 * s02.real(), -2 * s02.imag(), p0 + p1 - p2 - p3};
  d.y = {2 * s01.real(), -2 * s01.imag(), p0 - p1 + p2 - p3};
  d.t[0][0] = 2 * s03.real();
  d.t[0][1] = 2 * d12.imag();
  d.t[0][2] = 2 * d02.real();
  d.t[1][0] = -2 * (r[1][2] + r[0][3]).imag();
  d.t[1][1] = 2 * d12.real();
  d.t[1][2] = -2 * d02.imag();
  d.t[2][0] = 2 * d01.real();
  d.t[2][1] = -2 * d01.imag();
  d.t[2][2] = p0 - p1 - p2 + p3;
  return d;
}

double norm3(const Vec3 &v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Mat3 gram(const Mat3 &t) { // T T^t
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m[i][j] += t[i][k] * t[j][k];
  return m;
}

// distance from rho to its image under the projective measurement along n
// on the first qubit; MinNorm picks the squared HS norm or the trace norm
double measured_distance(const Mat4 &rho, const Vec3 &n, MinNorm norm) {
  // A = (n . sigma) x 1; the remainder is (rho - A rho A) / 2
  CMat<2> a{};
  a[0][0] = n[2];
  a[0][1] = cplx(n[0], -n[1]);
  a[1][0] = cplx(n[0], n[1]);
  a[1][1] = -n[2];

  Mat4 lifted{};
  for (int ai = 0; ai < 2; ++ai)
    for (int aj = 0; aj < 2; ++aj)
      for (int b = 0; b < 2; ++b)
        lifted[2 * ai + b][2 * aj + b] = a[ai][aj];

  Mat4 tmp{}, ara{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k)
        s += lifted[i][k] * rho[k][j];
      tmp[i][j] = s;
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k)
        s += tmp[i][k] * lifted[k][j];
      ara[i][j] = s;
    }

  Mat4 delta{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      delta[i][j] = 0.5 * (rho[i][j] - ara[i][j]);

  if (norm == MinNorm::hilbert_schmidt) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        s += std::norm(delta[i][j]);
    return s;
  }
  return trace_norm_hermitian<4>(delta);
}

Vec3 direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

} // namespace

BlochForm bloch_decompose(const ThermalState &st) {
  validate_x(st.rho);
  const cplx r23 = st.rho[1][2];
  const double mag = std::abs(r23);

  Mat4 rot = st.rho;
  BlochForm out;
  out.phase = (mag > 0.0) ? std::arg(r23) : 0.0;
  // z rotation on the first qubit multiplies both upper-right X entries
  // by the same phase; writing the magnitude keeps the zero exact
  rot[1][2] = mag;
  rot[2][1] = mag;
  const cplx ph = std::polar(1.0, -out.phase);
  rot[0][3] = ph * st.rho[0][3];
  rot[3][0] = std::conj(rot[0][3]);

  const PauliData d = pauli_data(rot);
  out.x = d.x;
  out.y = d.y;
  out.tmat = d.t;
  out.c = {d.t[0][0], d.t[1][1], d.t[2][2]};

  // X structure leaves nothing in the transverse plane
  if (std::abs(out.x[0]) > 1e-12 || std::abs(out.x[1]) > 1e-12 ||
      std::abs(out.y[0]) > 1e-12 || std::abs(out.y[1]) > 1e-12)
    throw std::runtime_error("internal: transverse Bloch components survived");
  return out;
}

double min_hilbert_schmidt(const BlochForm &b) {
  const Mat3 m = gram(b.tmat);
  const double tr = m[0][0] + m[1][1] + m[2][2];
  const double nx = norm3(b.x);
  if (nx > kDegenerateTol) {
    double q = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        q += b.x[i] * m[i][j] * b.x[j];
    return 0.25 * (tr - q / (nx * nx));
  }
  CMat<3> mc{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      mc[i][j] = m[i][j];
  const auto e = jacobi_eigh<3>(mc, false);
  return 0.25 * (tr - e.values[0]);
}

double min_trace(const BlochForm &b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(b.tmat[i][j]) > 1e-12)
        throw std::invalid_argument(
            "trace-norm closed form needs a diagonal correlation matrix");

  const Vec3 &c = b.c;
  const double nx = norm3(b.x);
  if (nx <= kDegenerateTol)
    return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});

  // marginal along one coordinate axis (every X state lands here): the
  // general expression below collapses to the larger transverse weight,
  // and the collapsed form sidesteps a cancellation that costs half the
  // digits near equal weights
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    if (b.x[i] == 0.0 && b.x[j] == 0.0)
      return std::max(std::abs(c[i]), std::abs(c[j]));
  }

  const double c2[3] = {c[0] * c[0], c[1] * c[1], c[2] * c[2]};
  const double x2[3] = {b.x[0] * b.x[0], b.x[1] * b.x[1], b.x[2] * b.x[2]};
  const double cnorm2 = c2[0] + c2[1] + c2[2];
  const double xnorm2 = x2[0] + x2[1] + x2[2];
  const double alpha =
      cnorm2 * xnorm2 - (c2[0] * x2[0] + c2[1] * x2[1] + c2[2] * x2[2]);
  const double beta =
      x2[0] * c2[1] * c2[2] + x2[1] * c2[2] * c2[0] + x2[2] * c2[0] * c2[1];
  const double spread = 2.0 * std::sqrt(beta) * nx;
  const double chi_p = std::max(0.0, alpha + spread);
  const double chi_m = std::max(0.0, alpha - spread);
  return (std::sqrt(chi_p) + std::sqrt(chi_m)) / (2.0 * nx);
}

MinResult min_xstate(const ThermalState &st) {
  validate_x(st.rho);
  const double r = std::abs(st.rho[1][2]);
  const double x3 = st.rho[0][0].real() + st.rho[1][1].real() -
                    st.rho[2][2].real() - st.rho[3][3].real();
  MinResult out;
  out.n1 = 2.0 * r;
  out.n2 = 2.0 * r * r;
  out.maximizer_degenerate = std::abs(x3) <= kDegenerateTol;
  return out;
}

double min_bruteforce(const ThermalState &st, MinNorm norm,
                      int grid_resolution, Exec exec) {
  if (grid_resolution < 64)
    throw std::invalid_argument("grid_resolution must be >= 64");
  const Mat4 &rho = st.rho;
  const Vec3 x = pauli_data(rho).x;

  if (norm3(x) > kDegenerateTol) {
    // invariance of the marginal pins the measurement to the x axis
    const double nx = norm3(x);
    return measured_distance(rho, {x[0] / nx, x[1] / nx, x[2] / nx}, norm);
  }

  const int res = grid_resolution;
  const double pi = std::numbers::pi;
  std::vector<double> vals(static_cast<std::size_t>(res) * res);

  const long total = static_cast<long>(vals.size());
  for_each_index(total, exec, [&](long idx) {
    const int k = static_cast<int>(idx) / res;
    const int j = static_cast<int>(idx) % res;
    const double theta = pi * k / (res - 1);
    const double phi = 2.0 * pi * j / res;
    vals[idx] = measured_distance(rho, direction(theta, phi), norm);
  });

  long best = 0;
  for (long idx = 1; idx < total; ++idx)
    if (vals[idx] > vals[best])
      best = idx;

  double theta = pi * (best / res) / (res - 1);
  double phi = 2.0 * pi * (best % res) / res;
  const double dth = pi / (res - 1);
  const double dph = 2.0 * pi / res;
  for (int round = 0; round < 4; ++round) {
    theta = golden_section_max(
        [&](double t) { return measured_distance(rho, direction(t, phi), norm); },
        theta - dth, theta + dth, 1e-8);
    phi = golden_section_max(
        [&](double f) { return measured_distance(rho, direction(theta, f), norm); },
        phi - dph, phi + dph, 1e-8);
  }
  const double refined = measured_distance(rho, direction(theta, phi), norm);
  return std::max(refined, vals[best]);
}

} // namespace diamond
