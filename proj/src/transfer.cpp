#include "diamond/transfer.hpp"

#include "diamond/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamond {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// all per-node-pair-class data on one shared shifted scale.
// class index: 0 -> (+,+), 1 -> mixed, 2 -> (-,-)
struct ClassWeights {
  std::array<std::array<double, 4>, 3> e{};     // exp(-beta (lambda - ref))
  std::array<std::array<double, 4>, 3> log_e{}; // -beta (lambda - ref), exact
  std::array<double, 3> w{};                    // sum_k e, in (0, 4]
  std::array<double, 3> log_w{};
  std::array<double, 3> g{};     // (e[2] - e[1]) / 2, always <= 0
  std::array<double, 3> log_mg{};// log(-g), -inf when the XY gap vanishes
  cplx a{1.0, 0.0};
  double log_scale = 0; // -beta * lambda_ref
};

ClassWeights class_weights(const ModelParams &p) {
  p.validate_thermal();
  const double beta = p.beta();
  const IsingPair pairs[3] = {IsingPair::up_up(), IsingPair::up_down(),
                              IsingPair::down_down()};
  std::array<BlockSpectrum, 3> spec;
  double lref = kInf;
  for (int c = 0; c < 3; ++c) {
    spec[c] = block_spectrum(p, pairs[c]);
    for (double l : spec[c].lambdas)
      lref = std::min(lref, l);
  }

  ClassWeights cw;
  cw.log_scale = -beta * lref;
  cw.a = spec[0].a;
  for (int c = 0; c < 3; ++c) {
    double sum = 0;
    for (int k = 0; k < 4; ++k) {
      cw.log_e[c][k] = -beta * (spec[c].lambdas[k] - lref);
      cw.e[c][k] = std::exp(cw.log_e[c][k]);
      sum += cw.e[c][k];
    }
    cw.w[c] = sum;
    cw.log_w[c] = std::log(sum);
    cw.g[c] = 0.5 * (cw.e[c][2] - cw.e[c][1]);
    cw.log_mg[c] = cw.g[c] < 0 ? std::log(-cw.g[c]) : -kInf;
  }
  return cw;
}

TransferMatrix transfer_from(const ClassWeights &cw) {
  TransferMatrix t;
  t.w_pp = cw.w[0];
  t.w_pm = cw.w[1];
  t.w_mm = cw.w[2];
  t.q = std::hypot(t.w_pp - t.w_mm, 2.0 * t.w_pm);
  t.lambda_plus = 0.5 * (t.w_pp + t.w_mm + t.q);
  t.lambda_minus = 0.5 * (t.w_pp + t.w_mm - t.q);
  t.log_scale = cw.log_scale;
  return t;
}

bool x_pattern(int i, int j) {
  return (i == j && i >= 1 && i <= 4) || (i == 2 && j == 3) ||
         (i == 3 && j == 2);
}

cplx element_value(const ClassWeights &cw, int cls, int i, int j) {
  if (i == 1 && j == 1)
    return cw.e[cls][0];
  if (i == 4 && j == 4)
    return cw.e[cls][3];
  if ((i == 2 && j == 2) || (i == 3 && j == 3))
    return 0.5 * (cw.e[cls][1] + cw.e[cls][2]);
  if (i == 2 && j == 3)
    return cw.a * cw.g[cls];
  if (i == 3 && j == 2)
    return std::conj(cw.a) * cw.g[cls];
  throw std::invalid_argument("element (" + std::to_string(i) + ", " +
                              std::to_string(j) +
                              ") lies outside the X pattern");
}

int cls_from_pair(int s, int t) { return (s == t) ? (s == 0 ? 0 : 2) : 1; }

} // namespace

ThermalState make_x_state(double r11, double r22, double r33, double r44,
                          cplx r23, cplx r14) {
  ThermalState st;
  st.rho[0][0] = r11;
  st.rho[1][1] = r22;
  st.rho[2][2] = r33;
  st.rho[3][3] = r44;
  st.rho[1][2] = r23;
  st.rho[2][1] = std::conj(r23);
  st.rho[0][3] = r14;
  st.rho[3][0] = std::conj(r14);
  return st;
}

double log_boltzmann_weight(const ModelParams &p, const IsingPair &pair) {
  p.validate_thermal();
  const auto s = block_spectrum(p, pair);
  const double beta = p.beta();
  std::array<double, 4> terms;
  for (int k = 0; k < 4; ++k)
    terms[k] = -beta * s.lambdas[k];
  return log_sum_exp(terms);
}

double boltzmann_weight(const ModelParams &p, const IsingPair &pair) {
  return std::exp(log_boltzmann_weight(p, pair));
}

TransferMatrix transfer_matrix(const ModelParams &p) {
  return transfer_from(class_weights(p));
}

double log_partition_function(const ModelParams &p, long n_blocks) {
  if (n_blocks < 1)
    throw std::invalid_argument("n_blocks must be >= 1");
  const TransferMatrix t = transfer_matrix(p);
  const double r = t.lambda_minus / t.lambda_plus;
  const double n = static_cast<double>(n_blocks);
  return n * (std::log(t.lambda_plus) + t.log_scale) +
         std::log1p(std::pow(r, n));
}

ElementMatrix element_matrix(const ModelParams &p, int i, int j) {
  if (!x_pattern(i, j))
    throw std::invalid_argument("element (" + std::to_string(i) + ", " +
                                std::to_string(j) +
                                ") lies outside the X pattern");
  const auto cw = class_weights(p);
  ElementMatrix em;
  em.log_scale = cw.log_scale;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      em.p[s][t] = element_value(cw, cls_from_pair(s, t), i, j);
  return em;
}

ThermalState thermal_state(const ModelParams &p) {
  const auto cw = class_weights(p);
  const TransferMatrix t = transfer_from(cw);
  const double u = t.w_pp - t.w_mm;
  // weights of the Perron eigenvector projector, shift-free
  const double c_mean = 0.5;
  const double c_diff = u / (2.0 * t.q);
  const double c_off = 2.0 * t.w_pm / t.q;

  auto combine = [&](int i, int j) {
    const cplx ppp = element_value(cw, 0, i, j);
    const cplx ppm = element_value(cw, 1, i, j);
    const cplx pmm = element_value(cw, 2, i, j);
    return (c_mean * (ppp + pmm) + c_off * ppm + c_diff * (ppp - pmm)) /
           t.lambda_plus;
  };

  ThermalState st;
  st.rho[0][0] = cplx(combine(1, 1).real(), 0.0);
  const double r22 = combine(2, 2).real();
  st.rho[1][1] = cplx(r22, 0.0);
  st.rho[2][2] = cplx(r22, 0.0); // equal to (2,2) by construction
  st.rho[3][3] = cplx(combine(4, 4).real(), 0.0);
  st.rho[1][2] = combine(2, 3);
  st.rho[2][1] = std::conj(st.rho[1][2]);
  return st;
}

FiniteChainResult finite_chain_oracle(const ModelParams &p, int n_blocks) {
  if (n_blocks < 1 || n_blocks > 14)
    throw std::invalid_argument("n_blocks must be in [1, 14]");
  const auto cw = class_weights(p);
  const int n = n_blocks;
  const std::size_t m_count = std::size_t{1} << n;

  // bit k set -> node spin k is +1/2
  auto cls_of = [&](std::size_t m, int k) {
    const int s1 = (m >> k) & 1u;
    const int s2 = (m >> ((k + 1) % n)) & 1u;
    return (s1 == s2) ? (s1 ? 0 : 2) : 1;
  };

  std::vector<double> log_prod(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    double s = 0;
    for (int k = 0; k < n; ++k)
      s += cw.log_w[cls_of(m, k)];
    log_prod[m] = s;
  }
  const double lz = log_sum_exp(log_prod);

  // normalized dimer elements (11, 22, 44, |23|-magnitude) at bond r,
  // each numerator accumulated in the log domain
  auto elements_at = [&](int r) {
    std::vector<double> t11, t22, t44, t23;
    t11.reserve(m_count);
    t22.reserve(m_count);
    t44.reserve(m_count);
    t23.reserve(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
      if (log_prod[m] == -kInf)
        continue;
      const int c = cls_of(m, r);
      const double base = log_prod[m] - cw.log_w[c];
      t11.push_back(base + cw.log_e[c][0]);
      t22.push_back(base + log_sum_exp(cw.log_e[c][1], cw.log_e[c][2]) -
                    std::log(2.0));
      t44.push_back(base + cw.log_e[c][3]);
      t23.push_back(base + cw.log_mg[c]);
    }
    std::array<double, 4> out{};
    out[0] = std::exp(log_sum_exp(t11) - lz);
    out[1] = std::exp(log_sum_exp(t22) - lz);
    out[2] = std::exp(log_sum_exp(t44) - lz);
    out[3] = std::exp(log_sum_exp(t23) - lz); // magnitude of (2,3)
    return out;
  };

  const auto e0 = elements_at(0);
  if (n >= 2) {
    const auto e1 = elements_at(n / 2);
    for (int k = 0; k < 4; ++k)
      if (std::abs(e0[k] - e1[k]) > 1e-12)
        throw std::runtime_error(
            "internal: dimer elements depend on the unit position");
  }

  // independent transfer-matrix power path on the same shifted scale
  using M2 = std::array<std::array<double, 2>, 2>;
  auto mul = [](const M2 &a, const M2 &b) {
    M2 c{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
  };
  const M2 w{{{cw.w[0], cw.w[1]}, {cw.w[1], cw.w[2]}}};
  M2 wpow{{{1, 0}, {0, 1}}}; // W^(n-1)
  for (int k = 0; k < n - 1; ++k)
    wpow = mul(wpow, w);
  const M2 wn = mul(wpow, w);
  const double z_tm = wn[0][0] + wn[1][1];
  const double lz_tm = std::log(z_tm);
  if (std::abs(lz - lz_tm) > 1e-12 * std::max(1.0, std::abs(lz)))
    throw std::runtime_error(
        "internal: enumeration and transfer-matrix log Z disagree");

  auto tm_element = [&](int i, int j) {
    double num = 0;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        num += element_value(cw, cls_from_pair(s, t), i, j).real() *
               wpow[t][s];
    return num / z_tm;
  };
  // the (2,3) element needs the magnitude without the phase factor
  auto tm_offdiag_mag = [&]() {
    double num = 0;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        num += -cw.g[cls_from_pair(s, t)] * wpow[t][s];
    return num / z_tm;
  };
  const double chk[4] = {tm_element(1, 1), tm_element(2, 2), tm_element(4, 4),
                         tm_offdiag_mag()};
  for (int k = 0; k < 4; ++k)
    if (std::abs(chk[k] - e0[k]) > 1e-12)
      throw std::runtime_error(
          "internal: enumeration and transfer-matrix elements disagree");

  FiniteChainResult out;
  out.log_z = n * cw.log_scale + lz;
  out.state = make_x_state(e0[0], e0[1], e0[1], e0[2], -cw.a * e0[3]);
  return out;
}

} // namespace diamond
