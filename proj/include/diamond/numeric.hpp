#pragma once

#include "diamond/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace diamond {

// uniform draws mapped from raw engine words, so sequences are identical
// across standard libraries for a given seed
inline double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

template <std::size_t N> struct Eigh {
  std::array<double, N> values{}; // ascending
  CMat<N> vectors{};              // vectors[k] = eigenvector for values[k]
};

namespace detail {

// one cyclic Jacobi sweep target: zero a[p][q] with a complex rotation.
// Returns false if the pivot is already negligible.
template <std::size_t N>
bool jacobi_rotate(CMat<N> &a, CMat<N> *v, std::size_t p, std::size_t q) {
  const cplx apq = a[p][q];
  const double b = std::abs(apq);
  if (b < 1e-300)
    return false;
  const cplx phase = apq / b; // e^{i phi}
  const double app = a[p][p].real();
  const double aqq = a[q][q].real();
  const double tau = (app - aqq) / (2.0 * b);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 1.0 / (2.0 * tau);
  } else {
    t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  for (std::size_t k = 0; k < N; ++k) {
    if (k == p || k == q)
      continue;
    const cplx akp = a[k][p];
    const cplx akq = a[k][q];
    a[k][p] = c * akp + s * std::conj(phase) * akq;
    a[k][q] = -s * phase * akp + c * akq;
    a[p][k] = std::conj(a[k][p]);
    a[q][k] = std::conj(a[k][q]);
  }
  const double shift = 2.0 * c * s * b;
  a[p][p] = cplx(c * c * app + s * s * aqq + shift, 0.0);
  a[q][q] = cplx(s * s * app + c * c * aqq - shift, 0.0);
  a[p][q] = cplx(0.0, 0.0);
  a[q][p] = cplx(0.0, 0.0);

  if (v) {
    for (std::size_t k = 0; k < N; ++k) {
      const cplx vkp = (*v)[k][p];
      const cplx vkq = (*v)[k][q];
      (*v)[k][p] = c * vkp + s * std::conj(phase) * vkq;
      (*v)[k][q] = -s * phase * vkp + c * vkq;
    }
  }
  return true;
}

template <std::size_t N> double off_norm2(const CMat<N> &a) {
  double s = 0;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q)
      s += std::norm(a[p][q]);
  return s;
}

} // namespace detail

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Input is read as Hermitian: only the upper triangle and real diagonal
// parts are trusted. Eigenvalues come back ascending.
template <std::size_t N>
Eigh<N> jacobi_eigh(CMat<N> a, bool want_vectors = true) {
  for (std::size_t i = 0; i < N; ++i) {
    a[i][i] = cplx(a[i][i].real(), 0.0);
    for (std::size_t j = i + 1; j < N; ++j)
      a[j][i] = std::conj(a[i][j]);
  }

  CMat<N> v{};
  if (want_vectors)
    for (std::size_t i = 0; i < N; ++i)
      v[i][i] = cplx(1.0, 0.0);

  double scale = 0;
  for (std::size_t i = 0; i < N; ++i)
    scale = std::max(scale, std::abs(a[i][i].real()));
  scale = std::max(scale, std::sqrt(detail::off_norm2(a)));
  const double stop = std::max(scale * scale * 1e-32, 1e-280);

  for (int sweep = 0; sweep < 60; ++sweep) {
    if (detail::off_norm2(a) <= stop)
      break;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q)
        detail::jacobi_rotate(a, want_vectors ? &v : nullptr, p, q);
  }

  Eigh<N> out;
  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::array<double, N> d{};
  for (std::size_t i = 0; i < N; ++i)
    d[i] = a[i][i].real();
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = d[order[k]];
    if (want_vectors)
      for (std::size_t i = 0; i < N; ++i)
        out.vectors[k][i] = v[i][order[k]];
  }
  return out;
}

// sum of |eigenvalues| of a Hermitian matrix
template <std::size_t N> double trace_norm_hermitian(const CMat<N> &a) {
  const auto e = jacobi_eigh<N>(a, false);
  double s = 0;
  for (double x : e.values)
    s += std::abs(x);
  return s;
}

// log(sum exp(x_i)) with max shift and compensated summation;
// empty or all -inf gives -inf
inline double log_sum_exp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs)
    m = std::max(m, x);
  if (!std::isfinite(m))
    return m;
  double s = 0, comp = 0;
  for (double x : xs) {
    const double term = std::exp(x - m) - comp;
    const double next = s + term;
    comp = (next - s) - term;
    s = next;
  }
  return m + std::log(s);
}

inline double log_sum_exp(double a, double b) {
  if (a < b)
    std::swap(a, b);
  if (!std::isfinite(a))
    return a;
  return a + std::log1p(std::exp(b - a));
}

// root of f on [lo, hi]; requires a sign change on the bracket
template <class F>
double bisect(F &&f, double lo, double hi, double xtol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0)
    return lo;
  if (fhi == 0)
    return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break; // interval at floating-point resolution
    const double fm = f(mid);
    if (fm == 0)
      return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// location of a maximum of a unimodal f on [lo, hi]
template <class F>
double golden_section_max(F &&f, double lo, double hi, double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > xtol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

// parabola through three uniformly spaced samples; returns abscissa of the
// vertex, clamped to [x0, x2]. Used to sharpen grid argmax estimates.
inline double parabolic_peak(double x0, double dx, double y0, double y1,
                             double y2) {
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom == 0 || !(std::abs(denom) > 0))
    return x0 + dx;
  double off = 0.5 * (y0 - y2) / denom;
  off = std::clamp(off, -1.0, 1.0);
  return x0 + dx * (1.0 + off);
}

} // namespace diamond
