#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace diamond {

inline constexpr const char *kVersion = "0.1.0";

using cplx = std::complex<double>;

template <std::size_t N> using CVec = std::array<cplx, N>;
template <std::size_t N> using CMat = std::array<std::array<cplx, N>, N>;

using Vec4 = CVec<4>;
using Mat4 = CMat<4>;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// serial = plain loop, parallel = OpenMP over independent slots.
// Both orders of evaluation write each slot exactly once, so results
// are bitwise identical.
enum class Exec { serial, parallel };

// run f(0..n-1), each index exactly once; f must touch only its own slot
template <class F> void for_each_index(long n, Exec exec, F &&f) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
      f(i);
    return;
  }
#else
  (void)exec;
#endif
  for (long i = 0; i < n; ++i)
    f(i);
}

} // namespace diamond
