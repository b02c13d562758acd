#pragma once

#include "diamond/common.hpp"
#include "diamond/transfer.hpp"

namespace diamond {

// Pauli expectation data of a two-qubit X state after a local z rotation
// on the first qubit has made the inner off-diagonal real and >= 0.
// All quantities are bare Pauli traces: x[i] = <sigma_i x 1>,
// y[i] = <1 x sigma_i>, tmat[i][j] = <sigma_i x sigma_j>, c = diag(tmat).
struct BlochForm {
  Vec3 x{};
  Vec3 y{};
  Mat3 tmat{};
  Vec3 c{};
  double phase = 0; // rotation angle that was removed
};

struct MinResult {
  double n1 = 0;
  double n2 = 0;
  // true when the first-qubit marginal is maximally mixed, so every
  // measurement direction attains the quoted values
  bool maximizer_degenerate = false;
};

enum class MinNorm { trace, hilbert_schmidt };

// threshold on |<sigma_z x 1>| (and on |x| generally) below which the
// marginal counts as degenerate
inline constexpr double kDegenerateTol = 1e-12;

// rejects input whose matrix is not Hermitian with the X sparsity pattern
BlochForm bloch_decompose(const ThermalState &st);

// correlation-based closed forms; trace-norm variant requires a diagonal
// correlation matrix and throws otherwise
double min_hilbert_schmidt(const BlochForm &b);
double min_trace(const BlochForm &b);

// fast path for X states: both indices at once
MinResult min_xstate(const ThermalState &st);

// direct maximization over measurement directions. Non-degenerate
// marginal pins the direction; degenerate marginal searches a
// theta x phi grid (resolution >= 64) plus local refinement.
double min_bruteforce(const ThermalState &st, MinNorm norm,
                      int grid_resolution = 256, Exec exec = Exec::parallel);

} // namespace diamond
