#pragma once

#include "diamond/common.hpp"
#include "diamond/model.hpp"

namespace diamond {

// Symmetric 2x2 transfer matrix over the node-spin pair, stored on a
// shifted scale: true entries are w_* times exp(log_scale), with
// log_scale = -beta * lambda_ref and lambda_ref the global minimum block
// level, so every stored weight lies in (0, 4] and at least one is >= 1.
// Ratios of anything built from one TransferMatrix are shift-free.
struct TransferMatrix {
  double w_pp = 0, w_pm = 0, w_mm = 0; // node pair ++ / +- / --
  double q = 0;                        // sqrt((w_pp-w_mm)^2 + 4 w_pm^2)
  double lambda_plus = 0, lambda_minus = 0;
  double log_scale = 0;
};

// 2x2 matrix of one dimer density-matrix element over the node pair,
// same shifted scale (and the same shift) as TransferMatrix.
// p[s][t]: s,t index the node spins, 0 -> +1/2, 1 -> -1/2.
struct ElementMatrix {
  std::array<std::array<cplx, 2>, 2> p{};
  double log_scale = 0;
};

// reduced two-qubit state of one dimer; X-structured by construction
struct ThermalState {
  Mat4 rho{};

  double trace() const {
    return rho[0][0].real() + rho[1][1].real() + rho[2][2].real() +
           rho[3][3].real();
  }
  cplx rho23() const { return rho[1][2]; }
  double diag(int k) const { return rho[k][k].real(); }
};

// X-shaped two-qubit state from its nonzero entries; no physicality checks
ThermalState make_x_state(double r11, double r22, double r33, double r44,
                          cplx r23, cplx r14 = 0.0);

// log of the 4-level Boltzmann sum at one node pair; never over/underflows
double log_boltzmann_weight(const ModelParams &p, const IsingPair &pair);
// plain value, can overflow for large beta * |lambda|
double boltzmann_weight(const ModelParams &p, const IsingPair &pair);

TransferMatrix transfer_matrix(const ModelParams &p);

// log Z for a periodic chain of n_blocks units (n_blocks >= 1), from the
// transfer-matrix eigenvalues
double log_partition_function(const ModelParams &p, long n_blocks);

// element (i, j) of the unnormalized dimer density matrix, 1-based
// indices restricted to the X pattern {11, 22, 33, 44, 23, 32}
ElementMatrix element_matrix(const ModelParams &p, int i, int j);

// dimer state in the thermodynamic limit
ThermalState thermal_state(const ModelParams &p);

struct FiniteChainResult {
  double log_z = 0;
  ThermalState state;
};

// brute-force periodic chain of n_blocks in [1, 14]: full enumeration of
// the node spins in the log domain, cross-checked internally against the
// transfer-matrix power at 1e-12 and against a second dimer position
FiniteChainResult finite_chain_oracle(const ModelParams &p, int n_blocks);

} // namespace diamond
