#pragma once

#include "diamond/common.hpp"
#include "diamond/numeric.hpp"

#include <array>

namespace diamond {

// couplings and thermal state point for one decorated unit:
// J / delta  XY / Ising anisotropy on the dimer bond
// D          z-axis antisymmetric exchange on the dimer bond
// J1         dimer-to-node Ising coupling
// h          uniform longitudinal field
// T          temperature (used by the thermal layer only, must be > 0 there)
struct ModelParams {
  double J = 1.0;
  double J1 = 1.0;
  double delta = 1.0;
  double D = 0.0;
  double h = 1.0;
  double T = 0.2;

  double beta() const { return 1.0 / T; }
  void validate_couplings() const; // throws std::invalid_argument
  void validate_thermal() const;   // couplings + "T must be > 0"
};

// the two classical node spins flanking one dimer, each +1/2 or -1/2
struct IsingPair {
  double mu_i = 0.5;
  double mu_ip1 = 0.5;

  double sum() const { return mu_i + mu_ip1; }
  void validate() const;

  static constexpr IsingPair up_up() { return {0.5, 0.5}; }
  static constexpr IsingPair up_down() { return {0.5, -0.5}; }
  static constexpr IsingPair down_up() { return {-0.5, 0.5}; }
  static constexpr IsingPair down_down() { return {-0.5, -0.5}; }
};

// closed-form eigensystem of one dimer block at fixed node pair.
// Level order is by role, not by value:
//   [0] both dimer spins up, [1] lower XY combination,
//   [2] upper XY combination, [3] both dimer spins down.
// `a` is the unimodular phase entering the XY eigenvectors; when the
// XY sector is trivial (J = D = 0) it is fixed to 1 and flagged.
struct BlockSpectrum {
  std::array<double, 4> lambdas{};
  double eta = 0.0; // sqrt(J^2 + D^2)
  cplx a{1.0, 0.0};
  bool a_degenerate = false;
  std::array<Vec4, 4> vectors{}; // vectors[k][b], basis {00,01,10,11}
};

// dimer-block Hamiltonian in the basis {|00>,|01>,|10>,|11>},
// first index = spin a, |0> = up. Node spins enter as c-numbers.
Mat4 block_hamiltonian(const ModelParams &p, const IsingPair &pair);

BlockSpectrum block_spectrum(const ModelParams &p, const IsingPair &pair);

// same spectrum via dense diagonalization of block_hamiltonian;
// lambdas come back ascending (compare as multisets), vectors are the
// numeric eigenvectors. Independent check of the closed form.
BlockSpectrum spectrum_oracle(const ModelParams &p, const IsingPair &pair);

} // namespace diamond
