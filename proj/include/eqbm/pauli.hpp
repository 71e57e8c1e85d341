#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace eqbm {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// n-qubit Pauli string. Index 0 is the leftmost (most significant) tensor
/// factor, i.e. "XZ" realizes X on qubit 0 and Z on qubit 1.
struct PauliString {
  std::string letters;  // characters in {I, X, Y, Z}

  int n_qubits() const { return static_cast<int>(letters.size()); }
  int weight() const;  // number of non-identity letters
  bool is_identity() const { return weight() == 0; }

  // Two Pauli strings either commute or anticommute; they anticommute iff
  // they differ on an odd number of jointly non-identity sites.
  bool anticommutes_with(const PauliString& other) const;

  // P^T = transpose_sign(P) * P, the sign being (-1)^{#Y}.
  int transpose_sign() const;

  bool operator==(const PauliString&) const = default;
};

/// Validates and wraps a letter string; throws std::invalid_argument on
/// anything outside {I, X, Y, Z} or an empty string.
PauliString parse_pauli(const std::string& s);

/// Dense 2^n x 2^n realization as the Kronecker product of single-qubit
/// Pauli matrices in declared qubit order.
Mat pauli_dense(const PauliString& p);

/// Real linear combination of Pauli strings on a fixed qubit count.
/// `coeffs` holds the stored (initial) coefficient vector; assemble() may be
/// called with any other coefficient vector of matching length.
struct ParamHamiltonian {
  int n_qubits = 0;
  std::vector<PauliString> terms;
  RVec coeffs;

  ParamHamiltonian() = default;
  ParamHamiltonian(int n, std::vector<PauliString> t, RVec c);

  int n_terms() const { return static_cast<int>(terms.size()); }
  int dim() const { return 1 << n_qubits; }
};

/// Sum_j c_j * dense(term_j), Hermitian by construction (real coefficients on
/// Hermitian terms; no symmetrization applied).
Mat assemble(const ParamHamiltonian& h, const RVec& c);
Mat assemble(const ParamHamiltonian& h);

struct RandomModel {
  ParamHamiltonian g;
  ParamHamiltonian h;
  RVec theta0;
  RVec phi0;
};

/// Deterministic test-instance generator. Draws J + K distinct non-identity
/// Pauli strings weighted toward weight-1 and weight-2 terms, initial
/// coefficients uniform in [-coeff_scale, coeff_scale], and guarantees at
/// least one (G_j, H_k) pair with nonzero commutator.
RandomModel random_model(int n_qubits, int j_terms, int k_terms, double coeff_scale,
                         std::uint64_t seed);

}  // namespace eqbm
