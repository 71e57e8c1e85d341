#pragma once

#include <functional>

#include "eqbm/pauli.hpp"

namespace eqbm {

// Central tolerance constants; downstream tolerances derive from these.
inline constexpr double kHermTol = 1e-12;   // relative asymmetry accepted by eigh
inline constexpr double kReconTol = 1e-10;  // eigendecomposition residual bound

double max_abs(const Mat& m);

struct EigSystem {
  RVec values;  // ascending
  Mat vectors;  // unitary; column k is the eigenvector of values[k]

  int dim() const { return static_cast<int>(values.size()); }
};

/// Hermitian eigendecomposition. Rejects inputs whose asymmetry exceeds
/// kHermTol relative to the matrix scale, and verifies the EigSystem
/// invariants (reconstruction and unitarity within kReconTol).
EigSystem eigh(const Mat& a);

/// V diag(f(w)) V^dagger. Throws std::domain_error naming the offending
/// eigenvalue if f is non-finite there.
Mat func_of_hermitian(const EigSystem& e, const std::function<cxd(double)>& f);
Mat func_of_hermitian(const Mat& a, const std::function<cxd(double)>& f);

struct ThermalState {
  Mat rho;
  double z = 0;
  double ln_z = 0;
};

/// Gibbs state of a Hermitian generator: rho = e^{-G}/Z with
/// lnZ computed by log-sum-exp over the spectrum.
ThermalState thermal(const EigSystem& eig_g);
ThermalState thermal(const Mat& g);

Mat comm(const Mat& a, const Mat& b);
Mat anticomm(const Mat& a, const Mat& b);

/// Re Tr[obs rho]; asserts the imaginary residue is below `imag_tol`.
double expect_real(const Mat& obs, const Mat& rho, double imag_tol = 1e-10);

/// Tr[a b]
cxd trace_prod(const Mat& a, const Mat& b);

/// Takes the real part of z, checking |Im z| <= tol against the given label.
double real_checked(cxd z, double tol, const char* label);

}  // namespace eqbm
