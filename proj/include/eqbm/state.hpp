#pragma once

#include "eqbm/linalg.hpp"
#include "eqbm/pauli.hpp"

namespace eqbm {

/// Fully resolved point (theta, phi) of the evolved-thermal-state family
/// omega(theta, phi) = e^{-iH(phi)} rho(theta) e^{iH(phi)},
/// rho(theta) = e^{-G(theta)} / Z(theta).
/// Immutable after resolve(); safe to share across threads.
struct EqbmState {
  ParamHamiltonian model_g;
  ParamHamiltonian model_h;
  RVec theta;
  RVec phi;

  Mat g_mat;          // G(theta)
  Mat h_mat;          // H(phi)
  EigSystem eig_g;    // spectrum mu_k, basis |k~>
  EigSystem eig_h;
  Mat rho;
  double z = 0;
  double ln_z = 0;
  Mat evolution;      // U = e^{-iH(phi)}
  Mat omega;          // U rho U^dagger
  Mat sqrt_rho;

  int dim() const { return static_cast<int>(rho.rows()); }
  int n_qubits() const { return model_g.n_qubits; }
  int j_terms() const { return model_g.n_terms(); }
  int k_terms() const { return model_h.n_terms(); }

  Mat sqrt_omega() const;  // U sqrt_rho U^dagger

  /// e^{-i G(theta) t}; set `half` for the generator G(theta)/2.
  Mat evolve_g(double t, bool half = false) const;
  /// e^{-i H(phi) t}
  Mat evolve_h(double t) const;
};

EqbmState resolve(const ParamHamiltonian& model_g, const ParamHamiltonian& model_h,
                  const RVec& theta, const RVec& phi);

/// Spectral factor of the thermal averaging channel: tanh(gap/2)/(gap/2).
double phi_weight(double gap);

/// Spectral factor of the unit-time averaging channel:
/// (1 - e^{-i gap}) / (i gap), conjugated when adjoint is set.
cxd psi_weight(double gap, bool adjoint);

/// Averaging channel over e^{-iG(theta) t} with t drawn from the
/// high-peak-tent density, evaluated in closed spectral form. `half` applies
/// the channel of G(theta)/2.
Mat phi_channel(const EqbmState& s, const Mat& x, bool half = false);

/// Averaging channel over e^{-iH(phi) t} with t uniform on [0, 1]
/// (adjoint = averaging over e^{+iH(phi) t}).
Mat psi_channel(const EqbmState& s, const Mat& x, bool adjoint = false);

/// (sqrt(rho) (x) I)|Gamma> with |Gamma> = sum_k |k>|k>, or the evolved
/// variant (sqrt(omega) (x) I)|Gamma>. Unit norm; the partial trace over the
/// second register reproduces rho (resp. omega).
CVec canonical_purification(const EqbmState& s, bool evolved);

/// Purification of an arbitrary density matrix (used by oracles/tests).
CVec purify(const Mat& density);

/// Trace over the second of two d-dimensional registers.
Mat partial_trace_second(const CVec& psi, int d);

}  // namespace eqbm
