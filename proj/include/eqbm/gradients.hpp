#pragma once

#include "eqbm/state.hpp"

namespace eqbm {

/// Index into the stacked parameter vector gamma = (theta_1..theta_J, phi_1..phi_K).
struct Coord {
  bool wrt_theta = true;
  int index = 0;

  static Coord theta(int j) { return {true, j}; }
  static Coord phi(int k) { return {false, k}; }
};

struct GradVector {
  RVec d_theta;
  RVec d_phi;

  int size() const { return static_cast<int>(d_theta.size() + d_phi.size()); }
  double norm() const;
  RVec stacked() const;
  double at(Coord c) const { return c.wrt_theta ? d_theta[c.index] : d_phi[c.index]; }
};

/// Partial derivative of omega(theta, phi) in the given coordinate:
/// traceless Hermitian matrix.
Mat d_omega(const EqbmState& s, Coord which);

/// Tr[O omega]
double gsee_value(const EqbmState& s, const Mat& obs);

/// Gradient of Tr[O omega] over (theta, phi).
GradVector gsee_grad(const EqbmState& s, const Mat& obs);

/// Positive-definite target state for generative modeling, with the entropy
/// term Tr[eta ln eta] cached.
struct GenModTarget {
  Mat eta;
  double eta_entropy = 0;

  /// Validates trace one and min eigenvalue > 1e-12; throws std::domain_error
  /// otherwise.
  static GenModTarget from_density(const Mat& eta);
};

/// Relative entropy D(eta || omega(theta, phi)), evaluated through the
/// convex decomposition Tr[eta ln eta] + Tr[G(theta) eta(phi)] + lnZ(theta)
/// with eta(phi) = e^{iH(phi)} eta e^{-iH(phi)}.
double relent_value(const EqbmState& s, const GenModTarget& target);

/// Gradient of the relative entropy over (theta, phi).
GradVector genmod_grad(const EqbmState& s, const GenModTarget& target);

}  // namespace eqbm
