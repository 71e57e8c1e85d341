#pragma once

#include <functional>

#include "eqbm/gradients.hpp"
#include "eqbm/info_matrix.hpp"

namespace eqbm {

// Independent ground-truth computations kept deliberately separate from the
// production formulas they validate.

enum class DivKind { relent, neg2_ln_fid, neg2_ln_holevo };

/// Uhlmann fidelity ||sqrt(omega) sqrt(tau)||_1^2, computed from the singular
/// values of sqrt(omega) sqrt(tau).
double uhlmann_fidelity(const Mat& omega, const Mat& tau);

/// Holevo fidelity (Tr[sqrt(omega) sqrt(tau)])^2.
double holevo_fidelity(const Mat& omega, const Mat& tau);

/// Faithful divergence between positive-definite density matrices:
/// relative entropy, -2 ln(Uhlmann), or -2 ln(Holevo).
double divergence(DivKind kind, const Mat& omega, const Mat& tau);

/// Spectral-weight route: sandwiches the state derivatives in the eigenbasis
/// of omega and applies the kind-specific weight
///   fb: 2/(l_k + l_l),  wy: 4/(sqrt(l_k) + sqrt(l_l))^2,
///   km: (ln l_k - ln l_l)/(l_k - l_l) with the limit 1/l on degenerate pairs.
InfoMatrix spectral_info(const EqbmState& s, InfoKind kind);

/// Finite-difference route: second-order central mixed differences of the
/// defining divergence, with the prefactors 2 (fb), 2 (wy), 1 (km).
/// Requires h in [1e-4, 1e-2].
InfoMatrix hessian_info(const ParamHamiltonian& model_g, const ParamHamiltonian& model_h,
                        const RVec& theta, const RVec& phi, InfoKind kind, double h);

/// Pure-state family gamma -> unit vector.
using PureFamily = std::function<CVec(const RVec&)>;

/// 4 Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>] with vector
/// derivatives by central differences of step h. Throws on non-unit vectors.
RMat pure_fb(const PureFamily& family, const RVec& gamma, double h = 1e-6);

/// Canonically purified family of the resolved state and its analytic
/// parameter derivatives.
CVec purified_state(const EqbmState& s);
CVec purified_derivative(const EqbmState& s, Coord which);

/// Pure-state formula on the purified family using the analytic derivatives;
/// returns a matrix in the stacked [theta..., phi...] layout.
InfoMatrix purified_fb_analytic(const EqbmState& s);

}  // namespace eqbm
