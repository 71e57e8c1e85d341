#pragma once

#include <memory>
#include <vector>

#include "eqbm/rng.hpp"

namespace eqbm {

/// High-peak-tent density p(t) = (2/pi) ln|coth(pi t / 2)|: even, log-divergent
/// at t = 0, exponentially decaying tails.
double hpt_density(double t);

/// Characteristic function of p: E[e^{-i dt}] = tanh(d/2)/(d/2), with the
/// removable singularity filled at d = 0.
double hpt_charfun(double gap);

/// Inverse-CDF table of |t| for the half-line (0, kHptTruncation], log-dense
/// near 0 where p diverges. Shared, immutable after construction.
inline constexpr double kHptTruncation = 100.0;

struct HptTable {
  std::vector<double> t_grid;  // ascending, t_grid.front() == 0
  std::vector<double> cdf;     // cdf.front() == 0, cdf.back() == 1

  static const HptTable& shared();

  /// Quantile of |t| for u in [0, 1).
  double quantile(double u) const;

  /// Signed draw using two uniforms from rng (magnitude + sign).
  double draw(Rng& rng) const;
};

/// Single-owner sampler: one per worker, seeds split from a root seed.
class HptSampler {
 public:
  explicit HptSampler(std::uint64_t seed) : rng_(seed), table_(&HptTable::shared()) {}
  static HptSampler stream(std::uint64_t root, std::uint64_t tag) {
    return HptSampler(Rng::stream(root, tag));
  }

  double sample() { return table_->draw(rng_); }
  Rng& rng() { return rng_; }

 private:
  explicit HptSampler(Rng rng) : rng_(rng), table_(&HptTable::shared()) {}
  Rng rng_;
  const HptTable* table_;
};

/// Quadrature for integrals of the form  integral p(t) f(t) dt  over the real
/// line: evaluate f at +/- t[i] and accumulate with weights w[i] (the weights
/// already carry p and the Jacobian; sum_i 2 w[i] == 1).
struct HptQuadrature {
  std::vector<double> t;
  std::vector<double> w;
  static const HptQuadrature& shared();
};

/// Gauss-Legendre nodes/weights for integrals over [0, 1].
struct UnitQuadrature {
  std::vector<double> t;
  std::vector<double> w;
  static const UnitQuadrature& shared();
};

std::vector<double> gauss_legendre_nodes(int n);    // on [-1, 1]
std::vector<double> gauss_legendre_weights(int n);  // matching weights

}  // namespace eqbm
