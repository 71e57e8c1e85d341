#pragma once

#include <string>

#include "eqbm/parallel.hpp"
#include "eqbm/state.hpp"

namespace eqbm {

enum class InfoKind { fb, wy, km };

const char* info_kind_name(InfoKind k);
InfoKind parse_info_kind(const std::string& s);

/// Symmetric (J+K) x (J+K) information matrix in the stacked layout
/// [theta..., phi...]. Positive semidefinite within -1e-8 eigenvalue slack;
/// the phi-theta block is exactly the transpose of the theta-phi block.
struct InfoMatrix {
  InfoKind kind = InfoKind::fb;
  int j_terms = 0;
  int k_terms = 0;
  RMat m;

  int size() const { return j_terms + k_terms; }
  RMat theta_block() const { return m.topLeftCorner(j_terms, j_terms); }
  RMat phi_block() const { return m.bottomRightCorner(k_terms, k_terms); }
  RMat cross_block() const { return m.topRightCorner(j_terms, k_terms); }
};

// Entry-level slack for discarded imaginary residues and for the symmetry /
// positive-semidefiniteness checks run on every constructed matrix.
inline constexpr double kInfoImagTol = 1e-9;
inline constexpr double kInfoPsdSlack = 1e-8;

/// Analytical information matrices of the resolved state, assembled entry by
/// entry from the averaging channels. Entries are independent, so the
/// parallel mode must match the serial reference exactly.
InfoMatrix fb_matrix(const EqbmState& s, RunMode mode = RunMode::parallel);
InfoMatrix wy_matrix(const EqbmState& s, RunMode mode = RunMode::parallel);
InfoMatrix km_matrix(const EqbmState& s, RunMode mode = RunMode::parallel);
InfoMatrix info_matrix(const EqbmState& s, InfoKind kind, RunMode mode = RunMode::parallel);

/// Checks symmetry and the PSD slack; throws std::runtime_error on a
/// genuinely indefinite result.
void validate_info_matrix(const InfoMatrix& im);

}  // namespace eqbm
