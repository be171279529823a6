#pragma once

#include <array>

#include "pulsent/linalg.hpp"

namespace pulsent {

/// The three Pauli matrices plus the 2x2 identity. A basis other than the
/// standard one can be built to exercise commutator_check.
struct PauliBasis {
  ComplexMatrix sigma_x;
  ComplexMatrix sigma_y;
  ComplexMatrix sigma_z;
  ComplexMatrix identity;

  static const PauliBasis& standard();

  /// sigma_x, sigma_y, sigma_z in index order 0, 1, 2.
  std::array<const ComplexMatrix*, 3> sigmas() const noexcept {
    return {&sigma_x, &sigma_y, &sigma_z};
  }
};

/// Shorthand for PauliBasis::standard().sigmas()[k].
const ComplexMatrix& pauli(int k);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff the basis satisfies the spin-1/2 algebra within 1e-12:
/// [s_j, s_k] = 2i eps_jkl s_l, s_k^2 = I, and, with S+- = (s_x +- i s_y)/2 and
/// S_z = s_z/2, [S+, S-] = 2 S_z and [S_z, S+-] = +-S+-.
bool commutator_check(const PauliBasis& basis = PauliBasis::standard());

}  // namespace pulsent
