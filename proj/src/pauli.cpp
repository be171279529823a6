#include "pulsent/pauli.hpp"

namespace pulsent {

const PauliBasis& PauliBasis::standard() {
  static const PauliBasis basis{
      ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, 2, {0.0, -kI, kI, 0.0}),
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
      ComplexMatrix::identity(2),
  };
  return basis;
}

const ComplexMatrix& pauli(int k) { return *PauliBasis::standard().sigmas().at(k); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

bool commutator_check(const PauliBasis& basis) {
  constexpr double kTol = 1e-12;
  const auto s = basis.sigmas();
  const ComplexMatrix& id = basis.identity;

  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    if (max_abs_diff(commutator(*s[j], *s[k]), 2.0 * kI * *s[l]) > kTol) return false;
    if (max_abs_diff((*s[j]) * (*s[j]), id) > kTol) return false;
  }

  const ComplexMatrix s_plus = Complex{0.5} * (*s[0] + kI * *s[1]);
  const ComplexMatrix s_minus = Complex{0.5} * (*s[0] - kI * *s[1]);
  const ComplexMatrix s_z = Complex{0.5} * *s[2];
  if (max_abs_diff(commutator(s_plus, s_minus), 2.0 * s_z) > kTol) return false;
  if (max_abs_diff(commutator(s_z, s_plus), s_plus) > kTol) return false;
  if (max_abs_diff(commutator(s_z, s_minus), Complex{-1.0} * s_minus) > kTol) return false;
  return true;
}

}  // namespace pulsent
