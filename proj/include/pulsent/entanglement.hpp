#pragma once

#include <array>
#include <string_view>

#include "pulsent/evolution.hpp"
#include "pulsent/linalg.hpp"

namespace pulsent {

/// Partial-transpose spectrum and negativity E = sum |mu_i| - 1.
struct NegativityResult {
  std::array<double, 4> eigenvalues{};  // ascending
  double value = 0.0;                   // clamped to 0 below 1e-12
  double raw_value = 0.0;               // before clamping
  double imag_residue = 0.0;            // carried from literal-mode evolution
};

/// Transpose on the second qubit: ((i,j),(k,l)) -> ((i,l),(k,j)).
ComplexMatrix partial_transpose_b(const ComplexMatrix& rho);

/// Throws NonHermitianInput (defect > 1e-10) or TraceNotOne (|tr - 1| > 1e-9).
NegativityResult negativity(const ComplexMatrix& rho, double imag_residue = 0.0);

inline NegativityResult negativity(const EvolvedState& s) {
  return negativity(assemble_density(s.state), s.imag_residue);
}

/// Smallest eigenvalue of rho; negative beyond -1e-10 means unphysical.
double min_eigenvalue(const ComplexMatrix& rho);
bool is_physical(const ComplexMatrix& rho);

enum class Separability { Entangled, Separable, Unphysical };
std::string_view to_string(Separability s) noexcept;

/// Classification of Werner(x) by its computed spectrum and negativity.
Separability classify_werner(double x);

}  // namespace pulsent
