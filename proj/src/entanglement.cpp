#include "pulsent/entanglement.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pulsent/error.hpp"

namespace pulsent {

namespace {
constexpr double kPhysicalFloor = -1e-10;
constexpr double kClamp = 1e-12;
}  // namespace

ComplexMatrix partial_transpose_b(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "partial transpose expects a 4x4 matrix");
  }
  std::vector<Complex> e(16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) e[(2 * i + l) * 4 + (2 * k + j)] = rho(2 * i + j, 2 * k + l);
  return ComplexMatrix(4, 4, std::move(e));
}

NegativityResult negativity(const ComplexMatrix& rho, double imag_residue) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "negativity expects a 4x4 density matrix");
  }
  const double defect = rho.hermiticity_defect();
  if (defect > 1e-10) {
    throw Error(ErrorCode::NonHermitianInput, "Hermiticity defect " + std::to_string(defect));
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    throw Error(ErrorCode::TraceNotOne, "trace = " + std::to_string(tr.real()));
  }

  NegativityResult out;
  out.imag_residue = imag_residue;
  out.eigenvalues = hermitian_eigenvalues(partial_transpose_b(rho));
  double abs_sum = 0.0;
  for (double mu : out.eigenvalues) abs_sum += std::abs(mu);
  out.raw_value = abs_sum - 1.0;
  out.value = out.raw_value < kClamp ? 0.0 : out.raw_value;
  return out;
}

double min_eigenvalue(const ComplexMatrix& rho) { return hermitian_spectrum(rho).front(); }

bool is_physical(const ComplexMatrix& rho) { return min_eigenvalue(rho) >= kPhysicalFloor; }

std::string_view to_string(Separability s) noexcept {
  switch (s) {
    case Separability::Entangled: return "entangled";
    case Separability::Separable: return "separable";
    case Separability::Unphysical: return "unphysical";
  }
  return "?";
}

Separability classify_werner(double x) {
  const ComplexMatrix rho = assemble_density(InitialState::werner(x).correlations());
  if (!is_physical(rho)) return Separability::Unphysical;
  return negativity(rho).value > kClamp ? Separability::Entangled : Separability::Separable;
}

}  // namespace pulsent
