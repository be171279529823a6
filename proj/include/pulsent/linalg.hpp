#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pulsent {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;
using CVec3 = std::array<Complex, 3>;

/// Dense row-major complex matrix. Values are immutable once built; every
/// operation returns a new matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// Largest |m_ij - conj(m_ji)|; requires a square matrix.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  /// Frobenius norm.
  double norm() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectral norm bound used for operator comparisons of small matrices:
/// the largest singular value, computed from the eigenvalues of d^dag d.
double operator_norm(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
/// symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is the input
/// spectrum with every eigenvalue doubled.
std::vector<double> hermitian_spectrum(const ComplexMatrix& m);

/// 4x4 entry point used by the entanglement code. Throws NonHermitianInput
/// when the Hermiticity defect exceeds 1e-10.
std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix& m);

// Small real 3x3 helpers.
Mat3 identity3() noexcept;
Mat3 transpose(const Mat3& m) noexcept;
Mat3 multiply(const Mat3& a, const Mat3& b) noexcept;
double determinant(const Mat3& m) noexcept;
double max_abs_diff(const Mat3& a, const Mat3& b) noexcept;

/// Rotation by `angle` about `unit_axis` (right-handed, Rodrigues form):
/// R = cos I + sin [n]x + (1 - cos) n n^T.
Mat3 rotation_matrix(const Vec3& unit_axis, double angle) noexcept;

}  // namespace pulsent
