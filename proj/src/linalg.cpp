#include "pulsent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pulsent/error.hpp"

namespace pulsent {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "square matrix required");
  }
}

// Cyclic Jacobi for a dense real symmetric matrix stored row-major.
// Returns the diagonal after convergence (unsorted).
std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

  double scale = 0.0;
  for (double v : a) scale += v * v;
  const double threshold = 1e-13 * std::max(1.0, std::sqrt(scale));

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    if (std::sqrt(off) < threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Symmetric Schur rotation zeroing a_pq.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return diag;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "entry count " + std::to_string(entries_.size()) + " does not match " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = std::conj((*this)(r, c));
  return ComplexMatrix(cols_, rows_, std::move(e));
}

ComplexMatrix ComplexMatrix::transpose() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
  return ComplexMatrix(cols_, rows_, std::move(e));
}

Complex ComplexMatrix::trace() const {
  require_square(*this);
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  require_square(*this);
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

double ComplexMatrix::norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  std::vector<Complex> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
  return ComplexMatrix(a.rows_, a.cols_, std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  std::vector<Complex> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
  return ComplexMatrix(a.rows_, a.cols_, std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ in product");
  }
  std::vector<Complex> e(a.rows_ * b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) e[r * b.cols_ + c] += ark * b(k, c);
    }
  return ComplexMatrix(a.rows_, b.cols_, std::move(e));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  std::vector<Complex> e(m.entries_);
  for (Complex& z : e) z *= s;
  return ComplexMatrix(m.rows_, m.cols_, std::move(e));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> e(rows * cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          e[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = a(ar, ac) * b(br, bc);
  return ComplexMatrix(rows, cols, std::move(e));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double operator_norm(const ComplexMatrix& m) {
  const auto spectrum = hermitian_spectrum(m.adjoint() * m);
  return std::sqrt(std::max(0.0, spectrum.back()));
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  const std::size_t n2 = 2 * n;
  std::vector<double> embed(n2 * n2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrize so round-off asymmetry in the input cannot stall Jacobi.
      const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
      embed[r * n2 + c] = z.real();
      embed[r * n2 + c + n] = -z.imag();
      embed[(r + n) * n2 + c] = z.imag();
      embed[(r + n) * n2 + c + n] = z.real();
    }
  }
  auto doubled = jacobi_symmetric(std::move(embed), n2);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "hermitian_eigenvalues expects a 4x4 matrix");
  }
  const double defect = m.hermiticity_defect();
  if (defect > 1e-10) {
    throw Error(ErrorCode::NonHermitianInput,
                "Hermiticity defect " + std::to_string(defect) + " exceeds 1e-10");
  }
  const auto spectrum = hermitian_spectrum(m);
  return {spectrum[0], spectrum[1], spectrum[2], spectrum[3]};
}

Mat3 identity3() noexcept { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 transpose(const Mat3& m) noexcept {
  Mat3 t{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t[c][r] = m[r][c];
  return t;
}

Mat3 multiply(const Mat3& a, const Mat3& b) noexcept {
  Mat3 p{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) p[r][c] += a[r][k] * b[k][c];
  return p;
}

double determinant(const Mat3& m) noexcept {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double max_abs_diff(const Mat3& a, const Mat3& b) noexcept {
  double worst = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
  return worst;
}

Mat3 rotation_matrix(const Vec3& n, double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double v = 1.0 - c;
  return Mat3{{
      {c + v * n[0] * n[0], -s * n[2] + v * n[0] * n[1], s * n[1] + v * n[0] * n[2]},
      {s * n[2] + v * n[1] * n[0], c + v * n[1] * n[1], -s * n[0] + v * n[1] * n[2]},
      {-s * n[1] + v * n[2] * n[0], s * n[0] + v * n[2] * n[1], c + v * n[2] * n[2]},
  }};
}

}  // namespace pulsent
