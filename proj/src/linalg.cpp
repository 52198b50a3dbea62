#include "ripcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Eigenvalues>

#include "ripcert/error.hpp"

namespace ripcert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NotAViolation: return "NotAViolation";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) throw Error(ErrorKind::InvalidInput, "SymMatrix dimension must be >= 1");
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::ones(std::size_t dim) {
  SymMatrix m(dim);
  std::fill(m.data_.begin(), m.data_.end(), 1.0);
  return m;
}

SymMatrix SymMatrix::from_dense(const DenseMatrix& full) {
  if (full.rows() != full.cols()) throw Error(ErrorKind::InvalidInput, "matrix is not square");
  SymMatrix m(full.rows());
  for (std::size_t i = 0; i < full.rows(); ++i) {
    for (std::size_t j = i; j < full.cols(); ++j) {
      if (full(i, j) != full(j, i)) throw Error(ErrorKind::InvalidInput, "matrix is not symmetric");
      m.set(i, j, full(i, j));
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  return from_dense(DenseMatrix::from_rows(rows));
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const double v = (*this)(i, j);
      s += (i == j ? 1.0 : 2.0) * v * v;
    }
  }
  return std::sqrt(s);
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool SymMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

DenseMatrix SymMatrix::to_dense() const {
  DenseMatrix d(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) d(i, j) = (*this)(i, j);
  return d;
}

SymMatrix& SymMatrix::operator*=(double s) noexcept {
  for (double& v : data_) v *= s;
  return *this;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidInput, "matrix dimensions must be >= 1");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidInput, "matrix dimensions must be >= 1");
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::InvalidInput, "entry count does not match rows*cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::InvalidInput, "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DenseMatrix(r, c, std::move(entries));
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::size_t> cols) const {
  DenseMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw Error(ErrorKind::InvalidInput, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "dimension mismatch in multiply");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

SymMatrix gram(const DenseMatrix& m) {
  SymMatrix g(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, i) * m(r, j);
      g.set(i, j, s);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Eigenvalues

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_eigen_input(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  if (!m.all_finite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

Spectrum jacobi_spectrum(const SymMatrix& m, double tol) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  const double fnorm = m.frobenius_norm();
  const double target = tol * fnorm;
  constexpr int kMaxSweeps = 100;

  int sweeps = 0;
  double off = off_diagonal_norm(a, n);
  while (off >= target && off > 0.0 && sweeps < kMaxSweeps) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a[r * n + p];
          const double h = a[r * n + q];
          const double rp = g - s * (h + g * tau);
          const double rq = h + s * (g - h * tau);
          a[r * n + p] = rp;
          a[p * n + r] = rp;
          a[r * n + q] = rq;
          a[q * n + r] = rq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  Spectrum out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::stable_sort(out.values.begin(), out.values.end(), std::greater<>());
  out.error_bound = off + 8.0 * static_cast<double>((sweeps + 1) * n) * kEps * fnorm;
  return out;
}

Spectrum tridiagonal_spectrum(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidInput, "tridiagonal eigensolver did not converge");

  Spectrum out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::stable_sort(out.values.begin(), out.values.end(), std::greater<>());
  out.error_bound = 16.0 * static_cast<double>(n) * kEps * m.frobenius_norm();
  return out;
}

}  // namespace

Spectrum sym_spectrum(const SymMatrix& m, double tol, EigenMethod method) {
  check_eigen_input(m, tol);
  if (method == EigenMethod::automatic)
    method = m.dim() <= kJacobiMaxDim ? EigenMethod::jacobi : EigenMethod::tridiagonal;
  return method == EigenMethod::jacobi ? jacobi_spectrum(m, tol) : tridiagonal_spectrum(m);
}

std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol, EigenMethod method) {
  return sym_spectrum(m, tol, method).values;
}

double largest_eigenvalue(const SymMatrix& m) { return sym_eigenvalues(m).front(); }

double spectral_radius(const SymMatrix& m) {
  const auto values = sym_eigenvalues(m);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

double operator_norm(const DenseMatrix& m) {
  if (!m.all_finite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
  // Work with the smaller of mᵀm and mmᵀ; both share the nonzero spectrum.
  const SymMatrix g = m.cols() <= m.rows() ? gram(m) : gram(m.transpose());
  return std::sqrt(std::max(0.0, largest_eigenvalue(g)));
}

// ---------------------------------------------------------------------------
// Cholesky

double default_psd_tol(const SymMatrix& b) noexcept { return 1e-10 * b.max_abs(); }

std::optional<DenseMatrix> cholesky(const SymMatrix& b, double psd_tol) {
  if (!(psd_tol >= 0.0)) throw Error(ErrorKind::InvalidInput, "psd_tol must be >= 0");
  if (!b.all_finite()) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");

  const std::size_t n = b.dim();
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double pivot = b(i, i);
    for (std::size_t k = 0; k < i; ++k) pivot -= c(k, i) * c(k, i);
    if (pivot < -psd_tol) return std::nullopt;
    if (pivot <= 0.0) continue;  // clamped: row i stays zero

    const double d = std::sqrt(pivot);
    c(i, i) = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = b(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= c(k, i) * c(k, j);
      c(i, j) = s / d;
    }
  }
  return c;
}

std::optional<DenseMatrix> cholesky(const SymMatrix& b) { return cholesky(b, default_psd_tol(b)); }

}  // namespace ripcert
