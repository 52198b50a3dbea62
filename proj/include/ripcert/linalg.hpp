#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ripcert {

class DenseMatrix;

/// Real symmetric matrix. Only the upper triangle is stored (packed, row by
/// row), so symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix ones(std::size_t dim);
  /// Throws InvalidInput unless `full` is square and exactly symmetric.
  static SymMatrix from_dense(const DenseMatrix& full);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) noexcept { data_[index(i, j)] = v; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  DenseMatrix to_dense() const;

  SymMatrix& operator*=(double s) noexcept;
  SymMatrix& operator+=(const SymMatrix& other);

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i + 1) / 2 + j;
  }

  std::size_t dim_;
  std::vector<double> data_;
};

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<double> entries() noexcept { return data_; }

  bool all_finite() const noexcept;
  double max_abs() const noexcept;
  DenseMatrix transpose() const;

  /// Columns `cols` of this matrix, in the given order.
  DenseMatrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// mᵀm as a symmetric matrix. Entry (i, j) is the dot product of columns i
/// and j accumulated in row order, so any principal submatrix equals the
/// Gram matrix of the corresponding columns bit for bit.
SymMatrix gram(const DenseMatrix& m);

enum class EigenMethod {
  automatic,    ///< Jacobi up to kJacobiMaxDim, tridiagonal QR above.
  jacobi,       ///< Cyclic Jacobi rotations.
  tridiagonal,  ///< Householder reduction plus implicit QR (Eigen).
};

inline constexpr std::size_t kJacobiMaxDim = 64;
inline constexpr double kDefaultEigenTol = 1e-12;

struct Spectrum {
  std::vector<double> values;  ///< Descending.
  /// Rigorous-in-spirit bound on |computed - exact| for every eigenvalue:
  /// remaining off-diagonal mass plus accumulated rounding.
  double error_bound = 0.0;
};

Spectrum sym_spectrum(const SymMatrix& m, double tol = kDefaultEigenTol,
                      EigenMethod method = EigenMethod::automatic);

/// Eigenvalues λ₁ ≥ … ≥ λ_dim. Throws InvalidInput on non-finite entries or tol ≤ 0.
std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol = kDefaultEigenTol,
                                    EigenMethod method = EigenMethod::automatic);

double largest_eigenvalue(const SymMatrix& m);
double spectral_radius(const SymMatrix& m);

/// Largest singular value, √λ₁(mᵀm).
double operator_norm(const DenseMatrix& m);

/// Default PSD threshold for `cholesky`: 1e-10 · max|entry|.
double default_psd_tol(const SymMatrix& b) noexcept;

/// Upper-triangular C with CᵀC = b, or nullopt when a pivot falls below
/// -psd_tol. Pivots in [-psd_tol, 0] are clamped to zero.
std::optional<DenseMatrix> cholesky(const SymMatrix& b, double psd_tol);
std::optional<DenseMatrix> cholesky(const SymMatrix& b);

}  // namespace ripcert
