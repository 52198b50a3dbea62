#include "ripcert/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ripcert/error.hpp"

namespace ripcert {

SensingMatrix::SensingMatrix(DenseMatrix data) : data_(std::move(data)) {
  if (!data_.all_finite()) throw Error(ErrorKind::InvalidInput, "sensing matrix has non-finite entries");
  unit_columns_ = true;
  for (std::size_t c = 0; c < data_.cols() && unit_columns_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < data_.rows(); ++r) s += data_(r, c) * data_(r, c);
    unit_columns_ = std::abs(std::sqrt(s) - 1.0) <= kUnitColumnTol;
  }
}

SensingMatrix SensingMatrix::normalized() const {
  DenseMatrix out = data_;
  for (std::size_t c = 0; c < out.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < out.rows(); ++r) s += out(r, c) * out(r, c);
    if (s == 0.0) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) *= inv;
  }
  return SensingMatrix(std::move(out));
}

namespace {

void check_order(const SensingMatrix& phi, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "order must be >= 1");
  if (k > phi.rows())
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(k) + " exceeds row count " + std::to_string(phi.rows()));
  if (k > phi.cols())
    throw Error(ErrorKind::InvalidInput,
                "order " + std::to_string(k) + " exceeds column count " + std::to_string(phi.cols()));
}

// Spectral radius of G_TT − Id where G is the full Gram matrix.
double gram_subset_delta(const SymMatrix& g, std::span<const std::size_t> subset) {
  const std::size_t k = subset.size();
  SymMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    m.set(i, i, g(subset[i], subset[i]) - 1.0);
    for (std::size_t j = i + 1; j < k; ++j) m.set(i, j, g(subset[i], subset[j]));
  }
  if (k == 1) return std::abs(m(0, 0));
  const auto values = sym_eigenvalues(m, kDefaultEigenTol, EigenMethod::jacobi);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

}  // namespace

double delta_subset(const SensingMatrix& phi, std::span<const std::size_t> subset) {
  check_order(phi, subset.size());
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInput, "subset has repeated indices");
  if (sorted.back() >= phi.cols()) throw Error(ErrorKind::InvalidInput, "column index out of range");
  std::vector<std::size_t> local(sorted.size());
  std::iota(local.begin(), local.end(), std::size_t{0});
  return gram_subset_delta(gram(phi.data().select_columns(sorted)), local);
}

RipExtremum rip_delta_exact_argmax(const SensingMatrix& phi, std::size_t k, const EnumerationOptions& opts) {
  check_order(phi, k);
  const SymMatrix g = gram(phi.data());

  struct Best {
    double delta = -1.0;
    std::uint64_t rank = 0;
  };
  const Best best = reduce_subsets(
      phi.cols(), k, opts, Best{},
      [&](Best& acc, std::span<const std::size_t> subset, std::uint64_t rank) {
        const double d = gram_subset_delta(g, subset);
        if (d > acc.delta) acc = Best{d, rank};
      },
      [](Best a, Best b) { return (b.delta > a.delta || (b.delta == a.delta && b.rank < a.rank)) ? b : a; });
  return RipExtremum{best.delta, colex_unrank(best.rank, k)};
}

double rip_delta_exact(const SensingMatrix& phi, std::size_t k, const EnumerationOptions& opts) {
  return rip_delta_exact_argmax(phi, k, opts).delta;
}

double coherence(const SensingMatrix& phi) {
  if (!phi.unit_columns()) throw Error(ErrorKind::NotNormalized, "coherence requires unit-norm columns");
  const SymMatrix g = gram(phi.data());
  double mu = 0.0;
  for (std::size_t i = 0; i < phi.cols(); ++i)
    for (std::size_t j = i + 1; j < phi.cols(); ++j) mu = std::max(mu, std::abs(g(i, j)));
  return mu;
}

double extrapolate_order(std::size_t m, double epsilon, std::size_t k) {
  if (m < 2) throw Error(ErrorKind::InvalidOrder, "base order m must be >= 2");
  if (k < m) throw Error(ErrorKind::InvalidOrder, "target order k must be >= m");
  if (!(epsilon >= 0.0)) throw Error(ErrorKind::InvalidInput, "epsilon must be >= 0");
  return epsilon * static_cast<double>(k - 1) / static_cast<double>(m - 1);
}

namespace {

// Relative slack on the k_max test so that e.g. ε = 0.1, δ = 0.3 admits
// k = 4 despite 0.1·3 rounding to 0.30000000000000004.
constexpr double kThresholdSlack = 1e-12;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::InvalidInput, "delta must lie in ]0,1[");
}

}  // namespace

RipCertificate extrapolated_certificate(RipMethod method, std::size_t m, double eps, double delta,
                                        std::size_t cap) {
  RipCertificate cert;
  if (m < 2) throw Error(ErrorKind::InvalidOrder, "base order m must be >= 2");
  cert.method = method;
  cert.k_min = m;
  cert.base_order = m;
  cert.base_epsilon = eps;

  std::size_t k_max = m - 1;
  for (std::size_t k = m; k <= cap; ++k) {
    if (eps * static_cast<double>(k - 1) <= delta * static_cast<double>(m - 1) * (1.0 + kThresholdSlack))
      k_max = k;
    else
      break;
  }
  cert.k_max = k_max;
  cert.delta = cert.certified() ? extrapolate_order(m, eps, k_max) : delta;
  return cert;
}

RipCertificate coherence_certify(const SensingMatrix& phi, double delta) {
  check_delta(delta);
  if (phi.rows() < 2 || phi.cols() < 2) throw Error(ErrorKind::InvalidOrder, "need at least 2 rows and columns");
  return extrapolated_certificate(RipMethod::coherence, 2, coherence(phi), delta, phi.rows());
}

RipCertificate lazy_certify(const SensingMatrix& phi, std::size_t m, double delta,
                            const EnumerationOptions& opts) {
  if (!phi.unit_columns()) throw Error(ErrorKind::NotNormalized, "lazy certification requires unit-norm columns");
  if (m < 2 || m > phi.rows() || m > phi.cols())
    throw Error(ErrorKind::InvalidOrder, "base order must satisfy 2 <= m <= min(n, N)");
  check_delta(delta);
  const double eps = rip_delta_exact(phi, m, opts);
  return extrapolated_certificate(RipMethod::lazy, m, eps, delta, phi.rows());
}

std::size_t quasi_polynomial_order(std::size_t cols) noexcept {
  if (cols < 2) return 2;
  const double l = std::log2(static_cast<double>(cols));
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(l * l * l)));
}

double rip_ratio(const SensingMatrix& phi, const SparseVector& x) {
  std::vector<double> y(phi.rows(), 0.0);
  double xnorm2 = 0.0;
  std::vector<double> dense(phi.cols(), 0.0);
  for (const auto& [i, v] : x) {
    if (i >= phi.cols()) throw Error(ErrorKind::InvalidInput, "witness index out of range");
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "witness has non-finite entries");
    dense[i] += v;
  }
  for (std::size_t c = 0; c < phi.cols(); ++c) {
    const double v = dense[c];
    if (v == 0.0) continue;
    xnorm2 += v * v;
    for (std::size_t r = 0; r < phi.rows(); ++r) y[r] += phi.data()(r, c) * v;
  }
  if (xnorm2 == 0.0) throw Error(ErrorKind::InvalidInput, "witness vector is zero");
  double ynorm2 = 0.0;
  for (double v : y) ynorm2 += v * v;
  return ynorm2 / xnorm2;
}

bool check_rip_witness(const SensingMatrix& phi, const SparseVector& x, double delta) {
  return std::abs(rip_ratio(phi, x) - 1.0) > delta;
}

}  // namespace ripcert
