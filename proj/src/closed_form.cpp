#include "vbs/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

using boost::multiprecision::cpp_int;

// Beyond this many bits in (n^2-1)^L the exact path is skipped; the double
// formula is already exact to rounding there because p_n(L) is negligible.
constexpr double kExactBitLimit = 900.0;

// Minimum |lambda_singlet - lambda_adjoint| for which branch points are finite.
constexpr double kDegeneracyThreshold = 1e-15;

void require_block(int n, int L) {
  require_qudit_dimension(n);
  if (L < 1) throw DomainError("block length must be >= 1, got " + std::to_string(L));
}

void require_periodic(int n, int N, int L) {
  require_qudit_dimension(n);
  if (N < 2) throw DomainError("periodic chain needs N >= 2, got " + std::to_string(N));
  if (L < 1 || L > N) {
    throw DomainError("block length " + std::to_string(L) + " outside [1, " + std::to_string(N) + "]");
  }
}

bool exact_feasible(int n, int L) {
  return L * std::log2(static_cast<double>(n * n - 1)) < kExactBitLimit;
}

double to_double(const Rational& r) {
  return static_cast<double>(boost::multiprecision::numerator(r)) /
         static_cast<double>(boost::multiprecision::denominator(r));
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("Renyi index must be > 0");
  if (alpha == 1.0) throw DomainError("alpha = 1 is the von Neumann entropy; Renyi index must differ from 1");
}

void require_alpha(Complex alpha) {
  if (!(alpha.real() > 0.0)) throw DomainError("complex Renyi index needs Re(alpha) > 0");
  if (alpha == Complex{1.0, 0.0}) {
    throw DomainError("alpha = 1 is the von Neumann entropy; Renyi index must differ from 1");
  }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

Rational p_n_exact(int n, int L) {
  require_qudit_dimension(n);
  if (L < 0) throw DomainError("p_n needs L >= 0");
  cpp_int denom = boost::multiprecision::pow(cpp_int(n * n - 1), static_cast<unsigned>(L));
  return Rational(cpp_int(L % 2 == 0 ? 1 : -1), denom);
}

double p_n(int n, int L) {
  require_qudit_dimension(n);
  if (L < 0) throw DomainError("p_n needs L >= 0");
  const double magnitude = std::pow(static_cast<double>(n * n - 1), -static_cast<double>(L));
  return L % 2 == 0 ? magnitude : -magnitude;
}

std::vector<double> OpenSpectrum::eigenvalues() const {
  std::vector<double> values(static_cast<std::size_t>(n * n), adjoint);
  values.front() = singlet;
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> PeriodicSpectrum::eigenvalues() const {
  std::vector<double> values(static_cast<std::size_t>(n * n), adjoint);
  values.front() = singlet;
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

ExactSpectrum lambda_open_exact(int n, int L) {
  require_block(n, L);
  const Rational p = p_n_exact(n, L);
  const Rational dim(n * n);
  return {(1 + (n * n - 1) * p) / dim, (1 - p) / dim};
}

ExactSpectrum lambda_periodic_exact(int n, int N, int L) {
  require_periodic(n, N, L);
  const int a = n * n - 1;
  const Rational dim(n * n);
  const Rational p_rest = p_n_exact(n, N - L);
  const Rational p_block = p_n_exact(n, L);
  const Rational p_chain = p_n_exact(n, N);
  const Rational closure = 1 + a * p_chain;
  return {(1 + a * p_rest) * (1 + a * p_block) / (dim * closure),
          (1 - p_rest) * (1 - p_block) / (dim * closure)};
}

OpenSpectrum lambda_open(int n, int L) {
  require_block(n, L);
  OpenSpectrum s{n, L, 0.0, 0.0};
  if (exact_feasible(n, L)) {
    const ExactSpectrum exact = lambda_open_exact(n, L);
    s.singlet = to_double(exact.singlet);
    s.adjoint = to_double(exact.adjoint);
  } else {
    const double p = p_n(n, L);
    const double dim = n * n;
    s.singlet = (1.0 + (n * n - 1) * p) / dim;
    s.adjoint = (1.0 - p) / dim;
  }
  return s;
}

PeriodicSpectrum lambda_periodic(int n, int N, int L) {
  require_periodic(n, N, L);
  PeriodicSpectrum s{n, N, L, 0.0, 0.0};
  if (exact_feasible(n, N)) {
    const ExactSpectrum exact = lambda_periodic_exact(n, N, L);
    s.singlet = to_double(exact.singlet);
    s.adjoint = to_double(exact.adjoint);
  } else {
    const double a = n * n - 1;
    const double dim = n * n;
    const double p_rest = p_n(n, N - L);
    const double p_block = p_n(n, L);
    const double closure = 1.0 + a * p_n(n, N);
    s.singlet = (1.0 + a * p_rest) * (1.0 + a * p_block) / (dim * closure);
    s.adjoint = (1.0 - p_rest) * (1.0 - p_block) / (dim * closure);
  }
  return s;
}

double periodic_norm_squared(int n, int N) {
  require_qudit_dimension(n);
  if (N < 2) throw DomainError("periodic chain needs N >= 2");
  const double a = n * n - 1;
  return std::pow(a, N) * (1.0 + a * p_n(n, N)) / (n * n);
}

double two_level_entropy(int n, double singlet, double adjoint) {
  return -xlogx(singlet) - (n * n - 1) * xlogx(adjoint);
}

double two_level_renyi(int n, double singlet, double adjoint, double alpha) {
  require_alpha(alpha);
  double power_sum = 0.0;
  if (singlet > 0.0) power_sum += std::pow(singlet, alpha);
  if (adjoint > 0.0) power_sum += (n * n - 1) * std::pow(adjoint, alpha);
  return std::log(power_sum) / (1.0 - alpha);
}

RenyiValue two_level_renyi(int n, double singlet, double adjoint, Complex alpha) {
  require_alpha(alpha);
  Complex power_sum{0.0, 0.0};
  double magnitude = 0.0;
  auto add = [&](double lambda, double weight) {
    if (lambda <= 0.0) return;
    const Complex term = weight * std::exp(alpha * std::log(lambda));
    power_sum += term;
    magnitude += std::abs(term);
  };
  add(singlet, 1.0);
  add(adjoint, n * n - 1);
  if (std::abs(power_sum) <= kBranchPointTolerance * magnitude) {
    return {Complex{0.0, 0.0}, true};
  }
  return {std::log(power_sum) / (1.0 - alpha), false};
}

double entropy_open(int n, int L) {
  require_block(n, L);
  // 2 log n - (1+a)/n^2 log(1+a) - (n^2-1)(1-p)/n^2 log(1-p), a = (n^2-1) p
  const double p = p_n(n, L);
  const double dim = n * n;
  const double a = (n * n - 1) * p;
  const double singlet_term = (1.0 + a) > 0.0 ? (1.0 + a) / dim * std::log1p(a) : 0.0;
  const double adjoint_term = (n * n - 1) * (1.0 - p) / dim * std::log1p(-p);
  return 2.0 * std::log(static_cast<double>(n)) - singlet_term - adjoint_term;
}

double renyi_open(int n, int L, double alpha) {
  const OpenSpectrum s = lambda_open(n, L);
  return two_level_renyi(n, s.singlet, s.adjoint, alpha);
}

RenyiValue renyi_open(int n, int L, Complex alpha) {
  const OpenSpectrum s = lambda_open(n, L);
  return two_level_renyi(n, s.singlet, s.adjoint, alpha);
}

double entropy_periodic(int n, int N, int L) {
  const PeriodicSpectrum s = lambda_periodic(n, N, L);
  return two_level_entropy(n, s.singlet, s.adjoint);
}

double renyi_periodic(int n, int N, int L, double alpha) {
  const PeriodicSpectrum s = lambda_periodic(n, N, L);
  return two_level_renyi(n, s.singlet, s.adjoint, alpha);
}

RenyiValue renyi_periodic(int n, int N, int L, Complex alpha) {
  const PeriodicSpectrum s = lambda_periodic(n, N, L);
  return two_level_renyi(n, s.singlet, s.adjoint, alpha);
}

double open_power_sum_residual(int n, int L, Complex alpha) {
  const OpenSpectrum s = lambda_open(n, L);
  Complex sum{0.0, 0.0};
  if (s.singlet > 0.0) sum += std::exp(alpha * std::log(s.singlet));
  if (s.adjoint > 0.0) sum += static_cast<double>(n * n - 1) * std::exp(alpha * std::log(s.adjoint));
  // overflowed terms give inf - inf
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) return std::numeric_limits<double>::infinity();
  return std::abs(sum);
}

std::vector<BranchPoint> branch_points(int n, int L, int m_first, int m_last) {
  require_block(n, L);
  if (L == 1) {
    throw DomainError("no branch points for L = 1: lambda_singlet(1) = 0 leaves the eigenvalue ratio undefined");
  }
  if (m_first > m_last) throw DomainError("empty branch range");
  const double p = p_n(n, L);
  if (std::abs(p) < kDegeneracyThreshold) {
    throw DomainError("spectrum is degenerate to within 1e-15 at L = " + std::to_string(L) +
                      "; branch points have moved to infinity");
  }
  // lambda_singlet / lambda_adjoint = 1 + n^2 p / (1 - p)
  const double log_ratio = std::log1p(n * n * p / (1.0 - p));
  const double log_multiplicity = std::log(static_cast<double>(n * n - 1));

  std::vector<BranchPoint> points;
  std::set<long long> seen;
  for (int m = m_first; m <= m_last; ++m) {
    for (int sign : {+1, -1}) {
      const long long key = static_cast<long long>(sign) * (2LL * m + 1);
      if (!seen.insert(key).second) continue;
      const Complex numerator{log_multiplicity, static_cast<double>(key) * std::numbers::pi};
      BranchPoint bp;
      bp.alpha = numerator / log_ratio;
      bp.m = m;
      bp.sign = sign;
      bp.even_block = L % 2 == 0;
      bp.residual = open_power_sum_residual(n, L, bp.alpha);
      points.push_back(bp);
    }
  }
  return points;
}

Matrix transfer_matrix(int n) {
  require_qudit_dimension(n);
  const Eigen::Index d = n * n;
  return Matrix::Ones(d, d) - Matrix::Identity(d, d);
}

Matrix fourier_diagonalizer(int n) {
  require_qudit_dimension(n);
  const long long d = n * n;
  Matrix u(d, d);
  for (long long j = 0; j < d; ++j) {
    for (long long k = 0; k < d; ++k) {
      const long long e = (j * k) % d;
      u(j, k) = e == 0 ? Complex{1.0, 0.0} : std::polar(1.0, 2.0 * std::numbers::pi * e / d);
    }
  }
  return u / static_cast<double>(n);
}

double transfer_diagonalization_residual(int n) {
  const Matrix t = transfer_matrix(n);
  const Matrix uc = fourier_diagonalizer(n);
  Matrix expected = -Matrix::Identity(t.rows(), t.cols());
  expected(0, 0) = n * n - 1;
  return (uc.adjoint() * t * uc - expected).norm();
}

OpenSpectrum two_spin_rdm_transfer(int n, int L) {
  require_block(n, L);
  const Matrix t = transfer_matrix(n);
  Vector w = Vector::Zero(t.rows());
  w(0) = 1.0;
  // Normalizing every step keeps the entries O(1) instead of O((n^2-1)^L).
  for (int step = 0; step < L; ++step) w = t * w / static_cast<double>(n * n - 1);
  return OpenSpectrum{n, L, w(0).real(), w(1).real()};
}

}  // namespace vbs
