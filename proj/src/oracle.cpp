#include "vbs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

constexpr double kNegativeEigenvalueFloor = -1e-12;
// Eigenvalues this close together are one multiplet regardless of size (zero padding).
constexpr double kMultipletFloor = 1e-14;

struct Cut {
  std::size_t left = 1;
  std::size_t block = 1;
  std::size_t right = 1;
};

Cut make_cut(const PureState& state, SiteRange block) {
  if (block.count == 0) throw DomainError("block must contain at least one site");
  if (block.end() > state.site_count()) {
    throw DomainError("block [" + std::to_string(block.first) + ", " + std::to_string(block.end()) +
                      ") outside a state of " + std::to_string(state.site_count()) + " sites");
  }
  Cut cut;
  cut.left = state.range_dimension({0, block.first});
  cut.block = state.range_dimension(block);
  cut.right = state.range_dimension({block.end(), state.site_count() - block.end()});
  return cut;
}

// Rows: block index. Columns: environment index left * right_dim + right.
Matrix block_by_environment(const PureState& state, const Cut& cut) {
  const Vector& psi = state.amplitudes();
  Matrix m(static_cast<Eigen::Index>(cut.block), static_cast<Eigen::Index>(cut.left * cut.right));
  for (std::size_t l = 0; l < cut.left; ++l)
    for (std::size_t b = 0; b < cut.block; ++b)
      for (std::size_t r = 0; r < cut.right; ++r)
        m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(l * cut.right + r)) =
            psi(static_cast<Eigen::Index>((l * cut.block + b) * cut.right + r));
  return m;
}

void require_budget(std::size_t dim, std::size_t budget, const char* what) {
  if (dim > budget) {
    throw BudgetError(std::string(what) + " dimension " + std::to_string(dim) + " exceeds the matrix budget of " +
                      std::to_string(budget));
  }
}

std::vector<std::size_t> dims_of(const PureState& state, SiteRange range) {
  const auto all = state.site_dims();
  return {all.begin() + static_cast<std::ptrdiff_t>(range.first), all.begin() + static_cast<std::ptrdiff_t>(range.end())};
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("Renyi index must be > 0");
  if (alpha == 1.0) throw DomainError("alpha = 1 is the von Neumann entropy; Renyi index must differ from 1");
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<std::size_t> site_dims, Matrix data)
    : dims_(std::move(site_dims)), data_(std::move(data)) {
  if (data_.rows() != data_.cols()) throw DomainError("density matrix must be square");
  std::size_t total = 1;
  for (std::size_t d : dims_) total *= d;
  if (total != static_cast<std::size_t>(data_.rows())) {
    throw DomainError("density matrix dimension does not match its site dimensions");
  }
  const double asymmetry = (data_ - data_.adjoint()).norm();
  if (asymmetry > kDensityTolerance) {
    throw NumericalError("density matrix not Hermitian: ||rho - rho^dagger||_F = " + std::to_string(asymmetry));
  }
  const Complex trace = data_.trace();
  if (std::abs(trace - Complex{1.0, 0.0}) > kDensityTolerance) {
    throw NumericalError("density matrix trace deviates from 1 by " + std::to_string(std::abs(trace - 1.0)));
  }
}

SpectrumReport make_spectrum_report(std::vector<double> eigenvalues) {
  double sum = 0.0;
  for (double& v : eigenvalues) {
    if (v < kNegativeEigenvalueFloor) {
      throw NumericalError("negative eigenvalue " + std::to_string(v) + " in a density matrix");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSpectrumSumTolerance) {
    throw NumericalError("eigenvalues sum to " + std::to_string(sum) + ", not 1");
  }
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());

  SpectrumReport report;
  report.eigenvalues = std::move(eigenvalues);
  for (double v : report.eigenvalues) {
    if (!report.multiplets.empty()) {
      Multiplet& last = report.multiplets.back();
      if (std::abs(last.value - v) <= std::max(kMultipletTolerance * last.value, kMultipletFloor)) {
        ++last.multiplicity;
        continue;
      }
    }
    report.multiplets.push_back({v, 1});
  }
  report.von_neumann = von_neumann(report.eigenvalues);
  return report;
}

DensityMatrix reduced_density(const PureState& state, SiteRange block, std::size_t matrix_budget) {
  const Cut cut = make_cut(state, block);
  require_budget(cut.block, matrix_budget, "block");
  const Matrix m = block_by_environment(state, cut);
  return DensityMatrix(dims_of(state, block), m * m.adjoint());
}

DensityMatrix environment_density(const PureState& state, SiteRange block, std::size_t matrix_budget) {
  const Cut cut = make_cut(state, block);
  require_budget(cut.left * cut.right, matrix_budget, "environment");
  const Matrix m = block_by_environment(state, cut);
  std::vector<std::size_t> dims = dims_of(state, {0, block.first});
  const std::vector<std::size_t> right = dims_of(state, {block.end(), state.site_count() - block.end()});
  dims.insert(dims.end(), right.begin(), right.end());
  return DensityMatrix(std::move(dims), m.transpose() * m.conjugate());
}

SpectrumReport schmidt_spectrum(const PureState& state, SiteRange block, std::size_t matrix_budget) {
  const Cut cut = make_cut(state, block);
  const std::size_t env = cut.left * cut.right;
  if (std::min(cut.block, env) > matrix_budget) {
    throw BudgetError("both sides of the cut exceed the matrix budget of " + std::to_string(matrix_budget));
  }
  const DensityMatrix rho =
      cut.block <= env ? reduced_density(state, block, matrix_budget) : environment_density(state, block, matrix_budget);
  return hermitian_spectrum(rho);
}

SpectrumReport hermitian_spectrum(const DensityMatrix& rho, const JacobiOptions& options) {
  return make_spectrum_report(jacobi_eigenvalues(rho.data(), options).eigenvalues);
}

double von_neumann(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues)
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

double von_neumann(const SpectrumReport& spectrum) { return von_neumann(spectrum.eigenvalues); }

double renyi(std::span<const double> eigenvalues, double alpha) {
  require_alpha(alpha);
  double power_sum = 0.0;
  for (double v : eigenvalues)
    if (v > 0.0) power_sum += std::pow(v, alpha);
  return std::log(power_sum) / (1.0 - alpha);
}

double renyi(const SpectrumReport& spectrum, double alpha) { return renyi(spectrum.eigenvalues, alpha); }

RenyiValue renyi(std::span<const double> eigenvalues, Complex alpha) {
  if (!(alpha.real() > 0.0)) throw DomainError("complex Renyi index needs Re(alpha) > 0");
  if (alpha == Complex{1.0, 0.0}) throw DomainError("alpha = 1 is the von Neumann entropy");
  Complex power_sum{0.0, 0.0};
  double magnitude = 0.0;
  for (double v : eigenvalues) {
    if (v <= 0.0) continue;
    const Complex term = std::exp(alpha * std::log(v));
    power_sum += term;
    magnitude += std::abs(term);
  }
  if (std::abs(power_sum) <= kBranchPointTolerance * magnitude) return {Complex{0.0, 0.0}, true};
  return {std::log(power_sum) / (1.0 - alpha), false};
}

RenyiValue renyi(const SpectrumReport& spectrum, Complex alpha) { return renyi(spectrum.eigenvalues, alpha); }

double entropy_in_base(double nats, double base) {
  if (!(base > 0.0) || base == 1.0) throw DomainError("logarithm base must be positive and != 1");
  return nats / std::log(base);
}

double spectrum_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t size = std::max(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace vbs
