#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vbs/jacobi.hpp"
#include "vbs/renyi_value.hpp"
#include "vbs/state.hpp"

namespace vbs {

inline constexpr double kDensityTolerance = 1e-12;
inline constexpr double kSpectrumSumTolerance = 1e-10;
// Relative spread within which eigenvalues are reported as one multiplet.
inline constexpr double kMultipletTolerance = 1e-9;

/// Hermitian, unit-trace matrix over the tensor basis of a block of sites.
/// Construction checks Hermiticity and trace to kDensityTolerance;
/// positivity is checked when the spectrum is taken.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<std::size_t> site_dims, Matrix data);

  std::span<const std::size_t> site_dims() const { return dims_; }
  const Matrix& data() const { return data_; }
  std::size_t dimension() const { return static_cast<std::size_t>(data_.rows()); }

 private:
  std::vector<std::size_t> dims_;
  Matrix data_;
};

struct Multiplet {
  double value = 0.0;
  int multiplicity = 0;
};

struct RenyiEntry {
  Complex alpha;
  RenyiValue entropy;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending, clamped at zero
  std::vector<Multiplet> multiplets;
  double von_neumann = 0.0;
  std::vector<RenyiEntry> renyi;
};

/// Sorts, clamps [-1e-12, 0) to zero, groups multiplets, and fills the von
/// Neumann entropy. Eigenvalues below -1e-12 or a sum away from one by more
/// than 1e-10 raise NumericalError.
SpectrumReport make_spectrum_report(std::vector<double> eigenvalues);

/// Tr over everything outside `block` of |psi><psi|.
DensityMatrix reduced_density(const PureState& state, SiteRange block,
                              std::size_t matrix_budget = kDefaultMatrixBudget);

/// Reduced density matrix of the complement of `block` (sites before and
/// after it, in that order).
DensityMatrix environment_density(const PureState& state, SiteRange block,
                                  std::size_t matrix_budget = kDefaultMatrixBudget);

/// Spectrum of the block/environment cut, diagonalizing whichever side is
/// smaller. The nonzero part is the same for both sides.
SpectrumReport schmidt_spectrum(const PureState& state, SiteRange block,
                                std::size_t matrix_budget = kDefaultMatrixBudget);

SpectrumReport hermitian_spectrum(const DensityMatrix& rho, const JacobiOptions& options = {});

double von_neumann(std::span<const double> eigenvalues);
double von_neumann(const SpectrumReport& spectrum);

double renyi(std::span<const double> eigenvalues, double alpha);
double renyi(const SpectrumReport& spectrum, double alpha);
RenyiValue renyi(std::span<const double> eigenvalues, Complex alpha);
RenyiValue renyi(const SpectrumReport& spectrum, Complex alpha);

// Converts an entropy in nats to logarithm base `base`.
double entropy_in_base(double nats, double base);

/// max_i |a_i - b_i| after zero-padding the shorter list; both lists are
/// expected sorted descending.
double spectrum_distance(std::span<const double> a, std::span<const double> b);

}  // namespace vbs
