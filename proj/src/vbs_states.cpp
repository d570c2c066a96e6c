#include "vbs/vbs_states.hpp"

#include <cmath>
#include <string>

#include "vbs/closed_form.hpp"
#include "vbs/errors.hpp"

namespace vbs {

namespace {

// Odometer over `count` adjoint sites; digits()[0] is the most significant.
class AdjointOdometer {
 public:
  AdjointOdometer(int n, int count) : n_(n), digits_(static_cast<std::size_t>(count), 0) {}

  const std::vector<int>& digits() const { return digits_; }

  std::vector<BellIndex> labels() const {
    std::vector<BellIndex> out;
    out.reserve(digits_.size());
    for (int d : digits_) out.push_back(adjoint_label(n_, d));
    return out;
  }

  // Returns false after the last configuration.
  bool advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < adjoint_dimension(n_)) return true;
      digits_[i] = 0;
    }
    return false;
  }

 private:
  int n_;
  std::vector<int> digits_;
};

std::vector<std::string> bulk_labels(int sites) {
  std::vector<std::string> labels;
  for (int k = 1; k <= sites; ++k) labels.push_back("site" + std::to_string(k));
  return labels;
}

}  // namespace

std::size_t require_feasible(const ChainSpec& spec, std::size_t budget) {
  require_qudit_dimension(spec.n);
  if (spec.sites < 1) throw DomainError("chain needs at least one site");
  if (spec.boundary == Boundary::periodic && spec.sites < 2) {
    throw DomainError("periodic chain needs at least two sites");
  }
  const auto adjoint = static_cast<std::size_t>(adjoint_dimension(spec.n));
  std::size_t bulk = checked_power(adjoint, static_cast<std::size_t>(spec.sites), budget);
  std::size_t total = bulk;
  if (spec.boundary == Boundary::open && bulk != 0) {
    const auto pair = static_cast<std::size_t>(spec.n * spec.n);
    total = bulk > budget / pair ? 0 : bulk * pair;
  }
  if (total == 0) {
    throw BudgetError("state for n=" + std::to_string(spec.n) + ", N=" + std::to_string(spec.sites) +
                      " exceeds the amplitude budget of " + std::to_string(budget));
  }
  return total;
}

PhasedIndex phase_fold(int n, std::span<const BellIndex> factors) {
  PhasedIndex acc{BellIndex::identity(n), 0};
  for (const BellIndex& f : factors) {
    const PhasedIndex step = compose(acc.index, f);
    acc.index = step.index;
    acc.phase_exp = (acc.phase_exp + step.phase_exp) % n;
  }
  return acc;
}

PureState open_vbs_state(const ChainSpec& spec, std::size_t budget) {
  if (spec.boundary != Boundary::open) throw DomainError("open_vbs_state needs an open chain spec");
  const std::size_t total = require_feasible(spec, budget);
  const int n = spec.n;
  const int pair_dim = n * n;

  Vector amps = Vector::Zero(static_cast<Eigen::Index>(total));
  const double scale = std::pow(static_cast<double>(adjoint_dimension(n)), -0.5 * spec.sites);
  AdjointOdometer config(n, spec.sites);
  std::size_t bulk_index = 0;
  do {
    const std::vector<BellIndex> labels = config.labels();
    const PhasedIndex fold = phase_fold(n, labels);
    const std::size_t flat = bulk_index * pair_dim + static_cast<std::size_t>(fold.index.linear());
    amps(static_cast<Eigen::Index>(flat)) = scale * omega_power(n, fold.phase_exp);
    ++bulk_index;
  } while (config.advance());

  std::vector<std::size_t> dims(static_cast<std::size_t>(spec.sites), static_cast<std::size_t>(adjoint_dimension(n)));
  dims.push_back(static_cast<std::size_t>(pair_dim));
  std::vector<std::string> names = bulk_labels(spec.sites);
  names.push_back("boundary");
  return PureState(std::move(dims), std::move(names), std::move(amps));
}

PureState periodic_vbs_state(const ChainSpec& spec, std::size_t budget) {
  if (spec.boundary != Boundary::periodic) throw DomainError("periodic_vbs_state needs a periodic chain spec");
  const std::size_t total = require_feasible(spec, budget);
  const int n = spec.n;
  const auto adjoint = static_cast<std::size_t>(adjoint_dimension(n));

  Vector amps = Vector::Zero(static_cast<Eigen::Index>(total));
  const double scale = 1.0 / std::sqrt(periodic_norm_squared(n, spec.sites));
  AdjointOdometer config(n, spec.sites - 1);
  std::size_t free_index = 0;
  do {
    const std::vector<BellIndex> labels = config.labels();
    const PhasedIndex fold = phase_fold(n, labels);
    if (!fold.index.is_identity()) {
      const std::size_t flat = free_index * adjoint + static_cast<std::size_t>(adjoint_slot(fold.index));
      amps(static_cast<Eigen::Index>(flat)) = scale * omega_power(n, fold.phase_exp);
    }
    ++free_index;
  } while (config.advance());

  std::vector<std::size_t> dims(static_cast<std::size_t>(spec.sites), adjoint);
  return PureState(std::move(dims), bulk_labels(spec.sites), std::move(amps));
}

PureState vbs_state(const ChainSpec& spec, std::size_t budget) {
  return spec.boundary == Boundary::open ? open_vbs_state(spec, budget) : periodic_vbs_state(spec, budget);
}

}  // namespace vbs
