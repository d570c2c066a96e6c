#include "vbs/edge_states.hpp"

#include <cmath>
#include <string>

#include "vbs/closed_form.hpp"
#include "vbs/errors.hpp"
#include "vbs/vbs_states.hpp"

namespace vbs {

namespace {

void require_edge_block(int n, int L) {
  require_qudit_dimension(n);
  if (L < 1) throw DomainError("edge states need a block of at least one site");
}

std::size_t block_dimension(int n, int L, std::size_t budget) {
  const std::size_t dim =
      checked_power(static_cast<std::size_t>(adjoint_dimension(n)), static_cast<std::size_t>(L), budget);
  if (dim == 0) {
    throw BudgetError("edge states for n=" + std::to_string(n) + ", L=" + std::to_string(L) +
                      " exceed the budget of " + std::to_string(budget));
  }
  return dim;
}

// Sum of w_i |v_i><v_i| over the weighted edge basis.
Matrix weighted_projector(const EdgeBasis& basis, const std::vector<double>& weights, std::size_t dim) {
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    const Vector& v = basis.states[i].amplitudes();
    rho.noalias() += weights[i] * (v * v.adjoint());
  }
  return rho;
}

}  // namespace

std::vector<EdgeLabel> edge_labels(int n) {
  require_qudit_dimension(n);
  std::vector<EdgeLabel> labels;
  for (int k = 0; k < n * n; ++k) labels.emplace_back(BellIndex::from_linear(n, k));
  return labels;
}

double edge_weight(int L, const EdgeLabel& label) {
  const OpenSpectrum s = lambda_open(label.n(), L);
  return label.weight_index().is_identity() ? s.singlet : s.adjoint;
}

double edge_normalization(int L, const EdgeLabel& label) {
  const double weight = edge_weight(L, label);
  if (weight <= 0.0) {
    throw DomainError("edge state (" + std::to_string(label.p()) + "," + std::to_string(label.q()) +
                      ") vanishes for L=" + std::to_string(L));
  }
  return 1.0 / std::sqrt(std::pow(static_cast<double>(adjoint_dimension(label.n())), L) * weight);
}

PureState edge_state_unnormalized(int L, const EdgeLabel& label, std::size_t budget) {
  const int n = label.n();
  require_edge_block(n, L);
  const std::size_t dim = block_dimension(n, L, budget);
  const auto adjoint = static_cast<std::size_t>(adjoint_dimension(n));

  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
  std::vector<BellIndex> factors(static_cast<std::size_t>(L), BellIndex::identity(n));
  factors.front() = label.index();
  const std::size_t free_configs = dim / adjoint;
  for (std::size_t config = 0; config < free_configs; ++config) {
    std::size_t rest = config;
    for (int site = L - 1; site >= 1; --site) {
      factors[static_cast<std::size_t>(site)] = adjoint_label(n, static_cast<int>(rest % adjoint));
      rest /= adjoint;
    }
    const PhasedIndex fold = phase_fold(n, factors);
    const BellIndex& y = fold.index;
    if (y.is_identity()) continue;
    const long long phase = fold.phase_exp - static_cast<long long>(y.l()) * y.m();
    const std::size_t flat = config * adjoint + static_cast<std::size_t>(adjoint_slot(-y));
    amps(static_cast<Eigen::Index>(flat)) = omega_power(n, phase);
  }

  std::vector<std::string> names;
  for (int k = 1; k <= L; ++k) names.push_back("site" + std::to_string(k));
  return PureState(std::vector<std::size_t>(static_cast<std::size_t>(L), adjoint), std::move(names), std::move(amps));
}

PureState edge_state(int L, const EdgeLabel& label, std::size_t budget) {
  const double c = edge_normalization(L, label);
  const PureState raw = edge_state_unnormalized(L, label, budget);
  const auto dims = raw.site_dims();
  return PureState({dims.begin(), dims.end()}, raw.site_labels(), c * raw.amplitudes());
}

Matrix edge_gram(int n, int L, std::size_t budget) {
  const std::vector<EdgeLabel> labels = edge_labels(n);
  std::vector<Vector> states;
  states.reserve(labels.size());
  for (const EdgeLabel& label : labels) states.push_back(edge_state_unnormalized(L, label, budget).amplitudes());
  const auto count = static_cast<Eigen::Index>(labels.size());
  Matrix gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i)
    for (Eigen::Index j = 0; j < count; ++j) gram(i, j) = states[i].dot(states[j]);
  return gram;
}

EdgeBasis edge_basis(int n, int L, std::size_t budget) {
  require_edge_block(n, L);
  EdgeBasis basis{n, L, {}, {}};
  for (const EdgeLabel& label : edge_labels(n)) {
    if (edge_weight(L, label) <= 0.0) continue;
    basis.labels.push_back(label);
    basis.states.push_back(edge_state(L, label, budget));
  }
  return basis;
}

DensityMatrix reconstruct_rho(int n, int L, std::size_t matrix_budget) {
  const std::size_t dim = block_dimension(n, L, matrix_budget);
  const EdgeBasis basis = edge_basis(n, L, matrix_budget);
  std::vector<double> weights;
  for (const EdgeLabel& label : basis.labels) weights.push_back(edge_weight(L, label));
  return DensityMatrix(std::vector<std::size_t>(static_cast<std::size_t>(L), static_cast<std::size_t>(adjoint_dimension(n))),
                       weighted_projector(basis, weights, dim));
}

double projector_limit_residual(int n, int L, std::size_t matrix_budget) {
  const std::size_t dim = block_dimension(n, L, matrix_budget);
  const EdgeBasis basis = edge_basis(n, L, matrix_budget);
  std::vector<double> residual_weights;
  for (const EdgeLabel& label : basis.labels) residual_weights.push_back(edge_weight(L, label) - 1.0 / (n * n));
  return weighted_projector(basis, residual_weights, dim).norm();
}

}  // namespace vbs
