#include "vbs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "vbs/closed_form.hpp"
#include "vbs/edge_states.hpp"
#include "vbs/errors.hpp"
#include "vbs/jacobi.hpp"
#include "vbs/oracle.hpp"

namespace vbs {

namespace {

constexpr double kSpectrumTol = 1e-10;
constexpr double kIndependenceTol = 1e-11;
constexpr double kSaturationTol = 1e-12;
constexpr double kFlatnessTol = 1e-10;
constexpr double kBranchResidualTol = 1e-8;
constexpr double kEdgeOrthogonalityTol = 1e-10;
constexpr double kEdgeGramRelativeTol = 1e-9;
constexpr double kEdgeReconstructionTol = 1e-10;
constexpr double kSwapTol = 1e-12;
constexpr double kInvarianceTol = 1e-13;
constexpr double kTransferTol = 1e-12;
constexpr double kPeriodicLimitTol = 1e-10;
constexpr double kRenyiLimitTol = 1e-5;

constexpr int kSaturationBlock = 30;
constexpr int kFlatnessBlock = 40;
constexpr double kRenyiStep = 1e-6;

struct OpenGridRow {
  int n;
  int max_block;
  int max_chain;
};

// Open chains: n = 2 blocks up to 5 in chains up to 6; n = 3 blocks up to 3 in chains up to 4.
constexpr OpenGridRow kOpenGrid[] = {{2, 5, 6}, {3, 3, 4}};
// Periodic chains: N in [3, max_chain].
constexpr std::pair<int, int> kPeriodicGrid[] = {{2, 8}, {3, 4}};
// Edge-state grid: blocks up to the given length.
constexpr std::pair<int, int> kEdgeGrid[] = {{2, 5}, {3, 3}};

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "open-spectrum", "periodic-spectrum", "saturation",     "renyi-flatness",     "branch-points",
      "edge-orthogonality", "edge-gram",   "edge-reconstruction", "edge-labeling", "swap-identity",
      "bell-invariance", "transfer-matrix", "independence",   "limits"};
  return names;
}

class Accumulator {
 public:
  Accumulator(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void observe(double deviation) {
    ++result_.points;
    if (std::isnan(result_.max_deviation)) return;  // NaN sticks
    if (!(deviation <= result_.max_deviation)) result_.max_deviation = deviation;
  }

  void fail(const std::string& why) {
    if (failure_.empty()) failure_ = why;
  }

  CheckResult finish() {
    result_.passed = failure_.empty() && std::isfinite(result_.max_deviation) &&
                     result_.max_deviation < result_.tolerance && result_.points > 0;
    if (!failure_.empty()) {
      result_.detail = failure_;
    } else if (result_.points == 0) {
      result_.detail = "no grid points selected";
    }
    return result_;
  }

 private:
  CheckResult result_;
  std::string failure_;
};

class Planner {
 public:
  explicit Planner(const VerifyOptions& options) : options_(options) {
    for (const std::string& name : options.only) {
      if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
        throw DomainError("unknown check '" + name + "'");
      }
    }
  }

  bool selected(const std::string& check) const {
    return options_.only.empty() || std::find(options_.only.begin(), options_.only.end(), check) != options_.only.end();
  }

  bool has_n(int n) const {
    return std::find(options_.n_values.begin(), options_.n_values.end(), n) != options_.n_values.end();
  }

  int cap(int chain) const { return options_.max_chain ? std::min(chain, *options_.max_chain) : chain; }

  const VerifyOptions& options() const { return options_; }

 private:
  const VerifyOptions& options_;
};

class StateCache {
 public:
  explicit StateCache(std::size_t budget) : budget_(budget) {}

  const PureState& get(int n, int sites, Boundary boundary) {
    const auto key = std::make_tuple(n, sites, boundary);
    auto it = states_.find(key);
    if (it == states_.end()) it = states_.emplace(key, vbs_state(ChainSpec{n, sites, boundary}, budget_)).first;
    return it->second;
  }

 private:
  std::size_t budget_;
  std::map<std::tuple<int, int, Boundary>, PureState> states_;
};

std::string point(int n, int chain, int block, int first) {
  std::ostringstream out;
  out << "n=" << n << " N=" << chain << " L=" << block << " k=" << first + 1;
  return out.str();
}

// Nonzero-spectrum comparison padded to the longer list.
double compare(const SpectrumReport& oracle, const std::vector<double>& predicted) {
  return spectrum_distance(oracle.eigenvalues, predicted);
}

CheckResult check_open_spectrum(const Planner& plan, StateCache& cache) {
  Accumulator acc("open-spectrum", kSpectrumTol);
  for (const auto& row : kOpenGrid) {
    if (!plan.has_n(row.n)) continue;
    for (int chain = 1; chain <= plan.cap(row.max_chain); ++chain) {
      const PureState& state = cache.get(row.n, chain, Boundary::open);
      for (int block = 1; block <= std::min(row.max_block, chain); ++block) {
        const std::vector<double> predicted = lambda_open(row.n, block).eigenvalues();
        for (int first = 0; first + block <= chain; ++first) {
          const SpectrumReport s = schmidt_spectrum(
              state, {static_cast<std::size_t>(first), static_cast<std::size_t>(block)}, plan.options().matrix_budget);
          const double dev = compare(s, predicted);
          acc.observe(dev);
          if (!(dev < kSpectrumTol)) acc.fail("mismatch at " + point(row.n, chain, block, first));
        }
      }
    }
  }
  return acc.finish();
}

CheckResult check_periodic_spectrum(const Planner& plan, StateCache& cache) {
  Accumulator acc("periodic-spectrum", kSpectrumTol);
  for (const auto& [n, max_chain] : kPeriodicGrid) {
    if (!plan.has_n(n)) continue;
    for (int chain = 3; chain <= plan.cap(max_chain); ++chain) {
      const PureState& state = cache.get(n, chain, Boundary::periodic);
      for (int block = 1; block < chain; ++block) {
        const std::vector<double> predicted = lambda_periodic(n, chain, block).eigenvalues();
        for (int first = 0; first + block <= chain; ++first) {
          const SpectrumReport s = schmidt_spectrum(
              state, {static_cast<std::size_t>(first), static_cast<std::size_t>(block)}, plan.options().matrix_budget);
          const double dev = compare(s, predicted);
          acc.observe(dev);
          if (!(dev < kSpectrumTol)) acc.fail("mismatch at " + point(n, chain, block, first));
        }
      }
    }
  }
  return acc.finish();
}

CheckResult check_saturation(const Planner& plan) {
  Accumulator acc("saturation", kSaturationTol);
  for (int n : {2, 3, 4}) {
    if (!plan.has_n(n)) continue;
    const double limit = 2.0 * std::log(static_cast<double>(n));
    acc.observe(std::abs(entropy_open(n, kSaturationBlock) - limit));
    const double a = n * n - 1;
    for (int block = 2; block <= 40; ++block) {
      const double gap = std::abs(entropy_open(n, block) - limit);
      const double envelope = 3.0 * std::pow(a, -block) * (block * std::log(a) + 2.0);
      if (!(gap <= envelope)) acc.fail("exponential envelope violated at n=" + std::to_string(n) + " L=" + std::to_string(block));
    }
  }
  return acc.finish();
}

const std::vector<double>& flatness_alphas() {
  static const std::vector<double> alphas = {0.5, 0.9, 1.1, 2.0, 5.0, 10.0};
  return alphas;
}

CheckResult check_renyi_flatness(const Planner& plan) {
  Accumulator acc("renyi-flatness", kFlatnessTol);
  for (int n : {2, 3}) {
    if (!plan.has_n(n)) continue;
    const double limit = 2.0 * std::log(static_cast<double>(n));
    for (double alpha : flatness_alphas()) acc.observe(std::abs(renyi_open(n, kFlatnessBlock, alpha) - limit));
  }
  return acc.finish();
}

CheckResult check_branch_points(const Planner& plan) {
  Accumulator acc("branch-points", kBranchResidualTol);
  for (int n : {2, 3}) {
    if (!plan.has_n(n)) continue;
    for (int block = 2; block <= 6; ++block) {
      for (const BranchPoint& bp : branch_points(n, block, 0, 2)) {
        acc.observe(bp.residual);
        const bool positive = bp.alpha.real() > 0.0;
        if (positive != (block % 2 == 0)) {
          acc.fail("parity rule violated at n=" + std::to_string(n) + " L=" + std::to_string(block));
        }
      }
    }
  }
  return acc.finish();
}

template <typename Fn>
void for_edge_grid(const Planner& plan, Fn&& fn) {
  for (const auto& [n, max_block] : kEdgeGrid) {
    if (!plan.has_n(n)) continue;
    for (int block = 1; block <= plan.cap(max_block); ++block) fn(n, block);
  }
}

CheckResult check_edge_orthogonality(const Planner& plan) {
  Accumulator acc("edge-orthogonality", kEdgeOrthogonalityTol);
  for_edge_grid(plan, [&](int n, int block) {
    const EdgeBasis basis = edge_basis(n, block, plan.options().amplitude_budget);
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
      for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const Complex overlap = basis.states[i].amplitudes().dot(basis.states[j].amplitudes());
        acc.observe(std::abs(overlap - (i == j ? 1.0 : 0.0)));
      }
    }
  });
  return acc.finish();
}

CheckResult check_edge_gram(const Planner& plan) {
  Accumulator acc("edge-gram", kEdgeGramRelativeTol);
  for_edge_grid(plan, [&](int n, int block) {
    const Matrix gram = edge_gram(n, block, plan.options().amplitude_budget);
    const std::vector<EdgeLabel> labels = edge_labels(n);
    const double scale = std::pow(static_cast<double>(n * n - 1), block);
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        if (i == j) {
          const double expected = scale * edge_weight(block, labels[static_cast<std::size_t>(i)]);
          const double dev = expected > 0.0 ? std::abs(gram(i, i) - expected) / expected : std::abs(gram(i, i));
          acc.observe(dev);
        } else if (std::abs(gram(i, j)) >= kEdgeOrthogonalityTol) {
          acc.fail("nonzero off-diagonal Gram entry at n=" + std::to_string(n) + " L=" + std::to_string(block));
        }
      }
    }
  });
  return acc.finish();
}

CheckResult check_edge_reconstruction(const Planner& plan, StateCache& cache) {
  Accumulator acc("edge-reconstruction", kEdgeReconstructionTol);
  for_edge_grid(plan, [&](int n, int block) {
    const PureState& chain = cache.get(n, block, Boundary::open);
    const DensityMatrix oracle =
        reduced_density(chain, {0, static_cast<std::size_t>(block)}, plan.options().matrix_budget);
    const DensityMatrix rebuilt = reconstruct_rho(n, block, plan.options().matrix_budget);
    acc.observe((oracle.data() - rebuilt.data()).norm());
  });
  return acc.finish();
}

CheckResult check_edge_labeling(const Planner& plan, StateCache& cache) {
  Accumulator acc("edge-labeling", kEdgeReconstructionTol);
  for_edge_grid(plan, [&](int n, int block) {
    const PureState& chain = cache.get(n, block, Boundary::open);
    const DensityMatrix oracle =
        reduced_density(chain, {0, static_cast<std::size_t>(block)}, plan.options().matrix_budget);
    const EdgeBasis basis = edge_basis(n, block, plan.options().amplitude_budget);
    const OpenSpectrum s = lambda_open(n, block);
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
      const Vector& v = basis.states[i].amplitudes();
      const Complex projected = v.dot(oracle.data() * v);
      const double expected = basis.labels[i].weight_index().is_identity() ? s.singlet : s.adjoint;
      acc.observe(std::abs(projected - expected));
    }
  });
  return acc.finish();
}

CheckResult check_swap_identity(const Planner& plan) {
  Accumulator acc("swap-identity", kSwapTol);
  for (int n : {2, 3, 4})
    if (plan.has_n(n)) acc.observe(swap_identity_residual(n));
  return acc.finish();
}

CheckResult check_bell_invariance(const Planner& plan) {
  Accumulator acc("bell-invariance", kInvarianceTol);
  for (int n : {2, 3, 4, 5}) {
    if (!plan.has_n(n)) continue;
    for (int k = 0; k < n * n; ++k) acc.observe(bell_invariance_residual(BellIndex::from_linear(n, k)));
  }
  return acc.finish();
}

CheckResult check_transfer(const Planner& plan) {
  Accumulator acc("transfer-matrix", kTransferTol);
  for (int n : {2, 3, 4}) {
    if (!plan.has_n(n)) continue;
    for (int block = 1; block <= 20; ++block) {
      const OpenSpectrum via_transfer = two_spin_rdm_transfer(n, block);
      const OpenSpectrum closed = lambda_open(n, block);
      acc.observe(std::max(std::abs(via_transfer.singlet - closed.singlet),
                           std::abs(via_transfer.adjoint - closed.adjoint)));
    }
    acc.observe(transfer_diagonalization_residual(n));
    std::vector<double> eigen = jacobi_eigenvalues(transfer_matrix(n)).eigenvalues;
    std::sort(eigen.begin(), eigen.end(), std::greater<>());
    std::vector<double> expected(static_cast<std::size_t>(n * n), -1.0);
    expected.front() = n * n - 1;
    acc.observe(spectrum_distance(eigen, expected));
  }
  return acc.finish();
}

CheckResult check_independence(const Planner& plan, StateCache& cache) {
  Accumulator acc("independence", kIndependenceTol);
  const int n = 2;
  if (!plan.has_n(n)) return acc.finish();
  const int max_chain = plan.cap(6);
  for (int block = 1; block <= std::min(5, max_chain); ++block) {
    std::optional<std::vector<double>> reference;
    for (int chain = block; chain <= max_chain; ++chain) {
      const PureState& state = cache.get(n, chain, Boundary::open);
      for (int first = 0; first + block <= chain; ++first) {
        const SpectrumReport s = schmidt_spectrum(
            state, {static_cast<std::size_t>(first), static_cast<std::size_t>(block)}, plan.options().matrix_budget);
        if (!reference) {
          reference = s.eigenvalues;
          continue;
        }
        // Different cuts diagonalize different sides; only the nonzero part is comparable.
        acc.observe(spectrum_distance(*reference, s.eigenvalues));
      }
    }
  }
  return acc.finish();
}

CheckResult check_limits(const Planner& plan) {
  Accumulator acc("limits", kRenyiLimitTol);
  if (plan.has_n(2)) {
    const PeriodicSpectrum periodic = lambda_periodic(2, 40, 2);
    const OpenSpectrum open = lambda_open(2, 2);
    const double dev = std::max(std::abs(periodic.singlet - open.singlet), std::abs(periodic.adjoint - open.adjoint));
    if (!(dev < kPeriodicLimitTol)) acc.fail("periodic spectrum at N=40 has not reached the open limit");
    acc.observe(dev);
  }
  auto renyi_gap = [&](double entropy, auto&& renyi_at) {
    for (double alpha : {1.0 - kRenyiStep, 1.0 + kRenyiStep}) acc.observe(std::abs(renyi_at(alpha) - entropy));
  };
  for (int n : {2, 3, 4}) {
    if (!plan.has_n(n)) continue;
    for (int block = 1; block <= 10; ++block) {
      renyi_gap(entropy_open(n, block), [&](double alpha) { return renyi_open(n, block, alpha); });
    }
  }
  for (const auto& [n, max_chain] : kPeriodicGrid) {
    if (!plan.has_n(n)) continue;
    for (int chain = 3; chain <= plan.cap(max_chain); ++chain) {
      for (int block = 1; block < chain; ++block) {
        renyi_gap(entropy_periodic(n, chain, block), [&](double alpha) { return renyi_periodic(n, chain, block, alpha); });
      }
    }
  }
  return acc.finish();
}

// Smaller side of any cut of `block` sites out of the chain.
std::size_t cut_side(int n, int chain, Boundary boundary, int block) {
  const auto adjoint = static_cast<std::size_t>(n * n - 1);
  std::size_t block_dim = 1;
  for (int i = 0; i < block; ++i) block_dim *= adjoint;
  std::size_t env = 1;
  for (int i = 0; i < chain - block; ++i) env *= adjoint;
  if (boundary == Boundary::open) env *= static_cast<std::size_t>(n * n);
  return std::min(block_dim, env);
}

void require_matrix(std::size_t dim, std::size_t budget, const std::string& where) {
  if (dim > budget) {
    throw BudgetError(where + " needs a " + std::to_string(dim) + "-dimensional matrix, budget is " +
                      std::to_string(budget));
  }
}

}  // namespace

std::vector<std::string> verification_check_names() { return check_names(); }

void plan_verification(const VerifyOptions& options) {
  const Planner plan(options);
  std::set<std::tuple<int, int, Boundary>> states;
  const bool open_cuts = plan.selected("open-spectrum") || plan.selected("independence");
  if (open_cuts) {
    for (const auto& row : kOpenGrid) {
      if (!plan.has_n(row.n) || (row.n != 2 && !plan.selected("open-spectrum"))) continue;
      for (int chain = 1; chain <= plan.cap(row.max_chain); ++chain) {
        states.insert({row.n, chain, Boundary::open});
        for (int block = 1; block <= std::min(row.max_block, chain); ++block) {
          require_matrix(cut_side(row.n, chain, Boundary::open, block), options.matrix_budget,
                         "open chain n=" + std::to_string(row.n) + " N=" + std::to_string(chain));
        }
      }
    }
  }
  if (plan.selected("periodic-spectrum")) {
    for (const auto& [n, max_chain] : kPeriodicGrid) {
      if (!plan.has_n(n)) continue;
      for (int chain = 3; chain <= plan.cap(max_chain); ++chain) {
        states.insert({n, chain, Boundary::periodic});
        for (int block = 1; block < chain; ++block) {
          require_matrix(cut_side(n, chain, Boundary::periodic, block), options.matrix_budget,
                         "periodic chain n=" + std::to_string(n) + " N=" + std::to_string(chain));
        }
      }
    }
  }
  const bool edges = plan.selected("edge-orthogonality") || plan.selected("edge-gram") ||
                     plan.selected("edge-reconstruction") || plan.selected("edge-labeling");
  if (edges) {
    for_edge_grid(plan, [&](int n, int block) {
      states.insert({n, block, Boundary::open});
      std::size_t dim = 1;
      for (int i = 0; i < block; ++i) dim *= static_cast<std::size_t>(n * n - 1);
      if (dim > options.amplitude_budget) {
        throw BudgetError("edge states n=" + std::to_string(n) + " L=" + std::to_string(block) +
                          " exceed the amplitude budget");
      }
      require_matrix(dim, options.matrix_budget, "edge block n=" + std::to_string(n) + " L=" + std::to_string(block));
    });
  }
  for (const auto& [n, chain, boundary] : states) require_feasible(ChainSpec{n, chain, boundary}, options.amplitude_budget);
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  plan_verification(options);
  const Planner plan(options);
  StateCache cache(options.amplitude_budget);

  const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"open-spectrum", [&] { return check_open_spectrum(plan, cache); }},
      {"periodic-spectrum", [&] { return check_periodic_spectrum(plan, cache); }},
      {"saturation", [&] { return check_saturation(plan); }},
      {"renyi-flatness", [&] { return check_renyi_flatness(plan); }},
      {"branch-points", [&] { return check_branch_points(plan); }},
      {"edge-orthogonality", [&] { return check_edge_orthogonality(plan); }},
      {"edge-gram", [&] { return check_edge_gram(plan); }},
      {"edge-reconstruction", [&] { return check_edge_reconstruction(plan, cache); }},
      {"edge-labeling", [&] { return check_edge_labeling(plan, cache); }},
      {"swap-identity", [&] { return check_swap_identity(plan); }},
      {"bell-invariance", [&] { return check_bell_invariance(plan); }},
      {"transfer-matrix", [&] { return check_transfer(plan); }},
      {"independence", [&] { return check_independence(plan, cache); }},
      {"limits", [&] { return check_limits(plan); }},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, run] : checks) {
    if (plan.selected(name)) results.push_back(run());
  }
  return results;
}

nlohmann::json verification_summary(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = !results.empty();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"max_deviation", r.max_deviation},
                      {"tolerance", r.tolerance},
                      {"points", r.points},
                      {"detail", r.detail}});
  }
  return {{"passed", all}, {"checks", checks}};
}

}  // namespace vbs
