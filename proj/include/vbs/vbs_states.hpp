#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vbs/state.hpp"
#include "vbs/weyl.hpp"

namespace vbs {

enum class Boundary { open, periodic };

/// A chain of `sites` adjoint sites. Open chains carry one fundamental and one
/// conjugate boundary spin, stored together as a single n^2-dimensional Bell
/// site after the bulk.
struct ChainSpec {
  int n = 2;
  int sites = 1;
  Boundary boundary = Boundary::open;
};

// Number of amplitudes the dense state for `spec` occupies; throws
// BudgetError when it exceeds `budget` and DomainError for invalid specs.
std::size_t require_feasible(const ChainSpec& spec, std::size_t budget = kDefaultAmplitudeBudget);

/// Left-to-right product U_{f_1} U_{f_2} ... U_{f_k} = omega^phase U_sum.
PhasedIndex phase_fold(int n, std::span<const BellIndex> factors);

/// Open chain with boundary spins. Bulk site k carries the adjoint label
/// (l,m), i.e. the pair state |Phi_{l,-m}> of (k-bar, k); the final site is the
/// Bell label of the boundary pair (0, (N+1)-bar).
PureState open_vbs_state(const ChainSpec& spec, std::size_t budget = kDefaultAmplitudeBudget);

/// Periodic chain. Sites 0..N-2 carry free adjoint labels; site N-1 carries
/// the closure label, equal to the folded index of the others, and the
/// configurations whose fold is the singlet are projected out.
PureState periodic_vbs_state(const ChainSpec& spec, std::size_t budget = kDefaultAmplitudeBudget);

PureState vbs_state(const ChainSpec& spec, std::size_t budget = kDefaultAmplitudeBudget);

}  // namespace vbs
