#pragma once

#include <cstddef>
#include <vector>

#include "vbs/oracle.hpp"
#include "vbs/state.hpp"
#include "vbs/weyl.hpp"

namespace vbs {

/// Label (p, q) of an open-chain edge state |p,q>. The weight it carries in
/// the block density matrix is lambda at the negated index (-p, -q).
class EdgeLabel {
 public:
  EdgeLabel(int n, long long p, long long q) : index_(n, p, q) {}
  explicit EdgeLabel(const BellIndex& index) : index_(index) {}

  int n() const { return index_.n(); }
  int p() const { return index_.l(); }
  int q() const { return index_.m(); }
  const BellIndex& index() const { return index_; }
  // (n - p mod n, n - q mod n)
  BellIndex weight_index() const { return -index_; }

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;

 private:
  BellIndex index_;
};

// All n^2 labels in linear Bell order.
std::vector<EdgeLabel> edge_labels(int n);

// lambda_{-p,-q}(L) from the open-chain closed form.
double edge_weight(int L, const EdgeLabel& label);

/// C_{p,q} = 1 / sqrt((n^2-1)^L lambda_{-p,-q}(L)). Throws DomainError when
/// the weight vanishes (the (0,0) state of a single-site block is null).
double edge_normalization(int L, const EdgeLabel& label);

/// Edge state with C_{p,q} = 1, over the L-site adjoint basis.
///
/// Sites 1..L-1 carry free adjoint labels c. The last pair (L, L-bar) is left
/// in the Bell state omega^phase |Phi_y>, with
///   U_{p,q} U_{c_1} ... U_{c_{L-1}} = omega^phase U_y,
/// and the y = (0,0) component projected out. That pair is stored in the
/// chain's (L-bar, L) site basis using
///   |Phi_y>_{L,L-bar} = omega^{-y_l y_m} |Phi_{-y_l, y_m}>_{L-bar,L},
/// i.e. adjoint label -y with an extra phase omega^{-y_l y_m}.
PureState edge_state_unnormalized(int L, const EdgeLabel& label, std::size_t budget = kDefaultAmplitudeBudget);

PureState edge_state(int L, const EdgeLabel& label, std::size_t budget = kDefaultAmplitudeBudget);

/// Gram matrix <p,q|r,s> of the unnormalized edge states, rows and columns in
/// linear Bell order.
Matrix edge_gram(int n, int L, std::size_t budget = kDefaultAmplitudeBudget);

/// The normalized edge states with nonzero weight, in linear Bell order.
struct EdgeBasis {
  int n = 0;
  int block = 0;
  std::vector<EdgeLabel> labels;
  std::vector<PureState> states;
};

EdgeBasis edge_basis(int n, int L, std::size_t budget = kDefaultAmplitudeBudget);

/// sum_{p,q} lambda_{-p,-q}(L) |p,q><p,q|
DensityMatrix reconstruct_rho(int n, int L, std::size_t matrix_budget = kDefaultMatrixBudget);

/// ||rho_L - (1/n^2) sum_{p,q} |p,q><p,q| ||_F
double projector_limit_residual(int n, int L, std::size_t matrix_budget = kDefaultMatrixBudget);

}  // namespace vbs
