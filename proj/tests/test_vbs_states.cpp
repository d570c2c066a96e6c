#include <gtest/gtest.h>

#include <random>

#include "vbs/closed_form.hpp"
#include "vbs/errors.hpp"
#include "vbs/vbs_states.hpp"

namespace {

using vbs::BellIndex;
using vbs::Boundary;
using vbs::ChainSpec;

TEST(AdjointLabels, SlotRoundTrip) {
  for (int n = 2; n <= 5; ++n) {
    for (int s = 0; s < vbs::adjoint_dimension(n); ++s) {
      const BellIndex label = vbs::adjoint_label(n, s);
      EXPECT_FALSE(label.is_identity());
      EXPECT_EQ(vbs::adjoint_slot(label), s);
      EXPECT_EQ(label.linear(), s + 1);
    }
  }
  EXPECT_THROW(vbs::adjoint_slot(BellIndex::identity(3)), vbs::DomainError);
}

TEST(CheckedPower, OverflowSentinel) {
  EXPECT_EQ(vbs::checked_power(3, 4, 1000), 81u);
  EXPECT_EQ(vbs::checked_power(3, 7, 1000), 0u);
  EXPECT_EQ(vbs::checked_power(1000, 100, std::size_t{1} << 40), 0u);
}

TEST(PhaseFold, MatchesComposeChain) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<BellIndex> factors;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) factors.emplace_back(n, rng() % n, rng() % n);
    vbs::Matrix product = vbs::Matrix::Identity(n, n);
    for (const BellIndex& f : factors) product = product * vbs::u_lm(f);
    const vbs::PhasedIndex fold = vbs::phase_fold(n, factors);
    const vbs::Matrix expected = vbs::omega_power(n, fold.phase_exp) * vbs::u_lm(fold.index);
    ASSERT_LT((product - expected).norm(), 1e-12);
  }
}

TEST(OpenState, ShapeAndNorm) {
  for (int n = 2; n <= 3; ++n) {
    for (int N = 1; N <= 4; ++N) {
      const vbs::PureState state = vbs::open_vbs_state({n, N, Boundary::open});
      ASSERT_EQ(state.site_count(), static_cast<std::size_t>(N + 1));
      for (int k = 0; k < N; ++k) EXPECT_EQ(state.site_dims()[k], static_cast<std::size_t>(n * n - 1));
      EXPECT_EQ(state.site_dims()[N], static_cast<std::size_t>(n * n));
      EXPECT_EQ(state.site_labels().back(), "boundary");
      EXPECT_NEAR(state.norm(), 1.0, 1e-13);
    }
  }
}

TEST(PeriodicState, ShapeAndNorm) {
  for (int n = 2; n <= 3; ++n) {
    for (int N = 2; N <= (n == 2 ? 8 : 5); ++N) {
      const vbs::PureState state = vbs::periodic_vbs_state({n, N, Boundary::periodic});
      ASSERT_EQ(state.site_count(), static_cast<std::size_t>(N));
      EXPECT_NEAR(state.norm(), 1.0, 1e-13) << "n=" << n << " N=" << N;
    }
  }
}

TEST(PeriodicState, NormalizationCountsClosedWalks) {
  // nonzero amplitudes are the closed walks, counted by the closed-form norm
  for (int n = 2; n <= 3; ++n) {
    for (int N = 2; N <= 5; ++N) {
      const vbs::PureState state = vbs::periodic_vbs_state({n, N, Boundary::periodic});
      std::size_t nonzero = 0;
      for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) nonzero += std::abs(state.amplitudes()(i)) > 1e-15;
      EXPECT_NEAR(static_cast<double>(nonzero), vbs::periodic_norm_squared(n, N), 1e-9);
    }
  }
}

TEST(PeriodicState, TwoSiteIsBellPairOfAdjoints) {
  // N=2: labels c1, c2 with c1 c2 proportional to identity, so c2 = -c1
  const vbs::PureState state = vbs::periodic_vbs_state({2, 2, Boundary::periodic});
  std::size_t nonzero = 0;
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) nonzero += std::abs(state.amplitudes()(i)) > 1e-15;
  EXPECT_EQ(nonzero, 3u);
}

TEST(Feasibility, BudgetAndDomain) {
  EXPECT_EQ(vbs::require_feasible({2, 3, Boundary::open}), 27u * 4u);
  EXPECT_EQ(vbs::require_feasible({2, 3, Boundary::periodic}), 27u);
  EXPECT_THROW(vbs::require_feasible({2, 30, Boundary::open}), vbs::BudgetError);
  EXPECT_THROW(vbs::require_feasible({2, 3, Boundary::open}, 10), vbs::BudgetError);
  EXPECT_THROW(vbs::require_feasible({2, 0, Boundary::open}), vbs::DomainError);
  EXPECT_THROW(vbs::require_feasible({2, 1, Boundary::periodic}), vbs::DomainError);
  EXPECT_THROW(vbs::require_feasible({1, 3, Boundary::open}), vbs::DomainError);
  EXPECT_THROW(vbs::open_vbs_state({2, 3, Boundary::periodic}), vbs::DomainError);
}

TEST(VbsState, Dispatch) {
  EXPECT_EQ(vbs::vbs_state({2, 3, Boundary::open}).site_count(), 4u);
  EXPECT_EQ(vbs::vbs_state({2, 3, Boundary::periodic}).site_count(), 3u);
}

}  // namespace
