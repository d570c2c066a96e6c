#include <gtest/gtest.h>

#include <Eigen/QR>
#include <algorithm>
#include <random>

#include "vbs/errors.hpp"
#include "vbs/jacobi.hpp"
#include "vbs/oracle.hpp"
#include "vbs/vbs_states.hpp"

namespace {

using vbs::Complex;
using vbs::Matrix;
using vbs::Vector;

// Random unitary from the QR factor of a complex Gaussian matrix.
Matrix random_unitary(int dim, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

// Random eigenvalues with forced degeneracies, sorted descending.
std::vector<double> random_spectrum(int dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> values(dim);
  for (int i = 0; i < dim; ++i) values[i] = (i > 0 && rng() % 3 == 0) ? values[i - 1] : u(rng);
  std::sort(values.rbegin(), values.rend());
  return values;
}

vbs::PureState random_state(const std::vector<std::size_t>& dims, std::mt19937& rng) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::normal_distribution<double> g;
  Vector v(static_cast<Eigen::Index>(total));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  v.normalize();
  std::vector<std::string> labels(dims.size(), "q");
  return vbs::PureState(dims, labels, v);
}

TEST(Jacobi, RecoversPlantedSpectrum) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 24);
    const std::vector<double> planted = random_spectrum(dim, rng);
    const Matrix q = random_unitary(dim, rng);
    Matrix lambda = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) lambda(i, i) = planted[i];
    const vbs::JacobiResult r = vbs::jacobi_eigenvalues(q * lambda * q.adjoint());
    std::vector<double> got = r.eigenvalues;
    std::sort(got.rbegin(), got.rend());
    ASSERT_EQ(got.size(), planted.size());
    for (int i = 0; i < dim; ++i) ASSERT_NEAR(got[i], planted[i], 1e-11) << "dim=" << dim << " trial " << trial;
    EXPECT_LE(r.off_diagonal, 1e-13 * std::max(1.0, lambda.norm()) + 1e-13);
  }
}

TEST(Jacobi, TraceAndFrobeniusInvariant) {
  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 16);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    const Matrix h = (a + a.adjoint()) / 2.0;
    const vbs::JacobiResult r = vbs::jacobi_eigenvalues(h);
    double sum = 0.0, squares = 0.0;
    for (double v : r.eigenvalues) {
      sum += v;
      squares += v * v;
    }
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    EXPECT_NEAR(squares, h.squaredNorm(), 1e-9);
  }
}

TEST(Jacobi, RejectsNonHermitian) {
  Matrix a = Matrix::Identity(3, 3);
  a(0, 1) = 1.0;
  EXPECT_THROW(vbs::jacobi_eigenvalues(a), vbs::NumericalError);
  EXPECT_THROW(vbs::jacobi_eigenvalues(Matrix::Zero(2, 3)), vbs::DomainError);
}

TEST(Jacobi, SweepCapReportsNonConvergence) {
  std::mt19937 rng(5);
  const Matrix q = random_unitary(12, rng);
  Matrix d = Matrix::Zero(12, 12);
  for (int i = 0; i < 12; ++i) d(i, i) = i;
  vbs::JacobiOptions opts;
  opts.max_sweeps = 1;
  EXPECT_THROW(vbs::jacobi_eigenvalues(q * d * q.adjoint(), opts), vbs::NumericalError);
}

TEST(SpectrumReport, ClampsAndGroups) {
  const vbs::SpectrumReport r = vbs::make_spectrum_report({0.25, -1e-14, 0.25, 0.5});
  ASSERT_EQ(r.eigenvalues.size(), 4u);
  EXPECT_EQ(r.eigenvalues.front(), 0.5);
  EXPECT_EQ(r.eigenvalues.back(), 0.0);
  ASSERT_EQ(r.multiplets.size(), 3u);
  EXPECT_EQ(r.multiplets[1].multiplicity, 2);
  EXPECT_EQ(r.multiplets[2].value, 0.0);
  EXPECT_NEAR(r.von_neumann, 1.5 * std::log(2.0), 1e-14);
}

TEST(SpectrumReport, RejectsBadInput) {
  EXPECT_THROW(vbs::make_spectrum_report({1.1, -0.1}), vbs::NumericalError);
  EXPECT_THROW(vbs::make_spectrum_report({0.5, 0.4}), vbs::NumericalError);
}

TEST(Entropies, FrozenValues) {
  const std::vector<double> spectrum = {1.0 / 3.0, 2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0};
  EXPECT_NEAR(vbs::von_neumann(spectrum), 1.3689223607402194, 1e-14);
  EXPECT_NEAR(vbs::renyi(spectrum, 2.0), std::log(27.0 / 7.0), 1e-14);
  EXPECT_NEAR(vbs::renyi(spectrum, 2.0), 1.3499267, 1e-7);
  const vbs::RenyiValue c = vbs::renyi(spectrum, Complex(2.0, 0.0));
  EXPECT_FALSE(c.branch_point);
  EXPECT_NEAR(c.value.real(), std::log(27.0 / 7.0), 1e-13);
  EXPECT_THROW(vbs::renyi(spectrum, 1.0), vbs::DomainError);
  EXPECT_THROW(vbs::renyi(spectrum, -0.5), vbs::DomainError);
}

TEST(Entropies, BranchPointFlag) {
  // (3/2)^alpha = -3 zeroes 1/3^alpha + 3 (2/9)^alpha
  const std::vector<double> spectrum = {1.0 / 3.0, 2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0};
  const Complex alpha = Complex(std::log(3.0), M_PI) / std::log(1.5);
  EXPECT_TRUE(vbs::renyi(spectrum, alpha).branch_point);
  EXPECT_FALSE(vbs::renyi(spectrum, alpha + Complex(0.01, 0.0)).branch_point);
}

TEST(Entropies, BaseConversion) {
  EXPECT_NEAR(vbs::entropy_in_base(std::log(8.0), 2.0), 3.0, 1e-14);
  EXPECT_THROW(vbs::entropy_in_base(1.0, 1.0), vbs::DomainError);
}

TEST(SpectrumDistance, PadsWithZeros) {
  EXPECT_DOUBLE_EQ(vbs::spectrum_distance(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(vbs::spectrum_distance(std::vector<double>{0.6, 0.4}, std::vector<double>{0.5, 0.3, 0.2}), 0.2);
}

TEST(PartialTrace, ProductStateIsPure) {
  Vector v = Vector::Zero(6);
  v(4) = 1.0;  // |1>|1> in 2 x 3
  const vbs::PureState state({2, 3}, {"a", "b"}, v);
  const vbs::SpectrumReport r = vbs::schmidt_spectrum(state, {0, 1});
  EXPECT_NEAR(r.eigenvalues.front(), 1.0, 1e-14);
  EXPECT_NEAR(r.von_neumann, 0.0, 1e-14);
}

TEST(PartialTrace, BellPairIsMaximallyMixed) {
  for (int n = 2; n <= 4; ++n) {
    const vbs::PureState state({static_cast<std::size_t>(n), static_cast<std::size_t>(n)}, {"a", "b"},
                               vbs::bell_vector(vbs::BellIndex(n, 1, n - 1)));
    const vbs::SpectrumReport r = vbs::schmidt_spectrum(state, {1, 1});
    EXPECT_NEAR(r.von_neumann, std::log(static_cast<double>(n)), 1e-13);
  }
}

TEST(PartialTrace, BlockAndEnvironmentShareSpectrum) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> dims;
    const int sites = 2 + static_cast<int>(rng() % 3);
    for (int s = 0; s < sites; ++s) dims.push_back(2 + rng() % 3);
    const vbs::PureState state = random_state(dims, rng);
    const std::size_t first = rng() % sites;
    const std::size_t count = 1 + rng() % (sites - first);
    if (count == static_cast<std::size_t>(sites)) continue;
    const vbs::SiteRange block{first, count};
    const vbs::SpectrumReport a = vbs::hermitian_spectrum(vbs::reduced_density(state, block));
    const vbs::SpectrumReport b = vbs::hermitian_spectrum(vbs::environment_density(state, block));
    ASSERT_LT(vbs::spectrum_distance(a.eigenvalues, b.eigenvalues), 1e-12) << "trial " << trial;
    const vbs::SpectrumReport s = vbs::schmidt_spectrum(state, block);
    ASSERT_LT(vbs::spectrum_distance(a.eigenvalues, s.eigenvalues), 1e-12);
  }
}

TEST(PartialTrace, DensityIsHermitianUnitTrace) {
  std::mt19937 rng(3);
  const vbs::PureState state = random_state({3, 2, 4}, rng);
  const vbs::DensityMatrix rho = vbs::reduced_density(state, {1, 2});
  EXPECT_EQ(rho.dimension(), 8u);
  EXPECT_NEAR(rho.data().trace().real(), 1.0, 1e-13);
  EXPECT_LT((rho.data() - rho.data().adjoint()).norm(), 1e-14);
}

TEST(PartialTrace, BudgetAndRangeErrors) {
  std::mt19937 rng(8);
  const vbs::PureState state = random_state({4, 4, 4}, rng);
  EXPECT_THROW(vbs::reduced_density(state, {0, 2}, 8), vbs::BudgetError);
  EXPECT_THROW(vbs::schmidt_spectrum(state, {0, 2}, 3), vbs::BudgetError);
  EXPECT_THROW(vbs::reduced_density(state, {2, 2}), vbs::DomainError);
  EXPECT_THROW(vbs::reduced_density(state, {0, 0}), vbs::DomainError);
}

TEST(DensityMatrixCtor, Validates) {
  EXPECT_THROW(vbs::DensityMatrix({2}, Matrix::Identity(2, 2)), vbs::NumericalError);
  EXPECT_THROW(vbs::DensityMatrix({3}, Matrix::Identity(2, 2) / 2.0), vbs::DomainError);
  EXPECT_NO_THROW(vbs::DensityMatrix({2}, Matrix::Identity(2, 2) / 2.0));
}

}  // namespace
