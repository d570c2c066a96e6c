#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vbs/renyi_value.hpp"
#include "vbs/weyl.hpp"

namespace vbs {

using Rational = boost::multiprecision::cpp_rational;

// p_n(L) = (-1 / (n^2 - 1))^L
Rational p_n_exact(int n, int L);
double p_n(int n, int L);

/// Two-level block spectrum: the singlet eigenvalue plus one eigenvalue of
/// multiplicity n^2 - 1 on the adjoint labels.
struct OpenSpectrum {
  int n = 0;
  int block = 0;
  double singlet = 0.0;
  double adjoint = 0.0;

  int adjoint_multiplicity() const { return n * n - 1; }
  // All n^2 eigenvalues, sorted descending.
  std::vector<double> eigenvalues() const;
};

struct PeriodicSpectrum {
  int n = 0;
  int chain = 0;
  int block = 0;
  double singlet = 0.0;
  double adjoint = 0.0;

  int adjoint_multiplicity() const { return n * n - 1; }
  std::vector<double> eigenvalues() const;
};

struct ExactSpectrum {
  Rational singlet;
  Rational adjoint;
};

ExactSpectrum lambda_open_exact(int n, int L);
ExactSpectrum lambda_periodic_exact(int n, int N, int L);

OpenSpectrum lambda_open(int n, int L);
PeriodicSpectrum lambda_periodic(int n, int N, int L);

/// N^2 = (n^2-1)^N (1 + (n^2-1) p_n(N)) / n^2, the squared norm of the
/// unnormalized periodic chain state.
double periodic_norm_squared(int n, int N);

double entropy_open(int n, int L);
double renyi_open(int n, int L, double alpha);
RenyiValue renyi_open(int n, int L, Complex alpha);

double entropy_periodic(int n, int N, int L);
double renyi_periodic(int n, int N, int L, double alpha);
RenyiValue renyi_periodic(int n, int N, int L, Complex alpha);

// Shared by the open and periodic forms: entropies of a spectrum that is
// `singlet` once and `adjoint` n^2 - 1 times.
double two_level_entropy(int n, double singlet, double adjoint);
double two_level_renyi(int n, double singlet, double adjoint, double alpha);
RenyiValue two_level_renyi(int n, double singlet, double adjoint, Complex alpha);

struct BranchPoint {
  Complex alpha;
  int m = 0;
  int sign = 1;        // sign in front of (2m + 1) pi i
  bool even_block = false;
  double residual = 0.0;  // |lambda_singlet^alpha + (n^2-1) lambda_adjoint^alpha|
};

/// Zeros of the open-chain power sum in the complex alpha plane, for m in
/// [m_first, m_last] and both signs, deduplicated on sign * (2m + 1).
std::vector<BranchPoint> branch_points(int n, int L, int m_first, int m_last);

// Power-sum residual at alpha for the open block of length L.
double open_power_sum_residual(int n, int L, Complex alpha);

// T = J - I on the n^2 Bell labels.
Matrix transfer_matrix(int n);
// The n^2-point Fourier matrix with zeta = exp(2 pi i / n^2), scaled by 1/n.
Matrix fourier_diagonalizer(int n);
/// ||U_c^dagger T U_c - diag(n^2-1, -1, ..., -1)||_F
double transfer_diagonalization_residual(int n);

/// Reads lambda_singlet / lambda_adjoint off T^L e_(0,0) / (n^2-1)^L.
OpenSpectrum two_spin_rdm_transfer(int n, int L);

}  // namespace vbs
