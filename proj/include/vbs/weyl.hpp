#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace vbs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest n for which the antisymmetric-tensor realization of the conjugate
// representation is materialized (its dimension is n^(n-1)).
inline constexpr int kDefaultMaxEmbeddingN = 4;

/// A pair (l, m) in Z_n x Z_n labelling the generalized Pauli operator
/// U_{l,m} = X^l Z^m and the Bell state Phi_{l,m}. Both components are kept
/// reduced modulo n; arithmetic is componentwise modulo n.
class BellIndex {
 public:
  BellIndex(int n, long long l, long long m);

  static BellIndex identity(int n) { return BellIndex(n, 0, 0); }
  // Inverse of linear(): k = l * n + m.
  static BellIndex from_linear(int n, int k);

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }
  int linear() const { return l_ * n_ + m_; }
  bool is_identity() const { return l_ == 0 && m_ == 0; }

  BellIndex operator-() const { return BellIndex(n_, -l_, -m_); }
  friend BellIndex operator+(const BellIndex& a, const BellIndex& b);
  friend BellIndex operator-(const BellIndex& a, const BellIndex& b) { return a + (-b); }
  friend bool operator==(const BellIndex& a, const BellIndex& b) = default;

 private:
  int n_;
  int l_;
  int m_;
};

/// U_a * U_b = omega^phase_exp * U_index, with phase_exp kept in [0, n).
struct PhasedIndex {
  BellIndex index;
  int phase_exp;

  friend bool operator==(const PhasedIndex&, const PhasedIndex&) = default;
};

// Throws DomainError unless n >= 2.
void require_qudit_dimension(int n);

// omega^k for omega = exp(2 pi i / n); k is reduced modulo n first.
Complex omega_power(int n, long long k);

Matrix pauli_x(int n);
Matrix pauli_z(int n);
Matrix u_lm(const BellIndex& a);

PhasedIndex compose(const BellIndex& a, const BellIndex& b);

/// |Phi_a> = (U_a (x) I)|Phi_{0,0}> in the two-qudit basis |j>|k-bar>,
/// flattened as j * n + k.
Vector bell_vector(const BellIndex& a);

/// |j-bar> realized as the normalized totally antisymmetric tensor over n-1
/// fundamental qudits (dimension n^(n-1)).
Vector conjugate_embedding(int n, int j, int max_n = kDefaultMaxEmbeddingN);

/// Norm of the difference between the two sides of the two-singlet
/// entanglement-swapping identity
///   |Phi_00>_{0,1b} |Phi_00>_{1,2b} = (1/n) sum_{l,m} |Phi_{l,m}>_{0,2b} |Phi_{l,-m}>_{1b,1}
/// assembled in the site ordering (0, 1b, 1, 2b).
double swap_identity_residual(int n, int max_n = kDefaultMaxEmbeddingN);

/// Norm of (U_{l,m} (x) U_{l,-m})|Phi_00> - |Phi_00>, the second factor acting
/// on the conjugate slot.
double bell_invariance_residual(const BellIndex& a);

// ||U^dagger U - I||_F
double unitarity_residual(const Matrix& u);

}  // namespace vbs
