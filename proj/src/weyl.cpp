#include "vbs/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

int mod(long long value, int n) {
  const long long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Sign of the permutation held in `perm` (values 0..size-1, all distinct).
int permutation_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

void require_qudit_dimension(int n) {
  if (n < 2) {
    throw DomainError("qudit dimension must be >= 2, got " + std::to_string(n));
  }
}

BellIndex::BellIndex(int n, long long l, long long m) : n_(n), l_(0), m_(0) {
  require_qudit_dimension(n);
  l_ = mod(l, n);
  m_ = mod(m, n);
}

BellIndex BellIndex::from_linear(int n, int k) {
  require_qudit_dimension(n);
  if (k < 0 || k >= n * n) {
    throw DomainError("Bell index " + std::to_string(k) + " out of range for n=" + std::to_string(n));
  }
  return BellIndex(n, k / n, k % n);
}

BellIndex operator+(const BellIndex& a, const BellIndex& b) {
  if (a.n_ != b.n_) {
    throw DomainError("cannot combine Bell indices of different dimension");
  }
  return BellIndex(a.n_, a.l_ + b.l_, a.m_ + b.m_);
}

Complex omega_power(int n, long long k) {
  require_qudit_dimension(n);
  const int r = mod(k, n);
  if (r == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * r / n);
}

Matrix pauli_x(int n) {
  require_qudit_dimension(n);
  Matrix x = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) x((j + 1) % n, j) = 1.0;
  return x;
}

Matrix pauli_z(int n) {
  require_qudit_dimension(n);
  Matrix z = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) z(j, j) = omega_power(n, j);
  return z;
}

Matrix u_lm(const BellIndex& a) {
  const int n = a.n();
  // (X^l Z^m)|j> = omega^{m j} |j + l>
  Matrix u = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    u((j + a.l()) % n, j) = omega_power(n, static_cast<long long>(a.m()) * j);
  }
  return u;
}

PhasedIndex compose(const BellIndex& a, const BellIndex& b) {
  // Z^{m_a} X^{l_b} = omega^{m_a l_b} X^{l_b} Z^{m_a}
  return PhasedIndex{a + b, mod(static_cast<long long>(a.m()) * b.l(), a.n())};
}

Vector bell_vector(const BellIndex& a) {
  const int n = a.n();
  Vector v = Vector::Zero(n * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    v(((j + a.l()) % n) * n + j) = scale * omega_power(n, static_cast<long long>(a.m()) * j);
  }
  return v;
}

Vector conjugate_embedding(int n, int j, int max_n) {
  require_qudit_dimension(n);
  if (n > max_n) {
    throw BudgetError("conjugate embedding limited to n <= " + std::to_string(max_n));
  }
  if (j < 0 || j >= n) {
    throw DomainError("conjugate basis label out of range");
  }
  const int slots = n - 1;
  std::size_t dim = 1;
  for (int s = 0; s < slots; ++s) dim *= static_cast<std::size_t>(n);

  double factorial = 1.0;
  for (int s = 2; s <= slots; ++s) factorial *= s;

  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  std::vector<int> digits(slots);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (int s = slots - 1; s >= 0; --s) {
      digits[s] = static_cast<int>(rest % n);
      rest /= n;
    }
    std::vector<int> perm{j};
    perm.insert(perm.end(), digits.begin(), digits.end());
    std::vector<bool> seen(n, false);
    bool distinct = true;
    for (int p : perm) {
      if (seen[p]) {
        distinct = false;
        break;
      }
      seen[p] = true;
    }
    if (!distinct) continue;
    v(static_cast<Eigen::Index>(idx)) = permutation_sign(perm) / std::sqrt(factorial);
  }
  return v;
}

double swap_identity_residual(int n, int max_n) {
  require_qudit_dimension(n);
  if (n > max_n) {
    throw BudgetError("swap identity check limited to n <= " + std::to_string(max_n));
  }
  const Eigen::Index d = n;
  // Site order (0, 1b, 1, 2b); flat index ((s0 * d + s1b) * d + s1) * d + s2b.
  auto flat = [d](Eigen::Index s0, Eigen::Index s1b, Eigen::Index s1, Eigen::Index s2b) {
    return ((s0 * d + s1b) * d + s1) * d + s2b;
  };

  const Vector singlet = bell_vector(BellIndex::identity(n));
  Vector lhs = Vector::Zero(d * d * d * d);
  for (Eigen::Index s0 = 0; s0 < d; ++s0)
    for (Eigen::Index s1b = 0; s1b < d; ++s1b)
      for (Eigen::Index s1 = 0; s1 < d; ++s1)
        for (Eigen::Index s2b = 0; s2b < d; ++s2b)
          lhs(flat(s0, s1b, s1, s2b)) = singlet(s0 * d + s1b) * singlet(s1 * d + s2b);

  Vector rhs = Vector::Zero(d * d * d * d);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      const Vector outer = bell_vector(BellIndex(n, l, m));   // pair (0, 2b)
      const Vector inner = bell_vector(BellIndex(n, l, -m));  // pair (1b, 1)
      for (Eigen::Index s0 = 0; s0 < d; ++s0)
        for (Eigen::Index s1b = 0; s1b < d; ++s1b)
          for (Eigen::Index s1 = 0; s1 < d; ++s1)
            for (Eigen::Index s2b = 0; s2b < d; ++s2b)
              rhs(flat(s0, s1b, s1, s2b)) += outer(s0 * d + s2b) * inner(s1b * d + s1) / static_cast<double>(n);
    }
  }
  return (lhs - rhs).norm();
}

double bell_invariance_residual(const BellIndex& a) {
  const Matrix pair_op = Eigen::kroneckerProduct(u_lm(a), u_lm(BellIndex(a.n(), a.l(), -a.m()))).eval();
  const Vector singlet = bell_vector(BellIndex::identity(a.n()));
  return (pair_op * singlet - singlet).norm();
}

double unitarity_residual(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

}  // namespace vbs
