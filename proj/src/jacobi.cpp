#include "vbs/jacobi.hpp"

#include <cmath>
#include <string>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zero a(p, q) with A <- V^dagger A V, where
//   V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on the (p, q) plane
// and a(p, q) = |a(p, q)| e^{i phi}.
void rotate(Matrix& a, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex conj_phase = std::conj(phase);

  const Eigen::Index dim = a.rows();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * conj_phase * akq;
    a(k, q) = s * akp + c * conj_phase * akq;
  }
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
}

}  // namespace

JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& options) {
  if (a.rows() != a.cols()) throw DomainError("eigenvalues need a square matrix");
  const double scale = std::max(1.0, a.norm());
  const double asymmetry = (a - a.adjoint()).norm();
  if (asymmetry > options.hermiticity_tolerance * scale) {
    throw NumericalError("matrix is not Hermitian: ||A - A^dagger||_F = " + std::to_string(asymmetry));
  }
  // Symmetrize so rounding-level asymmetry cannot stall the sweep.
  a = (0.5 * (a + a.adjoint())).eval();

  JacobiResult result;
  const Eigen::Index dim = a.rows();
  result.off_diagonal = off_diagonal_norm(a);
  while (result.off_diagonal >= options.off_diagonal_tolerance) {
    if (result.sweeps == options.max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                           " sweeps (off-diagonal norm " + std::to_string(result.off_diagonal) + ")");
    }
    for (Eigen::Index p = 0; p + 1 < dim; ++p)
      for (Eigen::Index q = p + 1; q < dim; ++q) rotate(a, p, q);
    ++result.sweeps;
    result.off_diagonal = off_diagonal_norm(a);
  }

  result.eigenvalues.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) result.eigenvalues.push_back(a(i, i).real());
  return result;
}

}  // namespace vbs
