#pragma once

#include <vector>

#include "vbs/weyl.hpp"

namespace vbs {

struct JacobiOptions {
  // Iterate until the off-diagonal Frobenius norm drops below this.
  double off_diagonal_tolerance = 1e-13;
  int max_sweeps = 100;
  // ||A - A^dagger||_F allowed on input, relative to max(1, ||A||_F).
  double hermiticity_tolerance = 1e-12;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  // unsorted diagonal after convergence
  int sweeps = 0;
  double off_diagonal = 0.0;
};

/// Cyclic complex Jacobi rotations for a dense Hermitian matrix. Each (p, q)
/// rotation first removes the phase of a_pq, then applies the real symmetric
/// Jacobi rotation that zeroes it.
JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& options = {});

}  // namespace vbs
