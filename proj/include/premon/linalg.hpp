#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace premon {

  using Complex = std::complex<double>;
  using Matrix  = Eigen::MatrixXcd;

  inline constexpr double kDefaultTolerance = 1e-9;

  Matrix kron(Matrix const& a, Matrix const& b);

  // Kronecker product of a list, left to right. Empty list gives the 1x1 identity.
  Matrix kron_all(std::span<Matrix const> factors);

  // Entrywise max-norm.
  double max_abs(Matrix const& m);
  double max_abs_diff(Matrix const& a, Matrix const& b);

  // Permutation of tensor factors. Source factor j (dimension dims[j]) is sent
  // to destination slot perm[j]. Returns the matrix mapping the source
  // ordering of V_0 (x) ... (x) V_{k-1} to the destination ordering.
  Matrix leg_permutation_matrix(std::span<int const> dims,
                                std::span<int const> perm);

  // Operator m acting on the factors `slots` (in m's own factor order) of
  // V_0 (x) ... (x) V_{k-1}, dims[i] = dim V_i, extended by the identity on the
  // remaining factors.
  Matrix embed_legs(Matrix const&        m,
                    std::span<int const> dims,
                    std::span<int const> slots);

  // Flip V (x) W -> W (x) V for dim V = d1, dim W = d2.
  Matrix flip_matrix(int d1, int d2);

  bool is_identity(Matrix const& m, double tol);

}  // namespace premon
