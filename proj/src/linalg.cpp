#include "premon/linalg.hpp"

#include <algorithm>
#include <array>

#include "premon/error.hpp"

namespace premon {

  Matrix kron(Matrix const& a, Matrix const& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
    }
    return out;
  }

  Matrix kron_all(std::span<Matrix const> factors) {
    Matrix out = Matrix::Identity(1, 1);
    for (auto const& f : factors) {
      out = kron(out, f);
    }
    return out;
  }

  double max_abs(Matrix const& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  }

  double max_abs_diff(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw InvalidArgument("max_abs_diff: shape mismatch");
    }
    return max_abs(a - b);
  }

  Matrix leg_permutation_matrix(std::span<int const> dims,
                                std::span<int const> perm) {
    auto const k = dims.size();
    if (perm.size() != k) {
      throw InvalidArgument("leg_permutation_matrix: size mismatch");
    }
    std::vector<int> dest_dims(k, 0);
    std::vector<bool> used(k, false);
    for (std::size_t j = 0; j < k; ++j) {
      auto p = perm[j];
      if (p < 0 || static_cast<std::size_t>(p) >= k || used[p]) {
        throw InvalidArgument("leg_permutation_matrix: not a permutation");
      }
      used[p]      = true;
      dest_dims[p] = dims[j];
    }
    int total = 1;
    for (auto d : dims) {
      total *= d;
    }
    // stride of each destination slot in the destination flattening
    std::vector<int> dest_stride(k, 1);
    for (std::size_t s = k; s-- > 1;) {
      dest_stride[s - 1] = dest_stride[s] * dest_dims[s];
    }
    Matrix out = Matrix::Zero(total, total);
    std::vector<int> idx(k, 0);
    for (int src = 0; src < total; ++src) {
      int rem = src;
      for (std::size_t j = k; j-- > 0;) {
        idx[j] = rem % dims[j];
        rem /= dims[j];
      }
      int dst = 0;
      for (std::size_t j = 0; j < k; ++j) {
        dst += idx[j] * dest_stride[perm[j]];
      }
      out(dst, src) = 1.0;
    }
    return out;
  }

  Matrix embed_legs(Matrix const&        m,
                    std::span<int const> dims,
                    std::span<int const> slots) {
    auto const k = dims.size();
    std::vector<int>  perm(slots.begin(), slots.end());
    std::vector<bool> taken(k, false);
    int inner = 1;
    for (auto s : slots) {
      if (s < 0 || static_cast<std::size_t>(s) >= k || taken[s]) {
        throw InvalidArgument("embed_legs: bad slot list");
      }
      taken[s] = true;
      inner *= dims[s];
    }
    if (m.rows() != inner || m.cols() != inner) {
      throw InvalidArgument("embed_legs: operator does not match slot dimensions");
    }
    int rest = 1;
    for (std::size_t s = 0; s < k; ++s) {
      if (!taken[s]) {
        perm.push_back(static_cast<int>(s));
        rest *= dims[s];
      }
    }
    std::vector<int> src_dims;
    for (auto p : perm) {
      src_dims.push_back(dims[p]);
    }
    Matrix const p = leg_permutation_matrix(src_dims, perm);
    return p * kron(m, Matrix::Identity(rest, rest)) * p.transpose();
  }

  Matrix flip_matrix(int d1, int d2) {
    std::array<int, 2> dims{d1, d2};
    std::array<int, 2> perm{1, 0};
    return leg_permutation_matrix(dims, perm);
  }

  bool is_identity(Matrix const& m, double tol) {
    if (m.rows() != m.cols()) {
      return false;
    }
    return max_abs_diff(m, Matrix::Identity(m.rows(), m.cols())) <= tol;
  }

}  // namespace premon
