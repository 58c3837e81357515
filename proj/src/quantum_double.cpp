#include "premon/quantum_double.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "premon/error.hpp"

namespace premon {

  AlgebraTensor double_product_basis(GroupPtr const& group,
                                     Element g1, Element h1,
                                     Element g2, Element h2) {
    auto const A = Algebra::quantum_double(group);
    AlgebraTensor out(A, 1);
    if (auto p = A.multiply(A.double_basis(g1, h1), A.double_basis(g2, h2))) {
      Basis b = *p;
      out.add({&b, 1}, 1.0);
    }
    return out;
  }

  AlgebraTensor double_coproduct(AlgebraTensor const& x) {
    if (x.algebra().kind() != AlgebraKind::quantum_double || x.legs() != 1) {
      throw InvalidArgument("double_coproduct: expected a one-leg D(G) element");
    }
    return coproduct_leg(x, 0);
  }

  AlgebraTensor double_r_matrix(GroupPtr const& group) {
    auto const    A = Algebra::quantum_double(group);
    auto const&   G = *group;
    AlgebraTensor r(A, 2);
    for (Element g = 0; g < G.order(); ++g) {
      for (Element h = 0; h < G.order(); ++h) {
        std::array<Basis, 2> key{A.double_basis(g, h), A.double_basis(G.identity(), g)};
        r.add(key, 1.0);
      }
    }
    return r;
  }

  AlgebraTensor group_algebra_r_matrix(GroupPtr const& group) {
    return AlgebraTensor::unit(Algebra::group_algebra(group), 2);
  }

  namespace {
    // Irreps of the centralizer subgroup, matrices indexed by position in
    // `members`.
    std::vector<std::vector<Matrix>>
    centralizer_irreps(GroupPtr const&             group,
                       std::vector<Element> const& members,
                       std::span<Irrep const>      group_irreps) {
      std::vector<std::vector<Matrix>> out;
      if (members.size() == group->order() && !group->is_abelian()) {
        auto const classes = conjugacy_classes(*group);
        if (group_irreps.size() != classes.size()) {
          throw UnsupportedGroup(
              "dpr_irreps: centralizer is the whole non-abelian group; explicit "
              "irreps of G are required");
        }
        for (auto const& irrep : group_irreps) {
          out.push_back(irrep.rep.images());
        }
        return out;
      }
      auto sub = subgroup(*group, members);
      if (!sub->is_abelian()) {
        throw UnsupportedGroup(
            "dpr_irreps: non-abelian proper centralizer; irreps unavailable");
      }
      auto const table = character_table(sub);
      for (auto const& irrep : abelian_irreps(table)) {
        out.push_back(irrep.rep.images());
      }
      return out;
    }
  }  // namespace

  std::vector<DoubleIrrep> dpr_irreps(GroupPtr const&        group,
                                      std::span<Irrep const> group_irreps) {
    auto const& G       = *group;
    auto const  A       = Algebra::quantum_double(group);
    auto const  classes = conjugacy_classes(G);

    std::vector<DoubleIrrep> out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      auto const& cls = classes[ci].members;
      auto const  a   = classes[ci].representative;
      auto const  Z   = centralizer(G, a);

      std::vector<int64_t> z_position(G.order(), -1);
      for (std::size_t i = 0; i < Z.members.size(); ++i) {
        z_position[Z.members[i]] = static_cast<int64_t>(i);
      }
      std::vector<int64_t> class_position(G.order(), -1);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        class_position[cls[i]] = static_cast<int64_t>(i);
      }
      // x_i a x_i^{-1} = cls[i], smallest such x_i
      std::vector<Element> coset(cls.size());
      for (std::size_t i = 0; i < cls.size(); ++i) {
        Element x = 0;
        while (G.conjugate(a, x) != cls[i]) {
          ++x;
        }
        coset[i] = x;
      }

      auto const rhos = centralizer_irreps(group, Z.members, group_irreps);
      for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
        auto const& rho = rhos[ri];
        auto const  m   = static_cast<int>(rho.front().rows());
        auto const  r   = static_cast<int>(cls.size());
        std::vector<Matrix> images;
        images.reserve(A.dimension());
        for (Basis b = 0; b < A.dimension(); ++b) {
          auto [g, h] = A.double_parts(b);
          Matrix mat  = Matrix::Zero(r * m, r * m);
          // h* projects onto the block of class element h, then g moves it to
          // g h g^{-1} with centralizer factor x_k^{-1} g x_i
          if (auto i = class_position[h]; i >= 0) {
            auto const k = class_position[G.conjugate(h, g)];
            auto const z = G.multiply(G.multiply(G.inverse(coset[k]), g), coset[i]);
            mat.block(k * m, i * m, m, m) = rho[z_position[z]];
          }
          images.push_back(std::move(mat));
        }
        Representation rep(A, r * m, std::move(images));
        out.push_back(DoubleIrrep{static_cast<int>(out.size()), rep, rep.traces(),
                                  ci, static_cast<int>(ri)});
      }
    }
    return out;
  }

  std::vector<AlgebraTensor> double_idempotents(GroupPtr const&              group,
                                                std::span<DoubleIrrep const> irreps) {
    auto const& G = *group;
    auto const  A = Algebra::quantum_double(group);
    std::size_t sum_sq = 0;
    for (auto const& irrep : irreps) {
      sum_sq += static_cast<std::size_t>(irrep.dim() * irrep.dim());
    }
    if (sum_sq != A.dimension()) {
      throw InvalidArgument("double_idempotents: irreps are incomplete (sum of d^2 = "
                            + std::to_string(sum_sq) + ", expected "
                            + std::to_string(A.dimension()) + ")");
    }
    auto const n = static_cast<double>(G.order());
    std::vector<AlgebraTensor> out;
    for (auto const& irrep : irreps) {
      AlgebraTensor e(A, 1);
      for (Element g = 0; g < G.order(); ++g) {
        for (Element h = 0; h < G.order(); ++h) {
          Basis b = A.double_basis(g, h);
          auto  chi = irrep.character[A.double_basis(G.inverse(g), h)];
          e.add({&b, 1}, irrep.dim() / n * chi);
        }
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<DoubleIrrep> reference_double_d3_irreps() {
    auto const group = dihedral(3);
    auto const A     = Algebra::quantum_double(group);
    auto const& G    = *group;
    Complex const w  = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

    // group part from s, t; dual part from a function h -> matrix
    auto build = [&](Matrix const& s, Matrix const& t, auto dual) {
      auto const d = static_cast<int>(s.rows());
      std::vector<Matrix> g_images;
      Matrix              p = Matrix::Identity(d, d);
      for (int i = 0; i < 3; ++i) {
        g_images.push_back(p);
        p = p * s;
      }
      for (int i = 0; i < 3; ++i) {
        g_images.push_back(g_images[i] * t);
      }
      std::vector<Matrix> images;
      for (Basis b = 0; b < A.dimension(); ++b) {
        auto [g, h] = A.double_parts(b);
        images.push_back(g_images[g] * dual(h));
      }
      return Representation(A, d, std::move(images));
    };
    auto scalar = [](Complex v) { return Matrix::Constant(1, 1, v); };
    auto delta_e = [&](int d) {
      return [&G, d](Element h) -> Matrix {
        return h == G.identity() ? Matrix(Matrix::Identity(d, d))
                                 : Matrix(Matrix::Zero(d, d));
      };
    };
    Matrix flip = Matrix::Zero(2, 2);
    flip(0, 1) = flip(1, 0) = 1.0;

    std::vector<Representation> reps;
    reps.push_back(build(scalar(1), scalar(1), delta_e(1)));
    reps.push_back(build(scalar(1), scalar(-1), delta_e(1)));
    {
      Matrix s = Matrix::Zero(2, 2);
      s(0, 0) = w;
      s(1, 1) = w * w;
      reps.push_back(build(s, flip, delta_e(2)));
    }
    for (int k = 0; k < 3; ++k) {
      Matrix s = Matrix::Zero(2, 2);
      s(0, 0) = std::pow(w, k);
      s(1, 1) = std::pow(w, 2 * k);
      reps.push_back(build(s, flip, [](Element h) -> Matrix {
        Matrix m = Matrix::Zero(2, 2);
        if (h == 1) {
          m(0, 0) = 1.0;  // s*
        } else if (h == 2) {
          m(1, 1) = 1.0;  // (s^{-1})*
        }
        return m;
      }));
    }
    for (int sign : {1, -1}) {
      Matrix s = Matrix::Zero(3, 3);
      s(0, 1) = s(1, 2) = s(2, 0) = 1.0;
      Matrix t = Matrix::Zero(3, 3);
      t(0, 0) = t(1, 2) = t(2, 1) = 1.0;
      t *= static_cast<double>(sign);
      reps.push_back(build(s, t, [](Element h) -> Matrix {
        // (s^i t)* = E^{i+1}_{i+1}, (s^i)* = 0
        Matrix m = Matrix::Zero(3, 3);
        if (h >= 3) {
          m(h - 3, h - 3) = 1.0;
        }
        return m;
      }));
    }
    std::vector<DoubleIrrep> out;
    for (auto& rep : reps) {
      out.push_back(DoubleIrrep{static_cast<int>(out.size()), rep, rep.traces(), 0, 0});
    }
    return out;
  }

  ModelPtr quantum_double_model(GroupPtr const&        group,
                                std::span<Irrep const> group_irreps,
                                std::string            name) {
    auto irreps = dpr_irreps(group, group_irreps);
    AlgebraModel model{Algebra::quantum_double(group), {},
                       double_idempotents(group, irreps), std::move(name)};
    for (auto const& irrep : irreps) {
      model.irreps.push_back(irrep.rep);
    }
    return std::make_shared<AlgebraModel const>(std::move(model));
  }

  ModelPtr dihedral_double_model(int n) {
    auto group  = dihedral(n);
    auto irreps = dihedral_irreps(group, n);
    return quantum_double_model(group, irreps, "D(D" + std::to_string(n) + ")");
  }

  QuasiTriangularDefects quasi_triangular_defects(AlgebraTensor const& r) {
    if (r.legs() != 2) {
      throw InvalidArgument("quasi_triangular_defects: R must have two legs");
    }
    auto const& A    = r.algebra();
    std::array<int, 2> const swap{1, 0};
    QuasiTriangularDefects out;
    for (Basis b = 0; b < A.dimension(); ++b) {
      auto x      = AlgebraTensor::basis(A, {&b, 1});
      auto delta  = coproduct_leg(x, 0);
      auto lhs    = product(r, delta);
      auto rhs    = product(permute_legs(delta, swap), r);
      out.intertwining = std::max(out.intertwining, max_abs_diff(lhs, rhs));
    }
    // R13 = r with a unit inserted in slot 2, etc.
    std::array<int, 3> const to13{0, 2, 1};
    std::array<int, 3> const to23{1, 2, 0};
    auto r12 = append_unit_legs(r, 1);
    auto r13 = permute_legs(r12, to13);
    auto r23 = permute_legs(r12, to23);
    out.delta_left  = max_abs_diff(coproduct_leg(r, 0), product(r13, r23));
    out.delta_right = max_abs_diff(coproduct_leg(r, 1), product(r13, r12));
    return out;
  }

}  // namespace premon
