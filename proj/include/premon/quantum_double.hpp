#pragma once

#include <span>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/characters.hpp"
#include "premon/group_algebra.hpp"

namespace premon {

  // Irrep of D(G) induced from conjugacy class `class_index` and irrep
  // `centralizer_label` of the centralizer of the class representative.
  struct DoubleIrrep {
    int                  label = 0;
    Representation       rep;
    std::vector<Complex> character;  // trace at every basis element g h*
    std::size_t          class_index       = 0;
    int                  centralizer_label = 0;

    int dim() const noexcept {
      return rep.dim();
    }
  };

  // (g1 h1*)(g2 h2*) as a one-leg tensor (zero or a single basis element).
  AlgebraTensor double_product_basis(GroupPtr const& group,
                                     Element g1, Element h1,
                                     Element g2, Element h2);

  // Coproduct of a one-leg D(G) element.
  AlgebraTensor double_coproduct(AlgebraTensor const& x);

  // R = sum_g g (x) g*, with g = sum_h g h* and g* = e g*.
  AlgebraTensor double_r_matrix(GroupPtr const& group);

  // R of C[G], e (x) e.
  AlgebraTensor group_algebra_r_matrix(GroupPtr const& group);

  // All irreps of D(G) by induction from centralizers. Centralizers that are
  // abelian use their character table; a centralizer equal to G uses
  // `group_irreps` (complete, in table order). Anything else throws
  // UnsupportedGroup. Output is ordered by (class, centralizer irrep).
  std::vector<DoubleIrrep> dpr_irreps(GroupPtr const&        group,
                                      std::span<Irrep const> group_irreps = {});

  // E_lambda = (d_lambda / |G|) sum_{g,h} chi_lambda(g^{-1} h*) g h*.
  // Throws InvalidArgument when sum d^2 != |G|^2.
  std::vector<AlgebraTensor> double_idempotents(GroupPtr const&              group,
                                                std::span<DoubleIrrep const> irreps);

  // The irreps of D(D_3) written out on generators, in the listing order
  // 0: tau = 1; 1: tau = -1; 2: 2-dim with g* = delta(g,e); 3, 4, 5: 2-dim
  // with s* = diag(1,0), (s^-1)* = diag(0,1), s = diag(w^k, w^2k), k = 0, 1, 2;
  // 6, 7: 3-dim with tau = +/- the transposition of the last two axes.
  // Characters are filled in; class_index/centralizer_label are left at 0.
  std::vector<DoubleIrrep> reference_double_d3_irreps();

  ModelPtr quantum_double_model(GroupPtr const&        group,
                                std::span<Irrep const> group_irreps,
                                std::string            name = {});

  ModelPtr dihedral_double_model(int n);

  // Defects of the quasi-triangular identities with trivial coassociator,
  // evaluated algebraically: R Delta(x) = Delta^T(x) R over the whole basis,
  // (Delta (x) id) R = R13 R23 and (id (x) Delta) R = R13 R12.
  struct QuasiTriangularDefects {
    double intertwining = 0;
    double delta_left   = 0;
    double delta_right  = 0;
  };

  QuasiTriangularDefects quasi_triangular_defects(AlgebraTensor const& r);

}  // namespace premon
