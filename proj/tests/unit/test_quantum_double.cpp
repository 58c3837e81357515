#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>

#include "premon/error.hpp"
#include "premon/quantum_double.hpp"

using namespace premon;
using Catch::Matchers::WithinAbs;

TEST_CASE("double product rule") {
  auto G = dihedral(3);
  auto A = Algebra::quantum_double(G);
  // t* s = s (s^-1 t s)* ; s^-1 t s = s^2 t s = s^2 s^2 t = st
  auto x = double_product_basis(G, 0, 3, 1, 4);
  Basis st = A.double_basis(1, 4);
  CHECK(x.size() == 1);
  CHECK(x.coefficient({&st, 1}) == Complex(1.0));
  // g* h* = delta(g,h) h*
  CHECK(double_product_basis(G, 0, 2, 0, 2).size() == 1);
  CHECK(double_product_basis(G, 0, 2, 0, 1).empty());
}

TEST_CASE("double product is associative on D(D3) and D(D4)") {
  for (int n : {3, 4}) {
    auto A = Algebra::quantum_double(dihedral(n));
    auto N = static_cast<Basis>(A.dimension());
    for (Basis a = 0; a < N; ++a) {
      for (Basis b = 0; b < N; ++b) {
        auto ab = A.multiply(a, b);
        for (Basis c = 0; c < N; ++c) {
          auto bc  = A.multiply(b, c);
          auto lhs = ab ? A.multiply(*ab, c) : std::nullopt;
          auto rhs = bc ? A.multiply(a, *bc) : std::nullopt;
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("double coproduct laws") {
  auto A = Algebra::quantum_double(dihedral(3));
  for (Basis b = 0; b < A.dimension(); ++b) {
    auto x = AlgebraTensor::basis(A, {&b, 1});
    auto d = double_coproduct(x);
    CHECK(d.size() == 6);
    CHECK(max_abs_diff(coproduct_leg(d, 0), coproduct_leg(d, 1)) < 1e-15);
    CHECK(max_abs_diff(counit_leg(d, 0), x) < 1e-15);
    CHECK(max_abs_diff(counit_leg(d, 1), x) < 1e-15);
    // Delta is multiplicative
    for (Basis c = 0; c < A.dimension(); c += 5) {
      auto y = AlgebraTensor::basis(A, {&c, 1});
      CHECK(max_abs_diff(double_coproduct(product(x, y)),
                         product(d, double_coproduct(y))) < 1e-15);
    }
  }
}

TEST_CASE("R-matrix quasi-triangularity for D(D3), D(D4)") {
  for (int n : {3, 4}) {
    auto defects = quasi_triangular_defects(double_r_matrix(dihedral(n)));
    CHECK(defects.intertwining < 1e-12);
    CHECK(defects.delta_left < 1e-12);
    CHECK(defects.delta_right < 1e-12);
  }
  auto ga = quasi_triangular_defects(group_algebra_r_matrix(dihedral(3)));
  CHECK(ga.intertwining < 1e-12);
}

TEST_CASE("the flipped R fails the intertwining law") {
  auto r  = double_r_matrix(dihedral(3));
  std::array<int, 2> swap{1, 0};
  CHECK(quasi_triangular_defects(permute_legs(r, swap)).intertwining > 0.5);
}

TEST_CASE("DPR irreps of D(D3)") {
  auto G      = dihedral(3);
  auto irreps = dpr_irreps(G, dihedral_irreps(G, 3));
  REQUIRE(irreps.size() == 8);
  std::vector<int> dims;
  for (auto const& irrep : irreps) {
    dims.push_back(irrep.dim());
  }
  CHECK(dims == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3});
  auto const& A = irreps.front().rep.algebra();
  for (auto const& irrep : irreps) {
    // homomorphism on the whole basis
    for (Basis a = 0; a < A.dimension(); ++a) {
      for (Basis b = 0; b < A.dimension(); ++b) {
        auto   ab  = A.multiply(a, b);
        Matrix rhs = ab ? irrep.rep.image(*ab)
                        : Matrix(Matrix::Zero(irrep.dim(), irrep.dim()));
        REQUIRE(max_abs_diff(Matrix(irrep.rep.image(a) * irrep.rep.image(b)), rhs) < 1e-12);
      }
    }
    CHECK(is_identity(evaluate(AlgebraTensor::unit(A), irrep.rep), 1e-12));
    // character support: zero unless gh = hg
    for (Basis b = 0; b < A.dimension(); ++b) {
      auto [g, h] = A.double_parts(b);
      if (G->multiply(g, h) != G->multiply(h, g)) {
        CHECK(std::abs(irrep.character[b]) < 1e-12);
      }
    }
  }
}

TEST_CASE("DPR irreps agree with the written-out D(D3) irreps by character") {
  auto G         = dihedral(3);
  auto computed  = dpr_irreps(G, dihedral_irreps(G, 3));
  auto reference = reference_double_d3_irreps();
  REQUIRE(reference.size() == 8);
  std::vector<int> matched(8, -1);
  for (std::size_t r = 0; r < reference.size(); ++r) {
    for (std::size_t c = 0; c < computed.size(); ++c) {
      double diff = 0;
      for (std::size_t b = 0; b < 36; ++b) {
        diff = std::max(diff, std::abs(reference[r].character[b] - computed[c].character[b]));
      }
      if (diff < 1e-12) {
        CHECK(matched[r] == -1);
        matched[r] = static_cast<int>(c);
      }
    }
  }
  std::vector<int> sorted = matched;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("double idempotent laws for D(D3), D(D4)") {
  for (int n : {3, 4}) {
    auto model = dihedral_double_model(n);
    auto const& E = model->idempotents;
    auto const& A = model->algebra;
    AlgebraTensor sum(A, 1);
    for (std::size_t l = 0; l < E.size(); ++l) {
      sum = sum + E[l];
      for (std::size_t m = 0; m < E.size(); ++m) {
        auto expect = l == m ? E[m] : AlgebraTensor(A, 1);
        CHECK(max_abs_diff(product(E[l], E[m]), expect) < 1e-12);
        auto d = model->irreps[l].dim();
        CHECK(max_abs_diff(evaluate(E[m], model->irreps[l]),
                           (l == m ? 1.0 : 0.0) * Matrix::Identity(d, d)) < 1e-12);
      }
    }
    CHECK(max_abs_diff(sum, AlgebraTensor::unit(A)) < 1e-12);
  }
}

TEST_CASE("incomplete double irreps are rejected") {
  auto G      = dihedral(3);
  auto irreps = dpr_irreps(G, dihedral_irreps(G, 3));
  irreps.pop_back();
  CHECK_THROWS_AS(double_idempotents(G, irreps), InvalidArgument);
}

TEST_CASE("non-abelian whole-group centralizer needs G irreps") {
  CHECK_THROWS_AS(dpr_irreps(dihedral(3)), UnsupportedGroup);
}
