#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "premon/error.hpp"
#include "premon/group_algebra.hpp"

using namespace premon;
using Catch::Matchers::WithinAbs;

namespace {
  AlgebraTensor element(Algebra const& A, std::vector<std::pair<Basis, Complex>> terms) {
    AlgebraTensor x(A, 1);
    for (auto [b, c] : terms) {
      x.add({&b, 1}, c);
    }
    return x;
  }
}  // namespace

TEST_CASE("sparse product basics in C[D3]") {
  auto const A = Algebra::group_algebra(dihedral(3));
  auto s  = element(A, {{1, 1.0}});
  auto s2 = element(A, {{2, 1.0}});
  CHECK(max_abs_diff(product(s, s2), AlgebraTensor::unit(A)) < 1e-15);
  auto ee = AlgebraTensor::unit(A, 2);
  CHECK(max_abs_diff(product(ee, ee), ee) < 1e-15);
  CHECK_THROWS_AS(product(s, ee), InvalidArgument);
}

TEST_CASE("coproduct and counit laws on C[D4] basis") {
  auto const A = Algebra::group_algebra(dihedral(4));
  for (Basis b = 0; b < A.dimension(); ++b) {
    auto x  = AlgebraTensor::basis(A, {&b, 1});
    auto d  = coproduct_leg(x, 0);
    // coassociativity
    CHECK(max_abs_diff(coproduct_leg(d, 0), coproduct_leg(d, 1)) < 1e-15);
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    CHECK(max_abs_diff(counit_leg(d, 0), x) < 1e-15);
    CHECK(max_abs_diff(counit_leg(d, 1), x) < 1e-15);
  }
  CHECK_THROWS_AS(coproduct_leg(AlgebraTensor::unit(A), 1), InvalidArgument);
  CHECK_THROWS_AS(counit_leg(AlgebraTensor::unit(A), -1), InvalidArgument);
}

TEST_CASE("D3 central idempotents have the closed form") {
  auto const model = dihedral_group_algebra_model(3);
  auto const& E    = model->idempotents;
  REQUIRE(E.size() == 3);
  std::array<std::array<double, 6>, 3> expected{{
      {1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6},
      {1.0 / 6, 1.0 / 6, 1.0 / 6, -1.0 / 6, -1.0 / 6, -1.0 / 6},
      {2.0 / 3, -1.0 / 3, -1.0 / 3, 0, 0, 0},
  }};
  for (std::size_t l = 0; l < 3; ++l) {
    for (Basis g = 0; g < 6; ++g) {
      auto c = E[l].coefficient({&g, 1});
      CHECK_THAT(c.real(), WithinAbs(expected[l][g], 1e-13));
      CHECK_THAT(c.imag(), WithinAbs(0, 1e-13));
    }
  }
}

TEST_CASE("idempotent laws for C[D_n]") {
  for (int n = 3; n <= 8; ++n) {
    auto const  model = dihedral_group_algebra_model(n);
    auto const& A     = model->algebra;
    auto const& E     = model->idempotents;
    AlgebraTensor sum(A, 1);
    for (std::size_t l = 0; l < E.size(); ++l) {
      sum = sum + E[l];
      CHECK_THAT(scalar_value(counit_leg(E[l], 0)).real(), WithinAbs(l == 0 ? 1 : 0, 1e-12));
      for (std::size_t m = 0; m < E.size(); ++m) {
        auto expect = l == m ? E[m] : AlgebraTensor(A, 1);
        CHECK(max_abs_diff(product(E[l], E[m]), expect) < 1e-12);
        auto img = evaluate(E[m], model->irreps[l]);
        auto d   = model->irreps[l].dim();
        CHECK(max_abs_diff(img, (l == m ? 1.0 : 0.0) * Matrix::Identity(d, d)) < 1e-12);
      }
      for (Basis g = 0; g < A.dimension(); ++g) {
        auto x = AlgebraTensor::basis(A, {&g, 1});
        CHECK(max_abs_diff(product(E[l], x), product(x, E[l])) < 1e-12);
      }
    }
    CHECK(max_abs_diff(sum, AlgebraTensor::unit(A)) < 1e-12);
  }
}

TEST_CASE("signature parsing and validation") {
  auto s = Signature::parse("0,1,1");
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "0,1,1");
  CHECK_THROWS_AS(Signature::parse("1,0,1"), InvalidArgument);
  CHECK_THROWS_AS(Signature::parse("0,2"), InvalidArgument);
  CHECK_THROWS_AS(Signature::parse("0,,1"), InvalidArgument);
  CHECK(Signature::trivial(4).is_trivial());
  auto all = Signature::all(3);
  REQUIRE(all.size() == 4);
  CHECK(all[0].to_string() == "0,0,0");
  CHECK(all[1].to_string() == "0,0,1");
  CHECK(all[2].to_string() == "0,1,0");
  CHECK(all[3].to_string() == "0,1,1");
}

TEST_CASE("K_S for D3") {
  auto const model = dihedral_group_algebra_model(3);
  auto const& E    = model->idempotents;
  CHECK(k_element(Signature::trivial(3), E).empty());
  CHECK(max_abs_diff(k_element(Signature::parse("0,0,1"), E), E[2]) < 1e-15);
  CHECK(max_abs_diff(k_element(Signature::parse("0,1,1"), E), E[1] + E[2]) < 1e-15);
  CHECK_THROWS_AS(k_element(Signature::parse("0,1"), E), InvalidArgument);
}

TEST_CASE("K_S is an admissible idempotent for every signature") {
  for (int n = 3; n <= 8; ++n) {
    auto const model = dihedral_group_algebra_model(n);
    if (model->size() > 6) {
      continue;
    }
    for (auto const& s : Signature::all(model->size())) {
      auto k = k_element(s, model->idempotents);
      CHECK(max_abs_diff(product(k, k), k) < 1e-12);
      CHECK(std::abs(scalar_value(counit_leg(k, 0))) < 1e-12);
    }
  }
}

TEST_CASE("evaluate of e (x) e (x) e is the identity") {
  auto const model = dihedral_group_algebra_model(3);
  auto const unit3 = AlgebraTensor::unit(model->algebra, 3);
  std::array<Representation, 3> reps{model->irreps[2], model->irreps[1], model->irreps[2]};
  auto m = evaluate(unit3, reps);
  CHECK(is_identity(m, 1e-15));
  CHECK(m.rows() == 4);
}
