#include <catch2/catch_amalgamated.hpp>

#include "premon/error.hpp"
#include "premon/io.hpp"

using namespace premon;
using io::Json;

TEST_CASE("rounding to 12 significant digits") {
  CHECK(io::rounded(1.0 / 3.0) == 0.333333333333);
  CHECK(io::rounded(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(io::rounded(-1e-300 * 1e-300)));
  CHECK(io::rounded(2.0) == 2.0);
  CHECK(io::rounded(8.9e-16) == 0.0);
  CHECK(io::rounded(2e-12) == 2e-12);
}

TEST_CASE("matrix JSON round trip") {
  Matrix m(2, 3);
  m << Complex(1, 0), Complex(0, -1), Complex(0.5, 0.25), Complex(-2, 0), Complex(0, 0),
      Complex(3, 3);
  auto j = io::matrix_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"][0][1] == Json::array({0.0, -1.0}));
  CHECK(max_abs_diff(io::matrix_from_json(j), m) == 0);
}

TEST_CASE("group JSON round trip and validation") {
  auto g = dihedral(4);
  auto j = io::group_json(*g);
  auto h = io::group_from_json(j);
  CHECK(*g == *h);
  CHECK(h->labels() == g->labels());
  j["order"] = 7;
  CHECK_THROWS_AS(io::group_from_json(j), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(Json::object()), ValidationError);
  Json bad{{"mult", {{0, 1}, {1, 1}}}};
  CHECK_THROWS_AS(io::group_from_json(bad), ValidationError);
}

TEST_CASE("signature JSON") {
  auto s = io::signature_from_json(Json::parse(R"({"bits": [0, 1, 0]})"));
  CHECK(s.to_string() == "0,1,0");
  CHECK(io::signature_json(s).dump() == R"({"bits":[0,1,0]})");
  CHECK_THROWS_AS(io::signature_from_json(Json::parse(R"({"bits": [1, 1]})")), InvalidArgument);
}

TEST_CASE("tensor dump is sorted by key") {
  auto A = Algebra::group_algebra(dihedral(3));
  AlgebraTensor x(A, 2);
  std::array<Basis, 2> k1{2, 0}, k2{0, 1};
  x.add(k1, Complex(1, 2));
  x.add(k2, -0.5);
  auto j = io::tensor_json(x);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["key"] == Json::array({0, 1}));
  CHECK(j[0]["re"] == -0.5);
  CHECK(j[1]["im"] == 2.0);
}

TEST_CASE("irreps JSON round trip through the character table") {
  auto G      = dihedral(4);
  auto table  = character_table(G);
  auto irreps = dihedral_irreps(G, 4);
  auto j      = io::irreps_json(irreps);
  // reverse the list; loading restores table order
  Json reversed = Json::array();
  for (auto it = j.rbegin(); it != j.rend(); ++it) {
    reversed.push_back(*it);
  }
  auto back = io::irreps_from_json(reversed, table);
  REQUIRE(back.size() == irreps.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].label == static_cast<int>(i));
    CHECK(back[i].dim() == irreps[i].dim());
  }
  reversed.erase(reversed.begin());
  CHECK_THROWS_AS(io::irreps_from_json(reversed, table), ValidationError);
}
