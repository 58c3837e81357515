#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "premon/error.hpp"
#include "premon/group.hpp"

using namespace premon;

namespace {
  // brute force: the set {g a g^-1}
  std::set<Element> orbit(FiniteGroup const& G, Element a) {
    std::set<Element> out;
    for (Element g = 0; g < G.order(); ++g) {
      out.insert(G.multiply(G.multiply(g, a), G.inverse(g)));
    }
    return out;
  }
}  // namespace

TEST_CASE("dihedral presentation relations hold") {
  for (int n = 2; n <= 9; ++n) {
    auto G = dihedral(n);
    REQUIRE(G->order() == static_cast<std::size_t>(2 * n));
    Element const s = 1 % (2 * n);
    Element const t = static_cast<Element>(n);
    Element       p = G->identity();
    for (int i = 0; i < n; ++i) {
      CHECK((i == 0) == (p == G->identity()));
      p = G->multiply(p, s);
    }
    CHECK(p == G->identity());
    CHECK(G->multiply(t, t) == G->identity());
    // ts = s^{n-1} t
    Element s_pow = G->identity();
    for (int i = 0; i < n - 1; ++i) {
      s_pow = G->multiply(s_pow, s);
    }
    CHECK(G->multiply(t, s) == G->multiply(s_pow, t));
    // canonical order: index n + i is s^i t
    Element si = G->identity();
    for (int i = 0; i < n; ++i) {
      CHECK(G->multiply(si, t) == static_cast<Element>(n + i));
      si = G->multiply(si, s);
    }
  }
}

TEST_CASE("dihedral labels for D3") {
  auto G = dihedral(3);
  std::vector<std::string> expected{"e", "s", "s^2", "t", "st", "s^2t"};
  CHECK(G->labels() == expected);
}

TEST_CASE("dihedral rejects n < 2") {
  CHECK_THROWS_AS(dihedral(1), InvalidArgument);
  CHECK_THROWS_AS(dihedral(0), InvalidArgument);
}

TEST_CASE("D3 conjugacy classes") {
  auto G       = dihedral(3);
  auto classes = conjugacy_classes(*G);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].members == std::vector<Element>{0});
  CHECK(classes[1].members == std::vector<Element>{1, 2});
  CHECK(classes[2].members == std::vector<Element>{3, 4, 5});
}

TEST_CASE("classes partition the group and are conjugation orbits") {
  for (int n = 2; n <= 8; ++n) {
    auto G       = dihedral(n);
    auto classes = conjugacy_classes(*G);
    std::vector<int> hit(G->order(), 0);
    for (auto const& c : classes) {
      auto o = orbit(*G, c.representative);
      CHECK(std::set<Element>(c.members.begin(), c.members.end()) == o);
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
      for (auto m : c.members) {
        ++hit[m];
      }
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    CHECK(classes.front().members == std::vector<Element>{G->identity()});
    // dihedral class count: (n+3)/2 for odd n, n/2+3 for even n
    CHECK(classes.size() == static_cast<std::size_t>(n % 2 ? (n + 3) / 2 : n / 2 + 3));
  }
}

TEST_CASE("centralizers match brute force and are subgroups") {
  auto G = dihedral(4);
  for (Element a = 0; a < G->order(); ++a) {
    auto z = centralizer(*G, a);
    std::vector<Element> brute;
    for (Element g = 0; g < G->order(); ++g) {
      if (G->multiply(g, a) == G->multiply(a, g)) {
        brute.push_back(g);
      }
    }
    CHECK(z.members == brute);
    CHECK(G->order() % z.members.size() == 0);
    auto sub = subgroup(*G, z.members);
    CHECK(sub->order() == z.members.size());
  }
}

TEST_CASE("from_cayley_table accepts Z3") {
  auto G = from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(G->order() == 3);
  CHECK(G->is_abelian());
  CHECK(G->inverse(1) == 2);
  CHECK(G->label(2) == "g2");
}

TEST_CASE("from_cayley_table rejects a non-associative loop") {
  // Latin square with identity 0, every element an involution, not a group
  std::vector<std::vector<Element>> loop{{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  try {
    from_cayley_table(loop);
    FAIL("expected ValidationError");
  } catch (ValidationError const& e) {
    CHECK(std::string(e.what()).find('(') != std::string::npos);
  }
}

TEST_CASE("from_cayley_table rejects malformed tables") {
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1}}), ValidationError);
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(from_cayley_table({{0, 5}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(from_cayley_table({{1, 0}, {1, 0}}), ValidationError);
}

TEST_CASE("subgroup re-indexes and keeps labels") {
  auto G   = dihedral(3);
  std::vector<Element> rot{0, 1, 2};
  auto sub = subgroup(*G, rot);
  CHECK(sub->order() == 3);
  CHECK(sub->is_abelian());
  CHECK(sub->label(1) == "s");
  CHECK(sub->multiply(1, 1) == 2);
}
