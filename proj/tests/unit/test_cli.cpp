#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "premon/group.hpp"
#include "premon/io.hpp"

using nlohmann::json;

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = premon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
  }
}  // namespace

TEST_CASE("cli: chartable prints the D3 table") {
  auto r = run({"chartable", "--dihedral", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi_0: 1 1 1") != std::string::npos);
  CHECK(r.out.find("chi_1: 1 1 -1") != std::string::npos);
  CHECK(r.out.find("chi_2: 2 -1 0") != std::string::npos);
}

TEST_CASE("cli: JSON output is byte-identical across runs") {
  auto a = run({"twine", "--dihedral", "3", "--signature", "0,1,1", "--format", "json"});
  auto b = run({"twine", "--dihedral", "3", "--signature", "0,1,1", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["associators"].size() == 27);
  CHECK(j["signature"] == json::array({0, 1, 1}));
}

TEST_CASE("cli: a_{2,2,2} for S = (0,0,1)") {
  auto r = run({"twine", "--dihedral", "3", "--signature", "0,0,1", "--format", "json"});
  auto j = json::parse(r.out);
  for (auto const& a : j["associators"]) {
    if (a["labels"] == json::array({2, 2, 2})) {
      auto const& e = a["matrix"]["entries"];
      CHECK(e[0][0] == json::array({-1.0, 0.0}));
      CHECK(e[1][1] == json::array({1.0, 0.0}));
      CHECK(e[3][3] == json::array({-1.0, 0.0}));
    }
  }
}

TEST_CASE("cli: malformed signatures exit 2 naming the constraint") {
  auto shortsig = run({"twine", "--dihedral", "3", "--signature", "0,1"});
  CHECK(shortsig.code == 2);
  CHECK(shortsig.err.find("3 irreps") != std::string::npos);
  auto bad0 = run({"check", "--dihedral", "3", "--signature", "1,0,1"});
  CHECK(bad0.code == 2);
  CHECK(bad0.err.find("trivial label") != std::string::npos);
  CHECK(run({"twine", "--dihedral", "3"}).code == 2);
  CHECK(run({"twine", "--dihedral", "3", "--signature", "0,x,1"}).code == 2);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"chartable", "--dihedral", "1"}).code == 2);
  CHECK(run({"chartable", "--dihedral", "3", "--format", "xml"}).code == 2);
  CHECK(run({"check", "--dihedral", "3", "--signature", "0,0,1", "--tol", "-1"}).code == 2);
  CHECK(run({"double", "--dihedral", "3"}).code == 2);
  CHECK(run({"chartable"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: check passes for C[D3] and a sampled D(D3)") {
  auto r = run({"check", "--dihedral", "3", "--signature", "0,1,0", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("SYMMETRIC") != std::string::npos);
  auto d = run({"check", "--double", "--dihedral", "3", "--signature", "0,0,0,0,0,0,0,1",
                "--sample", "16", "--format", "json"});
  CHECK(d.code == 0);
  auto j = json::parse(d.out);
  CHECK(j["pass"] == true);
  CHECK(j["symmetry"]["kind"] == "braided");
}

TEST_CASE("cli: census and fingerprint") {
  auto c = run({"census", "--dihedral", "3", "--signature", "0,0,1", "--format", "json"});
  auto j = json::parse(c.out);
  REQUIRE(j["deviations"].size() == 1);
  CHECK(j["deviations"][0]["labels"] == json::array({2, 2, 2, 2}));
  auto f = run({"fingerprint", "--dihedral", "3"});
  CHECK(f.code == 0);
  std::istringstream lines(f.out);
  std::set<std::string> digests;
  for (std::string sig, digest; lines >> sig >> digest;) {
    digests.insert(digest);
  }
  CHECK(digests.size() == 4);
  auto g = run({"fingerprint", "--dihedral", "3", "--seed", "7"});
  CHECK(g.out == f.out);
}

TEST_CASE("cli: group files, abelian irreps and explicit irreps") {
  auto z4 = temp_file("premon_z4.json",
                      R"({"mult": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})");
  auto r  = run({"check", "--group", z4, "--signature", "0,1,0,1", "--format", "json"});
  CHECK(r.code == 0);
  auto d = run({"double", "info", "--group", z4, "--format", "json"});
  CHECK(json::parse(d.out)["irreps"].size() == 16);

  auto d3file = temp_file("premon_d3.json", premon::io::group_json(*premon::dihedral(3)).dump());
  auto t      = run({"twine", "--group", d3file, "--signature", "0,0,1", "--format", "json"});
  auto u      = run({"twine", "--dihedral", "3", "--signature", "0,0,1", "--format", "json"});
  CHECK(t.code == 0);
  CHECK(json::parse(t.out)["associators"] == json::parse(u.out)["associators"]);

  auto irreps = temp_file("premon_d3_irreps.json",
                          premon::io::irreps_json(premon::dihedral_irreps(3)).dump());
  auto v = run({"twine", "--group", d3file, "--irreps", irreps, "--signature", "0,0,1",
                "--format", "json"});
  // the irreps file holds 12 significant digits, so compare numerically
  auto const& va = json::parse(v.out)["associators"];
  auto const& ua = json::parse(u.out)["associators"];
  REQUIRE(va.size() == ua.size());
  double worst = 0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    auto m1 = premon::io::matrix_from_json(va[i]["matrix"]);
    auto m2 = premon::io::matrix_from_json(ua[i]["matrix"]);
    worst   = std::max(worst, premon::max_abs_diff(m1, m2));
  }
  CHECK(worst < 1e-9);

  auto loop = temp_file("premon_loop.json",
                        R"({"mult": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})");
  auto bad = run({"group", "--group", loop});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("associativ") != std::string::npos);
  CHECK(run({"group", "--group", "/nonexistent.json"}).code == 2);
}

TEST_CASE("cli: double idempotents and info") {
  auto r = run({"double", "idempotents", "--dihedral", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["idempotents"].size() == 8);
  auto i = run({"double", "info", "--dihedral", "3"});
  CHECK(i.out.find("8 irreps") != std::string::npos);
  auto g = run({"group", "--dihedral", "3"});
  CHECK(g.out.find("C2 = {t, st, s^2t}") != std::string::npos);
}
