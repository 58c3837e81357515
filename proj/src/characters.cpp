#include "premon/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "premon/error.hpp"

namespace premon {

  namespace {
    double snap(double x) {
      auto r = std::round(x);
      return std::abs(x - r) < 1e-11 ? r : x;
    }

    Complex snap(Complex z) {
      return {snap(z.real()), snap(z.imag())};
    }

    // -1, 0, 1 with tolerance
    int compare(double a, double b, double tol) {
      if (a < b - tol) {
        return -1;
      }
      if (a > b + tol) {
        return 1;
      }
      return 0;
    }

    bool is_trivial(Character const& c, double tol) {
      return std::all_of(c.values.begin(), c.values.end(), [tol](Complex v) {
        return std::abs(v - Complex(1.0)) <= tol;
      });
    }
  }  // namespace

  bool character_precedes(Character const& a, Character const& b, double tol) {
    bool const ta = is_trivial(a, tol), tb = is_trivial(b, tol);
    if (ta != tb) {
      return ta;
    }
    if (a.degree != b.degree) {
      return a.degree < b.degree;
    }
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      if (auto c = compare(a.values[i].real(), b.values[i].real(), tol)) {
        return c < 0;
      }
      if (auto c = compare(a.values[i].imag(), b.values[i].imag(), tol)) {
        return c < 0;
      }
    }
    return false;
  }

  CharacterTable character_table(GroupPtr const& group,
                                 std::uint64_t   seed,
                                 double          tol) {
    auto const& G = *group;
    CharacterTable table;
    table.group    = group;
    table.classes  = conjugacy_classes(G);
    table.class_of = class_lookup(G.order(), table.classes);
    auto const r   = table.classes.size();
    auto const n   = static_cast<double>(G.order());

    // structure[i](j, k) = #{x in C_i : x^{-1} z_k in C_j}, z_k the
    // representative of C_k; so C_i C_j = sum_k structure[i](j, k) C_k and a
    // central character w satisfies structure[i] w = w_i w.
    std::vector<Eigen::MatrixXd> structure(r, Eigen::MatrixXd::Zero(r, r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) {
        auto const z = table.classes[k].representative;
        for (auto x : table.classes[i].members) {
          auto y = G.multiply(G.inverse(x), z);
          structure[i](table.class_of[y], k) += 1.0;
        }
      }
    }

    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> coin(0.5, 1.5);
    constexpr int                          attempts = 16;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        combo += coin(rng) * structure[i];
      }
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
      if (solver.info() != Eigen::Success) {
        continue;
      }
      auto const& values = solver.eigenvalues();
      double      gap    = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
          gap = std::min(gap, std::abs(values(a) - values(b)));
        }
      }
      if (gap < 1e-6) {
        continue;
      }

      std::vector<Character> rows;
      bool                   ok = true;
      for (std::size_t a = 0; a < r && ok; ++a) {
        Eigen::VectorXcd w = solver.eigenvectors().col(a);
        if (std::abs(w(0)) < 1e-12) {
          ok = false;
          break;
        }
        w /= w(0);
        for (std::size_t i = 0; i < r && ok; ++i) {
          Eigen::VectorXcd resid = structure[i].cast<Complex>() * w - w(i) * w;
          ok = resid.cwiseAbs().maxCoeff() <= 1e-8 * (1.0 + w.cwiseAbs().maxCoeff());
        }
        double norm = 0;
        for (std::size_t k = 0; k < r; ++k) {
          norm += std::norm(w(k)) / static_cast<double>(table.classes[k].size());
        }
        double const degree = std::sqrt(n / norm);
        if (std::abs(degree - std::round(degree)) > 1e-6) {
          ok = false;
          break;
        }
        Character chi;
        chi.degree = static_cast<int>(std::round(degree));
        for (std::size_t k = 0; k < r; ++k) {
          chi.values.push_back(snap(static_cast<double>(chi.degree) * w(k)
                                    / static_cast<double>(table.classes[k].size())));
        }
        rows.push_back(std::move(chi));
      }
      if (!ok) {
        continue;
      }

      std::sort(rows.begin(), rows.end(), [tol](auto const& a, auto const& b) {
        return character_precedes(a, b, tol);
      });
      // orthonormality
      for (std::size_t a = 0; a < r && ok; ++a) {
        for (std::size_t b = 0; b < r && ok; ++b) {
          Complex ip = 0;
          for (std::size_t k = 0; k < r; ++k) {
            ip += static_cast<double>(table.classes[k].size()) * rows[a].values[k]
                  * std::conj(rows[b].values[k]);
          }
          ip /= n;
          ok = std::abs(ip - (a == b ? 1.0 : 0.0)) <= tol;
        }
      }
      if (!ok) {
        continue;
      }
      table.rows = std::move(rows);
      return table;
    }
    throw NumericDegeneracy(
        "character_table: could not separate characters; retry with another seed");
  }

  std::vector<Irrep> dihedral_irreps(GroupPtr const& group, int n) {
    if (n < 2) {
      throw InvalidArgument("dihedral_irreps: n must be at least 2, got "
                            + std::to_string(n));
    }
    if (!(*group == *dihedral(n))) {
      throw InvalidArgument("dihedral_irreps: group is not dihedral(n)");
    }
    auto const algebra = Algebra::group_algebra(group);
    auto const order   = static_cast<int>(group->order());

    // images of s^i t^u given images of the generators
    auto build = [&](Matrix const& s, Matrix const& t) {
      std::vector<Matrix> images;
      Matrix              power = Matrix::Identity(s.rows(), s.cols());
      std::vector<Matrix> powers;
      for (int i = 0; i < n; ++i) {
        powers.push_back(power);
        power = power * s;
      }
      for (int x = 0; x < order; ++x) {
        images.push_back(x < n ? powers[x] : Matrix(powers[x - n] * t));
      }
      return Representation(algebra, static_cast<int>(s.rows()), std::move(images));
    };

    std::vector<Representation> reps;
    auto scalar = [](double v) { return Matrix::Constant(1, 1, v); };
    if (n % 2 == 1) {
      reps.push_back(build(scalar(1), scalar(1)));
      reps.push_back(build(scalar(1), scalar(-1)));
    } else {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          reps.push_back(build(scalar(a ? -1 : 1), scalar(b ? -1 : 1)));
        }
      }
    }
    Complex const omega = std::polar(1.0, 2.0 * std::numbers::pi / n);
    int const     kmax  = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    for (int k = 1; k <= kmax; ++k) {
      Matrix s = Matrix::Zero(2, 2);
      s(0, 0)  = std::pow(omega, k);
      s(1, 1)  = std::pow(omega, -k);
      Matrix t = Matrix::Zero(2, 2);
      t(0, 1) = t(1, 0) = 1.0;
      reps.push_back(build(s, t));
    }

    auto const classes = conjugacy_classes(*group);
    std::vector<Irrep> out;
    for (auto& rep : reps) {
      Character chi;
      chi.degree = rep.dim();
      for (auto const& c : classes) {
        chi.values.push_back(snap(rep.image(c.representative).trace()));
      }
      out.push_back(Irrep{0, rep, chi});
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return character_precedes(a.character, b.character, kDefaultTolerance);
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].label = static_cast<int>(i);
    }
    return out;
  }

  std::vector<Irrep> dihedral_irreps(int n) {
    return dihedral_irreps(dihedral(n), n);
  }

  std::vector<Irrep> abelian_irreps(CharacterTable const& table) {
    auto const& G = *table.group;
    if (!G.is_abelian()) {
      throw UnsupportedGroup("abelian_irreps: group is not abelian");
    }
    auto const         algebra = Algebra::group_algebra(table.group);
    std::vector<Irrep> out;
    for (std::size_t row = 0; row < table.size(); ++row) {
      std::vector<Matrix> images;
      for (Element g = 0; g < G.order(); ++g) {
        images.push_back(Matrix::Constant(1, 1, table.value(row, g)));
      }
      out.push_back(Irrep{static_cast<int>(row),
                          Representation(algebra, 1, std::move(images)),
                          table.rows[row]});
    }
    return out;
  }

  std::vector<Complex> class_character(Representation const& rep,
                                       CharacterTable const&  table) {
    std::vector<Complex> out;
    for (auto const& c : table.classes) {
      out.push_back(rep.image(c.representative).trace());
    }
    return out;
  }

  std::vector<Complex> decompose(std::span<Complex const> f,
                                 CharacterTable const&    table) {
    if (f.size() != table.classes.size()) {
      throw InvalidArgument("decompose: class function has wrong length");
    }
    auto const           n = static_cast<double>(table.group->order());
    std::vector<Complex> out;
    for (auto const& row : table.rows) {
      Complex ip = 0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        ip += static_cast<double>(table.classes[k].size()) * f[k]
              * std::conj(row.values[k]);
      }
      out.push_back(ip / n);
    }
    return out;
  }

  IrrepReport verify_irrep(CharacterTable const& table,
                           Irrep const&          irrep,
                           double                tol) {
    auto const& G   = *table.group;
    auto const& rep = irrep.rep;
    if (rep.algebra().kind() != AlgebraKind::group_algebra
        || !(rep.algebra().group() == G)) {
      throw InvalidArgument("verify_irrep: irrep is not over this group");
    }
    if (irrep.character.degree != rep.dim()
        || irrep.character.values.size() != table.classes.size()) {
      throw InvalidArgument("verify_irrep: character does not match dimension");
    }
    IrrepReport report;
    for (Element g = 0; g < G.order(); ++g) {
      for (Element h = 0; h < G.order(); ++h) {
        report.homomorphism_defect = std::max(
            report.homomorphism_defect,
            max_abs_diff(Matrix(rep.image(g) * rep.image(h)),
                         rep.image(G.multiply(g, h))));
      }
      report.character_defect = std::max(
          report.character_defect,
          std::abs(rep.image(g).trace() - irrep.character.values[table.class_of[g]]));
    }
    report.identity_defect = max_abs_diff(rep.image(G.identity()),
                                          Matrix::Identity(rep.dim(), rep.dim()));
    report.pass = report.homomorphism_defect <= tol && report.identity_defect <= tol
                  && report.character_defect <= tol;
    return report;
  }

  Representation tensor_rep(Irrep const& a, Irrep const& b) {
    return tensor_rep(a.rep, b.rep);
  }

}  // namespace premon
