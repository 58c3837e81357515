#include "premon/coherence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "premon/error.hpp"

namespace premon {

  bool CoherenceReport::pass() const {
    return failures() == 0;
  }

  std::size_t CoherenceReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.pass; }));
  }

  CoherenceReport make_report(Signature signature, std::vector<CheckResult> checks) {
    std::sort(checks.begin(), checks.end(), [](auto const& a, auto const& b) {
      return std::tie(a.name, a.labels) < std::tie(b.name, b.labels);
    });
    double worst = 0;
    for (auto const& c : checks) {
      worst = std::max(worst, c.defect);
    }
    return CoherenceReport{std::move(signature), std::move(checks), worst};
  }

  namespace {
    CheckResult result(std::string name, std::vector<int> labels, double defect, double tol) {
      return CheckResult{std::move(name), std::move(labels), defect, defect <= tol};
    }

    int dim(TwinedStructure const& t, int label) {
      return t.irrep(label).dim();
    }

    Matrix identity(int d) {
      return Matrix::Identity(d, d);
    }

    // Phi~ (or its inverse) on labels with leg j placed in slot slots[j].
    Matrix placed_phi(TwinedStructure const& t, Triple labels, std::array<int, 3> slots,
                      bool inverse) {
      Triple leg_labels{labels[slots[0]], labels[slots[1]], labels[slots[2]]};
      Matrix m = inverse ? t.associator_inverse(leg_labels[0], leg_labels[1], leg_labels[2])
                         : t.associator(leg_labels[0], leg_labels[1], leg_labels[2]);
      std::array<int, 3> dims{dim(t, labels[0]), dim(t, labels[1]), dim(t, labels[2])};
      return embed_legs(m, dims, slots);
    }

    // R~ on labels with its two legs in slots i, j.
    Matrix placed_r(TwinedStructure const& t, Triple labels, int i, int j) {
      std::array<int, 3> dims{dim(t, labels[0]), dim(t, labels[1]), dim(t, labels[2])};
      std::array<int, 2> slots{i, j};
      return embed_legs(t.r_tilde_matrix(labels[i], labels[j]), dims, slots);
    }

    std::vector<AlgebraTensor> generators(Algebra const& A) {
      std::vector<AlgebraTensor> out;
      auto const& G = A.group();
      if (A.kind() == AlgebraKind::group_algebra) {
        for (Basis g = 0; g < G.order(); ++g) {
          out.push_back(AlgebraTensor::basis(A, {&g, 1}));
        }
        return out;
      }
      for (Element g = 0; g < G.order(); ++g) {
        AlgebraTensor x(A, 1);
        for (Element h = 0; h < G.order(); ++h) {
          Basis b = A.double_basis(g, h);
          x.add({&b, 1}, 1.0);
        }
        out.push_back(std::move(x));
      }
      for (Element h = 0; h < G.order(); ++h) {
        Basis b = A.double_basis(G.identity(), h);
        out.push_back(AlgebraTensor::basis(A, {&b, 1}));
      }
      return out;
    }
  }  // namespace

  CheckResult check_modified_pentagon(TwinedStructure const& t, Quadruple l, double tol,
                                      bool use_q) {
    auto const [a, b, c, d] = l;
    std::array<Representation, 3> ab_c_d{t.pair_rep(a, b), t.irrep(c), t.irrep(d)};
    std::array<Representation, 3> a_bc_d{t.irrep(a), t.pair_rep(b, c), t.irrep(d)};
    std::array<Representation, 3> a_b_cd{t.irrep(a), t.irrep(b), t.pair_rep(c, d)};

    Matrix const lhs = kron(t.associator(a, b, c), identity(dim(t, d)))
                       * t.phi_matrix(a_bc_d)
                       * kron(identity(dim(t, a)), t.associator(b, c, d));
    Matrix const middle = use_q ? t.q(a, b, c, d) : identity(static_cast<int>(lhs.rows()));
    Matrix const rhs    = t.phi_matrix(ab_c_d) * middle * t.phi_matrix(a_b_cd);
    return result(use_q ? "modified_pentagon" : "classic_pentagon", {a, b, c, d},
                  max_abs_diff(lhs, rhs), tol);
  }

  std::vector<CheckResult> check_hexagons(TwinedStructure const& t, Triple l, double tol) {
    auto const [a, b, c] = l;
    std::vector<int> labels{a, b, c};
    std::vector<CheckResult> out;

    // (Delta (x) id) R~
    Matrix const d1r = t.r_tilde_matrix(t.pair_rep(a, b), t.irrep(c));
    Matrix const d1r_rhs = placed_phi(t, l, {2, 0, 1}, true) * placed_r(t, l, 0, 2)
                           * placed_phi(t, l, {0, 2, 1}, false) * placed_r(t, l, 1, 2)
                           * t.associator_inverse(a, b, c);
    out.push_back(result("hexagon_d1r", labels, max_abs_diff(d1r, d1r_rhs), tol));

    // (id (x) Delta) R~ with the exp(2 i pi kappa) correction
    Matrix const correction = t.kappa_exponential(a, b, c) * t.kappa_exponential(a, b, c);
    Matrix const leftr      = t.r_tilde_matrix(t.irrep(a), t.pair_rep(b, c));
    Matrix const leftr_rhs  = placed_phi(t, l, {1, 2, 0}, false) * placed_r(t, l, 0, 2)
                             * placed_phi(t, l, {1, 0, 2}, true) * placed_r(t, l, 0, 1)
                             * t.associator(a, b, c) * correction;
    out.push_back(result("hexagon_leftR", labels, max_abs_diff(leftr, leftr_rhs), tol));
    out.push_back(result("kappa_correction", labels,
                         max_abs_diff(correction, identity(static_cast<int>(correction.rows()))),
                         tol));
    return out;
  }

  CheckResult check_square(TwinedStructure const& t, Quadruple l, double tol) {
    auto const [a, b, c, d] = l;
    Matrix const sigma = t.braiding(t.pair_rep(a, b), t.pair_rep(c, d));
    Matrix const lhs   = sigma * t.q(a, b, c, d);
    Matrix const rhs   = t.q(c, d, a, b) * sigma;
    return result("braided_square", {a, b, c, d}, max_abs_diff(lhs, rhs), tol);
  }

  std::vector<CheckResult> check_naturality(TwinedStructure const& t, Triple l, double tol) {
    auto const [a, b, c] = l;
    auto const left  = tensor_rep(t.pair_rep(a, b), t.irrep(c));  // (Delta (x) id) Delta
    auto const right = tensor_rep(t.irrep(a), t.pair_rep(b, c));  // (id (x) Delta) Delta
    auto const& ab   = t.pair_rep(a, b);
    auto const& ba   = t.pair_rep(b, a);
    Matrix const assoc = t.associator(a, b, c);
    Matrix const sigma = t.braiding(a, b);

    double assoc_defect = 0;
    double braid_defect = 0;
    for (auto const& x : generators(t.algebra())) {
      assoc_defect = std::max(assoc_defect,
                              max_abs_diff(Matrix(assoc * evaluate(x, right)),
                                           Matrix(evaluate(x, left) * assoc)));
      braid_defect = std::max(braid_defect,
                              max_abs_diff(Matrix(sigma * evaluate(x, ab)),
                                           Matrix(evaluate(x, ba) * sigma)));
    }
    return {result("natural_associator", {a, b, c}, assoc_defect, tol),
            result("natural_braiding", {a, b}, braid_defect, tol)};
  }

  std::vector<CheckResult> check_braiding_axioms(TwinedStructure const& t, Quadruple l,
                                                 double tol) {
    Triple const abc{l[0], l[1], l[2]};
    auto out = check_hexagons(t, abc, tol);
    for (auto& r : check_naturality(t, abc, tol)) {
      out.push_back(std::move(r));
    }
    out.push_back(check_square(t, l, tol));
    return out;
  }

  SymmetryResult check_symmetry(TwinedStructure const& t, double tol) {
    SymmetryResult out;
    auto const n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Matrix const mono = t.braiding(b, a) * t.braiding(a, b);
        double const d    = max_abs_diff(mono, identity(static_cast<int>(mono.rows())));
        out.defect        = std::max(out.defect, d);
        if (d > tol && !out.witness) {
          out.kind    = SymmetryKind::braided;
          out.witness = Pair{a, b};
        }
      }
    }
    return out;
  }

  std::vector<Deviation> pentagon_deviation_census(TwinedStructure const&     t,
                                                   std::span<Quadruple const> quadruples,
                                                   double                     tol) {
    std::vector<Quadruple> all;
    if (quadruples.empty()) {
      all        = all_quadruples(t.size());
      quadruples = all;
    }
    std::vector<double> norms(quadruples.size(), 0.0);
    parallel_for(quadruples.size(), [&](std::size_t i) {
      auto const& q = quadruples[i];
      Matrix const m = t.q(q[0], q[1], q[2], q[3]);
      norms[i]       = max_abs_diff(m, identity(static_cast<int>(m.rows())));
    });
    std::vector<Deviation> out;
    for (std::size_t i = 0; i < quadruples.size(); ++i) {
      if (norms[i] > tol) {
        out.push_back(Deviation{quadruples[i], norms[i]});
      }
    }
    std::sort(out.begin(), out.end(),
              [](auto const& x, auto const& y) { return x.labels < y.labels; });
    return out;
  }

  namespace {
    std::string fixed6(double v) {
      char buf[64];
      v = std::round(v * 1e6) / 1e6;
      if (v == 0) {
        v = 0;  // drop the sign of -0
      }
      std::snprintf(buf, sizeof buf, "%.6f", v);
      return buf;
    }

    std::string fixed6(Complex z) {
      return fixed6(z.real()) + "," + fixed6(z.imag());
    }

    // 64-bit FNV-1a
    std::uint64_t fnv1a(std::string const& text) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  }  // namespace

  Fingerprint signature_fingerprint(TwinedStructure const&     t,
                                    std::span<Quadruple const> quadruples) {
    std::vector<Quadruple> all;
    if (quadruples.empty()) {
      all        = all_quadruples(t.size());
      quadruples = all;
    }
    std::string text = t.model()->name + "\n";
    auto const  n    = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Matrix const mono = t.braiding(b, a) * t.braiding(a, b);
        text += "pair " + std::to_string(a) + " " + std::to_string(b) + " "
                + fixed6(t.r_tilde_matrix(a, b).trace()) + " " + fixed6(mono.trace()) + "\n";
      }
    }
    std::vector<std::string> lines(quadruples.size());
    parallel_for(quadruples.size(), [&](std::size_t i) {
      auto const& q = quadruples[i];
      Matrix const m = t.q(q[0], q[1], q[2], q[3]);
      bool const dev = !is_identity(m, kDefaultTolerance);
      lines[i] = "quad " + std::to_string(q[0]) + " " + std::to_string(q[1]) + " "
                 + std::to_string(q[2]) + " " + std::to_string(q[3]) + " " + (dev ? "1" : "0")
                 + " " + fixed6(m.trace()) + "\n";
    });
    for (auto const& line : lines) {
      text += line;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return Fingerprint{std::move(text), hex};
  }

  std::vector<Quadruple> all_quadruples(std::size_t labels) {
    auto const n = static_cast<int>(labels);
    std::vector<Quadruple> out;
    out.reserve(labels * labels * labels * labels);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            out.push_back({a, b, c, d});
          }
    return out;
  }

  std::vector<Quadruple> sample_quadruples(std::size_t labels, std::size_t count,
                                           std::uint64_t seed) {
    auto all = all_quadruples(labels);
    if (count >= all.size()) {
      return all;
    }
    std::vector<Quadruple> out;
    out.reserve(count);
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), count, rng);
    return out;  // std::sample keeps the input order
  }

  std::vector<Quadruple> sweep_quadruples(TwinedStructure const& t, SweepOptions const& opts) {
    if (opts.all || t.algebra().kind() == AlgebraKind::group_algebra) {
      return all_quadruples(t.size());
    }
    return sample_quadruples(t.size(), opts.sample, opts.seed);
  }

  CoherenceReport check_all(TwinedStructure const& t, SweepOptions const& opts) {
    auto const quads = sweep_quadruples(t, opts);
    auto const n     = static_cast<int>(t.size());

    std::vector<std::vector<CheckResult>> per_quad(quads.size());
    parallel_for(
        quads.size(),
        [&](std::size_t i) {
          per_quad[i].push_back(check_modified_pentagon(t, quads[i], opts.tol));
          per_quad[i].push_back(check_square(t, quads[i], opts.tol));
        },
        opts.threads);

    std::vector<Triple> triples;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          triples.push_back({a, b, c});
        }
    std::vector<std::vector<CheckResult>> per_triple(triples.size());
    parallel_for(
        triples.size(),
        [&](std::size_t i) {
          per_triple[i] = check_hexagons(t, triples[i], opts.tol);
          auto nat      = check_naturality(t, triples[i], opts.tol);
          per_triple[i].push_back(nat[0]);
          if (triples[i][2] == 0) {
            per_triple[i].push_back(nat[1]);  // once per pair
          }
        },
        opts.threads);

    std::vector<CheckResult> checks;
    for (auto* group : {&per_quad, &per_triple}) {
      for (auto& v : *group) {
        for (auto& c : v) {
          checks.push_back(std::move(c));
        }
      }
    }
    return make_report(t.signature(), std::move(checks));
  }

  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body,
                    unsigned threads) {
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace premon
