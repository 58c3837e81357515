#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "premon/twining.hpp"

namespace premon {

  struct CheckResult {
    std::string      name;
    std::vector<int> labels;
    double           defect = 0;
    bool             pass   = false;
  };

  struct CoherenceReport {
    Signature                signature;
    std::vector<CheckResult> checks;  // sorted by (name, labels)
    double                   worst_defect = 0;

    bool pass() const;
    std::size_t failures() const;
  };

  // Collects results, sorts them and fills in worst_defect.
  CoherenceReport make_report(Signature signature, std::vector<CheckResult> checks);

  // (a_{abc} (x) id) o a_{a,bc,d} o (id (x) a_{bcd})
  //   = a_{ab,c,d} o q_{abcd} o a_{a,b,cd}
  // with composite associators from leg-coproducts of Phi~. With
  // use_q = false the q factor is dropped, giving the classic pentagon.
  CheckResult check_modified_pentagon(TwinedStructure const& t,
                                      Quadruple              labels,
                                      double                 tol   = kDefaultTolerance,
                                      bool                   use_q = true);

  // Hexagon-type identities on a triple: (Delta (x) id)R~ against
  //   Phi~^{-1}_{231} R~_13 Phi~_{132} R~_23 Phi~^{-1}_{123}
  // and (id (x) Delta)R~ against
  //   Phi~_{312} R~_13 Phi~^{-1}_{213} R~_12 Phi~_{123} [exp(2 i pi kappa)]_{123},
  // plus the check that the correction exp(2 i pi kappa) is the identity.
  // Phi_{ijk} carries leg i of Phi in the first slot, leg j in the second and
  // leg k in the third, so Phi_{231} = sum phi2 (x) phi3 (x) phi1.
  std::vector<CheckResult> check_hexagons(TwinedStructure const& t,
                                          Triple                 labels,
                                          double                 tol = kDefaultTolerance);

  // sigma_{(ab),(cd)} o q_{abcd} = q_{cdab} o sigma_{(ab),(cd)}
  CheckResult check_square(TwinedStructure const& t,
                           Quadruple              labels,
                           double                 tol = kDefaultTolerance);

  // Associator and braiding commute with the action of the generators
  // (group elements, and for D(G) also the dual elements e h*).
  std::vector<CheckResult> check_naturality(TwinedStructure const& t,
                                            Triple                 labels,
                                            double                 tol = kDefaultTolerance);

  // Hexagons and naturality on (a,b,c), the square on (a,b,c,d).
  std::vector<CheckResult> check_braiding_axioms(TwinedStructure const& t,
                                                 Quadruple              labels,
                                                 double                 tol = kDefaultTolerance);

  enum class SymmetryKind { symmetric, braided };

  struct SymmetryResult {
    SymmetryKind        kind = SymmetryKind::symmetric;
    std::optional<Pair> witness;  // first pair with sigma_ba sigma_ab != id
    double              defect = 0;  // largest monodromy defect over all pairs
  };

  SymmetryResult check_symmetry(TwinedStructure const& t, double tol = kDefaultTolerance);

  struct Deviation {
    Quadruple labels;
    double    norm = 0;  // max |q - id|
  };

  // Quadruples whose q differs from the identity beyond tol. An empty
  // `quadruples` span means all of them.
  std::vector<Deviation> pentagon_deviation_census(TwinedStructure const&     t,
                                                   std::span<Quadruple const> quadruples = {},
                                                   double tol = kDefaultTolerance);

  struct Fingerprint {
    std::string canonical;  // the hashed text
    std::string digest;     // 16 hex digits
  };

  // Digest of basis-independent data: trace of R~ and of the monodromy per
  // pair, and per quadruple whether q deviates plus the trace of q. Equal
  // digests do not imply equivalent categories.
  Fingerprint signature_fingerprint(TwinedStructure const&     t,
                                    std::span<Quadruple const> quadruples = {});

  std::vector<Quadruple> all_quadruples(std::size_t labels);
  // `count` distinct quadruples drawn with a seeded generator, sorted. Returns
  // all of them when count covers the whole set.
  std::vector<Quadruple> sample_quadruples(std::size_t labels, std::size_t count,
                                           std::uint64_t seed = 0);

  struct SweepOptions {
    double tol     = kDefaultTolerance;
    bool   all     = false;
    std::size_t sample = 256;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: hardware concurrency
  };

  // The quadruples a sweep visits: all of them for C[G] or when opts.all is
  // set, otherwise a seeded sample.
  std::vector<Quadruple> sweep_quadruples(TwinedStructure const& t, SweepOptions const& opts);

  // Modified pentagon and the braided square on every swept quadruple,
  // hexagons and naturality on every triple. Symmetry is reported separately
  // by check_symmetry.
  CoherenceReport check_all(TwinedStructure const& t, SweepOptions const& opts = {});

  // Runs body(i) for i in [0, n) on a few threads.
  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body,
                    unsigned threads = 0);

}  // namespace premon
