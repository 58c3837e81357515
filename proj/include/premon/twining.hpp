#pragma once

#include <array>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/group_algebra.hpp"

namespace premon {

  enum class BlockKind { unit, k, delta_k };

  // A tensor factor of a projector: the unit on one leg, K on one leg, or
  // Delta(K) on two consecutive legs.
  struct FactorBlock {
    BlockKind     kind;
    AlgebraTensor tensor;

    int legs() const noexcept {
      return tensor.legs();
    }
  };

  // 1 - 2 P where P is the tensor product of `blocks` in order. P is an
  // idempotent, so the factor squares to the unit.
  struct InvolutiveFactor {
    std::vector<FactorBlock> blocks;

    int           legs() const;
    AlgebraTensor projector() const;
    AlgebraTensor expand() const;
    // e.g. "(e,K,dK)"
    std::string describe() const;
  };

  // Ordered product of involutive factors, kept unexpanded so that it can be
  // evaluated factor by factor under representations.
  class FactoredElement {
   public:
    FactoredElement(Algebra algebra, int legs, std::vector<InvolutiveFactor> factors);

    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    int legs() const noexcept {
      return _legs;
    }
    std::vector<InvolutiveFactor> const& factors() const noexcept {
      return _factors;
    }

    // The inverse: the same factors in reverse order.
    FactoredElement reversed() const;
    AlgebraTensor   expand() const;
    // Product of the factor images, left to right.
    Matrix evaluate(std::span<Representation const> reps) const;

   private:
    Algebra                       _algebra;
    int                           _legs;
    std::vector<InvolutiveFactor> _factors;
  };

  // The twined quasi-bialgebra for one signature. Holds the factored forms of
  // the twisted coassociator, its inverse, the R-matrix twist and the
  // pentagon deviation xi. Evaluated blocks and composite representations are
  // cached internally; the cache is thread-safe and shared between copies.
  class TwinedStructure {
   public:
    TwinedStructure(ModelPtr model, Signature signature);

    ModelPtr const& model() const noexcept {
      return _model;
    }
    Algebra const& algebra() const noexcept {
      return _model->algebra;
    }
    Signature const& signature() const noexcept {
      return _signature;
    }
    std::size_t size() const noexcept {
      return _model->size();
    }
    Representation const& irrep(int label) const {
      return _model->irreps.at(label);
    }

    AlgebraTensor const& k() const noexcept {
      return _k;
    }
    AlgebraTensor const& delta_k() const noexcept {
      return _delta_k;
    }
    // The untwined R-matrix.
    AlgebraTensor const& r() const noexcept {
      return _r;
    }

    FactoredElement const& phi() const noexcept {
      return _phi;
    }
    FactoredElement const& phi_inverse() const noexcept {
      return _phi_inv;
    }
    // 1 - 2 K (x) K
    FactoredElement const& r_twist() const noexcept {
      return _r_twist;
    }
    FactoredElement const& xi() const noexcept {
      return _xi;
    }

    // Expanded algebra elements.
    AlgebraTensor phi_tilde() const;
    AlgebraTensor phi_tilde_inverse() const;
    AlgebraTensor r_tilde() const;
    AlgebraTensor xi_tensor() const;
    // K (x) (1 (x) K + K (x) 1 - Delta(K))
    AlgebraTensor kappa() const;

    // Composite representation pi_a (x) pi_b, cached.
    Representation const& pair_rep(int a, int b) const;

    // Matrix images on irreducible labels.
    Matrix associator(int a, int b, int c) const;
    Matrix associator_inverse(int a, int b, int c) const;
    // flip o (pi_a (x) pi_b)(R~)
    Matrix braiding(int a, int b) const;
    // (pi_a (x) pi_b)(R~) without the flip
    Matrix r_tilde_matrix(int a, int b) const;
    // q from the nine-factor product
    Matrix q(int a, int b, int c, int d) const;
    // q from the defining composite of leg-coproducts of Phi~
    Matrix q_from_definition(int a, int b, int c, int d) const;
    // exp(i pi kappa) on a triple, from the factors (equals the associator,
    // since the untwined coassociator is trivial)
    Matrix kappa_exponential(int a, int b, int c) const;

    // Images under arbitrary (e.g. composite) representations.
    Matrix phi_matrix(std::span<Representation const> reps) const;
    Matrix phi_inverse_matrix(std::span<Representation const> reps) const;
    Matrix r_tilde_matrix(Representation const& a, Representation const& b) const;
    Matrix braiding(Representation const& a, Representation const& b) const;

   private:
    struct Cache;

    Matrix block_matrix(FactorBlock const& block, std::span<int const> labels) const;
    Matrix evaluate_labels(FactoredElement const& x, std::span<int const> labels) const;

    ModelPtr               _model;
    Signature              _signature;
    AlgebraTensor          _k;
    AlgebraTensor          _delta_k;
    AlgebraTensor          _r;
    FactoredElement        _phi;
    FactoredElement        _phi_inv;
    FactoredElement        _r_twist;
    FactoredElement        _xi;
    std::shared_ptr<Cache> _cache;
  };

  // Throws InvalidArgument if the signature length does not match the model.
  TwinedStructure build_twist(ModelPtr model, Signature signature);

  // xi computed algebraically from its definition
  //   (D (x) id (x) id)Phi~^{-1} . (Phi~ (x) 1) . (id (x) D (x) id)Phi~
  //     . (1 (x) Phi~) . (id (x) id (x) D)Phi~^{-1}
  // and compared with the nine-factor product; a mismatch beyond tol throws
  // InternalConsistency. Cost grows quickly with the algebra dimension; for
  // D(G) prefer the per-quadruple q_from_definition.
  AlgebraTensor xi_from_definition(TwinedStructure const& t, double tol = kDefaultTolerance);

  using Triple    = std::array<int, 3>;
  using Pair      = std::array<int, 2>;
  using Quadruple = std::array<int, 4>;

  struct TwinedData {
    std::map<Triple, Matrix>    associators;
    std::map<Pair, Matrix>      braidings;
    std::map<Quadruple, Matrix> q_maps;
  };

  // All associators and braidings; q on the given quadruples only.
  TwinedData evaluate_all(TwinedStructure const& t, std::span<Quadruple const> quadruples = {});

  // The associator through the spectral route: diagonalise the image of kappa
  // and apply (-1)^eigenvalue. Throws NumericDegeneracy if an eigenvalue is
  // not an integer within tol. Kept as an independent check of the factored
  // form.
  Matrix spectral_associator(TwinedStructure const& t, int a, int b, int c,
                             double tol = kDefaultTolerance);

}  // namespace premon
