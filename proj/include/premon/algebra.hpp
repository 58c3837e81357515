#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "premon/group.hpp"
#include "premon/linalg.hpp"

namespace premon {

  using Basis = std::uint32_t;

  enum class AlgebraKind { group_algebra, quantum_double };

  // Structure maps of C[G] or D(G) on their canonical bases. For C[G] the basis
  // is the group elements. For D(G) the basis element g h* is stored at index
  // g * |G| + h. Every product of two basis elements is zero or one basis
  // element, so multiply() returns an optional.
  class Algebra {
   public:
    static Algebra group_algebra(GroupPtr group);
    static Algebra quantum_double(GroupPtr group);

    AlgebraKind kind() const noexcept {
      return _kind;
    }
    FiniteGroup const& group() const noexcept {
      return *_group;
    }
    GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    std::size_t dimension() const noexcept {
      return _dimension;
    }

    std::optional<Basis> multiply(Basis a, Basis b) const;
    // Delta(b) as a list of simple tensors, each with coefficient 1.
    std::vector<std::pair<Basis, Basis>> coproduct(Basis b) const;
    double counit(Basis b) const;
    // The unit is the sum of these basis elements.
    std::vector<Basis> unit_terms() const;

    // D(G) helpers; g h* <-> (g, h)
    Basis double_basis(Element g, Element h) const {
      return static_cast<Basis>(g * _group->order() + h);
    }
    std::pair<Element, Element> double_parts(Basis b) const {
      auto n = static_cast<Basis>(_group->order());
      return {b / n, b % n};
    }

    std::string basis_label(Basis b) const;

    bool operator==(Algebra const& other) const;

   private:
    Algebra(AlgebraKind kind, GroupPtr group);

    AlgebraKind _kind;
    GroupPtr    _group;
    std::size_t _dimension;
  };

  // Entries below this magnitude are dropped from sparse tensors.
  inline constexpr double kPruneThreshold = kDefaultTolerance * 1e-3;

  // Sparse element of A^{(x)k}. Keys are k-tuples of basis indices packed in
  // mixed radix (base = dim A), first leg most significant.
  class AlgebraTensor {
   public:
    using Key = std::uint64_t;

    AlgebraTensor(Algebra algebra, int legs);

    static AlgebraTensor zero(Algebra algebra, int legs) {
      return AlgebraTensor(std::move(algebra), legs);
    }
    static AlgebraTensor unit(Algebra const& algebra, int legs = 1);
    static AlgebraTensor basis(Algebra const&       algebra,
                               std::span<Basis const> key,
                               Complex              coeff = 1.0);

    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    int legs() const noexcept {
      return _legs;
    }
    std::size_t size() const noexcept {
      return _coeffs.size();
    }
    bool empty() const noexcept {
      return _coeffs.empty();
    }

    Complex coefficient(std::span<Basis const> key) const;
    // Builder-style accumulation; prunes on the fly.
    void add(std::span<Basis const> key, Complex value);
    void add_packed(Key key, Complex value);

    Key              pack(std::span<Basis const> key) const;
    std::vector<Basis> unpack(Key key) const;

    std::unordered_map<Key, Complex> const& coefficients() const noexcept {
      return _coeffs;
    }

    // Entries sorted by key, for deterministic output.
    std::vector<std::pair<std::vector<Basis>, Complex>> entries() const;

    double max_abs() const;

   private:
    Algebra                          _algebra;
    int                              _legs;
    std::vector<Key>                 _radix;  // place value of each leg
    std::unordered_map<Key, Complex> _coeffs;
  };

  AlgebraTensor operator+(AlgebraTensor const& x, AlgebraTensor const& y);
  AlgebraTensor operator-(AlgebraTensor const& x, AlgebraTensor const& y);
  AlgebraTensor operator*(Complex s, AlgebraTensor const& x);

  // Leg-wise product in A^{(x)k}.
  AlgebraTensor product(AlgebraTensor const& x, AlgebraTensor const& y);
  // Outer product: legs of x followed by legs of y.
  AlgebraTensor tensor(AlgebraTensor const& x, AlgebraTensor const& y);
  // Apply Delta to leg `leg` (0-based); k legs become k + 1.
  AlgebraTensor coproduct_leg(AlgebraTensor const& x, int leg);
  // Apply the counit to leg `leg` (0-based); k legs become k - 1. A 1-leg
  // tensor becomes a 0-leg scalar, readable through scalar_value().
  AlgebraTensor counit_leg(AlgebraTensor const& x, int leg);
  // Multiply legs `leg` and `leg + 1` together (the map m on those factors).
  AlgebraTensor merge_legs(AlgebraTensor const& x, int leg);
  // Leg j of x goes to slot perm[j].
  AlgebraTensor permute_legs(AlgebraTensor const& x, std::span<int const> perm);
  // x (x) 1 or 1 (x) x with `count` unit legs added.
  AlgebraTensor append_unit_legs(AlgebraTensor const& x, int count);
  AlgebraTensor prepend_unit_legs(AlgebraTensor const& x, int count);

  Complex scalar_value(AlgebraTensor const& x);
  double  max_abs_diff(AlgebraTensor const& x, AlgebraTensor const& y);

  // A finite-dimensional representation: one matrix per basis element.
  // Copies share the image storage.
  class Representation {
   public:
    Representation(Algebra algebra, int dim, std::vector<Matrix> images);

    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    int dim() const noexcept {
      return _dim;
    }
    Matrix const& image(Basis b) const {
      return (*_images)[b];
    }
    std::vector<Matrix> const& images() const noexcept {
      return *_images;
    }
    // trace of the image of each basis element
    std::vector<Complex> traces() const;

   private:
    Algebra                                    _algebra;
    int                                        _dim;
    std::shared_ptr<std::vector<Matrix> const> _images;
  };

  // (R1 (x) R2) o Delta. For C[G] this is g -> M1(g) (x) M2(g).
  Representation tensor_rep(Representation const& r1, Representation const& r2);

  // The counit as a one-dimensional representation.
  Representation counit_rep(Algebra const& algebra);

  // Sum over keys of coeff * M_1(b_1) (x) ... (x) M_k(b_k).
  Matrix evaluate(AlgebraTensor const& x, std::span<Representation const> reps);

  // Image of a single-leg element.
  Matrix evaluate(AlgebraTensor const& x, Representation const& rep);

}  // namespace premon
