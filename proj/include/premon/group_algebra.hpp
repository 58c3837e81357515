#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/characters.hpp"

namespace premon {

  // Z_2 statistics per irrep label; the trivial label 0 is always bosonic.
  class Signature {
   public:
    // Throws InvalidArgument if bits[0] != 0 or any entry is not 0/1.
    explicit Signature(std::vector<int> bits);

    // "0,1,1" -> Signature. The full vector including the leading 0.
    static Signature parse(std::string_view text);
    static Signature trivial(std::size_t size);
    // All 2^{n-1} signatures of length n, ordered by the integer formed by
    // bits 1..n-1 (bit 1 most significant).
    static std::vector<Signature> all(std::size_t size);

    std::size_t size() const noexcept {
      return _bits.size();
    }
    int operator[](std::size_t i) const {
      return _bits[i];
    }
    std::vector<int> const& bits() const noexcept {
      return _bits;
    }
    bool is_trivial() const;
    std::string to_string() const;

    bool operator==(Signature const&) const = default;

   private:
    std::vector<int> _bits;
  };

  // E_lambda = (d_lambda / |G|) sum_g chi_lambda(g^{-1}) g, one per row of the
  // table, in table order.
  std::vector<AlgebraTensor> central_idempotents(CharacterTable const& table);

  // K_S = sum_lambda S(lambda) E_lambda.
  AlgebraTensor k_element(Signature const&                signature,
                          std::span<AlgebraTensor const>  idempotents);

  // An algebra together with a complete, canonically ordered list of its
  // irreps and the matching central idempotents. Label 0 is the counit.
  struct AlgebraModel {
    Algebra                     algebra;
    std::vector<Representation> irreps;
    std::vector<AlgebraTensor>  idempotents;
    std::string                 name;

    std::size_t size() const noexcept {
      return irreps.size();
    }
  };

  using ModelPtr = std::shared_ptr<AlgebraModel const>;

  // C[G] from explicit irreps of G (labels must follow table order).
  ModelPtr group_algebra_model(CharacterTable const&  table,
                               std::vector<Irrep> const& irreps,
                               std::string            name = {});

  // C[D_n] with the closed-form irreps.
  ModelPtr dihedral_group_algebra_model(int n);

}  // namespace premon
