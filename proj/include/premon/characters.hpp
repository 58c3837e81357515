#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/group.hpp"

namespace premon {

  // Character values indexed by conjugacy class (in CharacterTable order).
  struct Character {
    std::vector<Complex> values;
    int                  degree = 0;
  };

  struct CharacterTable {
    GroupPtr                    group;
    std::vector<ConjugacyClass> classes;
    std::vector<std::size_t>    class_of;  // element -> class index
    std::vector<Character>      rows;
    std::size_t                 trivial_index = 0;

    std::size_t size() const noexcept {
      return rows.size();
    }
    Complex value(std::size_t row, Element g) const {
      return rows[row].values[class_of[g]];
    }
  };

  // An explicit irreducible matrix representation of C[G].
  struct Irrep {
    int            label = 0;
    Representation rep;
    Character      character;

    int dim() const noexcept {
      return rep.dim();
    }
  };

  // Canonical order: trivial character first, then by degree, then
  // lexicographically by values in class order (real part before imaginary).
  // Returns true when a sorts strictly before b.
  bool character_precedes(Character const& a, Character const& b, double tol);

  // Burnside-style algorithm: structure constants of the class algebra, a
  // random real combination diagonalised numerically, eigenvectors normalised
  // into characters. Throws NumericDegeneracy if characters cannot be
  // separated after several random draws.
  CharacterTable character_table(GroupPtr const& group,
                                 std::uint64_t   seed = 0,
                                 double          tol  = kDefaultTolerance);

  // Closed-form irreps of D_n (group must be dihedral(n)), labelled in
  // character_table order.
  std::vector<Irrep> dihedral_irreps(GroupPtr const& group, int n);
  std::vector<Irrep> dihedral_irreps(int n);

  // Degree-one characters of an abelian group as 1x1 irreps, labelled in table
  // order. Throws UnsupportedGroup for non-abelian groups.
  std::vector<Irrep> abelian_irreps(CharacterTable const& table);

  // Trace of rep over each class of the table (taken at class representatives).
  std::vector<Complex> class_character(Representation const& rep,
                                       CharacterTable const&  table);

  // Multiplicity of each irreducible character in the class function f.
  std::vector<Complex> decompose(std::span<Complex const> class_function,
                                 CharacterTable const&    table);

  struct IrrepReport {
    double homomorphism_defect = 0;
    double identity_defect     = 0;
    double character_defect    = 0;
    bool   pass                = false;
  };

  IrrepReport verify_irrep(CharacterTable const& table,
                           Irrep const&          irrep,
                           double                tol = kDefaultTolerance);

  Representation tensor_rep(Irrep const& a, Irrep const& b);

}  // namespace premon
