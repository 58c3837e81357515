#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace premon {

  // Elements are dense indices 0..order-1.
  using Element = std::uint32_t;

  // A finite group given by its full Cayley table. Immutable once built; only
  // the factory functions below can construct one, and they validate the table.
  class FiniteGroup {
   public:
    std::size_t order() const noexcept {
      return _order;
    }
    Element identity() const noexcept {
      return _identity;
    }
    Element multiply(Element a, Element b) const {
      return _mult[a * _order + b];
    }
    Element inverse(Element a) const {
      return _inverse[a];
    }
    // g a g^{-1}
    Element conjugate(Element a, Element g) const {
      return multiply(multiply(g, a), inverse(g));
    }
    std::string const& label(Element a) const {
      return _labels[a];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<std::vector<Element>> cayley_table() const;
    bool is_abelian() const;

    bool operator==(FiniteGroup const& other) const {
      return _order == other._order && _identity == other._identity
             && _mult == other._mult;
    }

    friend std::shared_ptr<FiniteGroup const>
    from_cayley_table(std::vector<std::vector<Element>> const&,
                      std::vector<std::string>);

   private:
    FiniteGroup() = default;

    std::size_t              _order = 0;
    Element                  _identity = 0;
    std::vector<Element>     _mult;
    std::vector<Element>     _inverse;
    std::vector<std::string> _labels;
  };

  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  struct ConjugacyClass {
    Element              representative;
    std::vector<Element> members;  // sorted
    std::size_t size() const noexcept {
      return members.size();
    }
  };

  struct Centralizer {
    Element              of;
    std::vector<Element> members;  // sorted
  };

  // Validates associativity, a two-sided identity and invertibility. On failure
  // throws ValidationError naming the offending triple or element. Labels
  // default to "g0", "g1", ... when empty.
  GroupPtr from_cayley_table(std::vector<std::vector<Element>> const& table,
                             std::vector<std::string> labels = {});

  // D_n with elements ordered e, s, ..., s^{n-1}, t, st, ..., s^{n-1}t where
  // s^n = t^2 = e and ts = s^{n-1}t. Index i < n is s^i, index n + i is s^i t.
  GroupPtr dihedral(int n);

  // Classes sorted by minimal member, identity class first.
  std::vector<ConjugacyClass> conjugacy_classes(FiniteGroup const& group);

  // class_index[g] for the output of conjugacy_classes.
  std::vector<std::size_t>
  class_lookup(std::size_t order, std::span<ConjugacyClass const> classes);

  Centralizer centralizer(FiniteGroup const& group, Element a);

  // The subgroup on `members` (sorted, must be closed), re-indexed in the order
  // given. Labels are carried over.
  GroupPtr subgroup(FiniteGroup const& group, std::span<Element const> members);

}  // namespace premon
