#include "premon/group.hpp"

#include <algorithm>
#include <sstream>

#include "premon/error.hpp"

namespace premon {

  std::vector<std::vector<Element>> FiniteGroup::cayley_table() const {
    std::vector<std::vector<Element>> out(_order, std::vector<Element>(_order));
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        out[i][j] = _mult[i * _order + j];
      }
    }
    return out;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = i + 1; j < _order; ++j) {
        if (_mult[i * _order + j] != _mult[j * _order + i]) {
          return false;
        }
      }
    }
    return true;
  }

  GroupPtr from_cayley_table(std::vector<std::vector<Element>> const& table,
                             std::vector<std::string>                 labels) {
    auto const n = table.size();
    if (n == 0) {
      throw ValidationError("Cayley table is empty");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        std::ostringstream msg;
        msg << "Cayley table is not square: row " << i << " has "
            << table[i].size() << " entries, expected " << n;
        throw ValidationError(msg.str());
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          std::ostringstream msg;
          msg << "Cayley table entry (" << i << ", " << j << ") = "
              << table[i][j] << " is out of range";
          throw ValidationError(msg.str());
        }
      }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Element g = 0; g < n && ok; ++g) {
        ok = table[e][g] == g && table[g][e] == g;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw ValidationError("Cayley table has no two-sided identity");
    }

    std::vector<Element> inverse(n, 0);
    for (Element g = 0; g < n; ++g) {
      std::optional<Element> inv;
      for (Element h = 0; h < n; ++h) {
        if (table[g][h] == *identity && table[h][g] == *identity) {
          if (inv) {
            inv.reset();
            break;
          }
          inv = h;
        }
      }
      if (!inv) {
        std::ostringstream msg;
        msg << "element " << g << " has no unique two-sided inverse";
        throw ValidationError(msg.str());
      }
      inverse[g] = *inv;
    }

    // every row and column must be a permutation
    for (Element g = 0; g < n; ++g) {
      std::vector<bool> row(n, false), col(n, false);
      for (Element h = 0; h < n; ++h) {
        if (row[table[g][h]] || col[table[h][g]]) {
          std::ostringstream msg;
          msg << "element " << g
              << " is not invertible: its row or column repeats an entry";
          throw ValidationError(msg.str());
        }
        row[table[g][h]] = true;
        col[table[h][g]] = true;
      }
    }

    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        auto const ab = table[a][b];
        for (Element c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][table[b][c]]) {
            std::ostringstream msg;
            msg << "Cayley table is not associative at (" << a << ", " << b
                << ", " << c << "): (ab)c = " << table[ab][c]
                << ", a(bc) = " << table[a][table[b][c]];
            throw ValidationError(msg.str());
          }
        }
      }
    }

    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("g" + std::to_string(i));
      }
    } else if (labels.size() != n) {
      throw ValidationError("label count does not match group order");
    }

    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->_order    = n;
    group->_identity = *identity;
    group->_mult.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(table[i].begin(), table[i].end(), group->_mult.begin() + i * n);
    }
    group->_inverse = std::move(inverse);
    group->_labels  = std::move(labels);
    return group;
  }

  GroupPtr dihedral(int n) {
    if (n < 2) {
      throw InvalidArgument("dihedral: n must be at least 2, got "
                            + std::to_string(n));
    }
    auto const order = static_cast<std::size_t>(2 * n);
    std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
    // (s^a t^u)(s^b t^v) = s^{a + (-1)^u b} t^{u+v}
    for (int x = 0; x < 2 * n; ++x) {
      int const a = x % n, u = x / n;
      for (int y = 0; y < 2 * n; ++y) {
        int const b = y % n, v = y / n;
        int const r = ((u == 0 ? a + b : a - b) % n + n) % n;
        table[x][y] = static_cast<Element>(r + n * ((u + v) % 2));
      }
    }
    std::vector<std::string> labels;
    auto rot = [](int i) -> std::string {
      if (i == 0) {
        return "";
      }
      return i == 1 ? "s" : "s^" + std::to_string(i);
    };
    for (int i = 0; i < n; ++i) {
      labels.push_back(i == 0 ? "e" : rot(i));
    }
    for (int i = 0; i < n; ++i) {
      labels.push_back(rot(i) + "t");
    }
    return from_cayley_table(table, std::move(labels));
  }

  std::vector<ConjugacyClass> conjugacy_classes(FiniteGroup const& group) {
    auto const               n = group.order();
    std::vector<bool>        seen(n, false);
    std::vector<ConjugacyClass> out;
    for (Element a = 0; a < n; ++a) {
      if (seen[a]) {
        continue;
      }
      ConjugacyClass cls{a, {}};
      for (Element g = 0; g < n; ++g) {
        auto c = group.conjugate(a, g);
        if (!seen[c]) {
          seen[c] = true;
          cls.members.push_back(c);
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.representative = cls.members.front();
      out.push_back(std::move(cls));
    }
    // already ordered by minimal member; move the identity class to the front
    auto it = std::find_if(out.begin(), out.end(), [&](auto const& c) {
      return c.representative == group.identity();
    });
    std::rotate(out.begin(), it, it + 1);
    return out;
  }

  std::vector<std::size_t>
  class_lookup(std::size_t order, std::span<ConjugacyClass const> classes) {
    std::vector<std::size_t> out(order, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (auto g : classes[i].members) {
        out[g] = i;
      }
    }
    return out;
  }

  Centralizer centralizer(FiniteGroup const& group, Element a) {
    if (a >= group.order()) {
      throw InvalidArgument("centralizer: element out of range");
    }
    Centralizer out{a, {}};
    for (Element g = 0; g < group.order(); ++g) {
      if (group.multiply(g, a) == group.multiply(a, g)) {
        out.members.push_back(g);
      }
    }
    return out;
  }

  GroupPtr subgroup(FiniteGroup const& group, std::span<Element const> members) {
    auto const           m = members.size();
    std::vector<int64_t> position(group.order(), -1);
    for (std::size_t i = 0; i < m; ++i) {
      position[members[i]] = static_cast<int64_t>(i);
    }
    std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto p = position[group.multiply(members[i], members[j])];
        if (p < 0) {
          throw InvalidArgument("subgroup: members are not closed under product");
        }
        table[i][j] = static_cast<Element>(p);
      }
    }
    std::vector<std::string> labels;
    for (auto g : members) {
      labels.push_back(group.label(g));
    }
    return from_cayley_table(table, std::move(labels));
  }

}  // namespace premon
