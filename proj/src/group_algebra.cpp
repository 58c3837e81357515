#include "premon/group_algebra.hpp"

#include <charconv>
#include <sstream>

#include "premon/error.hpp"

namespace premon {

  Signature::Signature(std::vector<int> bits) : _bits(std::move(bits)) {
    if (_bits.empty()) {
      throw InvalidArgument("signature is empty");
    }
    for (auto b : _bits) {
      if (b != 0 && b != 1) {
        throw InvalidArgument("signature entries must be 0 or 1");
      }
    }
    if (_bits[0] != 0) {
      throw InvalidArgument(
          "inadmissible signature: the trivial label 0 must have bit 0");
    }
  }

  Signature Signature::parse(std::string_view text) {
    std::vector<int> bits;
    std::size_t      pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos) {
        comma = text.size();
      }
      auto token = text.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      int  value = 0;
      auto res   = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw InvalidArgument("malformed signature '" + std::string(text)
                              + "': expected comma-separated bits");
      }
      bits.push_back(value);
      pos = comma + 1;
    }
    return Signature(std::move(bits));
  }

  Signature Signature::trivial(std::size_t size) {
    return Signature(std::vector<int>(size, 0));
  }

  std::vector<Signature> Signature::all(std::size_t size) {
    if (size == 0 || size > 31) {
      throw InvalidArgument("Signature::all: size must be in [1, 31]");
    }
    std::vector<Signature> out;
    auto const             count = std::size_t{1} << (size - 1);
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<int> bits(size, 0);
      for (std::size_t i = 1; i < size; ++i) {
        bits[i] = static_cast<int>((m >> (size - 1 - i)) & 1u);
      }
      out.emplace_back(std::move(bits));
    }
    return out;
  }

  bool Signature::is_trivial() const {
    for (auto b : _bits) {
      if (b != 0) {
        return false;
      }
    }
    return true;
  }

  std::string Signature::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::to_string(_bits[i]);
    }
    return out;
  }

  std::vector<AlgebraTensor> central_idempotents(CharacterTable const& table) {
    auto const& G       = *table.group;
    auto const  algebra = Algebra::group_algebra(table.group);
    auto const  n       = static_cast<double>(G.order());
    std::vector<AlgebraTensor> out;
    for (std::size_t row = 0; row < table.size(); ++row) {
      AlgebraTensor e(algebra, 1);
      double const  scale = table.rows[row].degree / n;
      for (Element g = 0; g < G.order(); ++g) {
        Basis b = g;
        e.add({&b, 1}, scale * table.value(row, G.inverse(g)));
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  AlgebraTensor k_element(Signature const&               signature,
                          std::span<AlgebraTensor const> idempotents) {
    if (signature.size() != idempotents.size()) {
      throw InvalidArgument("k_element: signature has "
                            + std::to_string(signature.size())
                            + " entries but there are "
                            + std::to_string(idempotents.size()) + " idempotents");
    }
    if (idempotents.empty()) {
      throw InvalidArgument("k_element: no idempotents");
    }
    AlgebraTensor k(idempotents.front().algebra(), 1);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
      if (signature[i]) {
        k = k + idempotents[i];
      }
    }
    return k;
  }

  ModelPtr group_algebra_model(CharacterTable const&     table,
                               std::vector<Irrep> const& irreps,
                               std::string               name) {
    if (irreps.size() != table.size()) {
      throw InvalidArgument("group_algebra_model: expected "
                            + std::to_string(table.size()) + " irreps, got "
                            + std::to_string(irreps.size()));
    }
    auto const algebra = Algebra::group_algebra(table.group);
    AlgebraModel model{algebra, {}, central_idempotents(table), std::move(name)};
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      if (!(irreps[i].rep.algebra() == algebra)) {
        throw InvalidArgument("group_algebra_model: irrep over a different group");
      }
      auto chi = class_character(irreps[i].rep, table);
      for (std::size_t k = 0; k < chi.size(); ++k) {
        if (std::abs(chi[k] - table.rows[i].values[k]) > kDefaultTolerance * 100) {
          throw InvalidArgument("group_algebra_model: irrep " + std::to_string(i)
                                + " does not match character table row");
        }
      }
      model.irreps.push_back(irreps[i].rep);
    }
    return std::make_shared<AlgebraModel const>(std::move(model));
  }

  ModelPtr dihedral_group_algebra_model(int n) {
    auto group  = dihedral(n);
    auto irreps = dihedral_irreps(group, n);
    auto table  = character_table(group);
    return group_algebra_model(table, irreps, "C[D" + std::to_string(n) + "]");
  }

}  // namespace premon
