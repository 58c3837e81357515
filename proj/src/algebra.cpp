#include "premon/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "premon/error.hpp"

namespace premon {

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Algebra::Algebra(AlgebraKind kind, GroupPtr group)
      : _kind(kind), _group(std::move(group)), _dimension(0) {
    if (!_group) {
      throw InvalidArgument("Algebra: null group");
    }
    _dimension = _kind == AlgebraKind::group_algebra
                     ? _group->order()
                     : _group->order() * _group->order();
  }

  Algebra Algebra::group_algebra(GroupPtr group) {
    return Algebra(AlgebraKind::group_algebra, std::move(group));
  }

  Algebra Algebra::quantum_double(GroupPtr group) {
    return Algebra(AlgebraKind::quantum_double, std::move(group));
  }

  std::optional<Basis> Algebra::multiply(Basis a, Basis b) const {
    auto const& G = *_group;
    if (_kind == AlgebraKind::group_algebra) {
      return G.multiply(a, b);
    }
    // (g1 h1*)(g2 h2*) = delta(g2^{-1} h1 g2, h2) (g1 g2) h2*
    auto [g1, h1] = double_parts(a);
    auto [g2, h2] = double_parts(b);
    if (G.conjugate(h1, G.inverse(g2)) != h2) {
      return std::nullopt;
    }
    return double_basis(G.multiply(g1, g2), h2);
  }

  std::vector<std::pair<Basis, Basis>> Algebra::coproduct(Basis b) const {
    auto const& G = *_group;
    if (_kind == AlgebraKind::group_algebra) {
      return {{b, b}};
    }
    // Delta(g h*) = sum_k g (k^{-1} h)* (x) g k*
    auto [g, h] = double_parts(b);
    std::vector<std::pair<Basis, Basis>> out;
    out.reserve(G.order());
    for (Element k = 0; k < G.order(); ++k) {
      out.emplace_back(double_basis(g, G.multiply(G.inverse(k), h)),
                       double_basis(g, k));
    }
    return out;
  }

  double Algebra::counit(Basis b) const {
    if (_kind == AlgebraKind::group_algebra) {
      return 1.0;
    }
    return double_parts(b).second == _group->identity() ? 1.0 : 0.0;
  }

  std::vector<Basis> Algebra::unit_terms() const {
    auto const& G = *_group;
    if (_kind == AlgebraKind::group_algebra) {
      return {G.identity()};
    }
    std::vector<Basis> out;
    for (Element h = 0; h < G.order(); ++h) {
      out.push_back(double_basis(G.identity(), h));
    }
    return out;
  }

  std::string Algebra::basis_label(Basis b) const {
    if (_kind == AlgebraKind::group_algebra) {
      return _group->label(b);
    }
    auto [g, h] = double_parts(b);
    return _group->label(g) + "(" + _group->label(h) + ")*";
  }

  bool Algebra::operator==(Algebra const& other) const {
    return _kind == other._kind
           && (_group == other._group || *_group == *other._group);
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraTensor
  ////////////////////////////////////////////////////////////////////////

  AlgebraTensor::AlgebraTensor(Algebra algebra, int legs)
      : _algebra(std::move(algebra)), _legs(legs), _radix(legs, 1) {
    if (legs < 0) {
      throw InvalidArgument("AlgebraTensor: negative leg count");
    }
    auto const dim  = static_cast<double>(_algebra.dimension());
    if (legs > 0 && legs * std::log2(dim) >= 63.0) {
      throw InvalidArgument("AlgebraTensor: too many legs for this algebra");
    }
    for (int j = legs - 1; j > 0; --j) {
      _radix[j - 1] = _radix[j] * _algebra.dimension();
    }
  }

  AlgebraTensor AlgebraTensor::unit(Algebra const& algebra, int legs) {
    AlgebraTensor out(algebra, legs);
    auto const    terms = algebra.unit_terms();
    std::vector<Basis> key(legs, 0);
    // all combinations of unit terms across legs
    std::vector<std::size_t> pos(legs, 0);
    while (true) {
      for (int j = 0; j < legs; ++j) {
        key[j] = terms[pos[j]];
      }
      out.add(key, 1.0);
      int j = legs - 1;
      while (j >= 0 && ++pos[j] == terms.size()) {
        pos[j] = 0;
        --j;
      }
      if (j < 0) {
        break;
      }
    }
    return out;
  }

  AlgebraTensor AlgebraTensor::basis(Algebra const&         algebra,
                                     std::span<Basis const> key,
                                     Complex                coeff) {
    AlgebraTensor out(algebra, static_cast<int>(key.size()));
    out.add(key, coeff);
    return out;
  }

  AlgebraTensor::Key AlgebraTensor::pack(std::span<Basis const> key) const {
    if (static_cast<int>(key.size()) != _legs) {
      throw InvalidArgument("AlgebraTensor: key has wrong number of legs");
    }
    Key out = 0;
    for (int j = 0; j < _legs; ++j) {
      if (key[j] >= _algebra.dimension()) {
        throw InvalidArgument("AlgebraTensor: basis index out of range");
      }
      out += key[j] * _radix[j];
    }
    return out;
  }

  std::vector<Basis> AlgebraTensor::unpack(Key key) const {
    std::vector<Basis> out(_legs);
    for (int j = 0; j < _legs; ++j) {
      out[j] = static_cast<Basis>(key / _radix[j]);
      key %= _radix[j];
    }
    return out;
  }

  Complex AlgebraTensor::coefficient(std::span<Basis const> key) const {
    auto it = _coeffs.find(pack(key));
    return it == _coeffs.end() ? Complex{} : it->second;
  }

  void AlgebraTensor::add(std::span<Basis const> key, Complex value) {
    add_packed(pack(key), value);
  }

  void AlgebraTensor::add_packed(Key key, Complex value) {
    auto [it, inserted] = _coeffs.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
    }
    if (std::abs(it->second) < kPruneThreshold) {
      _coeffs.erase(it);
    }
  }

  std::vector<std::pair<std::vector<Basis>, Complex>>
  AlgebraTensor::entries() const {
    std::vector<std::pair<Key, Complex>> sorted(_coeffs.begin(), _coeffs.end());
    std::sort(sorted.begin(), sorted.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    std::vector<std::pair<std::vector<Basis>, Complex>> out;
    out.reserve(sorted.size());
    for (auto const& [k, c] : sorted) {
      out.emplace_back(unpack(k), c);
    }
    return out;
  }

  double AlgebraTensor::max_abs() const {
    double m = 0;
    for (auto const& [k, c] : _coeffs) {
      m = std::max(m, std::abs(c));
    }
    return m;
  }

  namespace {
    void require_compatible(AlgebraTensor const& x,
                            AlgebraTensor const& y,
                            char const*          what) {
      if (!(x.algebra() == y.algebra())) {
        throw InvalidArgument(std::string(what) + ": algebra mismatch");
      }
      if (x.legs() != y.legs()) {
        throw InvalidArgument(std::string(what) + ": leg count mismatch ("
                              + std::to_string(x.legs()) + " vs "
                              + std::to_string(y.legs()) + ")");
      }
    }

    void require_leg(AlgebraTensor const& x, int leg, char const* what) {
      if (leg < 0 || leg >= x.legs()) {
        throw InvalidArgument(std::string(what) + ": leg " + std::to_string(leg)
                              + " out of range for "
                              + std::to_string(x.legs()) + "-leg tensor");
      }
    }
  }  // namespace

  AlgebraTensor operator+(AlgebraTensor const& x, AlgebraTensor const& y) {
    require_compatible(x, y, "sum");
    AlgebraTensor out = x;
    for (auto const& [k, c] : y.coefficients()) {
      out.add_packed(k, c);
    }
    return out;
  }

  AlgebraTensor operator-(AlgebraTensor const& x, AlgebraTensor const& y) {
    return x + Complex(-1.0) * y;
  }

  AlgebraTensor operator*(Complex s, AlgebraTensor const& x) {
    AlgebraTensor out(x.algebra(), x.legs());
    for (auto const& [k, c] : x.coefficients()) {
      out.add_packed(k, s * c);
    }
    return out;
  }

  AlgebraTensor product(AlgebraTensor const& x, AlgebraTensor const& y) {
    require_compatible(x, y, "product");
    auto const&   A = x.algebra();
    AlgebraTensor out(A, x.legs());
    std::vector<std::pair<std::vector<Basis>, Complex>> ys;
    ys.reserve(y.size());
    for (auto const& [k, c] : y.coefficients()) {
      ys.emplace_back(y.unpack(k), c);
    }
    std::vector<Basis> key(x.legs());
    for (auto const& [kx, cx] : x.coefficients()) {
      auto const bx = x.unpack(kx);
      for (auto const& [by, cy] : ys) {
        bool zero = false;
        for (int j = 0; j < x.legs() && !zero; ++j) {
          auto p = A.multiply(bx[j], by[j]);
          if (!p) {
            zero = true;
          } else {
            key[j] = *p;
          }
        }
        if (!zero) {
          out.add(key, cx * cy);
        }
      }
    }
    return out;
  }

  AlgebraTensor tensor(AlgebraTensor const& x, AlgebraTensor const& y) {
    if (!(x.algebra() == y.algebra())) {
      throw InvalidArgument("tensor: algebra mismatch");
    }
    AlgebraTensor out(x.algebra(), x.legs() + y.legs());
    std::vector<Basis> key(x.legs() + y.legs());
    for (auto const& [kx, cx] : x.coefficients()) {
      auto bx = x.unpack(kx);
      std::copy(bx.begin(), bx.end(), key.begin());
      for (auto const& [ky, cy] : y.coefficients()) {
        auto by = y.unpack(ky);
        std::copy(by.begin(), by.end(), key.begin() + x.legs());
        out.add(key, cx * cy);
      }
    }
    return out;
  }

  AlgebraTensor coproduct_leg(AlgebraTensor const& x, int leg) {
    require_leg(x, leg, "coproduct_leg");
    auto const&   A = x.algebra();
    AlgebraTensor out(A, x.legs() + 1);
    std::vector<Basis> key(x.legs() + 1);
    for (auto const& [k, c] : x.coefficients()) {
      auto b = x.unpack(k);
      std::copy(b.begin(), b.begin() + leg, key.begin());
      std::copy(b.begin() + leg + 1, b.end(), key.begin() + leg + 2);
      for (auto const& [l, r] : A.coproduct(b[leg])) {
        key[leg]     = l;
        key[leg + 1] = r;
        out.add(key, c);
      }
    }
    return out;
  }

  AlgebraTensor counit_leg(AlgebraTensor const& x, int leg) {
    require_leg(x, leg, "counit_leg");
    auto const&   A = x.algebra();
    AlgebraTensor out(A, x.legs() - 1);
    std::vector<Basis> key(x.legs() - 1);
    for (auto const& [k, c] : x.coefficients()) {
      auto b = x.unpack(k);
      auto e = A.counit(b[leg]);
      if (e == 0.0) {
        continue;
      }
      std::copy(b.begin(), b.begin() + leg, key.begin());
      std::copy(b.begin() + leg + 1, b.end(), key.begin() + leg);
      out.add(key, c * e);
    }
    return out;
  }

  AlgebraTensor merge_legs(AlgebraTensor const& x, int leg) {
    require_leg(x, leg, "merge_legs");
    require_leg(x, leg + 1, "merge_legs");
    auto const&   A = x.algebra();
    AlgebraTensor out(A, x.legs() - 1);
    std::vector<Basis> key(x.legs() - 1);
    for (auto const& [k, c] : x.coefficients()) {
      auto b = x.unpack(k);
      auto p = A.multiply(b[leg], b[leg + 1]);
      if (!p) {
        continue;
      }
      std::copy(b.begin(), b.begin() + leg, key.begin());
      key[leg] = *p;
      std::copy(b.begin() + leg + 2, b.end(), key.begin() + leg + 1);
      out.add(key, c);
    }
    return out;
  }

  AlgebraTensor permute_legs(AlgebraTensor const& x, std::span<int const> perm) {
    if (static_cast<int>(perm.size()) != x.legs()) {
      throw InvalidArgument("permute_legs: permutation has wrong length");
    }
    std::vector<bool> used(x.legs(), false);
    for (auto p : perm) {
      if (p < 0 || p >= x.legs() || used[p]) {
        throw InvalidArgument("permute_legs: not a permutation");
      }
      used[p] = true;
    }
    AlgebraTensor      out(x.algebra(), x.legs());
    std::vector<Basis> key(x.legs());
    for (auto const& [k, c] : x.coefficients()) {
      auto b = x.unpack(k);
      for (int j = 0; j < x.legs(); ++j) {
        key[perm[j]] = b[j];
      }
      out.add(key, c);
    }
    return out;
  }

  AlgebraTensor append_unit_legs(AlgebraTensor const& x, int count) {
    return count == 0 ? x : tensor(x, AlgebraTensor::unit(x.algebra(), count));
  }

  AlgebraTensor prepend_unit_legs(AlgebraTensor const& x, int count) {
    return count == 0 ? x : tensor(AlgebraTensor::unit(x.algebra(), count), x);
  }

  Complex scalar_value(AlgebraTensor const& x) {
    if (x.legs() != 0) {
      throw InvalidArgument("scalar_value: tensor still has legs");
    }
    auto it = x.coefficients().find(0);
    return it == x.coefficients().end() ? Complex{} : it->second;
  }

  double max_abs_diff(AlgebraTensor const& x, AlgebraTensor const& y) {
    return (x - y).max_abs();
  }

  ////////////////////////////////////////////////////////////////////////
  // Representations
  ////////////////////////////////////////////////////////////////////////

  Representation::Representation(Algebra algebra, int dim, std::vector<Matrix> images)
      : _algebra(std::move(algebra)), _dim(dim), _images(nullptr) {
    if (images.size() != _algebra.dimension()) {
      throw InvalidArgument("Representation: need one image per basis element");
    }
    for (auto const& m : images) {
      if (m.rows() != dim || m.cols() != dim) {
        throw InvalidArgument("Representation: image has wrong shape");
      }
    }
    _images = std::make_shared<std::vector<Matrix> const>(std::move(images));
  }

  std::vector<Complex> Representation::traces() const {
    std::vector<Complex> out;
    out.reserve(_images->size());
    for (auto const& m : *_images) {
      out.push_back(m.trace());
    }
    return out;
  }

  Representation tensor_rep(Representation const& r1, Representation const& r2) {
    if (!(r1.algebra() == r2.algebra())) {
      throw InvalidArgument("tensor_rep: representations of different algebras");
    }
    auto const&         A   = r1.algebra();
    int const           dim = r1.dim() * r2.dim();
    std::vector<Matrix> images;
    images.reserve(A.dimension());
    for (Basis b = 0; b < A.dimension(); ++b) {
      Matrix m = Matrix::Zero(dim, dim);
      for (auto const& [l, r] : A.coproduct(b)) {
        m += kron(r1.image(l), r2.image(r));
      }
      images.push_back(std::move(m));
    }
    return Representation(A, dim, std::move(images));
  }

  Representation counit_rep(Algebra const& algebra) {
    std::vector<Matrix> images;
    for (Basis b = 0; b < algebra.dimension(); ++b) {
      images.push_back(Matrix::Constant(1, 1, algebra.counit(b)));
    }
    return Representation(algebra, 1, std::move(images));
  }

  namespace {
    using Entry = std::pair<std::vector<Basis>, Complex>;

    // Entries in [first, last) share their first `leg` legs.
    Matrix evaluate_range(std::vector<Entry> const&        entries,
                          std::size_t                      first,
                          std::size_t                      last,
                          std::size_t                      leg,
                          std::span<Representation const> reps,
                          int                              block_dim) {
      Matrix out = Matrix::Zero(block_dim, block_dim);
      if (leg + 1 == reps.size()) {
        for (auto i = first; i < last; ++i) {
          out += entries[i].second * reps[leg].image(entries[i].first[leg]);
        }
        return out;
      }
      int const rest = block_dim / reps[leg].dim();
      while (first < last) {
        auto const b   = entries[first].first[leg];
        auto       end = first;
        while (end < last && entries[end].first[leg] == b) {
          ++end;
        }
        out += kron(reps[leg].image(b),
                    evaluate_range(entries, first, end, leg + 1, reps, rest));
        first = end;
      }
      return out;
    }
  }  // namespace

  Matrix evaluate(AlgebraTensor const& x, std::span<Representation const> reps) {
    if (static_cast<int>(reps.size()) != x.legs()) {
      throw InvalidArgument("evaluate: need one representation per leg");
    }
    int dim = 1;
    for (auto const& r : reps) {
      if (!(r.algebra() == x.algebra())) {
        throw InvalidArgument("evaluate: representation of a different algebra");
      }
      dim *= r.dim();
    }
    if (x.legs() == 0) {
      return Matrix::Constant(1, 1, scalar_value(x));
    }
    auto entries = x.entries();
    return evaluate_range(entries, 0, entries.size(), 0, reps, dim);
  }

  Matrix evaluate(AlgebraTensor const& x, Representation const& rep) {
    return evaluate(x, std::span<Representation const>(&rep, 1));
  }

}  // namespace premon
