#include "premon/twining.hpp"

#include <cmath>
#include <mutex>

#include "premon/error.hpp"
#include "premon/quantum_double.hpp"

namespace premon {

  ////////////////////////////////////////////////////////////////////////
  // Factors
  ////////////////////////////////////////////////////////////////////////

  int InvolutiveFactor::legs() const {
    int n = 0;
    for (auto const& b : blocks) {
      n += b.legs();
    }
    return n;
  }

  AlgebraTensor InvolutiveFactor::projector() const {
    if (blocks.empty()) {
      throw InvalidArgument("InvolutiveFactor: no blocks");
    }
    AlgebraTensor p = blocks.front().tensor;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      p = tensor(p, blocks[i].tensor);
    }
    return p;
  }

  AlgebraTensor InvolutiveFactor::expand() const {
    auto p = projector();
    return AlgebraTensor::unit(p.algebra(), p.legs()) - Complex(2.0) * p;
  }

  std::string InvolutiveFactor::describe() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) {
        out += ',';
      }
      switch (blocks[i].kind) {
        case BlockKind::unit: out += 'e'; break;
        case BlockKind::k: out += 'K'; break;
        case BlockKind::delta_k: out += "dK"; break;
      }
    }
    return out + ")";
  }

  FactoredElement::FactoredElement(Algebra                       algebra,
                                   int                           legs,
                                   std::vector<InvolutiveFactor> factors)
      : _algebra(std::move(algebra)), _legs(legs), _factors(std::move(factors)) {
    for (auto const& f : _factors) {
      if (f.legs() != _legs) {
        throw InvalidArgument("FactoredElement: factor " + f.describe()
                              + " has the wrong number of legs");
      }
    }
  }

  FactoredElement FactoredElement::reversed() const {
    return FactoredElement(_algebra, _legs,
                           std::vector<InvolutiveFactor>(_factors.rbegin(), _factors.rend()));
  }

  AlgebraTensor FactoredElement::expand() const {
    auto out = AlgebraTensor::unit(_algebra, _legs);
    for (auto const& f : _factors) {
      out = product(out, f.expand());
    }
    return out;
  }

  Matrix FactoredElement::evaluate(std::span<Representation const> reps) const {
    if (static_cast<int>(reps.size()) != _legs) {
      throw InvalidArgument("FactoredElement::evaluate: need one representation per leg");
    }
    int total = 1;
    for (auto const& r : reps) {
      total *= r.dim();
    }
    Matrix out = Matrix::Identity(total, total);
    for (auto const& f : _factors) {
      std::vector<Matrix> parts;
      std::size_t         leg = 0;
      for (auto const& b : f.blocks) {
        auto slice = reps.subspan(leg, b.legs());
        if (b.kind == BlockKind::unit) {
          parts.push_back(Matrix::Identity(slice.front().dim(), slice.front().dim()));
        } else {
          parts.push_back(premon::evaluate(b.tensor, slice));
        }
        leg += b.legs();
      }
      out = out * (Matrix::Identity(total, total) - 2.0 * kron_all(parts));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Twined structure
  ////////////////////////////////////////////////////////////////////////

  struct TwinedStructure::Cache {
    std::mutex                                  mutex;
    std::map<std::pair<int, int>, Representation> pairs;
    std::map<int, Matrix>                       k_images;
    std::map<std::pair<int, int>, Matrix>       delta_k_images;
  };

  namespace {
    AlgebraTensor untwined_r(Algebra const& algebra) {
      return algebra.kind() == AlgebraKind::quantum_double
                 ? double_r_matrix(algebra.group_ptr())
                 : group_algebra_r_matrix(algebra.group_ptr());
    }

    AlgebraTensor checked_k(ModelPtr const& model, Signature const& signature) {
      if (!model) {
        throw InvalidArgument("build_twist: no algebra model");
      }
      if (signature.size() != model->size()) {
        throw InvalidArgument("signature has " + std::to_string(signature.size())
                              + " entries but " + model->name + " has "
                              + std::to_string(model->size()) + " irreps");
      }
      return k_element(signature, model->idempotents);
    }
  }  // namespace

  TwinedStructure::TwinedStructure(ModelPtr model, Signature signature)
      : _model(std::move(model)),
        _signature(std::move(signature)),
        _k(checked_k(_model, _signature)),
        _delta_k(coproduct_leg(_k, 0)),
        _r(untwined_r(_model->algebra)),
        _phi(_model->algebra, 3, {}),
        _phi_inv(_model->algebra, 3, {}),
        _r_twist(_model->algebra, 2, {}),
        _xi(_model->algebra, 4, {}),
        _cache(std::make_shared<Cache>()) {
    auto const& A = _model->algebra;
    FactorBlock const U{BlockKind::unit, AlgebraTensor::unit(A, 1)};
    FactorBlock const K{BlockKind::k, _k};
    FactorBlock const DK{BlockKind::delta_k, _delta_k};

    _phi     = FactoredElement(A, 3, {{{K, K, U}}, {{K, U, K}}, {{K, DK}}});
    _phi_inv = _phi.reversed();
    _r_twist = FactoredElement(A, 2, {{{K, K}}});
    _xi      = FactoredElement(A, 4,
                               {
                                   {{U, K, U, K}},
                                   {{K, U, K, U}},
                                   {{U, K, K, U}},
                                   {{K, U, U, K}},
                                   {{U, K, DK}},
                                   {{K, U, DK}},
                                   {{DK, U, K}},
                                   {{DK, K, U}},
                                   {{DK, DK}},
                               });
  }

  TwinedStructure build_twist(ModelPtr model, Signature signature) {
    return TwinedStructure(std::move(model), std::move(signature));
  }

  AlgebraTensor TwinedStructure::phi_tilde() const {
    return _phi.expand();
  }

  AlgebraTensor TwinedStructure::phi_tilde_inverse() const {
    return _phi_inv.expand();
  }

  AlgebraTensor TwinedStructure::r_tilde() const {
    return product(_r_twist.expand(), _r);
  }

  AlgebraTensor TwinedStructure::xi_tensor() const {
    return _xi.expand();
  }

  AlgebraTensor TwinedStructure::kappa() const {
    auto const& A  = algebra();
    auto const  e  = AlgebraTensor::unit(A, 1);
    auto const  kk = tensor(_k, _k);
    return tensor(kk, e) + tensor(tensor(_k, e), _k) - tensor(_k, _delta_k);
  }

  Representation const& TwinedStructure::pair_rep(int a, int b) const {
    std::lock_guard lock(_cache->mutex);
    auto key = std::make_pair(a, b);
    auto it  = _cache->pairs.find(key);
    if (it == _cache->pairs.end()) {
      it = _cache->pairs.emplace(key, tensor_rep(irrep(a), irrep(b))).first;
    }
    return it->second;
  }

  Matrix TwinedStructure::block_matrix(FactorBlock const& block,
                                       std::span<int const> labels) const {
    switch (block.kind) {
      case BlockKind::unit: {
        auto d = irrep(labels[0]).dim();
        return Matrix::Identity(d, d);
      }
      case BlockKind::k: {
        std::lock_guard lock(_cache->mutex);
        auto it = _cache->k_images.find(labels[0]);
        if (it == _cache->k_images.end()) {
          it = _cache->k_images.emplace(labels[0], premon::evaluate(_k, irrep(labels[0]))).first;
        }
        return it->second;
      }
      case BlockKind::delta_k: {
        auto key = std::make_pair(labels[0], labels[1]);
        {
          std::lock_guard lock(_cache->mutex);
          if (auto it = _cache->delta_k_images.find(key); it != _cache->delta_k_images.end()) {
            return it->second;
          }
        }
        std::array<Representation, 2> reps{irrep(labels[0]), irrep(labels[1])};
        Matrix m = premon::evaluate(_delta_k, reps);
        std::lock_guard lock(_cache->mutex);
        return _cache->delta_k_images.emplace(key, std::move(m)).first->second;
      }
    }
    throw InternalConsistency("block_matrix: unknown block kind");
  }

  Matrix TwinedStructure::evaluate_labels(FactoredElement const& x,
                                          std::span<int const>   labels) const {
    if (static_cast<int>(labels.size()) != x.legs()) {
      throw InvalidArgument("wrong number of irrep labels");
    }
    int total = 1;
    for (auto l : labels) {
      if (l < 0 || static_cast<std::size_t>(l) >= size()) {
        throw InvalidArgument("irrep label " + std::to_string(l) + " out of range");
      }
      total *= irrep(l).dim();
    }
    Matrix out = Matrix::Identity(total, total);
    for (auto const& f : x.factors()) {
      std::vector<Matrix> parts;
      std::size_t         leg = 0;
      for (auto const& b : f.blocks) {
        parts.push_back(block_matrix(b, labels.subspan(leg, b.legs())));
        leg += b.legs();
      }
      out = out * (Matrix::Identity(total, total) - 2.0 * kron_all(parts));
    }
    return out;
  }

  Matrix TwinedStructure::associator(int a, int b, int c) const {
    std::array<int, 3> l{a, b, c};
    return evaluate_labels(_phi, l);
  }

  Matrix TwinedStructure::associator_inverse(int a, int b, int c) const {
    std::array<int, 3> l{a, b, c};
    return evaluate_labels(_phi_inv, l);
  }

  Matrix TwinedStructure::kappa_exponential(int a, int b, int c) const {
    // the untwined coassociator is the unit, so Phi~ = exp(i pi kappa)
    return associator(a, b, c);
  }

  Matrix TwinedStructure::r_tilde_matrix(int a, int b) const {
    std::array<int, 2> l{a, b};
    std::array<Representation, 2> reps{irrep(a), irrep(b)};
    return evaluate_labels(_r_twist, l) * premon::evaluate(_r, reps);
  }

  Matrix TwinedStructure::braiding(int a, int b) const {
    return flip_matrix(irrep(a).dim(), irrep(b).dim()) * r_tilde_matrix(a, b);
  }

  Matrix TwinedStructure::q(int a, int b, int c, int d) const {
    std::array<int, 4> l{a, b, c, d};
    return evaluate_labels(_xi, l);
  }

  Matrix TwinedStructure::q_from_definition(int a, int b, int c, int d) const {
    auto const ia = irrep(a).dim();
    auto const id = irrep(d).dim();
    std::array<Representation, 3> ab_c_d{pair_rep(a, b), irrep(c), irrep(d)};
    std::array<Representation, 3> a_bc_d{irrep(a), pair_rep(b, c), irrep(d)};
    std::array<Representation, 3> a_b_cd{irrep(a), irrep(b), pair_rep(c, d)};
    return phi_inverse_matrix(ab_c_d)
           * kron(associator(a, b, c), Matrix::Identity(id, id))
           * phi_matrix(a_bc_d)
           * kron(Matrix::Identity(ia, ia), associator(b, c, d))
           * phi_inverse_matrix(a_b_cd);
  }

  Matrix TwinedStructure::phi_matrix(std::span<Representation const> reps) const {
    return _phi.evaluate(reps);
  }

  Matrix TwinedStructure::phi_inverse_matrix(std::span<Representation const> reps) const {
    return _phi_inv.evaluate(reps);
  }

  Matrix TwinedStructure::r_tilde_matrix(Representation const& a,
                                         Representation const& b) const {
    std::array<Representation, 2> reps{a, b};
    return _r_twist.evaluate(reps) * premon::evaluate(_r, reps);
  }

  Matrix TwinedStructure::braiding(Representation const& a, Representation const& b) const {
    return flip_matrix(a.dim(), b.dim()) * r_tilde_matrix(a, b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  AlgebraTensor xi_from_definition(TwinedStructure const& t, double tol) {
    auto const phi     = t.phi_tilde();
    auto const phi_inv = t.phi_tilde_inverse();
    auto xi = product(coproduct_leg(phi_inv, 0), append_unit_legs(phi, 1));
    xi      = product(xi, coproduct_leg(phi, 1));
    xi      = product(xi, prepend_unit_legs(phi, 1));
    xi      = product(xi, coproduct_leg(phi_inv, 2));
    auto const defect = max_abs_diff(xi, t.xi_tensor());
    if (defect > tol) {
      throw InternalConsistency("xi from its definition differs from the factored form by "
                                + std::to_string(defect));
    }
    return xi;
  }

  TwinedData evaluate_all(TwinedStructure const& t, std::span<Quadruple const> quadruples) {
    TwinedData out;
    auto const n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        out.braidings.emplace(Pair{a, b}, t.braiding(a, b));
        for (int c = 0; c < n; ++c) {
          out.associators.emplace(Triple{a, b, c}, t.associator(a, b, c));
        }
      }
    }
    for (auto const& q : quadruples) {
      out.q_maps.emplace(q, t.q(q[0], q[1], q[2], q[3]));
    }
    return out;
  }

  Matrix spectral_associator(TwinedStructure const& t, int a, int b, int c, double tol) {
    std::array<Representation, 3> reps{t.irrep(a), t.irrep(b), t.irrep(c)};
    Matrix const kappa = premon::evaluate(t.kappa(), reps);
    Eigen::ComplexEigenSolver<Matrix> solver(kappa);
    if (solver.info() != Eigen::Success) {
      throw NumericDegeneracy("spectral_associator: eigen-decomposition failed");
    }
    auto const& values = solver.eigenvalues();
    Eigen::VectorXcd phase(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      auto const v = values[i];
      auto const n = std::round(v.real());
      if (std::abs(v - Complex(n, 0)) > tol) {
        throw NumericDegeneracy("kappa has a non-integer eigenvalue");
      }
      phase[i] = std::fmod(std::abs(n), 2.0) == 0 ? 1.0 : -1.0;
    }
    Matrix const& vecs = solver.eigenvectors();
    return vecs * phase.asDiagonal() * vecs.inverse();
  }

}  // namespace premon
