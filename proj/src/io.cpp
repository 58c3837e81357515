#include "premon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "premon/error.hpp"

namespace premon::io {

  double rounded(double v) {
    if (std::abs(v) < kFlushBelow) {
      return 0.0;
    }
    if (!std::isfinite(v)) {
      return v;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
  }

  Json complex_json(Complex z) {
    return Json::array({rounded(z.real()), rounded(z.imag())});
  }

  namespace {
    Complex complex_from_json(Json const& j) {
      if (j.is_number()) {
        return {j.get<double>(), 0.0};
      }
      if (!j.is_array() || j.size() != 2) {
        throw ValidationError("complex number must be [re, im] or a real number");
      }
      return {j[0].get<double>(), j[1].get<double>()};
    }

    template <class T>
    T required(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const&) {
        throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
      }
    }
  }  // namespace

  Json matrix_json(Matrix const& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        row.push_back(complex_json(m(i, k)));
      }
      rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
  }

  Matrix matrix_from_json(Json const& j) {
    Json entries;
    if (j.is_array()) {
      entries = j;
    } else {
      entries = required<Json>(j, "entries");
    }
    auto const rows = static_cast<Eigen::Index>(entries.size());
    auto const cols = rows ? static_cast<Eigen::Index>(entries[0].size()) : 0;
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(entries[i].size()) != cols) {
        throw ValidationError("matrix rows have different lengths");
      }
      for (Eigen::Index k = 0; k < cols; ++k) {
        m(i, k) = complex_from_json(entries[i][k]);
      }
    }
    return m;
  }

  Json group_json(FiniteGroup const& g) {
    return Json{{"order", g.order()},
                {"identity", g.identity()},
                {"mult", g.cayley_table()},
                {"labels", g.labels()}};
  }

  GroupPtr group_from_json(Json const& j) {
    auto mult   = required<std::vector<std::vector<Element>>>(j, "mult");
    auto labels = j.contains("labels") ? required<std::vector<std::string>>(j, "labels")
                                       : std::vector<std::string>{};
    if (j.contains("order") && required<std::size_t>(j, "order") != mult.size()) {
      throw ValidationError("\"order\" does not match the size of \"mult\"");
    }
    auto g = from_cayley_table(mult, std::move(labels));
    if (j.contains("identity") && required<Element>(j, "identity") != g->identity()) {
      throw ValidationError("\"identity\" is not the identity of \"mult\"");
    }
    return g;
  }

  Json signature_json(Signature const& s) {
    return Json{{"bits", s.bits()}};
  }

  Signature signature_from_json(Json const& j) {
    return Signature(required<std::vector<int>>(j, "bits"));
  }

  Json tensor_json(AlgebraTensor const& x) {
    Json out = Json::array();
    for (auto const& [key, c] : x.entries()) {
      out.push_back(Json{{"key", key}, {"re", rounded(c.real())}, {"im", rounded(c.imag())}});
    }
    return out;
  }

  Json character_table_json(CharacterTable const& t) {
    auto const& G = *t.group;
    Json classes  = Json::array();
    for (auto const& c : t.classes) {
      std::vector<std::string> names;
      for (auto m : c.members) {
        names.push_back(G.label(m));
      }
      classes.push_back(Json{{"representative", c.representative},
                             {"members", c.members},
                             {"labels", names}});
    }
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
      Json values = Json::array();
      for (auto v : t.rows[r].values) {
        values.push_back(complex_json(v));
      }
      rows.push_back(Json{{"label", r}, {"degree", t.rows[r].degree}, {"values", values}});
    }
    return Json{{"classes", classes}, {"characters", rows}};
  }

  Json irreps_json(std::vector<Irrep> const& irreps) {
    Json out = Json::array();
    for (auto const& irrep : irreps) {
      Json mats = Json::array();
      for (auto const& m : irrep.rep.images()) {
        mats.push_back(matrix_json(m)["entries"]);
      }
      out.push_back(Json{{"label", irrep.label}, {"dim", irrep.dim()}, {"matrices", mats}});
    }
    return out;
  }

  std::vector<Irrep> irreps_from_json(Json const& j, CharacterTable const& table) {
    auto const& G    = *table.group;
    auto const  A    = Algebra::group_algebra(table.group);
    Json const  list = j.is_object() ? required<Json>(j, "irreps") : j;
    if (!list.is_array()) {
      throw ValidationError("irreps must be a list");
    }
    std::vector<Irrep> out;
    std::vector<bool>  seen(table.size(), false);
    for (auto const& item : list) {
      auto mats = required<Json>(item, "matrices");
      if (mats.size() != G.order()) {
        throw ValidationError("irrep needs one matrix per group element");
      }
      std::vector<Matrix> images;
      for (auto const& m : mats) {
        images.push_back(matrix_from_json(m));
      }
      auto const dim = static_cast<int>(images.front().rows());
      for (auto const& m : images) {
        if (m.rows() != dim || m.cols() != dim) {
          throw ValidationError("irrep matrices must be square of one size");
        }
      }
      Representation rep(A, dim, std::move(images));
      auto chi = class_character(rep, table);
      std::optional<std::size_t> row;
      for (std::size_t r = 0; r < table.size(); ++r) {
        double diff = 0;
        for (std::size_t c = 0; c < chi.size(); ++c) {
          diff = std::max(diff, std::abs(chi[c] - table.rows[r].values[c]));
        }
        if (diff < 1e-6) {
          row = r;
        }
      }
      if (!row || seen[*row]) {
        throw ValidationError("irrep character is not an unused row of the character table");
      }
      seen[*row] = true;
      Irrep irrep{static_cast<int>(*row), rep, table.rows[*row]};
      if (!verify_irrep(table, irrep).pass) {
        throw ValidationError("irrep " + std::to_string(*row) + " is not a homomorphism");
      }
      out.push_back(std::move(irrep));
    }
    if (out.size() != table.size()) {
      throw ValidationError("expected " + std::to_string(table.size()) + " irreps, got "
                            + std::to_string(out.size()));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.label < b.label; });
    return out;
  }

  Json report_json(CoherenceReport const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"labels", c.labels},
                            {"defect", rounded(c.defect)},
                            {"pass", c.pass}});
    }
    return Json{{"signature", r.signature.bits()},
                {"checks", checks},
                {"worst_defect", rounded(r.worst_defect)},
                {"failures", r.failures()},
                {"pass", r.pass()}};
  }

  Json symmetry_json(SymmetryResult const& s) {
    Json out{{"kind", s.kind == SymmetryKind::symmetric ? "symmetric" : "braided"},
             {"max_monodromy_defect", rounded(s.defect)}};
    out["witness"] = s.witness ? Json(*s.witness) : Json(nullptr);
    return out;
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open " + path);
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }

}  // namespace premon::io
