#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "premon/coherence.hpp"
#include "premon/error.hpp"
#include "premon/io.hpp"
#include "premon/quantum_double.hpp"

namespace py = pybind11;
using namespace premon;

namespace {

  py::dict tensor_dict(AlgebraTensor const& x) {
    py::dict out;
    for (auto const& [key, c] : x.entries()) {
      out[py::tuple(py::cast(key))] = c;
    }
    return out;
  }

  py::dict report_dict(CoherenceReport const& r) {
    py::list checks;
    for (auto const& c : r.checks) {
      py::dict d;
      d["name"]   = c.name;
      d["labels"] = c.labels;
      d["defect"] = c.defect;
      d["pass"]   = c.pass;
      checks.append(d);
    }
    py::dict out;
    out["signature"]    = r.signature.bits();
    out["checks"]       = checks;
    out["worst_defect"] = r.worst_defect;
    out["failures"]     = r.failures();
    out["pass"]         = r.pass();
    return out;
  }

}  // namespace

PYBIND11_MODULE(_premon, m) {
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UnsupportedGroup>(m, "UnsupportedGroup", PyExc_RuntimeError);
  py::register_exception<NumericDegeneracy>(m, "NumericDegeneracy", PyExc_RuntimeError);
  py::register_exception<InternalConsistency>(m, "InternalConsistency", PyExc_RuntimeError);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("cayley_table", &FiniteGroup::cayley_table)
      .def("is_abelian", &FiniteGroup::is_abelian);

  m.def("dihedral", [](int n) { return std::const_pointer_cast<FiniteGroup>(dihedral(n)); }, py::arg("n"));
  m.def(
      "group_from_table",
      [](std::vector<std::vector<Element>> const& table, std::vector<std::string> labels) {
        return std::const_pointer_cast<FiniteGroup>(from_cayley_table(table, std::move(labels)));
      },
      py::arg("table"), py::arg("labels") = std::vector<std::string>{});

  m.def(
      "character_table",
      [](std::shared_ptr<FiniteGroup> const& g, std::uint64_t seed) {
        auto t = character_table(g, seed);
        py::list rows;
        for (auto const& r : t.rows) {
          rows.append(r.values);
        }
        py::list classes;
        for (auto const& c : t.classes) {
          classes.append(c.members);
        }
        py::dict out;
        out["classes"]    = classes;
        out["characters"] = rows;
        return out;
      },
      py::arg("group"), py::arg("seed") = 0);

  py::class_<Signature>(m, "Signature")
      .def(py::init<std::vector<int>>(), py::arg("bits"))
      .def_static("parse", &Signature::parse)
      .def_static("trivial", &Signature::trivial)
      .def_static("all", &Signature::all)
      .def_property_readonly("bits", &Signature::bits)
      .def("is_trivial", &Signature::is_trivial)
      .def("__len__", &Signature::size)
      .def("__eq__", [](Signature const& a, Signature const& b) { return a == b; })
      .def("__repr__", [](Signature const& s) { return "Signature(" + s.to_string() + ")"; });

  py::class_<AlgebraModel, std::shared_ptr<AlgebraModel>>(m, "Model")
      .def_readonly("name", &AlgebraModel::name)
      .def("__len__", &AlgebraModel::size)
      .def_property_readonly("dimension", [](AlgebraModel const& a) { return a.algebra.dimension(); })
      .def("irrep_dims",
           [](AlgebraModel const& a) {
             std::vector<int> dims;
             for (auto const& r : a.irreps) dims.push_back(r.dim());
             return dims;
           })
      .def("irrep_images", [](AlgebraModel const& a, int label) { return a.irreps.at(label).images(); })
      .def("idempotent", [](AlgebraModel const& a, int label) { return tensor_dict(a.idempotents.at(label)); });

  auto const to_mutable = [](ModelPtr p) { return std::const_pointer_cast<AlgebraModel>(p); };
  m.def("group_algebra", [=](int n) { return to_mutable(dihedral_group_algebra_model(n)); },
        py::arg("n"), "C[D_n]");
  m.def("quantum_double", [=](int n) { return to_mutable(dihedral_double_model(n)); },
        py::arg("n"), "D(D_n)");

  py::class_<TwinedStructure>(m, "Twined")
      .def(py::init([](std::shared_ptr<AlgebraModel> model, Signature s) {
             return build_twist(std::move(model), std::move(s));
           }),
           py::arg("model"), py::arg("signature"))
      .def_property_readonly("signature", &TwinedStructure::signature)
      .def("__len__", &TwinedStructure::size)
      .def("associator", &TwinedStructure::associator)
      .def("associator_inverse", &TwinedStructure::associator_inverse)
      .def("braiding", py::overload_cast<int, int>(&TwinedStructure::braiding, py::const_))
      .def("q", &TwinedStructure::q)
      .def("q_from_definition", &TwinedStructure::q_from_definition)
      .def("k", [](TwinedStructure const& t) { return tensor_dict(t.k()); })
      .def(
          "check",
          [](TwinedStructure const& t, double tol, bool all, std::size_t sample, std::uint64_t seed) {
            SweepOptions opts;
            opts.tol    = tol;
            opts.all    = all;
            opts.sample = sample;
            opts.seed   = seed;
            py::gil_scoped_release release;
            auto r = check_all(t, opts);
            py::gil_scoped_acquire acquire;
            return report_dict(r);
          },
          py::arg("tol") = kDefaultTolerance, py::arg("all") = false, py::arg("sample") = 256,
          py::arg("seed") = 0)
      .def("census",
           [](TwinedStructure const& t, double tol) {
             std::vector<std::pair<Quadruple, double>> out;
             for (auto const& d : pentagon_deviation_census(t, {}, tol)) {
               out.emplace_back(d.labels, d.norm);
             }
             return out;
           },
           py::arg("tol") = kDefaultTolerance)
      .def("symmetry",
           [](TwinedStructure const& t) {
             auto r = check_symmetry(t);
             py::dict out;
             out["kind"]    = r.kind == SymmetryKind::symmetric ? "symmetric" : "braided";
             out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
             out["defect"]  = r.defect;
             return out;
           })
      .def("fingerprint", [](TwinedStructure const& t) { return signature_fingerprint(t).digest; });

  m.def(
      "run_cli",
      [](std::vector<std::string> const& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the premon command line; returns (exit code, stdout, stderr).");
}
