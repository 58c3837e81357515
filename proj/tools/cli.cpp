#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "premon/coherence.hpp"
#include "premon/error.hpp"
#include "premon/io.hpp"
#include "premon/quantum_double.hpp"

namespace premon::cli {

  namespace {
    using io::Json;

    struct RunConfig {
      std::optional<int>         dihedral;
      std::string                group_file;
      std::string                irreps_file;
      bool                       use_double = false;
      std::string                signature;
      std::string                signature_file;
      double                     tol    = kDefaultTolerance;
      std::uint64_t              seed   = 0;
      std::size_t                sample = 256;
      bool                       all    = false;
      std::string                format = "text";
      std::string                emit   = "associators";
      std::string                action;
      unsigned                   threads = 0;
    };

    // Everything derived from the group source.
    struct Source {
      GroupPtr           group;
      CharacterTable     table;
      std::vector<Irrep> irreps;
      std::string        name;  // "D3" or the file stem
    };

    Source load_source(RunConfig const& cfg) {
      Source s;
      if (cfg.dihedral) {
        s.group  = dihedral(*cfg.dihedral);
        s.table  = character_table(s.group, cfg.seed, cfg.tol);
        s.irreps = dihedral_irreps(s.group, *cfg.dihedral);
        s.name   = "D" + std::to_string(*cfg.dihedral);
        return s;
      }
      if (cfg.group_file.empty()) {
        throw InvalidArgument("a group is required: --dihedral N or --group FILE");
      }
      s.group = io::group_from_json(io::read_json_file(cfg.group_file));
      s.table = character_table(s.group, cfg.seed, cfg.tol);
      s.name  = std::filesystem::path(cfg.group_file).stem().string();
      if (!cfg.irreps_file.empty()) {
        s.irreps = io::irreps_from_json(io::read_json_file(cfg.irreps_file), s.table);
      } else if (s.group->is_abelian()) {
        s.irreps = abelian_irreps(s.table);
      } else if (s.group->order() % 2 == 0
                 && *s.group == *dihedral(static_cast<int>(s.group->order() / 2))) {
        s.irreps = dihedral_irreps(s.group, static_cast<int>(s.group->order() / 2));
      } else {
        throw UnsupportedGroup("no closed-form irreps for this group; pass them with --irreps FILE");
      }
      return s;
    }

    ModelPtr load_model(RunConfig const& cfg, Source const& s) {
      if (cfg.use_double) {
        return quantum_double_model(s.group, s.irreps, "D(" + s.name + ")");
      }
      return group_algebra_model(s.table, s.irreps, "C[" + s.name + "]");
    }

    Signature load_signature(RunConfig const& cfg) {
      if (!cfg.signature_file.empty()) {
        return io::signature_from_json(io::read_json_file(cfg.signature_file));
      }
      if (cfg.signature.empty()) {
        throw InvalidArgument("--signature b0,b1,... is required (full vector, b0 = 0)");
      }
      return Signature::parse(cfg.signature);
    }

    SweepOptions sweep_options(RunConfig const& cfg) {
      SweepOptions o;
      o.tol     = cfg.tol;
      o.all     = cfg.all;
      o.sample  = cfg.sample;
      o.seed    = cfg.seed;
      o.threads = cfg.threads;
      return o;
    }

    ////////////////////////////////////////////////////////////////////
    // Text formatting
    ////////////////////////////////////////////////////////////////////

    std::string num(double v) {
      v = io::rounded(v);
      if (std::abs(v) < 1e-12) {
        v = 0;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return buf;
    }

    std::string num(Complex z) {
      if (std::abs(z.imag()) < 1e-12) {
        return num(z.real());
      }
      if (std::abs(z.real()) < 1e-12) {
        return num(z.imag()) + "i";
      }
      return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
    }

    std::string labels_text(std::span<int const> labels) {
      std::string out;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + std::to_string(labels[i]);
      }
      return out;
    }

    void print_matrix(std::ostream& out, Matrix const& m, std::string const& indent = "  ") {
      std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
      std::size_t width = 1;
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
          cells[i][k] = num(m(i, k));
          width       = std::max(width, cells[i][k].size());
        }
      }
      for (auto const& row : cells) {
        out << indent << "[";
        for (auto const& c : row) {
          out << ' ' << std::string(width - c.size(), ' ') << c;
        }
        out << " ]\n";
      }
    }

    std::string element_text(AlgebraTensor const& x) {
      std::string out;
      for (auto const& [key, c] : x.entries()) {
        std::string term;
        for (std::size_t i = 0; i < key.size(); ++i) {
          term += (i ? " (x) " : "") + x.algebra().basis_label(key[i]);
        }
        out += (out.empty() ? "" : " + ") + ("(" + num(c) + ") " + term);
      }
      return out.empty() ? "0" : out;
    }

    Json element_json(AlgebraTensor const& x) {
      Json terms = Json::array();
      for (auto const& [key, c] : x.entries()) {
        std::vector<std::string> names;
        for (auto b : key) {
          names.push_back(x.algebra().basis_label(b));
        }
        terms.push_back(Json{{"key", key},
                             {"basis", names},
                             {"re", io::rounded(c.real())},
                             {"im", io::rounded(c.imag())}});
      }
      return terms;
    }

    void emit_json(std::ostream& out, Json const& j) {
      out << j.dump(2) << "\n";
    }

    ////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////

    int cmd_group(RunConfig const& cfg, std::ostream& out) {
      auto const  s       = load_source(cfg);
      auto const& G       = *s.group;
      auto const  classes = conjugacy_classes(G);
      if (cfg.format == "json") {
        Json j = io::group_json(G);
        Json cls = Json::array();
        for (auto const& c : classes) {
          cls.push_back(Json{{"representative", c.representative}, {"members", c.members}});
        }
        Json cen = Json::array();
        for (Element g = 0; g < G.order(); ++g) {
          cen.push_back(Json{{"of", g}, {"members", centralizer(G, g).members}});
        }
        emit_json(out, Json{{"group", j}, {"classes", cls}, {"centralizers", cen},
                            {"abelian", G.is_abelian()}});
        return 0;
      }
      out << "group " << s.name << ", order " << G.order() << ", identity "
          << G.label(G.identity()) << (G.is_abelian() ? ", abelian" : "") << "\n";
      out << "elements:";
      for (Element g = 0; g < G.order(); ++g) {
        out << ' ' << G.label(g);
      }
      out << "\nconjugacy classes:\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "  C" << i << " = {";
        for (std::size_t k = 0; k < classes[i].members.size(); ++k) {
          out << (k ? ", " : "") << G.label(classes[i].members[k]);
        }
        out << "}\n";
      }
      out << "centralizers:\n";
      for (Element g = 0; g < G.order(); ++g) {
        out << "  Z(" << G.label(g) << ") = {";
        auto z = centralizer(G, g);
        for (std::size_t k = 0; k < z.members.size(); ++k) {
          out << (k ? ", " : "") << G.label(z.members[k]);
        }
        out << "}\n";
      }
      return 0;
    }

    int cmd_chartable(RunConfig const& cfg, std::ostream& out) {
      auto const s = load_source(cfg);
      if (cfg.format == "json") {
        emit_json(out, io::character_table_json(s.table));
        return 0;
      }
      auto const& G = *s.group;
      out << "character table of " << s.name << "\n";
      out << "classes:";
      for (auto const& c : s.table.classes) {
        out << "  " << G.label(c.representative) << "(" << c.size() << ")";
      }
      out << "\n";
      for (std::size_t r = 0; r < s.table.size(); ++r) {
        out << "  chi_" << r << ":";
        for (auto v : s.table.rows[r].values) {
          out << ' ' << num(v);
        }
        out << "\n";
      }
      return 0;
    }

    int print_idempotents(RunConfig const& cfg, AlgebraModel const& model, std::ostream& out) {
      if (cfg.format == "json") {
        Json list = Json::array();
        for (std::size_t l = 0; l < model.idempotents.size(); ++l) {
          list.push_back(Json{{"label", l},
                              {"dim", model.irreps[l].dim()},
                              {"terms", element_json(model.idempotents[l])}});
        }
        emit_json(out, Json{{"algebra", model.name}, {"idempotents", list}});
        return 0;
      }
      out << "central idempotents of " << model.name << "\n";
      for (std::size_t l = 0; l < model.idempotents.size(); ++l) {
        out << "  E_" << l << " = " << element_text(model.idempotents[l]) << "\n";
      }
      return 0;
    }

    int cmd_idempotents(RunConfig const& cfg, std::ostream& out) {
      auto const s = load_source(cfg);
      return print_idempotents(cfg, *load_model(cfg, s), out);
    }

    int cmd_double(RunConfig cfg, std::ostream& out) {
      cfg.use_double = true;
      auto const s   = load_source(cfg);
      if (cfg.action == "idempotents") {
        return print_idempotents(cfg, *load_model(cfg, s), out);
      }
      auto const  irreps  = dpr_irreps(s.group, s.irreps);
      auto const  classes = conjugacy_classes(*s.group);
      auto const& G       = *s.group;
      if (cfg.format == "json") {
        Json list = Json::array();
        for (auto const& irrep : irreps) {
          list.push_back(Json{{"label", irrep.label},
                              {"dim", irrep.dim()},
                              {"class", irrep.class_index},
                              {"class_representative", classes[irrep.class_index].representative},
                              {"centralizer_irrep", irrep.centralizer_label}});
        }
        emit_json(out, Json{{"algebra", "D(" + s.name + ")"},
                            {"dimension", G.order() * G.order()},
                            {"irreps", list}});
        return 0;
      }
      out << "D(" << s.name << "): dimension " << G.order() * G.order() << ", "
          << irreps.size() << " irreps\n";
      for (auto const& irrep : irreps) {
        auto const& c = classes[irrep.class_index];
        out << "  " << irrep.label << ": dim " << irrep.dim() << ", class of "
            << G.label(c.representative) << " (size " << c.size() << "), centralizer irrep "
            << irrep.centralizer_label << "\n";
      }
      return 0;
    }

    int cmd_twine(RunConfig const& cfg, std::ostream& out) {
      auto const s = load_source(cfg);
      auto const t = build_twist(load_model(cfg, s), load_signature(cfg));
      auto const n = static_cast<int>(t.size());
      bool const js = cfg.format == "json";
      Json       j{{"algebra", t.model()->name}, {"signature", t.signature().bits()},
                   {"emit", cfg.emit}};
      if (!js) {
        out << t.model()->name << ", signature " << t.signature().to_string() << "\n";
      }
      if (cfg.emit == "associators") {
        Json list = Json::array();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              Matrix m = t.associator(a, b, c);
              std::array<int, 3> l{a, b, c};
              if (js) {
                list.push_back(Json{{"labels", l}, {"matrix", io::matrix_json(m)}});
              } else {
                out << "a_{" << labels_text(l) << "}" << (is_identity(m, cfg.tol) ? " = I\n" : ":\n");
                if (!is_identity(m, cfg.tol)) {
                  print_matrix(out, m);
                }
              }
            }
        j["associators"] = list;
      } else if (cfg.emit == "braidings") {
        Json list = Json::array();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            Matrix m = t.braiding(a, b);
            std::array<int, 2> l{a, b};
            if (js) {
              list.push_back(Json{{"labels", l}, {"matrix", io::matrix_json(m)}});
            } else {
              out << "sigma_{" << labels_text(l) << "}:\n";
              print_matrix(out, m);
            }
          }
        j["braidings"] = list;
      } else if (cfg.emit == "q") {
        Json list = Json::array();
        for (auto const& q : sweep_quadruples(t, sweep_options(cfg))) {
          Matrix m = t.q(q[0], q[1], q[2], q[3]);
          if (js) {
            list.push_back(Json{{"labels", q}, {"matrix", io::matrix_json(m)}});
          } else {
            out << "q_{" << labels_text(q) << "}" << (is_identity(m, cfg.tol) ? " = I\n" : ":\n");
            if (!is_identity(m, cfg.tol)) {
              print_matrix(out, m);
            }
          }
        }
        j["q"] = list;
      } else {
        // idempotents
        Json list = Json::array();
        for (std::size_t l = 0; l < t.model()->idempotents.size(); ++l) {
          auto const& e = t.model()->idempotents[l];
          list.push_back(Json{{"label", l}, {"terms", element_json(e)}});
          if (!js) {
            out << "E_" << l << " = " << element_text(e) << "\n";
          }
        }
        j["idempotents"] = list;
        j["K"]           = element_json(t.k());
        if (!js) {
          out << "K = " << element_text(t.k()) << "\n";
        }
      }
      if (js) {
        emit_json(out, j);
      }
      return 0;
    }

    int cmd_check(RunConfig const& cfg, std::ostream& out) {
      auto const s      = load_source(cfg);
      auto const t      = build_twist(load_model(cfg, s), load_signature(cfg));
      auto const report = check_all(t, sweep_options(cfg));
      auto const sym    = check_symmetry(t, cfg.tol);
      if (cfg.format == "json") {
        Json j = io::report_json(report);
        j["algebra"]  = t.model()->name;
        j["symmetry"] = io::symmetry_json(sym);
        j["tolerance"] = cfg.tol;
        emit_json(out, j);
        return report.pass() ? 0 : 1;
      }
      out << t.model()->name << ", signature " << t.signature().to_string() << "\n";
      std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // pass, total
      std::map<std::string, double> worst;
      for (auto const& c : report.checks) {
        auto& [ok, total] = tally[c.name];
        ok += c.pass;
        ++total;
        worst[c.name] = std::max(worst[c.name], c.defect);
      }
      for (auto const& [name, counts] : tally) {
        out << "  " << name << ": " << counts.first << "/" << counts.second
            << " pass, worst defect " << num(worst[name]) << "\n";
      }
      for (auto const& c : report.checks) {
        if (!c.pass) {
          out << "  FAIL " << c.name << " (" << labels_text(c.labels) << ") defect "
              << num(c.defect) << "\n";
        }
      }
      out << "symmetry: "
          << (sym.kind == SymmetryKind::symmetric ? "SYMMETRIC" : "BRAIDED");
      if (sym.witness) {
        out << ", witness (" << (*sym.witness)[0] << "," << (*sym.witness)[1] << ")";
      }
      out << "\n" << (report.pass() ? "PASS" : "FAIL") << ": " << report.checks.size()
          << " checks, worst defect " << num(report.worst_defect) << ", tolerance "
          << num(cfg.tol) << "\n";
      return report.pass() ? 0 : 1;
    }

    int cmd_census(RunConfig const& cfg, std::ostream& out) {
      auto const s     = load_source(cfg);
      auto const t     = build_twist(load_model(cfg, s), load_signature(cfg));
      auto const quads = sweep_quadruples(t, sweep_options(cfg));
      auto const devs  = pentagon_deviation_census(t, quads, cfg.tol);
      if (cfg.format == "json") {
        Json list = Json::array();
        for (auto const& d : devs) {
          list.push_back(Json{{"labels", d.labels}, {"norm", io::rounded(d.norm)}});
        }
        emit_json(out, Json{{"algebra", t.model()->name},
                            {"signature", t.signature().bits()},
                            {"quadruples_examined", quads.size()},
                            {"deviations", list}});
        return 0;
      }
      out << t.model()->name << ", signature " << t.signature().to_string() << ": "
          << devs.size() << " of " << quads.size() << " quadruples have q != I\n";
      for (auto const& d : devs) {
        out << "  (" << labels_text(d.labels) << ") |q - I| = " << num(d.norm) << "\n";
      }
      return 0;
    }

    int cmd_fingerprint(RunConfig const& cfg, std::ostream& out) {
      auto const s     = load_source(cfg);
      auto const model = load_model(cfg, s);
      std::vector<Signature> sigs;
      if (cfg.signature.empty() && cfg.signature_file.empty()) {
        sigs = Signature::all(model->size());
      } else {
        sigs.push_back(load_signature(cfg));
      }
      Json list = Json::array();
      for (auto const& sig : sigs) {
        auto const t     = build_twist(model, sig);
        auto const quads = sweep_quadruples(t, sweep_options(cfg));
        auto const fp    = signature_fingerprint(t, quads);
        if (cfg.format == "json") {
          list.push_back(Json{{"signature", sig.bits()}, {"digest", fp.digest}});
        } else {
          out << sig.to_string() << "  " << fp.digest << "\n";
        }
      }
      if (cfg.format == "json") {
        emit_json(out, Json{{"algebra", model->name}, {"fingerprints", list}});
      }
      return 0;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App  app{"Twined group algebras and quantum doubles", "premon"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub, bool with_signature) {
      auto* d = sub->add_option("--dihedral", cfg.dihedral, "use the dihedral group D_N")
                    ->check(CLI::Range(2, 1 << 20));
      auto* g = sub->add_option("--group", cfg.group_file, "Cayley table JSON file");
      d->excludes(g);
      sub->add_option("--irreps", cfg.irreps_file, "explicit irreps JSON for --group");
      sub->add_option("--tol", cfg.tol, "numerical tolerance")
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", cfg.seed, "random seed");
      sub->add_option("--format", cfg.format, "output format")
          ->check(CLI::IsMember({"text", "json"}));
      if (with_signature) {
        sub->add_flag("--double", cfg.use_double, "work in the quantum double D(G)");
        auto* sig = sub->add_option("--signature", cfg.signature,
                                    "full bit vector b0,b1,... with b0 = 0");
        auto* sf  = sub->add_option("--signature-file", cfg.signature_file,
                                    "signature JSON {\"bits\": [...]}");
        sig->excludes(sf);
        sub->add_option("--sample", cfg.sample, "quadruples sampled for D(G) sweeps");
        sub->add_flag("--all", cfg.all, "visit every quadruple");
        sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
      }
    };

    auto* group = app.add_subcommand("group", "group structure: classes and centralizers");
    common(group, false);
    auto* chartable = app.add_subcommand("chartable", "character table");
    common(chartable, false);
    auto* idem = app.add_subcommand("idempotents", "central idempotents");
    common(idem, false);
    idem->add_flag("--double", cfg.use_double, "idempotents of D(G)");
    auto* dbl = app.add_subcommand("double", "quantum double: info | idempotents");
    common(dbl, false);
    dbl->add_option("action", cfg.action, "info or idempotents")
        ->required()
        ->check(CLI::IsMember({"info", "idempotents"}));
    auto* twine = app.add_subcommand("twine", "associators, braidings and q for a signature");
    common(twine, true);
    twine->add_option("--emit", cfg.emit, "what to print")
        ->check(CLI::IsMember({"associators", "braidings", "q", "idempotents"}));
    auto* check = app.add_subcommand("check", "coherence checks; exit 1 on failure");
    common(check, true);
    auto* census = app.add_subcommand("census", "quadruples where the pentagon fails");
    common(census, true);
    auto* fingerprint = app.add_subcommand("fingerprint", "signature fingerprints");
    common(fingerprint, true);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    try {
      if (group->parsed()) return cmd_group(cfg, out);
      if (chartable->parsed()) return cmd_chartable(cfg, out);
      if (idem->parsed()) return cmd_idempotents(cfg, out);
      if (dbl->parsed()) return cmd_double(cfg, out);
      if (twine->parsed()) return cmd_twine(cfg, out);
      if (check->parsed()) return cmd_check(cfg, out);
      if (census->parsed()) return cmd_census(cfg, out);
      if (fingerprint->parsed()) return cmd_fingerprint(cfg, out);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace premon::cli
