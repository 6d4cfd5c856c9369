#include "cellmod/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cellmod/grouprep.hpp"
#include "cellmod/io.hpp"
#include "cellmod/verlinde.hpp"

namespace cellmod {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
  std::string format = "json";
  std::string command;
  std::ostream* out = nullptr;

  void emit_json(const io::Json& payload, const std::string& payload_kind) const {
    io::Json envelope;
    envelope["command"] = command;
    envelope["version"] = kVersion;
    envelope["format"] = format;
    envelope["payload_kind"] = payload_kind;
    envelope["payload"] = payload;
    *out << envelope.dump(1) << "\n";
  }

  // text/csv fall back to the JSON envelope for non-matrix payloads
  void emit(const io::Json& payload, const std::string& payload_kind,
            const CycMatrix* matrix = nullptr,
            const std::vector<std::string>& labels = {}) const {
    if (format == "json" || matrix == nullptr) {
      emit_json(payload, payload_kind);
      return;
    }
    *out << "# " << command << " (" << payload_kind << ", version " << kVersion << ")\n";
    if (format == "csv")
      *out << io::matrix_to_csv(*matrix, labels);
    else
      *out << io::matrix_to_text(*matrix, labels);
  }
};

std::vector<std::string> center_labels(const CenterData& cd) {
  std::vector<std::string> labels;
  for (const auto& s : cd.simples) labels.push_back(s.label);
  return labels;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cell, fusion and center computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  output.out = &out;
  {
    std::ostringstream cmd;
    for (size_t i = 0; i < args.size(); ++i) cmd << (i ? " " : "") << args[i];
    output.command = cmd.str();
  }
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  int exit_code = 0;
  std::function<void()> action;

  // ---- cells ----
  auto* cells = app.add_subcommand("cells", "Kazhdan-Lusztig cell data")->fallthrough();
  cells->require_subcommand(1);
  {
    auto* dih = cells->add_subcommand("dihedral", "the three cells of I2(n)")->fallthrough();
    auto n = std::make_shared<int>(0);
    dih->add_option("n", *n, "dihedral order")->required();
    dih->callback([&output, n] {
      CoxeterSystem sys = CoxeterSystem::dihedral(*n);
      io::Json payload = io::Json::array();
      for (const auto& cell : dihedral_cells(*n)) payload.push_back(io::to_json(sys, cell));
      output.emit(payload, "cells");
    });
    auto* a1 = cells->add_subcommand("a1", "a-value-1 cell of an a(1)-finite system")->fallthrough();
    auto file = std::make_shared<std::string>();
    a1->add_option("matrix-file", *file, "bond matrix file")->required();
    a1->callback([&output, file] {
      std::ifstream in(*file);
      if (!in) throw std::invalid_argument("cannot open " + *file);
      std::stringstream buf;
      buf << in.rdbuf();
      CoxeterSystem sys = CoxeterSystem::parse(buf.str());
      A1Verdict verdict = a1_finite(sys);
      io::Json payload;
      payload["a1_finite"] = verdict.finite;
      payload["reason"] = verdict.reason;
      if (verdict.finite) {
        payload["cell"] = io::to_json(sys, enumerate_a1(sys));
        payload["hcell_ring"] = io::to_json(a1_hcell_ring(sys));
      }
      output.emit(payload, "a1-cell");
    });
    auto* a2 = cells->add_subcommand("a2", "a(2) classification of a catalog type")->fallthrough();
    auto type = std::make_shared<std::string>();
    a2->add_option("type", *type, "type token, e.g. A5, B6, C~4, E2,3, F5, H4, I7")->required();
    a2->callback([&output, type] {
      A2Classification cls = a2_classify(coxeter_from_token(*type));
      io::Json payload;
      payload["type"] = cls.type_tag;
      payload["a2_finite"] = cls.a2_finite;
      payload["w2_empty"] = cls.w2_empty;
      payload["hcell"] = cls.hcell_words;
      if (cls.hcell_ring) payload["hcell_ring"] = io::to_json(*cls.hcell_ring);
      payload["note"] = cls.note;
      output.emit(payload, "a2-classification");
    });
  }

  // ---- jring ----
  auto* jring = app.add_subcommand("jring", "asymptotic Hecke algebra tables")->fallthrough();
  jring->require_subcommand(1);
  {
    auto* dih = jring->add_subcommand("dihedral", "J-ring of the middle cell of I2(n)")->fallthrough();
    auto n = std::make_shared<int>(0);
    auto hcell = std::make_shared<std::string>();
    dih->add_option("n", *n, "dihedral order")->required();
    dih->add_option("--hcell", *hcell, "restrict to the H-cell of this Duflo element");
    dih->callback([&output, n, hcell] {
      BasedRing ring = dihedral_jring(*n);
      if (!hcell->empty()) ring = hcell_restrict(ring, *hcell);
      output.emit(io::to_json(ring), "based-ring");
    });
  }

  // ---- fusion ----
  {
    auto* fusion = app.add_subcommand("fusion", "type A fusion data")->fallthrough();
    auto k = std::make_shared<int>(0);
    auto l = std::make_shared<unsigned>(1);
    auto what = std::make_shared<std::string>();
    fusion->add_option("k", *k, "rank")->required();
    fusion->add_option("what", *what, "rules | sixj | smatrix")
        ->required()
        ->check(CLI::IsMember({"rules", "sixj", "smatrix"}));
    fusion->add_option("--l", *l, "root-of-unity exponent");
    fusion->callback([&output, k, l, what] {
      QuantumSpec spec = QuantumSpec::for_rank(static_cast<unsigned>(*k), *l);
      if (*what == "rules") {
        output.emit(io::to_json(verlinde_grothendieck(*k)), "fusion-rules");
      } else if (*what == "sixj") {
        io::Json payload = io::Json::array();
        for (const auto& [key, value] : sixj_table(spec)) {
          io::Json e;
          e["labels"] = key;
          e["value"] = io::to_json(value);
          payload.push_back(std::move(e));
        }
        output.emit(payload, "sixj-table");
      } else {
        CycMatrix s = verlinde_smatrix(spec);
        output.emit(io::matrix_to_json(s), "matrix", &s);
      }
    });
  }

  // ---- center ----
  auto* center = app.add_subcommand("center", "Drinfeld-center S-matrices")->fallthrough();
  center->require_subcommand(1);
  {
    auto add_variant = [&](const char* name, auto fn) {
      auto* sub = center->add_subcommand(name, "center data")->fallthrough();
      auto k = std::make_shared<int>(0);
      auto l = std::make_shared<unsigned>(1);
      sub->add_option("k", *k, "rank")->required();
      sub->add_option("--l", *l, "root-of-unity exponent");
      sub->callback([&output, k, l, fn] {
        CenterData cd = fn(*k, *l);
        output.emit(io::to_json(cd), "center", &cd.smatrix, center_labels(cd));
      });
    };
    add_variant("modular", [](int k, unsigned l) {
      return center_modular(QuantumSpec::for_rank(static_cast<unsigned>(k), l));
    });
    add_variant("adjoint", [](int k, unsigned l) { return center_adjoint(k, l); });
    auto* vec = center->add_subcommand("vec", "center of Vec(G) for a catalog group")->fallthrough();
    auto group = std::make_shared<std::string>();
    auto twist = std::make_shared<bool>(false);
    vec->add_option("group", *group, "group token (S3, S4, S5, Z2, Z2^k, D4, Zn)")->required();
    vec->add_flag("--twist", *twist, "nontrivial Z/2 twist");
    vec->callback([&output, group, twist] {
      CenterData cd = center_vec_smatrix(FiniteGroup::from_token(*group),
                                         *twist ? GroupTwist::kNontrivialZ2 : GroupTwist::kTrivial);
      output.emit(io::to_json(cd), "center", &cd.smatrix, center_labels(cd));
    });
  }

  // ---- fourier ----
  auto* fourier = app.add_subcommand("fourier", "Lusztig Fourier matrices")->fallthrough();
  fourier->require_subcommand(1);
  {
    auto* dih = fourier->add_subcommand("dihedral", "Fourier matrix for I2(p)")->fallthrough();
    auto p = std::make_shared<int>(0);
    dih->add_option("p", *p, "dihedral order")->required();
    dih->callback([&output, p] {
      FourierData fd = fourier_dihedral(*p);
      std::vector<std::string> labels;
      for (const auto& t : fd.pairs.pairs) labels.push_back(t.label());
      output.emit(io::matrix_to_json(fd.matrix, labels), "matrix", &fd.matrix, labels);
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "verification pipelines")->fallthrough();
  verify->require_subcommand(1);
  {
    auto emit_report = [&output, &exit_code](const MatchReport& rep) {
      exit_code = rep.matched ? 0 : 1;
      output.emit_json(io::to_json(rep), "match-report");
    };
    auto* dih = verify->add_subcommand("dihedral", "Fourier matrix vs normalized center")->fallthrough();
    auto n = std::make_shared<int>(0);
    dih->add_option("n", *n, "dihedral order")->required();
    dih->callback([n, emit_report] { emit_report(verify_dihedral(*n)); });
    auto* weyl = verify->add_subcommand("weyl", "Weyl-catalog group centers")->fallthrough();
    auto wcase = std::make_shared<std::string>();
    weyl->add_option("case", *wcase, "trivial | Z2^k | S3 | S4 | S5 | E7E8-exceptional")
        ->required();
    weyl->callback([wcase, emit_report] { emit_report(verify_weyl_case(*wcase)); });
    auto* hcase = verify->add_subcommand("h-case", "H3/H4 catalog cases")->fallthrough();
    auto tag = std::make_shared<std::string>();
    hcase->add_option("case", *tag, "A | B | C | D (E is out of scope)")->required();
    hcase->callback([tag, emit_report] {
      if (*tag == "E")
        throw std::domain_error(
            "case E (the a-value-6 cell, 74 center simples) is out of scope");
      if (tag->size() != 1) throw std::invalid_argument("case must be a single letter A-D");
      emit_report(verify_h_case((*tag)[0]));
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cellmod
