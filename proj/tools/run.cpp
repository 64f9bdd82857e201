#include "run.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ehv/suites.hpp"
#include "parse.hpp"

namespace ehv::cli {

namespace {

void emit(const nlohmann::json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open --out file " + out_path);
    f << text << "\n";
  }
}

int emit_report(const CheckReport& r, const std::string& out_path) {
  emit(r.to_json(), out_path);
  return r.ok() ? 0 : 1;
}

// Result of a computational subcommand, in a report-shaped envelope.
int emit_result(const std::string& suite, nlohmann::json config,
                const std::string& result, const std::string& out_path) {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = std::move(config);
  j["result"] = result;
  emit(j, out_path);
  return 0;
}

GeneratorOrder order_by_name(const std::string& name) {
  if (name == "o31") return GeneratorOrder::order_31();
  if (name == "o32") return GeneratorOrder::order_32();
  throw ParseError("unknown order \"" + name + "\" (expected o31 or o32)");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact checker for the extended Heisenberg-Virasoro algebra"};
  app.require_subcommand(1);

  // Shared options; each subcommand reads the ones it documents.
  int window = 6;
  unsigned long seed = 0;
  int samples = 300;
  std::string bind_text, out_path, order_name = "o31";

  auto add_common = [&](CLI::App* cmd, bool with_samples = false) {
    cmd->add_option("--window", window, "symmetric index window half-width");
    cmd->add_option("--seed", seed, "random seed");
    if (with_samples) cmd->add_option("--samples", samples, "sample count");
    cmd->add_option("--bind", bind_text, "parameter bindings, e.g. alpha=0,beta=-1/2,F=1");
    cmd->add_option("--out", out_path, "also write the JSON report to this file");
  };

  std::string expr_a, expr_b;
  auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  cmd_bracket->add_option("x", expr_a, "first element")->required();
  cmd_bracket->add_option("y", expr_b, "second element")->required();
  add_common(cmd_bracket);

  auto* cmd_normalize = app.add_subcommand("normalize", "PBW normal form in U(L)");
  cmd_normalize->add_option("expr", expr_a, "enveloping-algebra expression")->required();
  cmd_normalize->add_option("--order", order_name, "PBW order: o31 (L<G<J) or o32 (G<J<L)");
  add_common(cmd_normalize);

  auto* cmd_act = app.add_subcommand("act", "apply a U(L) element to the vacuum vector");
  cmd_act->add_option("expr", expr_a, "enveloping-algebra expression")->required();
  add_common(cmd_act);

  int degree = 0;
  auto* cmd_basis = app.add_subcommand("basis", "vacuum-module basis of one degree");
  cmd_basis->add_option("--degree", degree, "grading degree")->required();
  cmd_basis->add_option("--out", out_path, "also write the JSON report to this file");

  auto* cmd_jacobi = app.add_subcommand("check-jacobi", "Jacobi identity over the window");
  add_common(cmd_jacobi);

  auto* cmd_iso = app.add_subcommand("check-iso", "phi_1..phi_4 homomorphism checks");
  add_common(cmd_iso);

  std::string bp_level_text = "1";
  auto* cmd_embed = app.add_subcommand("check-embed", "N=2 and BP bracket-row comparison");
  cmd_embed->add_option("--bp-level", bp_level_text, "BP level k (rational, k != -3)");
  add_common(cmd_embed);

  auto* cmd_pbw = app.add_subcommand("check-pbw", "PBW commutator/associativity/round-trip");
  add_common(cmd_pbw, true);

  int degree_cap = 5;
  auto* cmd_module = app.add_subcommand("check-module-axiom",
                                        "vacuum module axiom and graded dimensions");
  cmd_module->add_option("--degree-cap", degree_cap, "max creation weight of sampled vectors");
  add_common(cmd_module, true);

  auto* cmd_vertex = app.add_subcommand("check-vertex", "vertex-operator mode identities");
  cmd_vertex->add_option("--degree-cap", degree_cap, "max degree of basis vectors");
  add_common(cmd_vertex);

  std::string family = "d";
  int k = 1, d = 0, l = 2, d1 = 1, d2 = 1, per_row = 200;
  auto* cmd_lemma = app.add_subcommand("check-lemma", "reduction-lemma degree predictions");
  cmd_lemma->add_option("--family", family,
                        "inducing subalgebra family: d (L_d) or dbar (L_dbar)");
  cmd_lemma->add_option("--k", k, "annihilation threshold k");
  cmd_lemma->add_option("--d", d, "shift d (family d)");
  cmd_lemma->add_option("--l", l, "annihilation threshold l (family d)");
  cmd_lemma->add_option("--d1", d1, "shift d1 (family dbar)");
  cmd_lemma->add_option("--d2", d2, "shift d2 (family dbar)");
  cmd_lemma->add_option("--per-row", per_row, "sampled vectors per lemma row");
  add_common(cmd_lemma);

  int count = 100, weight_cap = 4, max_steps = 10000;
  auto* cmd_reduce = app.add_subcommand("reduce", "full reductions to the coefficient module");
  cmd_reduce->add_option("--k", k, "annihilation threshold k");
  cmd_reduce->add_option("--d", d, "shift d");
  cmd_reduce->add_option("--l", l, "annihilation threshold l");
  cmd_reduce->add_option("--count", count, "number of random vectors");
  cmd_reduce->add_option("--weight-cap", weight_cap, "max prefix weight");
  cmd_reduce->add_option("--max-steps", max_steps, "step budget per reduction");
  add_common(cmd_reduce);

  auto* cmd_bound = app.add_subcommand("check-bound", "annihilation bound on descendants");
  cmd_bound->add_option("--weight-cap", weight_cap, "max descendant weight");
  add_common(cmd_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Substitution bindings = parse_bindings(bind_text);
    nlohmann::json config;
    if (!bind_text.empty()) config["bind"] = bind_text;

    if (*cmd_bracket) {
      AlgebraSpec spec;
      spec.bindings = bindings;
      LieElement x = parse_lie_element(expr_a), y = parse_lie_element(expr_b);
      config["x"] = expr_a;
      config["y"] = expr_b;
      return emit_result("bracket", config, bracket(spec, x, y).str(), out_path);
    }
    if (*cmd_normalize) {
      UEElement e = parse_expression(expr_a);
      UEElement n;
      for (const auto& [m, c] : e.terms()) {
        UEElement part = normalize(order_by_name(order_name), m.word, c);
        for (auto& [nm, nc] : part.terms()) {
          UEMonomial with_centrals = nm;
          for (int i = 0; i < 3; ++i) with_centrals.central[i] += m.central[i];
          n.add(with_centrals, nc);
        }
      }
      config["expr"] = expr_a;
      config["order"] = order_name;
      return emit_result("normalize", config, n.str(), out_path);
    }
    if (*cmd_act) {
      QuotientModule vac = vacuum_module();
      UEElement e = parse_expression(expr_a);
      QuotientModule::Vec out;
      for (const auto& [m, c] : e.terms()) {
        Scalar coeff = c.substitute(vac.bindings());
        for (int i = 0; i < 3; ++i) {
          Scalar level = Scalar::parameter(static_cast<Parameter>(
              static_cast<int>(Parameter::ell1) + i));
          for (int rep = 0; rep < m.central[i]; ++rep) coeff = coeff * level;
        }
        for (const auto& [mono, mc] :
             QuotientModule::scale(vac.act_word(m.word, QuotientModule::unit()), coeff)) {
          QuotientModule::add(out, mono, mc);
        }
      }
      if (!bindings.empty()) {
        QuotientModule::Vec bound;
        for (const auto& [mono, mc] : out) {
          Scalar s = mc.substitute(bindings);
          if (!s.is_zero()) bound.emplace(mono, s);
        }
        out = std::move(bound);
      }
      config["expr"] = expr_a;
      return emit_result("act", config, QuotientModule::str(out), out_path);
    }
    if (*cmd_basis) {
      auto monos = enumerate_vacuum_basis(degree);
      nlohmann::json j;
      j["suite"] = "basis";
      j["config"] = {{"degree", degree}};
      j["count"] = monos.size();
      j["result"] = nlohmann::json::array();
      for (const auto& m : monos) {
        j["result"].push_back(QuotientModule::str({{m, Scalar(1)}}));
      }
      emit(j, out_path);
      return 0;
    }
    if (*cmd_jacobi) return emit_report(suites::jacobi(window), out_path);
    if (*cmd_iso) return emit_report(suites::isomorphisms(window), out_path);
    if (*cmd_embed) {
      Rational bp_level = Rational(0);
      {
        Scalar s = parse_scalar(bp_level_text);
        auto v = s.constant_value();
        if (!v) throw ParseError("--bp-level must be a rational constant");
        bp_level = *v;
      }
      return emit_report(suites::embeddings(window, bp_level), out_path);
    }
    if (*cmd_pbw) return emit_report(suites::pbw(window, samples, seed), out_path);
    if (*cmd_module) {
      return emit_report(
          suites::merge("module_axiom",
                        {suites::vacuum_axioms(window, samples, seed, degree_cap),
                         suites::vacuum_dimensions(8)}),
          out_path);
    }
    if (*cmd_vertex) return emit_report(suites::vertex(window, degree_cap), out_path);
    if (*cmd_lemma) {
      if (family == "d") {
        return emit_report(suites::lemma_d(k, d, l, per_row, seed), out_path);
      }
      if (family == "dbar") {
        return emit_report(
            suites::merge("lemma_dbar", {suites::lemma_dbar(k, d1, d2, per_row, seed),
                                         suites::lemma_dbar_guards()}),
            out_path);
      }
      throw ParseError("--family must be d or dbar");
    }
    if (*cmd_reduce) {
      return emit_report(
          suites::reduction_d(k, d, l, count, seed, weight_cap, max_steps), out_path);
    }
    if (*cmd_bound) return emit_report(suites::bound(window, weight_cap), out_path);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ehv::cli
