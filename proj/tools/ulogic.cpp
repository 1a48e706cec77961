#include "CLI11.hpp"
#include "json.hpp"
#include "ulogic/json_io.hpp"
#include "ulogic/probability.hpp"
#include "ulogic/proof.hpp"
#include "ulogic/tautology.hpp"
#include "ulogic/zoo.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

using namespace ulogic;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw std::invalid_argument(std::string(what) + " '" + s + "' is not a number");
  return std::strtoull(s.c_str(), nullptr, 10);
}

// Seed fallback when --seed / random:N:SEED is omitted.
std::uint64_t env_seed() {
  const char* s = std::getenv("ULOGIC_SEED");
  if (!s || !*s) return 0;
  return parse_u64(s, "ULOGIC_SEED");
}

Strategy parse_strategy(const std::string& text, AndMode mode) {
  if (text == "exhaustive") return Strategy::exhaustive(mode);
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (head == "grid" && !rest.empty()) {
    std::size_t used = 0;
    double step = std::stod(rest, &used);
    if (used != rest.size() || !(step > 0.0) || step > 1.0)
      throw std::invalid_argument("grid step '" + rest + "' is not in (0, 1]");
    return Strategy::grid(step, mode, env_seed());
  }
  if (head == "random" && !rest.empty()) {
    auto second = rest.find(':');
    auto count = parse_u64(rest.substr(0, second), "sample count");
    if (count == 0) throw std::invalid_argument("random strategy needs a positive sample count");
    auto seed = second == std::string::npos ? env_seed()
                                            : parse_u64(rest.substr(second + 1), "seed");
    return Strategy::random(count, seed, mode);
  }
  throw std::invalid_argument("unknown strategy '" + text +
                              "' (want exhaustive, grid:STEP or random:N[:SEED])");
}

int run_laws(const std::string& algebra_id, std::uint64_t samples, std::uint64_t seed,
             const std::string& format) {
  auto alg = algebra_by_id(algebra_id);
  auto report = check_laws(*alg, samples, seed);
  if (format == "json") {
    std::cout << law_report_to_json(*alg, report).dump(2) << "\n";
  } else {
    std::cout << "algebra: " << report.algebra << "\n"
              << "mode: " << (report.exhaustive ? "exhaustive" : "sampled")
              << "  samples: " << report.samples << "  seed: " << report.seed << "\n";
    for (const auto& law : report.laws) {
      if (law.passed()) {
        std::cout << "ok    " << law.law << "\n";
        continue;
      }
      std::cout << "FAIL  " << law.law << "  (" << law.failures << " of " << law.checked << ")";
      if (!law.detail.empty()) std::cout << "  " << law.detail;
      if (!law.witness.empty()) {
        std::cout << "  at";
        for (const auto& e : law.witness) std::cout << ' ' << alg->element_to_string(e);
      }
      std::cout << "\n";
    }
    std::cout << (report.all_passed() ? "all laws hold" : "laws violated") << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_eval(const std::string& algebra_id, const std::string& formula_text,
             const std::string& assign_path, const std::string& format) {
  auto ev = parse_assignment_file(assign_path);
  if (ev.algebra->name() != algebra_id)
    throw std::invalid_argument("assignment targets algebra '" + ev.algebra->name() +
                                "' but --algebra asks for '" + algebra_id + "'");
  const auto& alg = *ev.algebra;
  auto f = parse(formula_text);
  Element value = alg.zero();
  try {
    value = evaluate(f, ev);
  } catch (const EvaluationError& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    nlohmann::json out{{"algebra", alg.name()},
                       {"formula", print(f)},
                       {"value", element_to_json(alg, value)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << print(f) << " = " << alg.element_to_string(value) << "\n";
  }
  return 0;
}

int run_taut(const std::string& algebra_id, const std::string& formula_text,
             const std::string& strategy_text, bool search_and, const std::string& format) {
  auto alg = algebra_by_id(algebra_id);
  auto f = parse(formula_text);
  auto strategy = parse_strategy(strategy_text, search_and ? AndMode::Search : AndMode::FixedPolicy);
  auto verdict = check(f, alg, strategy);
  if (format == "json") {
    std::cout << verdict_to_json(alg, verdict).dump(2) << "\n";
  } else {
    switch (verdict.outcome) {
      case Outcome::ProvenExhaustive:
        std::cout << "tautology: proven exhaustively (" << verdict.evaluations << " evaluations)\n";
        break;
      case Outcome::HoldsOnSampled:
        std::cout << "holds on all sampled evaluations (" << verdict.evaluations << ")\n";
        break;
      case Outcome::Counterexample: {
        const auto& w = *verdict.witness;
        std::cout << "counterexample: value = " << alg->element_to_string(w.value) << "\n";
        for (const auto& [name, el] : w.atoms)
          std::cout << "  " << name << " = " << alg->element_to_string(el) << "\n";
        for (const auto& entry : w.table)
          std::cout << "  e(" << print(land(entry.left, entry.right))
                    << ") = " << alg->element_to_string(entry.value) << "\n";
        break;
      }
    }
  }
  return verdict.outcome == Outcome::Counterexample ? 1 : 0;
}

int run_proof_check(const std::string& path, const std::string& format) {
  ProofScript script;
  try {
    script = parse_proof_file(path);
  } catch (const ProofParseError& e) {
    std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
    return 2;
  }
  auto verdict = check_proof(script);
  if (format == "json") {
    std::cout << proof_verdict_to_json(script, verdict).dump(2) << "\n";
  } else {
    std::cout << "theory: " << script.theory_id << "\n";
    for (const auto& line : verdict.lines) {
      const auto& text = script.lines[line.line - 1].text;
      if (line.ok) {
        std::cout << "ok    " << line.line << ". " << text << "\n";
      } else {
        std::cout << "FAIL  " << line.line << ". " << text << "  " << line.message << "\n";
      }
    }
    if (verdict.accepted)
      std::cout << "accepted (" << script.lines.size() << " lines)\n";
    else
      std::cout << "rejected at line " << verdict.first_failure.value_or(0) << "\n";
  }
  return verdict.accepted ? 0 : 1;
}

int run_prob_validate(const std::string& path, const std::string& format) {
  auto space = parse_space_file(path);
  auto report = validate_space(space);
  if (format == "json") {
    nlohmann::json out{{"ok", report.ok()}, {"violations", report.violations}};
    std::cout << out.dump(2) << "\n";
  } else if (report.ok()) {
    std::cout << "valid: all probability axioms hold\n";
  } else {
    for (const auto& v : report.violations) std::cout << v << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_prob_extend(const std::string& path, const std::string& formula_text,
                    const std::string& format) {
  auto space = parse_space_file(path);
  auto report = validate_space(space);
  if (!report.ok()) {
    std::cerr << "invalid space:\n";
    for (const auto& v : report.violations) std::cerr << "  " << v << "\n";
    return 1;
  }
  auto ev = extend_to_evaluation(space);
  if (!formula_text.empty()) {
    auto f = parse(formula_text);
    auto value = evaluate(f, ev);
    if (format == "json") {
      nlohmann::json out{{"algebra", ev.algebra->name()},
                         {"formula", print(f)},
                         {"value", element_to_json(*ev.algebra, value)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << print(f) << " = " << ev.algebra->element_to_string(value) << "\n";
    }
    return 0;
  }
  // Exportable assignment document: event atoms with their probabilities and
  // the pairwise conjunction table P(A n B).  The in-process interpretation
  // also resolves nested pure-event conjunctions; a document table only
  // reaches depth one, deeper pairs fall back to the greatest lower bound.
  nlohmann::json atoms = nlohmann::json::object();
  for (auto mask : space.field) atoms[space.atom_name(mask)] = space.p.at(mask);
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < space.field.size(); ++i) {
    for (std::size_t j = i + 1; j < space.field.size(); ++j) {
      auto both = space.p.find(space.field[i] & space.field[j]);
      if (both == space.p.end()) continue;
      table.push_back({{"left", space.atom_name(space.field[i])},
                       {"right", space.atom_name(space.field[j])},
                       {"value", both->second}});
    }
  }
  nlohmann::json out{
      {"algebra", ev.algebra->name()}, {"atoms", atoms}, {"policy", "table"}, {"table", table}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_prob_restrict(const std::string& space_path, const std::string& assign_path,
                      const std::string& format) {
  auto space = parse_space_file(space_path);
  auto ev = parse_assignment_file(assign_path);
  Restriction r;
  try {
    r = restrict_evaluation(ev, space);
  } catch (const std::invalid_argument& e) {
    std::cerr << "restriction failed: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    nlohmann::json p = nlohmann::json::object();
    for (auto mask : space.field) p[space.event_key(mask)] = r.p.at(mask);
    nlohmann::json out{{"p", p}, {"ok", r.report.ok()}, {"violations", r.report.violations}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto mask : space.field)
      std::cout << "P({" << space.event_key(mask) << "}) = " << fmt(r.p.at(mask)) << "\n";
    if (r.report.ok()) {
      std::cout << "axioms hold\n";
    } else {
      for (const auto& v : r.report.violations) std::cout << v << "\n";
    }
  }
  return r.report.ok() ? 0 : 1;
}

int run_bounds(double p_phi, double p_imp, double t_phi, double t_imp,
               const std::string& format) {
  auto b = mp_bounds({t_phi, p_phi}, {t_imp, p_imp});
  if (format == "json") {
    nlohmann::json out{{"p", {{"lo", b.p.lo}, {"hi", b.p.hi}}},
                       {"t", {{"lo", b.t.lo}, {"hi", b.t.hi}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p:[" << fmt(b.p.lo) << "," << fmt(b.p.hi) << "] t:[" << fmt(b.t.lo) << ","
              << fmt(b.t.hi) << "]\n";
  }
  return 0;
}

int run_catalogue(const std::string& format) {
  auto specs = catalogue();
  if (format == "json") {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& s : specs) ids.push_back(s.id);
    std::cout << nlohmann::json{{"algebras", ids}}.dump(2) << "\n";
  } else {
    for (const auto& s : specs) std::cout << s.id << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for uncertain propositional logic"};
  app.require_subcommand(1);

  std::string algebra, formula, assign, script, space;
  std::string strategy = "grid:0.1";
  std::string format = "text";
  std::uint64_t samples = 10000, seed = 0;
  bool search_and = false;
  double p_phi = 0, p_imp = 0, t_phi = 0, t_imp = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* laws = app.add_subcommand("laws", "probe the structure laws of an algebra");
  laws->add_option("--algebra", algebra, "catalogue id")->required();
  laws->add_option("--samples", samples, "sample count (default 10000)");
  auto* seed_opt = laws->add_option("--seed", seed, "sample seed (default ULOGIC_SEED or 0)");
  add_format(laws);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under an assignment document");
  eval_cmd->add_option("--algebra", algebra, "catalogue id")->required();
  eval_cmd->add_option("--formula", formula, "formula text")->required();
  eval_cmd->add_option("--assign", assign, "assignment JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_format(eval_cmd);

  auto* taut = app.add_subcommand("taut", "search for tautology counterexamples");
  taut->add_option("--algebra", algebra, "catalogue id")->required();
  taut->add_option("--formula", formula, "formula text")->required();
  taut->add_option("--strategy", strategy, "exhaustive | grid:STEP | random:N[:SEED]");
  taut->add_flag("--search-and", search_and, "search conjunction choices instead of a fixed policy");
  add_format(taut);

  auto* proof = app.add_subcommand("proof-check", "judge a proof script line by line");
  proof->add_option("--script", script, "proof script file")->required()->check(CLI::ExistingFile);
  add_format(proof);

  auto* pvalidate = app.add_subcommand("prob-validate", "check a probability space document");
  pvalidate->add_option("--space", space, "space JSON file")->required()->check(CLI::ExistingFile);
  add_format(pvalidate);

  auto* pextend = app.add_subcommand(
      "prob-extend", "extend a probability space to an evaluation over the probability ray");
  pextend->add_option("--space", space, "space JSON file")->required()->check(CLI::ExistingFile);
  pextend->add_option("--formula", formula, "evaluate this formula instead of emitting a document");
  add_format(pextend);

  auto* prestrict = app.add_subcommand(
      "prob-restrict", "read event probabilities back out of an evaluation");
  prestrict->add_option("--space", space, "space JSON file")->required()->check(CLI::ExistingFile);
  prestrict->add_option("--assign", assign, "assignment JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_format(prestrict);

  auto* bounds = app.add_subcommand("bounds", "modus ponens bounds on truth and probability");
  bounds->add_option("--p-phi", p_phi, "probability of the premise")->required();
  bounds->add_option("--p-imp", p_imp, "probability of the implication")->required();
  bounds->add_option("--t-phi", t_phi, "truth degree of the premise")->required();
  bounds->add_option("--t-imp", t_imp, "truth degree of the implication")->required();
  add_format(bounds);

  auto* cat = app.add_subcommand("catalogue", "list the built-in algebras");
  add_format(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(laws))
      return run_laws(algebra, samples, seed_opt->count() ? seed : env_seed(), format);
    if (app.got_subcommand(eval_cmd)) return run_eval(algebra, formula, assign, format);
    if (app.got_subcommand(taut)) return run_taut(algebra, formula, strategy, search_and, format);
    if (app.got_subcommand(proof)) return run_proof_check(script, format);
    if (app.got_subcommand(pvalidate)) return run_prob_validate(space, format);
    if (app.got_subcommand(pextend)) return run_prob_extend(space, formula, format);
    if (app.got_subcommand(prestrict)) return run_prob_restrict(space, assign, format);
    if (app.got_subcommand(bounds)) return run_bounds(p_phi, p_imp, t_phi, t_imp, format);
    if (app.got_subcommand(cat)) return run_catalogue(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
