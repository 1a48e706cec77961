#include "doctest.h"
#include "oracles.hpp"
#include "ulogic/evaluation.hpp"
#include "ulogic/zoo.hpp"

#include <random>

using namespace ulogic;

namespace {

Element r(const AlgebraPtr& a, double v) { return Element::real(a->id(), v); }

Evaluation make_eval(const AlgebraPtr& alg, std::map<std::string, double> atoms,
                     ConjunctionPolicy policy = ConjunctionPolicy::min()) {
  Evaluation ev{alg, {}, std::move(policy)};
  for (const auto& [name, v] : atoms) ev.atoms.insert_or_assign(name, r(alg, v));
  return ev;
}

}  // namespace

TEST_CASE("excluded middle reaches only the atom's value on godel-unit") {
  auto godel = algebra_by_id("godel-unit");
  auto ev = make_eval(godel, {{"p", 0.5}});
  CHECK(evaluate(parse("p \\/ ~p"), ev).as_real() == doctest::Approx(0.5));
  CHECK(evaluate(parse("p \\/ ~p"), ev).as_real() == 0.5);  // grid point, exact
}

TEST_CASE("a table choice below both operands defeats detachment on the ray") {
  auto ray = algebra_by_id("prob-ray");
  Evaluation ev{ray, {}, ConjunctionPolicy::table({{parse("p"), parse("p -> q"), r(ray, 0.5)}})};
  ev.atoms.insert_or_assign("p", r(ray, 0.8));
  ev.atoms.insert_or_assign("q", r(ray, 0.4));
  CHECK(evaluate(parse("(p & (p -> q)) -> q"), ev).as_real() == doctest::Approx(0.8));
}

TEST_CASE("product-then-min reproduces the closed-form disjunction identity") {
  auto ray = algebra_by_id("prob-ray");
  auto ev = make_eval(ray, {{"p", 0.6}}, ConjunctionPolicy::product_then_min());
  CHECK(evaluate(parse("p \\/ ~p"), ev).as_real() == doctest::Approx(0.76));
  CHECK(evaluate(parse("~(p \\/ ~p)"), ev).as_real() == doctest::Approx(0.24));
  CHECK(evaluate(parse("p & ~p"), ev).as_real() == doctest::Approx(0.24));
  CHECK(evaluate(parse("~(p \\/ ~p)"), ev).as_real() ==
        doctest::Approx(evaluate(parse("p & ~p"), ev).as_real()));
}

TEST_CASE("product-then-min is specific to the probability ray") {
  auto godel = algebra_by_id("godel-unit");
  auto ev = make_eval(godel, {{"p", 0.5}}, ConjunctionPolicy::product_then_min());
  CHECK_THROWS_AS(evaluate(parse("p & p"), ev), std::invalid_argument);
}

TEST_CASE("conjunction constraints reject a value above an operand") {
  auto godel = algebra_by_id("godel-unit");
  Evaluation ev{godel, {}, ConjunctionPolicy::table({{parse("p"), parse("q"), r(godel, 0.9)}})};
  ev.atoms.insert_or_assign("p", r(godel, 0.5));
  ev.atoms.insert_or_assign("q", r(godel, 1.0));
  CHECK_THROWS_WITH_AS(evaluate(parse("p & q"), ev),
                       doctest::Contains("is not leq the left operand"), EvaluationError);

  auto report = validate(ev, parse("p & q"));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().message.find("not leq") != std::string::npos);
  CHECK(print(report.violations.front().at) == "p & q");
}

TEST_CASE("conflicting table entries for one unordered pair are reported") {
  auto godel = algebra_by_id("godel-unit");
  Evaluation ev{godel, {},
                ConjunctionPolicy::table({{parse("p"), parse("q"), r(godel, 0.3)},
                                          {parse("q"), parse("p"), r(godel, 0.2)}})};
  ev.atoms.insert_or_assign("p", r(godel, 0.5));
  ev.atoms.insert_or_assign("q", r(godel, 0.6));
  CHECK_THROWS_WITH_AS(evaluate(parse("p & q"), ev),
                       doctest::Contains("conflicting table entries"), EvaluationError);
}

TEST_CASE("both orders of a pair share one table entry") {
  auto godel = algebra_by_id("godel-unit");
  Evaluation ev{godel, {}, ConjunctionPolicy::table({{parse("p"), parse("q"), r(godel, 0.2)}})};
  ev.atoms.insert_or_assign("p", r(godel, 0.5));
  ev.atoms.insert_or_assign("q", r(godel, 0.6));
  CHECK(evaluate(parse("p & q"), ev).as_real() == doctest::Approx(0.2));
  CHECK(evaluate(parse("q & p"), ev).as_real() == doctest::Approx(0.2));
}

TEST_CASE("the unit law forces the value when an operand dominates the unit") {
  auto ray = algebra_by_id("prob-ray");
  // e(p -> q) = residuum(0, 0.2) = inf dominates the unit, so the pair value
  // must equal e(r)
  Evaluation bad{ray, {}, ConjunctionPolicy::table({{parse("p -> q"), parse("s"), r(ray, 0.1)}})};
  bad.atoms.insert_or_assign("p", r(ray, 0.0));
  bad.atoms.insert_or_assign("q", r(ray, 0.2));
  bad.atoms.insert_or_assign("s", r(ray, 0.3));
  CHECK_THROWS_WITH_AS(evaluate(parse("(p -> q) & s"), bad), doctest::Contains("unit law"),
                       EvaluationError);

  Evaluation good{ray, {}, ConjunctionPolicy::table({{parse("p -> q"), parse("s"), r(ray, 0.3)}})};
  good.atoms = bad.atoms;
  CHECK(evaluate(parse("(p -> q) & s"), good).as_real() == doctest::Approx(0.3));
}

TEST_CASE("min policy satisfies the constraints for arbitrary operands") {
  std::mt19937_64 rng(31);
  std::vector<std::string> names{"p", "q", "r"};
  for (const auto& spec : catalogue()) {
    auto alg = make_algebra(spec);
    CAPTURE(alg->name());
    for (int i = 0; i < 40; ++i) {
      Evaluation ev{alg, {}, ConjunctionPolicy::min()};
      for (const auto& n : names) ev.atoms.insert_or_assign(n, alg->sample_unit(rng));
      auto report = validate(ev, parse("(p & q) & (q & r)"));
      CHECK(report.ok());
    }
  }
}

TEST_CASE("unassigned atoms and out-of-range atoms are evaluation errors") {
  auto godel = algebra_by_id("godel-unit");
  auto ev = make_eval(godel, {{"p", 0.5}});
  CHECK_THROWS_AS(evaluate(parse("p & q"), ev), EvaluationError);

  auto ray = algebra_by_id("prob-ray");
  auto out = make_eval(ray, {{"p", 2.5}});
  CHECK_THROWS_WITH_AS(evaluate(parse("p"), out),
                       doctest::Contains("outside the unit interval"), EvaluationError);
  auto report = validate(out, parse("p"));
  CHECK_FALSE(report.ok());
}

TEST_CASE("disjunction is commutative at the value level") {
  std::mt19937_64 rng(41);
  for (const auto& id : {"godel-unit", "prob-ray", "tnorm-lukasiewicz", "heyting3"}) {
    auto alg = algebra_by_id(id);
    CAPTURE(id);
    for (int i = 0; i < 60; ++i) {
      Evaluation ev{alg, {}, ConjunctionPolicy::min()};
      ev.atoms.insert_or_assign("p", alg->sample_unit(rng));
      ev.atoms.insert_or_assign("q", alg->sample_unit(rng));
      auto a = evaluate(parse("p \\/ q"), ev);
      auto b = evaluate(parse("q \\/ p"), ev);
      CHECK(alg->eq(a, b));
    }
  }
}

TEST_CASE("the closed-form disjunction identities match the generic route") {
  auto godel = algebra_by_id("godel-unit");
  auto gev = make_eval(godel, {{"p", 0.3}, {"q", 0.7}});
  CHECK(evaluate(parse("p \\/ q"), gev).as_real() == doctest::Approx(0.7));
  CHECK(or_identity_check(gev, parse("p"), parse("q")));

  auto ray = algebra_by_id("prob-ray");
  auto rev = make_eval(ray, {{"p", 0.5}, {"q", 0.5}});
  CHECK(evaluate(parse("p \\/ q"), rev).as_real() == doctest::Approx(0.5));
  CHECK(or_identity_check(rev, parse("p"), parse("q")));

  // an infinite operand forces an infinite disjunction; atoms must stay in
  // the unit interval, so infinity is reached through p -> q at p = 0
  auto zev = make_eval(ray, {{"p", 0.0}, {"q", 0.2}});
  CHECK(evaluate(parse("p -> q"), zev).is_inf());
  CHECK(evaluate(parse("(p -> q) \\/ q"), zev).is_inf());
}

TEST_CASE("disjunction route against the grid oracle") {
  auto godel = algebra_by_id("godel-unit");
  std::mt19937_64 rng(51);
  auto candidates = oracle::real_grid(*godel, 1.0, 0.001, false);
  // atoms live on the oracle's own grid so the exact solution is searchable
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  for (int i = 0; i < 50; ++i) {
    auto ev = make_eval(godel, {});
    ev.atoms.insert_or_assign("p", candidates[pick(rng)]);
    ev.atoms.insert_or_assign("q", candidates[pick(rng)]);
    auto got = evaluate(parse("p \\/ q"), ev);
    auto meet = godel->meet(ev.atoms.at("p"), ev.atoms.at("q"));
    REQUIRE(meet.has_value());
    auto target = godel->oplus(ev.atoms.at("p"), ev.atoms.at("q"));
    auto slow = oracle::grid_max_solution(*godel, *meet, target, candidates);
    REQUIRE(slow.has_value());
    CHECK(got.as_real() == doctest::Approx(slow->as_real()).epsilon(0.01));
  }
}

TEST_CASE("boolean2 with min agrees with the classical truth table") {
  auto b2 = algebra_by_id("boolean2");
  std::vector<std::string> corpus{
      "p \\/ ~p", "p -> (q -> p)", "(p & q) -> p", "~(p & ~p)", "((p -> q) -> p) -> p",
      "(p -> q) <-> (~q -> ~p)", "p \\/ q -> q \\/ p", "p & (q \\/ s) <-> (p & q) \\/ (p & s)",
      "p", "p -> q", "~p", "(p <-> q) & p", "q | p", "p & q & s & t -> t"};
  for (const auto& text : corpus) {
    auto f = parse(text);
    CAPTURE(text);
    auto names = atom_names(f);
    std::vector<std::string> order(names.begin(), names.end());
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << order.size()); ++row) {
      Evaluation ev{b2, {}, ConjunctionPolicy::min()};
      std::map<std::string, bool> bits;
      for (std::size_t i = 0; i < order.size(); ++i) {
        bool bit = (row >> i) & 1;
        bits[order[i]] = bit;
        ev.atoms.insert_or_assign(order[i], bit ? b2->one() : b2->zero());
      }
      bool got = b2->eq(evaluate(f, ev), b2->one());
      CHECK(got == oracle::classical(f, bits));
    }
  }
}

TEST_CASE("product evaluation equals the componentwise evaluations") {
  auto prod = algebra_by_id("product-godel-prob");
  auto parts = prod->component_algebras();
  std::mt19937_64 rng(61);
  for (const auto& text : {"p \\/ ~p", "(p & q) -> q", "~(p & ~p)", "(p -> q) \\/ (q -> p)"}) {
    auto f = parse(text);
    CAPTURE(text);
    for (int i = 0; i < 30; ++i) {
      Evaluation pev{prod, {}, ConjunctionPolicy::min()};
      Evaluation ev0{parts[0], {}, ConjunctionPolicy::min()};
      Evaluation ev1{parts[1], {}, ConjunctionPolicy::min()};
      for (const auto& n : atom_names(f)) {
        auto a = parts[0]->sample_unit(rng);
        auto b = parts[1]->sample_unit(rng);
        pev.atoms.insert_or_assign(n, Element::tuple(prod->id(), {a, b}));
        ev0.atoms.insert_or_assign(n, a);
        ev1.atoms.insert_or_assign(n, b);
      }
      auto got = evaluate(f, pev);
      REQUIRE(got.is_tuple());
      CHECK(parts[0]->eq(got.as_tuple()[0], evaluate(f, ev0)));
      CHECK(parts[1]->eq(got.as_tuple()[1], evaluate(f, ev1)));
    }
  }
}

TEST_CASE("the compiled evaluator matches the direct evaluator") {
  std::mt19937_64 rng(71);
  auto godel = algebra_by_id("godel-unit");
  auto f = parse("(p & (p -> q)) -> (q \\/ (p & q))");
  CompiledEvaluator compiled(f, godel);
  for (int i = 0; i < 100; ++i) {
    Evaluation ev{godel, {}, ConjunctionPolicy::min()};
    std::vector<Element> atom_values;
    for (const auto& n : compiled.atom_order()) {
      auto v = godel->sample_unit(rng);
      ev.atoms.insert_or_assign(n, v);
      atom_values.push_back(v);
    }
    auto direct = evaluate(f, ev);
    auto fast = compiled.run(atom_values, ConjunctionPolicy::min());
    CHECK(godel->eq(direct, fast));
  }
}

TEST_CASE("compiled pair slots are shared and replayable") {
  auto godel = algebra_by_id("godel-unit");
  // p & q appears twice but compiles to a single pair slot
  auto f = parse("(p & q) -> (q & p)");
  CompiledEvaluator compiled(f, godel);
  CHECK(compiled.pair_count() == 1);

  std::vector<Element> atoms{r(godel, 0.6), r(godel, 0.4)};
  std::vector<Element> pair_values;
  auto value = compiled.run(atoms, ConjunctionPolicy::min(), &pair_values);
  CHECK(godel->eq(value, godel->one()));
  REQUIRE(pair_values.size() == 1);
  CHECK(pair_values[0].as_real() == doctest::Approx(0.4));

  // replaying the recorded choices reproduces the value
  auto replay = compiled.run_with_choices(atoms, pair_values);
  CHECK(godel->eq(replay, value));

  auto [l, rv] = compiled.pair_operands(0, atoms, {});
  CHECK(godel->eq(l, atoms[0]));
  CHECK(godel->eq(rv, atoms[1]));
}

TEST_CASE("custom choosers fall back to the meet on nullopt") {
  auto godel = algebra_by_id("godel-unit");
  int asked = 0;
  auto chooser = [&asked](const FormulaPtr&, const FormulaPtr&, const Element&,
                          const Element&) -> std::optional<Element> {
    ++asked;
    return std::nullopt;
  };
  Evaluation ev{godel, {}, ConjunctionPolicy::custom("probe", std::move(chooser))};
  ev.atoms.insert_or_assign("p", r(godel, 0.3));
  ev.atoms.insert_or_assign("q", r(godel, 0.8));
  CHECK(evaluate(parse("p & q"), ev).as_real() == doctest::Approx(0.3));
  CHECK(asked == 1);
}
