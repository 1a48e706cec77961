#include "doctest.h"
#include "oracles.hpp"
#include "ulogic/probability.hpp"
#include "ulogic/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace ulogic;

namespace {

const char* kUniform4 = R"({
  "omega": ["a", "b", "c", "d"],
  "field": "powerset",
  "p": {"": 0, "a": 0.25, "b": 0.25, "c": 0.25, "d": 0.25,
        "a,b": 0.5, "a,c": 0.5, "a,d": 0.5, "b,c": 0.5, "b,d": 0.5, "c,d": 0.5,
        "a,b,c": 0.75, "a,b,d": 0.75, "a,c,d": 0.75, "b,c,d": 0.75,
        "a,b,c,d": 1},
  "events": {"A": ["a", "b"], "B": ["b", "c"]}
})";

// A random measure over a powerset space: weights drawn uniformly, a few
// zeroed, normalized, and summed per event so that additivity is exact.
ProbabilitySpace random_space(std::mt19937_64& rng, std::size_t outcomes) {
  ProbabilitySpace space;
  for (std::size_t i = 0; i < outcomes; ++i) space.omega.push_back("o" + std::to_string(i + 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> w(outcomes);
  double total = 0;
  for (auto& v : w) {
    v = unit(rng) < 0.15 ? 0.0 : unit(rng);
    total += v;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (auto& v : w) v /= total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << outcomes); ++mask) {
    space.field.push_back(mask);
    double sum = 0;
    for (std::size_t i = 0; i < outcomes; ++i)
      if (mask & (std::uint64_t{1} << i)) sum += w[i];
    space.p.emplace(mask, sum);
  }
  // renormalize the universe to exactly one against rounding drift
  space.p[space.universe()] = 1.0;
  return space;
}

}  // namespace

TEST_CASE("the uniform four-point space is valid with P3' verified on all pairs") {
  auto space = parse_space(kUniform4);
  auto report = validate_space(space);
  std::string joined;
  for (const auto& v : report.violations) joined += v + "; ";
  CAPTURE(joined);
  CHECK(report.ok());
  CHECK(space.field.size() == 16);
  CHECK(space.universe() == 0xF);
}

TEST_CASE("scaling the universe probability violates P1") {
  auto space = parse_space(kUniform4);
  space.p[space.universe()] = 0.9;
  auto report = validate_space(space);
  REQUIRE_FALSE(report.ok());
  bool p1 = false;
  for (const auto& v : report.violations)
    if (v.rfind("P1 violated", 0) == 0) p1 = true;
  CHECK(p1);
}

TEST_CASE("a field missing a complement is reported by name") {
  ProbabilitySpace space;
  space.omega = {"a", "b"};
  space.field = {0b00, 0b01, 0b11};  // complement of {a} is missing
  space.p = {{0b00, 0.0}, {0b01, 0.4}, {0b11, 1.0}};
  auto report = validate_space(space);
  REQUIRE_FALSE(report.ok());
  bool named = false;
  for (const auto& v : report.violations)
    if (v.find("complement of {a}") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("space documents are strict about their keys") {
  CHECK_THROWS_AS(parse_space(R"({"omega": ["a"], "field": "powerset", "p": {"a": 1}, "extra": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_space(R"({"field": "powerset", "p": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space(R"({"omega": ["a", "a"], "field": "powerset", "p": {"a": 1}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_space(R"({"omega": ["a"], "field": "powerset", "p": {"zz": 1}})"),
                  std::invalid_argument);
}

TEST_CASE("format and parse round-trip a space document") {
  auto space = parse_space(kUniform4);
  auto again = parse_space(format_space(space));
  CHECK(again.omega == space.omega);
  CHECK(again.field == space.field);
  CHECK(again.p == space.p);
  CHECK(again.events == space.events);
}

TEST_CASE("event atoms prefer friendly names and fall back to indices") {
  auto space = parse_space(kUniform4);
  auto a_mask = space.events.at("A");
  CHECK(space.atom_name(a_mask) == "A");
  CHECK(space.event_by_atom("A") == a_mask);
  // every field member has a resolvable atom name
  for (auto mask : space.field) {
    auto name = space.atom_name(mask);
    auto back = space.event_by_atom(name);
    REQUIRE(back.has_value());
    CHECK(*back == mask);
  }
  CHECK_FALSE(space.event_by_atom("nope").has_value());
}

TEST_CASE("the worked pure-event values come out of the extension") {
  auto space = parse_space(kUniform4);
  auto ev = extend_to_evaluation(space);
  auto value = [&](const char* text) { return evaluate(parse(text), ev).as_real(); };
  CHECK(value("A \\/ B") == doctest::Approx(0.75));
  CHECK(value("~A") == doctest::Approx(0.5));
  CHECK(value("A & B") == doctest::Approx(0.25));
  CHECK(value("(A \\/ B) \\/ ~A") == doctest::Approx(1.0));
  CHECK(value("A -> (A & B)") == doctest::Approx(0.5));
  CHECK(value("B | A") == doctest::Approx(0.5));
}

TEST_CASE("pure-event evaluation matches the set-theoretic oracle") {
  std::mt19937_64 rng(2026);
  for (int round = 0; round < 6; ++round) {
    auto space = random_space(rng, 2 + round % 5);
    REQUIRE(validate_space(space).ok());
    auto ev = extend_to_evaluation(space);
    std::map<std::string, std::uint64_t> events;
    for (auto mask : space.field) events.emplace(space.atom_name(mask), mask);

    std::vector<std::string> shapes{"E1 & E2",       "E1 \\/ E2",       "~E1",
                                    "~(E1 & E2)",    "(E1 \\/ E2) & E3", "E1 & (E2 & E3)",
                                    "~(E1 \\/ ~E2)", "0 \\/ E1"};
    for (const auto& shape : shapes) {
      auto f = parse(shape);
      auto denote = oracle::set_denotation(f, events, space.universe());
      REQUIRE(denote.has_value());
      CAPTURE(shape);
      CHECK(evaluate(f, ev).as_real() == doctest::Approx(space.p.at(*denote)).epsilon(1e-9));
    }
  }
}

TEST_CASE("event_denotation stops outside the pure fragment") {
  auto space = parse_space(kUniform4);
  CHECK(event_denotation(space, parse("A & ~B")) ==
        (space.events.at("A") & ~space.events.at("B") & space.universe()));
  CHECK(event_denotation(space, parse("0")) == 0);
  CHECK_FALSE(event_denotation(space, parse("A -> B")).has_value());
  CHECK_FALSE(event_denotation(space, parse("Z & A")).has_value());
}

TEST_CASE("restriction undoes extension exactly") {
  auto space = parse_space(kUniform4);
  auto restriction = restrict_evaluation(extend_to_evaluation(space), space);
  CHECK(restriction.report.ok());
  REQUIRE(restriction.p.size() == space.p.size());
  for (const auto& [mask, v] : space.p) CHECK(restriction.p.at(mask) == v);  // bitwise
}

TEST_CASE("restriction rejects event values above the unit") {
  auto space = parse_space(kUniform4);
  auto ev = extend_to_evaluation(space);
  auto a_mask = space.events.at("A");
  auto k = std::lower_bound(space.field.begin(), space.field.end(), a_mask) - space.field.begin();
  ev.atoms.insert_or_assign("E" + std::to_string(k), Element::real(ev.algebra->id(), 1.2));
  ev.atoms.insert_or_assign("A", Element::real(ev.algebra->id(), 1.2));
  CHECK_THROWS_WITH_AS(restrict_evaluation(ev, space), doctest::Contains("exceeds 1"),
                       std::invalid_argument);
}

TEST_CASE("aliases of one event must agree") {
  auto space = parse_space(kUniform4);
  auto ev = extend_to_evaluation(space);
  ev.atoms.insert_or_assign("A", Element::real(ev.algebra->id(), 0.3));
  auto restriction = restrict_evaluation(ev, space);
  REQUIRE_FALSE(restriction.report.ok());
  bool disagree = false;
  for (const auto& v : restriction.report.violations)
    if (v.find("disagree") != std::string::npos && v.find("'A'") != std::string::npos)
      disagree = true;
  CHECK(disagree);
}

TEST_CASE("restriction re-checks additivity and names the offending pair") {
  auto space = parse_space(kUniform4);
  auto ev = extend_to_evaluation(space);
  // nudge one singleton so that P({a}) + P({b}) no longer reaches P({a,b})
  auto a_mask = space.event_by_atom("E1");
  REQUIRE(a_mask.has_value());
  ev.atoms.insert_or_assign(space.atom_name(*a_mask), Element::real(ev.algebra->id(), 0.10));
  auto restriction = restrict_evaluation(ev, space);
  REQUIRE_FALSE(restriction.report.ok());
  bool additivity = false;
  for (const auto& v : restriction.report.violations)
    if (v.rfind("P2", 0) == 0 || v.rfind("P3'", 0) == 0) additivity = true;
  CHECK(additivity);
}

TEST_CASE("restriction requires the probability ray algebra") {
  auto space = parse_space(kUniform4);
  Evaluation ev{algebra_by_id("godel-unit"), {}, ConjunctionPolicy::min()};
  CHECK_THROWS_AS(restrict_evaluation(ev, space), std::invalid_argument);
}

TEST_CASE("P1+P2 is equivalent to the primed axiom triple on random spaces") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int valid_seen = 0, broken_seen = 0;
  for (int round = 0; round < 40; ++round) {
    auto space = random_space(rng, 2 + round % 5);
    if (round % 2 == 1) {
      // perturb one non-universe entry to break additivity somewhere
      auto mask = space.field[1 + rng() % (space.field.size() - 1)];
      if (mask != space.universe()) space.p[mask] = std::min(1.0, space.p[mask] + 0.21);
    }
    auto report = validate_space(space);
    bool base = true, primed = true;
    for (const auto& v : report.violations) {
      if (v.rfind("P1 ", 0) == 0 || v.rfind("P2 ", 0) == 0) base = false;
      if (v.rfind("P1'", 0) == 0 || v.rfind("P2'", 0) == 0 || v.rfind("P3'", 0) == 0)
        primed = false;
    }
    CHECK(base == primed);
    (base ? valid_seen : broken_seen)++;
  }
  CHECK(valid_seen > 5);
  CHECK(broken_seen > 5);
}

TEST_CASE("extension refuses spaces that fail validation") {
  auto space = parse_space(kUniform4);
  space.p[space.universe()] = 0.9;
  CHECK_THROWS_AS(extend_to_evaluation(space), std::invalid_argument);
}

TEST_CASE("modus ponens bounds reproduce the worked example") {
  auto b = mp_bounds({0.6, 0.8}, {0.7, 0.9});
  CHECK(b.p.lo == doctest::Approx(0.72));
  CHECK(b.p.hi == doctest::Approx(0.9));
  CHECK(b.t.lo == doctest::Approx(0.6));
  CHECK(b.t.hi == doctest::Approx(0.7));
}

TEST_CASE("edge marginals pin or free the probability interval") {
  auto certain = mp_bounds({1.0, 1.0}, {0.5, 0.64});
  CHECK(certain.p.lo == doctest::Approx(0.64));
  CHECK(certain.p.hi == doctest::Approx(0.64));

  auto vacuous = mp_bounds({0.3, 0.0}, {0.5, 0.8});
  CHECK(vacuous.p.lo == doctest::Approx(0.0));
  CHECK(vacuous.p.hi == doctest::Approx(0.8));
}

TEST_CASE("bounds are nonempty for inputs in the unit square and reject others") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    FuzzyRandomJudgment phi{unit(rng), unit(rng)};
    FuzzyRandomJudgment imp{unit(rng), unit(rng)};
    auto b = mp_bounds(phi, imp);
    CHECK(b.p.lo <= b.p.hi);
    CHECK(b.t.lo <= b.t.hi);
    CHECK(b.p.contains(phi.p * imp.p));
    CHECK(b.t.contains(std::min(phi.t, imp.t)));
  }
  CHECK_THROWS_AS(mp_bounds({-0.1, 0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(mp_bounds({0.5, 1.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(mp_bounds({0.5, 0.5}, {std::nan(""), 0.5}), std::invalid_argument);
}

TEST_CASE("conclusion probabilities from conditional joints respect the lower bound") {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double p_phi = unit(rng), p_imp = unit(rng);
    auto b = mp_bounds({0.5, p_phi}, {0.5, p_imp});
    for (double p_psi : oracle::joint_conclusion_probabilities(p_phi, p_imp, 10))
      CHECK(b.p.lo <= p_psi + 1e-12);
  }
}
