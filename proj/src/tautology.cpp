#include "ulogic/tautology.hpp"

#include <random>
#include <stdexcept>

namespace ulogic {

Strategy Strategy::exhaustive(AndMode mode) {
  Strategy s;
  s.kind = StrategyKind::Exhaustive;
  s.and_mode = mode;
  return s;
}

Strategy Strategy::grid(double step, AndMode mode, std::uint64_t seed) {
  Strategy s;
  s.kind = StrategyKind::Grid;
  s.step = step;
  s.and_mode = mode;
  s.seed = seed;
  return s;
}

Strategy Strategy::random(std::size_t count, std::uint64_t seed, AndMode mode) {
  Strategy s;
  s.kind = StrategyKind::Random;
  s.count = count;
  s.seed = seed;
  s.and_mode = mode;
  return s;
}

Evaluation witness_evaluation(const AlgebraPtr& algebra, const Witness& w) {
  return Evaluation{algebra, w.atoms, ConjunctionPolicy::table(w.table)};
}

namespace {

bool designated(const Algebra& alg, const Element& v) { return alg.leq(alg.one(), v); }

Witness make_witness(const CompiledEvaluator& compiled, const std::vector<Element>& atom_values,
                     const std::vector<Element>& pair_values, Element value) {
  Witness w{{}, {}, std::move(value)};
  for (std::size_t i = 0; i < compiled.atom_order().size(); ++i) {
    w.atoms.emplace(compiled.atom_order()[i], atom_values[i]);
  }
  for (std::size_t i = 0; i < pair_values.size(); ++i) {
    w.table.push_back({compiled.pair_left(i), compiled.pair_right(i), pair_values[i]});
  }
  return w;
}

// A draw strictly inside the lawful interval [0, bound].  Real carriers
// interpolate; an infinite bound samples [0, 2) (the bound itself is already
// a candidate); tuples recurse per component.
Element draw_below(const Algebra& alg, const Element& bound, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (bound.is_tuple()) {
    auto comps = alg.component_algebras();
    Element::Tuple parts;
    parts.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      parts.push_back(draw_below(*comps[i], bound.as_tuple()[i], rng));
    }
    return Element::tuple(alg.id(), std::move(parts));
  }
  const double t = unit(rng);
  const double b = bound.as_real();
  return Element::real(alg.id(), b == kInf ? 2.0 * t : b * t);
}

// Lawful conjunction values for operands (x, y), deterministic order: the
// forced unit-law value alone when the law applies, every legal element on
// finite carriers, otherwise the meet endpoint plus seeded draws below it.
std::vector<Element> pair_candidates(const Algebra& alg, const Element& x, const Element& y,
                                     std::size_t draws, std::mt19937_64& rng) {
  const Element one = alg.one();
  if (alg.leq(one, x) && alg.leq(y, x)) return {y};
  if (alg.leq(one, y) && alg.leq(x, y)) return {x};
  if (alg.finite_carrier()) {
    std::vector<Element> out;
    for (const Element& c : alg.enumerate()) {
      if (alg.leq(c, x) && alg.leq(c, y)) out.push_back(c);
    }
    return out;
  }
  auto m = alg.meet(x, y);
  if (!m) return {};
  std::vector<Element> out{*m};
  for (std::size_t i = 0; i < draws; ++i) out.push_back(draw_below(alg, *m, rng));
  return out;
}

struct Checker {
  const Algebra& alg;
  const CompiledEvaluator& compiled;
  const Strategy& strategy;
  const ConjunctionPolicy& policy;
  std::mt19937_64 rng;
  std::size_t evaluations = 0;
  std::optional<Witness> witness;

  Checker(const AlgebraPtr& a, const CompiledEvaluator& c, const Strategy& s,
          const ConjunctionPolicy& p)
      : alg(*a), compiled(c), strategy(s), policy(p), rng(s.seed) {}

  // Returns true when a counterexample was found (stored in witness).
  bool try_assignment(const std::vector<Element>& atom_values) {
    if (strategy.and_mode == AndMode::FixedPolicy) {
      std::vector<Element> pair_values;
      Element v = compiled.run(atom_values, policy, &pair_values);
      ++evaluations;
      if (!designated(alg, v)) {
        witness = make_witness(compiled, atom_values, pair_values, std::move(v));
        return true;
      }
      return false;
    }
    std::vector<Element> choices;
    choices.reserve(compiled.pair_count());
    return search_pairs(atom_values, choices);
  }

  bool search_pairs(const std::vector<Element>& atom_values, std::vector<Element>& choices) {
    if (choices.size() == compiled.pair_count()) {
      Element v = compiled.run_with_choices(atom_values, choices);
      ++evaluations;
      if (!designated(alg, v)) {
        witness = make_witness(compiled, atom_values, choices, std::move(v));
        return true;
      }
      return false;
    }
    auto [x, y] = compiled.pair_operands(choices.size(), atom_values, choices);
    for (Element& c : pair_candidates(alg, x, y, strategy.draws, rng)) {
      choices.push_back(std::move(c));
      if (search_pairs(atom_values, choices)) return true;
      choices.pop_back();
    }
    return false;
  }

  // Odometer over per-atom value lists, last atom fastest; returns true when
  // a counterexample stopped the sweep.
  bool sweep(const std::vector<Element>& values) {
    const std::size_t n = compiled.atom_order().size();
    if (n == 0) {
      return try_assignment({});
    }
    if (values.empty()) throw std::invalid_argument("no candidate atom values to enumerate");
    std::vector<std::size_t> idx(n, 0);
    std::vector<Element> atom_values(idx.size(), values.front());
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) atom_values[i] = values[idx[i]];
      if (try_assignment(atom_values)) return true;
      std::size_t i = n;
      for (; i > 0; --i) {
        if (++idx[i - 1] < values.size()) break;
        idx[i - 1] = 0;
      }
      if (i == 0) return false;
    }
  }

  bool sweep_random() {
    const std::size_t n = compiled.atom_order().size();
    for (std::size_t k = 0; k < strategy.count; ++k) {
      std::vector<Element> atom_values;
      atom_values.reserve(n);
      for (std::size_t i = 0; i < n; ++i) atom_values.push_back(alg.sample_unit(rng));
      if (try_assignment(atom_values)) return true;
    }
    return false;
  }
};

std::vector<Element> unit_elements(const Algebra& alg) {
  std::vector<Element> out;
  for (const Element& e : alg.enumerate()) {
    if (alg.in_unit_interval(e)) out.push_back(e);
  }
  return out;
}

Verdict check_product(const FormulaPtr& f, const AlgebraPtr& algebra, const Strategy& strategy,
                      const ConjunctionPolicy& policy);

Verdict check_impl(const FormulaPtr& f, const AlgebraPtr& algebra, const Strategy& strategy,
                   const ConjunctionPolicy& policy) {
  if (!algebra) throw std::invalid_argument("tautology check requires an algebra");
  const bool componentwise =
      algebra->carrier() == CarrierKind::Tuple &&
      (strategy.and_mode == AndMode::Search ||
       policy.kind() == ConjunctionPolicy::Kind::Min ||
       policy.kind() == ConjunctionPolicy::Kind::Star);
  if (componentwise) return check_product(f, algebra, strategy, policy);

  CompiledEvaluator compiled(f, algebra);
  Checker checker(algebra, compiled, strategy, policy);
  bool found = false;
  switch (strategy.kind) {
    case StrategyKind::Exhaustive:
      if (!algebra->finite_carrier()) {
        throw std::invalid_argument("exhaustive strategy requires a finite carrier");
      }
      found = checker.sweep(unit_elements(*algebra));
      break;
    case StrategyKind::Grid:
      found = checker.sweep(algebra->unit_grid(strategy.step));
      break;
    case StrategyKind::Random:
      found = checker.sweep_random();
      break;
  }
  Verdict verdict;
  verdict.evaluations = checker.evaluations;
  if (found) {
    verdict.outcome = Outcome::Counterexample;
    verdict.witness = std::move(checker.witness);
  } else {
    verdict.outcome = strategy.kind == StrategyKind::Exhaustive ? Outcome::ProvenExhaustive
                                                                : Outcome::HoldsOnSampled;
  }
  return verdict;
}

// A product value is designated iff every component is, and with a
// componentwise policy (or free search) the components evolve independently,
// so a product counterexample exists exactly when some component has one.
// The lift keeps the failing component's witness and completes the others
// with zero atoms and meet conjunctions.
Witness lift_witness(const FormulaPtr& f, const AlgebraPtr& algebra,
                     const std::vector<AlgebraPtr>& comps, std::size_t fail,
                     const Witness& inner) {
  CompiledEvaluator compiled(f, algebra);
  std::vector<Element> atom_values;
  for (const std::string& name : compiled.atom_order()) {
    Element::Tuple parts;
    parts.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      parts.push_back(j == fail ? inner.atoms.at(name) : comps[j]->zero());
    }
    atom_values.push_back(Element::tuple(algebra->id(), std::move(parts)));
  }
  std::vector<Element> choices;
  for (std::size_t k = 0; k < compiled.pair_count(); ++k) {
    auto [x, y] = compiled.pair_operands(k, atom_values, choices);
    const std::string key = pair_key(compiled.pair_left(k), compiled.pair_right(k));
    const TableEntry* entry = nullptr;
    for (const TableEntry& te : inner.table) {
      if (pair_key(te.left, te.right) == key) {
        entry = &te;
        break;
      }
    }
    if (!entry) throw std::logic_error("component witness is missing a conjunct pair");
    Element::Tuple parts;
    parts.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j == fail) {
        parts.push_back(entry->value);
        continue;
      }
      auto m = comps[j]->meet(x.as_tuple()[j], y.as_tuple()[j]);
      if (!m) throw std::logic_error("component carrier lacks a meet for the lifted witness");
      parts.push_back(*m);
    }
    choices.push_back(Element::tuple(algebra->id(), std::move(parts)));
  }
  Element value = compiled.run_with_choices(atom_values, choices);
  if (designated(*algebra, value)) {
    throw std::logic_error("lifted witness lost its counterexample");
  }
  return make_witness(compiled, atom_values, choices, std::move(value));
}

Verdict check_product(const FormulaPtr& f, const AlgebraPtr& algebra, const Strategy& strategy,
                      const ConjunctionPolicy& policy) {
  const std::vector<AlgebraPtr> comps = algebra->component_algebras();
  if (comps.empty()) throw std::invalid_argument("tuple carrier without component algebras");
  Verdict verdict;
  bool all_exhaustive = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Verdict inner = check_impl(f, comps[i], strategy, policy);
    verdict.evaluations += inner.evaluations;
    if (inner.outcome == Outcome::Counterexample) {
      verdict.outcome = Outcome::Counterexample;
      verdict.witness = lift_witness(f, algebra, comps, i, *inner.witness);
      verdict.evaluations += 1;
      return verdict;
    }
    all_exhaustive = all_exhaustive && inner.outcome == Outcome::ProvenExhaustive;
  }
  verdict.outcome = all_exhaustive ? Outcome::ProvenExhaustive : Outcome::HoldsOnSampled;
  return verdict;
}

}  // namespace

Verdict check(const FormulaPtr& f, const AlgebraPtr& algebra, const Strategy& strategy,
              const ConjunctionPolicy& policy) {
  return check_impl(f, algebra, strategy, policy);
}

std::vector<Verdict> check_suite(const std::vector<FormulaPtr>& formulas,
                                 const AlgebraPtr& algebra, const Strategy& strategy,
                                 const ConjunctionPolicy& policy) {
  std::vector<Verdict> out;
  out.reserve(formulas.size());
  for (const FormulaPtr& f : formulas) out.push_back(check(f, algebra, strategy, policy));
  return out;
}

}  // namespace ulogic
