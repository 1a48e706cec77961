#ifndef ULOGIC_TAUTOLOGY_HPP
#define ULOGIC_TAUTOLOGY_HPP

#include <cstdint>
#include <optional>

#include "ulogic/evaluation.hpp"

namespace ulogic {

// A formula is designated under an evaluation when its value dominates the
// unit.  check() quantifies over sampled evaluations: atom assignments drawn
// from the carrier's unit interval, and, in search mode, over lawful
// conjunction choices at every pair as well.
enum class StrategyKind { Exhaustive, Grid, Random };
enum class AndMode { FixedPolicy, Search };

struct Strategy {
  StrategyKind kind = StrategyKind::Grid;
  double step = 0.1;         // Grid: unit_grid resolution
  std::size_t count = 10000; // Random: number of assignments
  std::uint64_t seed = 0;    // Random assignments and search draws
  AndMode and_mode = AndMode::FixedPolicy;
  std::size_t draws = 8;     // Search: sampled values per pair besides the endpoints

  static Strategy exhaustive(AndMode mode = AndMode::FixedPolicy);
  static Strategy grid(double step, AndMode mode = AndMode::FixedPolicy, std::uint64_t seed = 0);
  static Strategy random(std::size_t count, std::uint64_t seed = 0,
                         AndMode mode = AndMode::FixedPolicy);
};

enum class Outcome { HoldsOnSampled, Counterexample, ProvenExhaustive };

// A counterexample carries everything needed to replay it: the atom
// assignment, the conjunction value used at every pair, and the
// non-designated value reached.
struct Witness {
  std::map<std::string, Element> atoms;
  std::vector<TableEntry> table;
  Element value;
};

struct Verdict {
  Outcome outcome = Outcome::HoldsOnSampled;
  std::size_t evaluations = 0;
  std::optional<Witness> witness;
};

// Rebuilds the evaluation a witness describes: its atoms plus a table policy
// holding the recorded conjunction values.
Evaluation witness_evaluation(const AlgebraPtr& algebra, const Witness& w);

// Samples evaluations per the strategy and returns the first counterexample
// in deterministic enumeration order, or a holds/proven verdict.
//   Exhaustive: every unit-interval atom assignment (finite carriers only);
//     in search mode additionally every lawful conjunction table.
//   Grid: atoms range over unit_grid(step), anchors first.
//   Random: seeded unit-interval samples.
// In fixed mode the policy picks conjunction values (violations propagate as
// EvaluationError); in search mode the policy is ignored and each pair takes
// the forced unit-law value when applicable, otherwise the operands' meet
// plus seeded draws below it.
// Product carriers with a componentwise policy (min, star, or any search)
// are checked per component; a component counterexample is lifted to a
// product witness.
Verdict check(const FormulaPtr& f, const AlgebraPtr& algebra, const Strategy& strategy,
              const ConjunctionPolicy& policy = ConjunctionPolicy::min());

std::vector<Verdict> check_suite(const std::vector<FormulaPtr>& formulas,
                                 const AlgebraPtr& algebra, const Strategy& strategy,
                                 const ConjunctionPolicy& policy = ConjunctionPolicy::min());

}  // namespace ulogic

#endif
