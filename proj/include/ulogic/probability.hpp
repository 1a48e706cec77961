#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulogic/evaluation.hpp"
#include "ulogic/formula.hpp"

namespace ulogic {

// A finite probability space.  Outcomes are bit positions over the label
// list and events are bit masks, so field closure, complements and
// disjointness are single machine operations.  At most 64 outcomes.
struct ProbabilitySpace {
  std::vector<std::string> omega;               // outcome labels; bit i is omega[i]
  std::vector<std::uint64_t> field;             // event masks, ascending, deduplicated
  std::map<std::uint64_t, double> p;            // event mask -> probability
  std::map<std::string, std::uint64_t> events;  // optional friendly atom names

  std::uint64_t universe() const;
  // Canonical event key: member labels sorted and comma-joined; "" names the
  // empty set.
  std::string event_key(std::uint64_t mask) const;
  // The atom naming an event: the first friendly name bound to it, otherwise
  // E<k> with k the event's position in the field order.
  std::string atom_name(std::uint64_t mask) const;
  // Inverse of atom naming; understands both friendly names and E<k>.
  std::optional<std::uint64_t> event_by_atom(const std::string& name) const;
};

// Probability-space document:
//   { "omega": [labels],
//     "field": [[labels]...] or "powerset",
//     "p": {event-key: value},
//     "events": {atom-name: [labels]} }          (optional)
// with event keys in the sorted comma-joined form.  Throws
// std::invalid_argument on malformed documents.
ProbabilitySpace parse_space(const std::string& json_text);
ProbabilitySpace parse_space_file(const std::string& path);
std::string format_space(const ProbabilitySpace& space);

struct SpaceReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks field closure (universe, complements, binary unions), that P covers
// exactly the field with values in [0, 1], the axioms P1 and P2, and the
// equivalent triple P1', P2', P3'.  Every failure is reported and names the
// offending sets.
SpaceReport validate_space(const ProbabilitySpace& space);

// Denotation of a pure-event formula: atoms name events, & is intersection,
// \/ is union, ~ is complement and 0 is the empty set.  nullopt as soon as
// any other connective or an unknown atom appears.
std::optional<std::uint64_t> event_denotation(const ProbabilitySpace& space, const FormulaPtr& f);

// The extension half of the probability bridge: an evaluation over the
// probability ray algebra whose atoms are the events (value P(A)) and whose
// conjunction interpretation assigns each pure-event pair P of the
// intersection.  Disjunction then lands on P(A) + P(B) - P(A n B) = P(A u B)
// and negation on 1 - P(A) = P(complement), so evaluation agrees with the
// measure on every pure-event formula.  Pairs with a non-event operand fall
// back to the greatest lower bound.  Throws std::invalid_argument when the
// space fails validation.
Evaluation extend_to_evaluation(const ProbabilitySpace& space);

// The restriction half: reads each event's atom back out of the evaluation.
// Requires an evaluation over the probability ray algebra with e(A) <= 1 for
// every event (throws std::invalid_argument otherwise, naming the event).
// The returned report re-checks the probability axioms over the restricted
// values; extend followed by restrict reproduces P exactly.
struct Restriction {
  std::map<std::uint64_t, double> p;
  SpaceReport report;
};
Restriction restrict_evaluation(const Evaluation& e, const ProbabilitySpace& space);

// A judgment over the truth-belief product: first coordinate the degree of
// truth, second the degree of belief (probability).
struct FuzzyRandomJudgment {
  double t = 0.0;
  double p = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

struct ModusPonensBounds {
  Interval p;
  Interval t;
};

// Interval bounds on the conclusion of modus ponens given judgments on the
// premise and on the implication:
//   p(phi) * p(phi -> psi) <= p(psi) <= p(phi -> psi)
//   min(t(phi), t(phi -> psi)) <= t(psi) <= t(phi -> psi)
// Both intervals are nonempty whenever the inputs lie in [0, 1]; inputs
// outside [0, 1] throw std::invalid_argument.
ModusPonensBounds mp_bounds(const FuzzyRandomJudgment& phi, const FuzzyRandomJudgment& implication);

}  // namespace ulogic
