#ifndef ULOGIC_EVALUATION_HPP
#define ULOGIC_EVALUATION_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ulogic/algebra.hpp"
#include "ulogic/formula.hpp"

namespace ulogic {

// Conjunction is not a function of the operand values alone: an evaluation
// may assign any value c to phi & psi with c below both operands, symmetric
// in the pair, and equal to the lower operand when the other one dominates
// the unit (the unit law, enforced only when the two operands are
// comparable).  A policy picks the value; the evaluator checks it.
struct TableEntry {
  FormulaPtr left;
  FormulaPtr right;
  Element value;
};

class ConjunctionPolicy {
 public:
  enum class Kind { Min, Star, ProductThenMin, Table, Custom };

  // Greatest lower bound of the operands; lawful on every shipped carrier.
  static ConjunctionPolicy min();
  // The algebra's star; lawful when both operands sit in the unit interval,
  // checked like any other choice otherwise.
  static ConjunctionPolicy star();
  // Product when both operands are at most one, greatest lower bound
  // otherwise; specific to the multiplicative/additive ray.
  static ConjunctionPolicy product_then_min();
  // Explicit values for selected pairs (unordered; both orders of a pair hit
  // the same entry); pairs without an entry fall back to the greatest lower
  // bound.
  static ConjunctionPolicy table(std::vector<TableEntry> entries);

  using Chooser = std::function<std::optional<Element>(
      const FormulaPtr&, const FormulaPtr&, const Element&, const Element&)>;
  static ConjunctionPolicy custom(std::string label, Chooser chooser);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::vector<TableEntry>& entries() const { return entries_; }
  // Entries whose unordered key matches (l, r), first one authoritative.
  std::vector<const TableEntry*> lookup(const FormulaPtr& l, const FormulaPtr& r) const;
  const Chooser& chooser() const { return chooser_; }

 private:
  ConjunctionPolicy(Kind k, std::string label) : kind_(k), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
  std::vector<TableEntry> entries_;
  std::multimap<std::string, std::size_t> by_key_;
  Chooser chooser_;
};

struct Evaluation {
  AlgebraPtr algebra;
  std::map<std::string, Element> atoms;
  ConjunctionPolicy policy = ConjunctionPolicy::min();
};

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, FormulaPtr at)
      : std::runtime_error(what), at(std::move(at)) {}
  FormulaPtr at;
};

// Evaluates f (desugared internally):
//   0 maps to zero, ~ to neg, -> to residuum;
//   phi & psi takes the policy's value, checked against the conjunction
//   constraints;
//   phi \/ psi is the largest c with e(phi & psi) oplus c = e(phi) oplus
//   e(psi), which requires e(phi & psi) leq e(phi) oplus e(psi).
// Throws EvaluationError on unassigned atoms, constraint violations and a
// failed disjunction precondition.
Element evaluate(const FormulaPtr& f, const Evaluation& ev);

struct Violation {
  FormulaPtr at;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Non-throwing sweep over f: atom range (atoms must lie in the unit
// interval), the conjunction constraints at every & node, and the
// disjunction precondition at every \/ node.  Violating conjunction values
// are reported and then repaired to the greatest lower bound so that the
// walk can continue.
ValidationReport validate(const Evaluation& ev, const FormulaPtr& f);

// Closed-form disjunction identities: on godel-unit the disjunction value is
// the join of the operand values; on prob-ray it is x + y - e(phi & psi)
// when everything is finite and infinity when an operand is infinite.
// Returns true when the generic evaluation matches the closed form.  Throws
// std::invalid_argument on other algebras.
bool or_identity_check(const Evaluation& ev, const FormulaPtr& phi, const FormulaPtr& psi);

// Formula compiled against an algebra: distinct subformulas become slots in
// evaluation order and every conjunct pair (from & and \/ nodes alike) gets
// one shared value slot, keyed by the unordered pair of operand formulas.
// Pair i's operand values never depend on choices for pairs >= i.
class CompiledEvaluator {
 public:
  CompiledEvaluator(const FormulaPtr& f, AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FormulaPtr& root() const { return root_; }
  const std::vector<std::string>& atom_order() const { return atom_order_; }

  std::size_t pair_count() const { return pairs_.size(); }
  const FormulaPtr& pair_left(std::size_t i) const { return pairs_[i].left; }
  const FormulaPtr& pair_right(std::size_t i) const { return pairs_[i].right; }

  // atom_values follow atom_order.  pair_values_out, when given, receives the
  // conjunction value used for each pair (indexed like pair_left/pair_right).
  Element run(const std::vector<Element>& atom_values, const ConjunctionPolicy& policy,
              std::vector<Element>* pair_values_out = nullptr) const;
  Element run_with_choices(const std::vector<Element>& atom_values,
                           const std::vector<Element>& choices) const;
  std::pair<Element, Element> pair_operands(std::size_t pair,
                                            const std::vector<Element>& atom_values,
                                            const std::vector<Element>& choices) const;

 private:
  struct Node {
    NodeKind kind;
    int left = -1;
    int right = -1;
    int slot = -1;  // atom slot
    int pair = -1;  // conjunct pair slot for And/Or
    FormulaPtr formula;
  };
  struct Pair {
    FormulaPtr left;
    FormulaPtr right;
    int left_node = -1;
    int right_node = -1;
  };

  int compile(const FormulaPtr& f, std::map<std::string, int>& memo);
  void eval_nodes(const std::vector<Element>& atom_values, const ConjunctionPolicy* policy,
                  const std::vector<Element>* choices, int upto, std::vector<Element>& values,
                  std::vector<std::optional<Element>>* pair_values_out = nullptr) const;

  AlgebraPtr algebra_;
  FormulaPtr root_;
  std::vector<Node> nodes_;
  std::vector<Pair> pairs_;
  std::map<std::string, int> pair_memo_;
  std::vector<std::string> atom_order_;
};

}  // namespace ulogic

#endif
