#include "ulogic/evaluation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulogic {

namespace {

std::string describe(const Algebra& alg, const Element& a) { return alg.element_to_string(a); }

// The constraints every conjunction value must satisfy: below both operands,
// and pinned to the lower operand when the other dominates the unit.
std::optional<std::string> conjunction_defect(const Algebra& alg, const Element& c,
                                              const Element& x, const Element& y) {
  if (!alg.leq(c, x)) {
    return "conjunction value " + describe(alg, c) + " is not leq the left operand " +
           describe(alg, x);
  }
  if (!alg.leq(c, y)) {
    return "conjunction value " + describe(alg, c) + " is not leq the right operand " +
           describe(alg, y);
  }
  const Element one = alg.one();
  if (alg.leq(one, x) && alg.leq(y, x) && !alg.eq(c, y)) {
    return "unit law: left operand dominates the unit, so the value must equal the right "
           "operand " +
           describe(alg, y) + ", got " + describe(alg, c);
  }
  if (alg.leq(one, y) && alg.leq(x, y) && !alg.eq(c, x)) {
    return "unit law: right operand dominates the unit, so the value must equal the left "
           "operand " +
           describe(alg, x) + ", got " + describe(alg, c);
  }
  return std::nullopt;
}

}  // namespace

ConjunctionPolicy ConjunctionPolicy::min() { return ConjunctionPolicy(Kind::Min, "min"); }

ConjunctionPolicy ConjunctionPolicy::star() { return ConjunctionPolicy(Kind::Star, "star"); }

ConjunctionPolicy ConjunctionPolicy::product_then_min() {
  return ConjunctionPolicy(Kind::ProductThenMin, "product-then-min");
}

ConjunctionPolicy ConjunctionPolicy::table(std::vector<TableEntry> entries) {
  ConjunctionPolicy p(Kind::Table, "table");
  p.entries_ = std::move(entries);
  for (std::size_t i = 0; i < p.entries_.size(); ++i) {
    p.by_key_.emplace(pair_key(p.entries_[i].left, p.entries_[i].right), i);
  }
  return p;
}

ConjunctionPolicy ConjunctionPolicy::custom(std::string label, Chooser chooser) {
  ConjunctionPolicy p(Kind::Custom, std::move(label));
  p.chooser_ = std::move(chooser);
  return p;
}

std::vector<const TableEntry*> ConjunctionPolicy::lookup(const FormulaPtr& l,
                                                         const FormulaPtr& r) const {
  std::vector<const TableEntry*> out;
  auto [lo, hi] = by_key_.equal_range(pair_key(l, r));
  for (auto it = lo; it != hi; ++it) out.push_back(&entries_[it->second]);
  return out;
}

namespace {

struct Choice {
  std::optional<Element> value;       // nullopt when no candidate exists
  std::vector<std::string> defects;   // policy-internal problems (table conflicts)
};

Choice policy_value(const Algebra& alg, const ConjunctionPolicy& policy, const FormulaPtr& l,
                    const FormulaPtr& r, const Element& x, const Element& y) {
  Choice out;
  switch (policy.kind()) {
    case ConjunctionPolicy::Kind::Min:
      out.value = alg.meet(x, y);
      if (!out.value) out.defects.push_back("the operands have no greatest lower bound");
      return out;
    case ConjunctionPolicy::Kind::Star:
      out.value = alg.star(x, y);
      return out;
    case ConjunctionPolicy::Kind::ProductThenMin:
      if (alg.name() != "prob-ray") {
        throw std::invalid_argument("product-then-min policy requires the prob-ray algebra");
      }
      if (alg.in_unit_interval(x) && alg.in_unit_interval(y)) {
        out.value = alg.star(x, y);
      } else {
        out.value = alg.meet(x, y);
      }
      return out;
    case ConjunctionPolicy::Kind::Table: {
      auto hits = policy.lookup(l, r);
      if (hits.empty()) {
        out.value = alg.meet(x, y);
        if (!out.value) out.defects.push_back("the operands have no greatest lower bound");
        return out;
      }
      out.value = hits.front()->value;
      for (std::size_t i = 1; i < hits.size(); ++i) {
        if (!alg.eq(hits[i]->value, *out.value)) {
          out.defects.push_back("conflicting table entries for the pair (" +
                                print(hits.front()->left) + ", " + print(hits.front()->right) +
                                "): " + describe(alg, *out.value) + " vs " +
                                describe(alg, hits[i]->value));
        }
      }
      return out;
    }
    case ConjunctionPolicy::Kind::Custom: {
      out.value = policy.chooser()(l, r, x, y);
      if (!out.value) {
        out.value = alg.meet(x, y);
        if (!out.value) out.defects.push_back("the operands have no greatest lower bound");
      }
      return out;
    }
  }
  throw std::logic_error("unreachable conjunction policy kind");
}

}  // namespace

int CompiledEvaluator::compile(const FormulaPtr& f, std::map<std::string, int>& memo) {
  const std::string key = print(f);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Node node;
  node.kind = f->kind;
  node.formula = f;
  switch (f->kind) {
    case NodeKind::Atom: {
      auto slot = std::find(atom_order_.begin(), atom_order_.end(), f->name);
      if (slot == atom_order_.end()) {
        atom_order_.push_back(f->name);
        node.slot = static_cast<int>(atom_order_.size()) - 1;
      } else {
        node.slot = static_cast<int>(slot - atom_order_.begin());
      }
      break;
    }
    case NodeKind::False:
      break;
    case NodeKind::Not:
      node.left = compile(f->left, memo);
      break;
    case NodeKind::Implies:
      node.left = compile(f->left, memo);
      node.right = compile(f->right, memo);
      break;
    case NodeKind::And:
    case NodeKind::Or: {
      node.left = compile(f->left, memo);
      node.right = compile(f->right, memo);
      const std::string pk = pair_key(f->left, f->right);
      if (auto it = pair_memo_.find(pk); it != pair_memo_.end()) {
        node.pair = it->second;
      } else {
        Pair p;
        p.left = f->left;
        p.right = f->right;
        p.left_node = node.left;
        p.right_node = node.right;
        pairs_.push_back(std::move(p));
        node.pair = static_cast<int>(pairs_.size()) - 1;
        pair_memo_.emplace(pk, node.pair);
      }
      break;
    }
    case NodeKind::Meta:
      throw std::invalid_argument("cannot evaluate a schema with metavariables");
    default:
      throw std::logic_error("desugared formula contains a sugared node");
  }
  nodes_.push_back(std::move(node));
  const int idx = static_cast<int>(nodes_.size()) - 1;
  memo.emplace(key, idx);
  return idx;
}

CompiledEvaluator::CompiledEvaluator(const FormulaPtr& f, AlgebraPtr algebra)
    : algebra_(std::move(algebra)), root_(desugar(f)) {
  if (!algebra_) throw std::invalid_argument("compiled evaluator requires an algebra");
  std::map<std::string, int> memo;
  compile(root_, memo);
}

void CompiledEvaluator::eval_nodes(const std::vector<Element>& atom_values,
                                   const ConjunctionPolicy* policy,
                                   const std::vector<Element>* choices, int upto,
                                   std::vector<Element>& values,
                                   std::vector<std::optional<Element>>* pair_values_out) const {
  const Algebra& alg = *algebra_;
  if (atom_values.size() != atom_order_.size()) {
    throw std::invalid_argument("expected one value per atom in atom_order()");
  }
  if (choices && choices->size() != pairs_.size()) {
    throw std::invalid_argument("expected one choice per conjunct pair");
  }
  values.clear();
  values.reserve(nodes_.size());
  std::vector<std::optional<Element>> pair_values(pairs_.size());
  for (int i = 0; i <= upto; ++i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    switch (n.kind) {
      case NodeKind::Atom: {
        const Element& v = atom_values[static_cast<std::size_t>(n.slot)];
        if (!alg.in_unit_interval(v)) {
          throw EvaluationError("atom value " + describe(alg, v) +
                                    " lies outside the unit interval",
                                n.formula);
        }
        values.push_back(v);
        break;
      }
      case NodeKind::False:
        values.push_back(alg.zero());
        break;
      case NodeKind::Not:
        values.push_back(alg.neg(values[static_cast<std::size_t>(n.left)]));
        break;
      case NodeKind::Implies:
        values.push_back(alg.residuum(values[static_cast<std::size_t>(n.left)],
                                      values[static_cast<std::size_t>(n.right)]));
        break;
      case NodeKind::And:
      case NodeKind::Or: {
        const Element& x = values[static_cast<std::size_t>(n.left)];
        const Element& y = values[static_cast<std::size_t>(n.right)];
        auto& pv = pair_values[static_cast<std::size_t>(n.pair)];
        if (!pv) {
          if (choices) {
            pv = (*choices)[static_cast<std::size_t>(n.pair)];
          } else {
            const Pair& p = pairs_[static_cast<std::size_t>(n.pair)];
            Choice choice = policy_value(alg, *policy, p.left, p.right, x, y);
            if (!choice.defects.empty()) {
              throw EvaluationError(choice.defects.front(), n.formula);
            }
            if (auto defect = conjunction_defect(alg, *choice.value, x, y)) {
              throw EvaluationError(*defect, n.formula);
            }
            pv = std::move(choice.value);
          }
        }
        if (n.kind == NodeKind::And) {
          values.push_back(*pv);
        } else {
          const Element s = alg.oplus(x, y);
          if (!alg.leq(*pv, s)) {
            throw EvaluationError("disjunction requires the conjunction value " +
                                      describe(alg, *pv) + " to be leq the oplus of the operands " +
                                      describe(alg, s),
                                  n.formula);
          }
          values.push_back(alg.max_solution(*pv, s));
        }
        break;
      }
      default:
        throw std::logic_error("unexpected node kind in compiled evaluator");
    }
  }
  if (pair_values_out) *pair_values_out = std::move(pair_values);
}

Element CompiledEvaluator::run(const std::vector<Element>& atom_values,
                               const ConjunctionPolicy& policy,
                               std::vector<Element>* pair_values_out) const {
  std::vector<Element> values;
  std::vector<std::optional<Element>> pair_values;
  eval_nodes(atom_values, &policy, nullptr, static_cast<int>(nodes_.size()) - 1, values,
             pair_values_out ? &pair_values : nullptr);
  if (pair_values_out) {
    pair_values_out->clear();
    for (std::size_t i = 0; i < pair_values.size(); ++i) {
      if (!pair_values[i]) throw std::logic_error("conjunct pair left unevaluated");
      pair_values_out->push_back(*pair_values[i]);
    }
  }
  return values.back();
}

Element CompiledEvaluator::run_with_choices(const std::vector<Element>& atom_values,
                                            const std::vector<Element>& choices) const {
  std::vector<Element> values;
  eval_nodes(atom_values, nullptr, &choices, static_cast<int>(nodes_.size()) - 1, values);
  return values.back();
}

std::pair<Element, Element> CompiledEvaluator::pair_operands(
    std::size_t pair, const std::vector<Element>& atom_values,
    const std::vector<Element>& choices) const {
  if (pair >= pairs_.size()) throw std::invalid_argument("pair index out of range");
  // Operand nodes of pair i precede every node whose pair slot is >= i, so
  // the truncated run below never touches an unset choice.
  std::vector<Element> padded = choices;
  padded.resize(pairs_.size(), algebra_->zero());
  const Pair& p = pairs_[pair];
  const int upto = std::max(p.left_node, p.right_node);
  std::vector<Element> values;
  eval_nodes(atom_values, nullptr, &padded, upto, values);
  return {values[static_cast<std::size_t>(p.left_node)],
          values[static_cast<std::size_t>(p.right_node)]};
}

Element evaluate(const FormulaPtr& f, const Evaluation& ev) {
  if (!ev.algebra) throw std::invalid_argument("evaluation has no algebra");
  CompiledEvaluator compiled(f, ev.algebra);
  std::vector<Element> atom_values;
  atom_values.reserve(compiled.atom_order().size());
  for (const std::string& name : compiled.atom_order()) {
    auto it = ev.atoms.find(name);
    if (it == ev.atoms.end()) {
      throw EvaluationError("atom '" + name + "' has no assigned value", atom(name));
    }
    atom_values.push_back(it->second);
  }
  return compiled.run(atom_values, ev.policy);
}

namespace {

// Lenient walker: records every defect and keeps going with a repaired value
// (greatest lower bound where possible, zero as a last resort).
Element validate_rec(const Evaluation& ev, const FormulaPtr& f,
                     std::map<std::string, Element>& memo, ValidationReport& report) {
  const Algebra& alg = *ev.algebra;
  const std::string key = print(f);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto remember = [&](Element v) {
    memo.emplace(key, v);
    return v;
  };
  auto complain = [&](std::string message) {
    report.violations.push_back({f, std::move(message)});
  };

  switch (f->kind) {
    case NodeKind::Atom: {
      auto it = ev.atoms.find(f->name);
      if (it == ev.atoms.end()) {
        complain("atom '" + f->name + "' has no assigned value");
        return remember(alg.zero());
      }
      if (!alg.in_unit_interval(it->second)) {
        complain("atom value " + describe(alg, it->second) + " lies outside the unit interval");
      }
      return remember(it->second);
    }
    case NodeKind::False:
      return remember(alg.zero());
    case NodeKind::Not:
      return remember(alg.neg(validate_rec(ev, f->left, memo, report)));
    case NodeKind::Implies: {
      const Element x = validate_rec(ev, f->left, memo, report);
      const Element y = validate_rec(ev, f->right, memo, report);
      return remember(alg.residuum(x, y));
    }
    case NodeKind::And:
    case NodeKind::Or: {
      const Element x = validate_rec(ev, f->left, memo, report);
      const Element y = validate_rec(ev, f->right, memo, report);
      Choice choice = policy_value(alg, ev.policy, f->left, f->right, x, y);
      for (std::string& defect : choice.defects) complain(std::move(defect));
      Element c = alg.zero();
      if (choice.value) {
        c = *choice.value;
        if (auto defect = conjunction_defect(alg, c, x, y)) {
          complain(*defect);
          if (auto glb = alg.meet(x, y)) c = *glb;
        }
      }
      if (f->kind == NodeKind::And) return remember(c);
      const Element s = alg.oplus(x, y);
      if (!alg.leq(c, s)) {
        complain("disjunction requires the conjunction value " + describe(alg, c) +
                 " to be leq the oplus of the operands " + describe(alg, s));
        return remember(s);
      }
      return remember(alg.max_solution(c, s));
    }
    default:
      throw std::logic_error("desugared formula contains a sugared node");
  }
}

}  // namespace

ValidationReport validate(const Evaluation& ev, const FormulaPtr& f) {
  if (!ev.algebra) throw std::invalid_argument("evaluation has no algebra");
  ValidationReport report;
  std::map<std::string, Element> memo;
  try {
    validate_rec(ev, desugar(f), memo, report);
  } catch (const AlgebraError& e) {
    report.violations.push_back({f, std::string("algebra failure: ") + e.what()});
  }
  return report;
}

bool or_identity_check(const Evaluation& ev, const FormulaPtr& phi, const FormulaPtr& psi) {
  if (!ev.algebra) throw std::invalid_argument("evaluation has no algebra");
  const Algebra& alg = *ev.algebra;
  const Element lhs = evaluate(lor(phi, psi), ev);
  if (alg.name() == "godel-unit") {
    const Element x = evaluate(phi, ev);
    const Element y = evaluate(psi, ev);
    const Element join = alg.leq(x, y) ? y : x;
    return alg.eq(lhs, join);
  }
  if (alg.name() == "prob-ray") {
    const Element x = evaluate(phi, ev);
    const Element y = evaluate(psi, ev);
    if (x.is_inf() || y.is_inf()) return lhs.is_inf();
    const Element c = evaluate(land(phi, psi), ev);
    const double rhs = x.as_real() + y.as_real() - c.as_real();
    return alg.eq(lhs, Element::real(alg.id(), rhs));
  }
  throw std::invalid_argument("no closed-form disjunction identity for algebra '" + alg.name() +
                              "'");
}

}  // namespace ulogic
