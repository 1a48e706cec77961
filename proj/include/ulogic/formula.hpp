#ifndef ULOGIC_FORMULA_HPP
#define ULOGIC_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulogic {

// Propositional formulas over named atoms, the falsum constant and the
// connectives & (conjunction), \/ (disjunction), ~ (negation) and ->
// (implication), plus three derived forms: <-> (biconditional), | (the
// conditional "phi given psi") and the verum constant 1.  Meta nodes are
// placeholders used only in axiom schemata; they never appear in formulas
// accepted by parse().
enum class NodeKind { Atom, Meta, False, True, And, Or, Not, Implies, Iff, Cond };

struct FormulaNode;
using FormulaPtr = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  NodeKind kind;
  std::string name;  // Atom and Meta only
  FormulaPtr left;   // unary operand for Not
  FormulaPtr right;
};

FormulaPtr atom(std::string name);
FormulaPtr meta(std::string name);
FormulaPtr falsum();
FormulaPtr verum();
FormulaPtr land(FormulaPtr l, FormulaPtr r);
FormulaPtr lor(FormulaPtr l, FormulaPtr r);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr iff(FormulaPtr l, FormulaPtr r);
// conditional(phi, psi) is written "phi | psi" and read "phi given psi"
FormulaPtr conditional(FormulaPtr phi, FormulaPtr psi);

struct FormulaParseError : std::runtime_error {
  FormulaParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

// Concrete syntax:
//   iff   := imp ("<->" imp)*
//   imp   := cond ("->" imp)?          right associative
//   cond  := or ("|" or)*
//   or    := and ("\/" and)*
//   and   := unary ("&" unary)*
//   unary := "~" unary | "0" | "1" | atom | "(" iff ")"
// Atom names match [A-Za-z_][A-Za-z0-9_]*.
FormulaPtr parse(std::string_view text);

// Same grammar, but additionally accepts $-prefixed meta variables.
FormulaPtr parse_schema(std::string_view text);

// Minimal-parenthesis rendering; parse(print(f)) reproduces f.
std::string print(const FormulaPtr& f);

// Rewrites the derived forms away:
//   phi <-> psi  becomes  (phi -> psi) & (psi -> phi)
//   phi | psi    becomes  psi -> (psi & phi)
//   1            becomes  0 -> 0
// The result contains only Atom, Meta, False, And, Or, Not and Implies nodes.
FormulaPtr desugar(const FormulaPtr& f);

bool is_core(const FormulaPtr& f);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> atom_names(const FormulaPtr& f);
std::set<std::string> meta_names(const FormulaPtr& f);

// Distinct subformulas in post order (operands before the nodes using them).
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

using Bindings = std::map<std::string, FormulaPtr>;

// Replaces every Meta node by its binding.  Throws std::invalid_argument on a
// missing binding.
FormulaPtr substitute(const FormulaPtr& schema, const Bindings& bindings);

// Finds the unique bindings sigma with desugar(sigma(schema)) == desugar(f),
// if any.  Matching is structural on the desugared forms.
std::optional<Bindings> match_schema(const FormulaPtr& schema, const FormulaPtr& f);

// Unordered key identifying a conjunct pair; both orders of (l, r) map to the
// same key.  Keys are built from the printed desugared forms.
std::string pair_key(const FormulaPtr& l, const FormulaPtr& r);

}  // namespace ulogic

#endif
