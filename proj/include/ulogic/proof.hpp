#ifndef ULOGIC_PROOF_HPP
#define ULOGIC_PROOF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulogic/formula.hpp"

namespace ulogic {

struct AxiomSchema {
  std::string id;
  FormulaPtr schema;  // may contain metavariables
};

// A Hilbert-style theory: a set of axiom schemata plus the algebras its
// accepted theorems are expected to hold on (sampling, not proof).
class Theory {
 public:
  static const Theory& upl();
  static const Theory& gfl();
  static const Theory& gpl();
  static const Theory& frl();
  // nullptr when id names no built-in theory.
  static const Theory* by_id(const std::string& id);

  // A custom theory extends a base theory with extra schemata (metavariable
  // free formulas act as single-instance axioms).
  static Theory custom(std::string id, const Theory& base, std::vector<AxiomSchema> extra);

  const std::string& id() const { return id_; }
  const std::vector<AxiomSchema>& axioms() const { return axioms_; }
  const AxiomSchema* find(const std::string& axiom_id) const;
  const std::vector<std::string>& reference_algebra_ids() const { return reference_algebras_; }

 private:
  Theory(std::string id, std::vector<AxiomSchema> axioms, std::vector<std::string> algebras);

  std::string id_;
  std::vector<AxiomSchema> axioms_;
  std::vector<std::string> reference_algebras_;
};

// Instantiates a schema of the theory; the result is desugared.  Throws
// std::invalid_argument on unknown schema ids or missing bindings.
FormulaPtr instantiate(const Theory& theory, const std::string& axiom_id,
                       const Bindings& bindings);

struct Justification {
  enum class Kind { Axiom, ModusPonens, Definition };
  Kind kind = Kind::Axiom;
  std::string axiom_id;            // Axiom
  Bindings bindings;               // Axiom, optional
  bool explicit_bindings = false;  // Axiom: bindings were spelled out
  std::size_t minor = 0;           // ModusPonens: line holding the antecedent
  std::size_t major = 0;           // ModusPonens: line holding the implication
  std::size_t source = 0;          // Definition: line this one re-spells
};

struct ProofLine {
  std::size_t number = 0;  // 1-based and sequential
  std::string text;        // formula as written
  FormulaPtr formula;
  Justification justification;
};

struct ProofScript {
  std::string theory_id;
  std::vector<ProofLine> lines;
};

struct ProofParseError : std::runtime_error {
  ProofParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line(line) {}
  std::size_t line;  // 1-based line in the input text
};

// Text format, one numbered line per step:
//   theory: GFL
//   1. p -> (p \/ q) ;; AXIOM(GFL4){$A: p, $B: q}
//   2. ...          ;; MP(1, 2) | DEF(1)
// Blank lines and lines starting with '#' are ignored.  AXIOM bindings are
// optional; without them the checker matches the schema structurally.
ProofScript parse_proof(const std::string& text);
ProofScript parse_proof_file(const std::string& path);
std::string format_proof(const ProofScript& script);

struct LineVerdict {
  std::size_t line = 0;
  bool ok = false;
  std::string message;  // empty when ok
};

struct ProofVerdict {
  bool accepted = false;
  std::vector<LineVerdict> lines;  // judged prefix: stops after the first failure
  std::optional<std::size_t> first_failure;
};

// Judges lines in order: AXIOM lines must match their schema on desugared
// forms (or equal the explicit instantiation), MP(i, j) requires line j to be
// the implication from line i to this line, DEF(i) requires desugared
// equality with line i.  References must point at earlier lines.
ProofVerdict check_proof(const ProofScript& script, const Theory& theory);
// Resolves the script's theory id among the built-ins.
ProofVerdict check_proof(const ProofScript& script);

// Bounded forward closure: seeds plus axiom instances, closed under modus
// ponens round by round.  Instantiation draws metavariable bindings from a
// bounded universe: the constants, subformulas of the seeds, and, in later
// rounds, subformulas of the conjuncts of derived conjunctions (projection
// schemata need those to take a conjunction apart).  Deterministic for fixed
// inputs.
struct ClosureOptions {
  std::size_t max_depth = 8;       // rounds cap; deeper requests throw
  std::size_t max_universe = 64;   // binding candidates kept per round (smallest first)
  std::size_t wide_universe = 24;  // tighter budget for schemata with 3+ metavariables
  std::size_t max_facts = 500000;  // hard safety net
};

struct Closure {
  struct Fact {
    enum class Source { Seed, Axiom, ModusPonens };
    FormulaPtr formula;   // desugared
    std::size_t depth = 0;
    Source source = Source::Seed;
    std::string axiom_id;         // Source::Axiom
    Bindings bindings;            // Source::Axiom
    std::string minor, major;     // Source::ModusPonens: keys of the premises
  };
  std::map<std::string, Fact> facts;  // key = printed desugared formula

  bool contains(const FormulaPtr& f) const;
};

Closure derive_closure(const Theory& theory, const std::vector<FormulaPtr>& seeds,
                       std::size_t depth, const ClosureOptions& options = {});

// Searches for a derivation of 0 from the theory plus hypotheses (added as
// axioms H1..Hn of a derived custom theory).  A reconstructed witness script
// is checkable against that theory.  NO_DERIVATION_FOUND (inconsistent ==
// false) is not a consistency proof.
struct ProbeResult {
  bool inconsistent = false;
  std::optional<ProofScript> witness;
  std::optional<Theory> theory;  // the theory the witness checks against
};

ProbeResult consistency_probe(const Theory& theory, const std::vector<FormulaPtr>& hypotheses,
                              std::size_t depth, const ClosureOptions& options = {});

}  // namespace ulogic

#endif
