#include "ulogic/proof.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ulogic/zoo.hpp"

namespace ulogic {

namespace {

std::vector<AxiomSchema> parse_schemata(
    std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<AxiomSchema> out;
  for (const auto& [id, text] : rows) out.push_back({id, parse_schema(text)});
  return out;
}

std::vector<AxiomSchema> upl_schemata() {
  return parse_schemata({
      {"A1", "($A -> $B) -> (($B -> $C) -> ($A -> $C))"},
      {"A2", "$A -> $A"},
      {"A3", "($A -> ($B -> $C)) -> ($B -> ($A -> $C))"},
      {"A4", "($A & $B) -> $A"},
      {"A5", "($A & $B) -> ($B & $A)"},
      {"A6a", "($A \\/ $B) -> ($B \\/ $A)"},
      {"A6b", "(0 \\/ $A) -> $A"},
      {"A7", "0 -> $A"},
  });
}

std::vector<AxiomSchema> gfl_schemata() {
  return parse_schemata({
      {"GFL1", "(($A -> $B) -> $C) -> ((($B -> $A) -> $C) -> $C)"},
      {"GFL2", "($A -> ($B -> $C)) -> (($A & $B) -> $C)"},
      {"GFL3", "$A -> ($B -> $A)"},
      {"GFL4", "$A -> ($A \\/ $B)"},
      {"GFL5", "(($A \\/ $B) \\/ $C) <-> ($A \\/ ($B \\/ $C))"},
      {"GFL6", "($A \\/ $B) -> (($A -> $B) -> $B)"},
      {"GFL7", "~~$A <-> $A"},
  });
}

std::vector<AxiomSchema> gpl_schemata() {
  return parse_schemata({
      {"GPL1", "~~$A -> $A"},
      {"GPL2", "$A -> ($A \\/ $B)"},
      {"GPL3", "($A & ~$A) <-> ~($A \\/ ~$A)"},
  });
}

std::vector<AxiomSchema> frl_schemata() {
  return parse_schemata({
      {"FRL1", "$A -> ($A \\/ $B)"},
      {"FRL2", "~~$A -> $A"},
  });
}

std::vector<AxiomSchema> concat(std::vector<AxiomSchema> a, std::vector<AxiomSchema> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> all_catalogued_ids() {
  std::vector<std::string> out;
  for (const AlgebraSpec& spec : catalogue()) out.push_back(spec.id);
  return out;
}

}  // namespace

Theory::Theory(std::string id, std::vector<AxiomSchema> axioms, std::vector<std::string> algebras)
    : id_(std::move(id)), axioms_(std::move(axioms)), reference_algebras_(std::move(algebras)) {
  std::set<std::string> seen;
  for (const AxiomSchema& ax : axioms_) {
    if (!seen.insert(ax.id).second) {
      throw std::invalid_argument("duplicate axiom schema id '" + ax.id + "'");
    }
    if (!ax.schema) throw std::invalid_argument("axiom schema '" + ax.id + "' has no formula");
    desugar(ax.schema);  // must be well formed
  }
}

const Theory& Theory::upl() {
  static const Theory t("UPL", upl_schemata(), all_catalogued_ids());
  return t;
}

const Theory& Theory::gfl() {
  static const Theory t("GFL", concat(upl_schemata(), gfl_schemata()), {"godel-unit"});
  return t;
}

const Theory& Theory::gpl() {
  static const Theory t("GPL", concat(upl_schemata(), gpl_schemata()), {"prob-ray"});
  return t;
}

const Theory& Theory::frl() {
  static const Theory t("FRL", concat(upl_schemata(), frl_schemata()), {"product-godel-prob"});
  return t;
}

const Theory* Theory::by_id(const std::string& id) {
  if (id == "UPL") return &upl();
  if (id == "GFL") return &gfl();
  if (id == "GPL") return &gpl();
  if (id == "FRL") return &frl();
  return nullptr;
}

Theory Theory::custom(std::string id, const Theory& base, std::vector<AxiomSchema> extra) {
  return Theory(std::move(id), concat(base.axioms_, std::move(extra)),
                base.reference_algebras_);
}

const AxiomSchema* Theory::find(const std::string& axiom_id) const {
  for (const AxiomSchema& ax : axioms_) {
    if (ax.id == axiom_id) return &ax;
  }
  return nullptr;
}

FormulaPtr instantiate(const Theory& theory, const std::string& axiom_id,
                       const Bindings& bindings) {
  const AxiomSchema* schema = theory.find(axiom_id);
  if (!schema) {
    throw std::invalid_argument("theory " + theory.id() + " has no axiom '" + axiom_id + "'");
  }
  return desugar(substitute(schema->schema, bindings));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_index(const std::string& s, std::size_t text_line) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw ProofParseError("expected a line number, got '" + s + "'", text_line);
  }
  return static_cast<std::size_t>(std::stoull(s));
}

// "AXIOM(id)" or "AXIOM(id){$A: text, $B: text}"
Justification parse_axiom_justification(const std::string& body, std::size_t text_line) {
  Justification j;
  j.kind = Justification::Kind::Axiom;
  const std::size_t close = body.find(')');
  if (close == std::string::npos) {
    throw ProofParseError("AXIOM justification is missing ')'", text_line);
  }
  j.axiom_id = trim(body.substr(0, close));
  if (j.axiom_id.empty()) throw ProofParseError("AXIOM justification names no schema", text_line);
  std::string rest = trim(body.substr(close + 1));
  if (rest.empty()) return j;
  if (rest.front() != '{' || rest.back() != '}') {
    throw ProofParseError("AXIOM bindings must be wrapped in { }", text_line);
  }
  j.explicit_bindings = true;
  std::string inner = rest.substr(1, rest.size() - 2);
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const std::string item = trim(part);
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos || item.front() != '$') {
      throw ProofParseError("binding must look like '$A: formula', got '" + item + "'",
                            text_line);
    }
    const std::string name = trim(item.substr(1, colon - 1));
    const std::string formula_text = trim(item.substr(colon + 1));
    try {
      j.bindings[name] = parse(formula_text);
    } catch (const FormulaParseError& e) {
      throw ProofParseError("binding for $" + name + " does not parse: " + e.what(), text_line);
    }
  }
  return j;
}

Justification parse_justification(const std::string& text, std::size_t text_line) {
  const std::string t = trim(text);
  if (t.rfind("AXIOM(", 0) == 0) return parse_axiom_justification(t.substr(6), text_line);
  auto parse_refs = [&](const std::string& body) {
    std::vector<std::size_t> refs;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) refs.push_back(parse_index(trim(part), text_line));
    return refs;
  };
  if (t.rfind("MP(", 0) == 0 && t.back() == ')') {
    const auto refs = parse_refs(t.substr(3, t.size() - 4));
    if (refs.size() != 2) throw ProofParseError("MP takes two line references", text_line);
    Justification j;
    j.kind = Justification::Kind::ModusPonens;
    j.minor = refs[0];
    j.major = refs[1];
    return j;
  }
  if (t.rfind("DEF(", 0) == 0 && t.back() == ')') {
    const auto refs = parse_refs(t.substr(4, t.size() - 5));
    if (refs.size() != 1) throw ProofParseError("DEF takes one line reference", text_line);
    Justification j;
    j.kind = Justification::Kind::Definition;
    j.source = refs[0];
    return j;
  }
  throw ProofParseError("unknown justification '" + t + "'", text_line);
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  ProofScript script;
  std::stringstream ss(text);
  std::string raw;
  std::size_t text_line = 0;
  bool have_theory = false;
  while (std::getline(ss, raw)) {
    ++text_line;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_theory) {
      if (line.rfind("theory:", 0) != 0) {
        throw ProofParseError("expected 'theory: <id>' header", text_line);
      }
      script.theory_id = trim(line.substr(7));
      if (script.theory_id.empty()) throw ProofParseError("empty theory id", text_line);
      have_theory = true;
      continue;
    }
    const std::size_t dot = line.find('.');
    if (dot == std::string::npos) {
      throw ProofParseError("proof line must start with '<number>.'", text_line);
    }
    ProofLine pl;
    pl.number = parse_index(trim(line.substr(0, dot)), text_line);
    if (pl.number != script.lines.size() + 1) {
      throw ProofParseError("line numbers must be sequential from 1", text_line);
    }
    const std::size_t sep = line.find(";;", dot + 1);
    if (sep == std::string::npos) {
      throw ProofParseError("proof line is missing ';; <justification>'", text_line);
    }
    pl.text = trim(line.substr(dot + 1, sep - dot - 1));
    try {
      pl.formula = parse(pl.text);
    } catch (const FormulaParseError& e) {
      throw ProofParseError(std::string("formula does not parse: ") + e.what(), text_line);
    }
    pl.justification = parse_justification(line.substr(sep + 2), text_line);
    const Justification& j = pl.justification;
    auto check_ref = [&](std::size_t ref) {
      if (ref == 0 || ref >= pl.number) {
        throw ProofParseError("justification must reference an earlier line", text_line);
      }
    };
    if (j.kind == Justification::Kind::ModusPonens) {
      check_ref(j.minor);
      check_ref(j.major);
    } else if (j.kind == Justification::Kind::Definition) {
      check_ref(j.source);
    }
    script.lines.push_back(std::move(pl));
  }
  if (!have_theory) throw ProofParseError("empty proof script", text_line);
  return script;
}

ProofScript parse_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open proof script '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_proof(buffer.str());
}

std::string format_proof(const ProofScript& script) {
  std::string out = "theory: " + script.theory_id + "\n";
  for (const ProofLine& line : script.lines) {
    out += std::to_string(line.number) + ". " + line.text + " ;; ";
    const Justification& j = line.justification;
    switch (j.kind) {
      case Justification::Kind::Axiom:
        out += "AXIOM(" + j.axiom_id + ")";
        if (j.explicit_bindings) {
          out += "{";
          bool first = true;
          for (const auto& [name, f] : j.bindings) {
            if (!first) out += ", ";
            first = false;
            out += "$" + name + ": " + print(f);
          }
          out += "}";
        }
        break;
      case Justification::Kind::ModusPonens:
        out += "MP(" + std::to_string(j.minor) + ", " + std::to_string(j.major) + ")";
        break;
      case Justification::Kind::Definition:
        out += "DEF(" + std::to_string(j.source) + ")";
        break;
    }
    out += "\n";
  }
  return out;
}

ProofVerdict check_proof(const ProofScript& script, const Theory& theory) {
  ProofVerdict verdict;
  std::vector<FormulaPtr> core;  // desugared formulas of accepted lines
  for (const ProofLine& line : script.lines) {
    LineVerdict lv;
    lv.line = line.number;
    const FormulaPtr cur = desugar(line.formula);
    const Justification& j = line.justification;
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        const AxiomSchema* schema = theory.find(j.axiom_id);
        if (!schema) {
          lv.message = "theory " + theory.id() + " has no axiom '" + j.axiom_id + "'";
          break;
        }
        if (j.explicit_bindings) {
          const std::set<std::string> metas = meta_names(schema->schema);
          bool bad = false;
          for (const auto& [name, f] : j.bindings) {
            (void)f;
            if (!metas.count(name)) {
              lv.message = "schema " + j.axiom_id + " has no metavariable $" + name;
              bad = true;
              break;
            }
          }
          if (bad) break;
          FormulaPtr inst;
          try {
            inst = instantiate(theory, j.axiom_id, j.bindings);
          } catch (const std::invalid_argument& e) {
            lv.message = e.what();
            break;
          }
          if (!equal(inst, cur)) {
            lv.message = "formula is not the stated instance of " + j.axiom_id;
            break;
          }
        } else if (!match_schema(schema->schema, cur)) {
          lv.message = "formula does not match schema " + j.axiom_id;
          break;
        }
        lv.ok = true;
        break;
      }
      case Justification::Kind::ModusPonens: {
        if (j.minor == 0 || j.minor > core.size() || j.major == 0 || j.major > core.size()) {
          lv.message = "modus ponens references a line that is not available";
          break;
        }
        const FormulaPtr minor = core[j.minor - 1];
        const FormulaPtr major = core[j.major - 1];
        if (!equal(major, implies(minor, cur))) {
          lv.message = "line " + std::to_string(j.major) + " is not the implication from line " +
                       std::to_string(j.minor) + " to this formula";
          break;
        }
        lv.ok = true;
        break;
      }
      case Justification::Kind::Definition: {
        if (j.source == 0 || j.source > core.size()) {
          lv.message = "definition expansion references a line that is not available";
          break;
        }
        if (!equal(core[j.source - 1], cur)) {
          lv.message = "not definitionally equal to line " + std::to_string(j.source);
          break;
        }
        lv.ok = true;
        break;
      }
    }
    verdict.lines.push_back(lv);
    if (!lv.ok) {
      verdict.first_failure = line.number;
      verdict.accepted = false;
      return verdict;
    }
    core.push_back(cur);
  }
  verdict.accepted = !script.lines.empty();
  if (script.lines.empty()) verdict.first_failure = 0;
  return verdict;
}

ProofVerdict check_proof(const ProofScript& script) {
  const Theory* theory = Theory::by_id(script.theory_id);
  if (!theory) {
    throw std::invalid_argument("unknown theory '" + script.theory_id +
                                "' (built-ins: UPL, GFL, GPL, FRL)");
  }
  return check_proof(script, *theory);
}

bool Closure::contains(const FormulaPtr& f) const {
  return facts.count(print(desugar(f))) > 0;
}

namespace {

std::size_t node_count(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + node_count(f->left) + node_count(f->right);
}

// Binding candidates, smallest first so pruning keeps the building blocks.
struct Universe {
  std::map<std::string, FormulaPtr> entries;

  void add(const FormulaPtr& f) {
    for (const FormulaPtr& sub : subformulas(desugar(f))) {
      entries.emplace(print(sub), sub);
    }
  }

  std::vector<FormulaPtr> bounded(std::size_t cap) const {
    std::vector<FormulaPtr> out;
    out.reserve(entries.size());
    for (const auto& [key, f] : entries) {
      (void)key;
      out.push_back(f);
    }
    std::stable_sort(out.begin(), out.end(), [](const FormulaPtr& a, const FormulaPtr& b) {
      const std::size_t na = node_count(a), nb = node_count(b);
      if (na != nb) return na < nb;
      return print(a) < print(b);
    });
    if (out.size() > cap) out.resize(cap);
    return out;
  }
};

struct ClosureEngine {
  const Theory& theory;
  const ClosureOptions& options;
  Closure closure;
  Universe universe;
  // antecedent key -> implication fact keys waiting on it
  std::map<std::string, std::vector<std::string>> waiting;
  std::deque<std::string> queue;
  std::vector<std::string> added_this_round;

  ClosureEngine(const Theory& th, const ClosureOptions& opts) : theory(th), options(opts) {}

  bool add_fact(Closure::Fact fact) {
    const std::string key = print(fact.formula);
    auto [it, inserted] = closure.facts.emplace(key, std::move(fact));
    if (!inserted) return false;
    if (closure.facts.size() > options.max_facts) {
      throw std::runtime_error("closure exceeded the fact safety cap");
    }
    queue.push_back(key);
    added_this_round.push_back(key);
    return true;
  }

  // Cascading modus ponens over everything derived so far.
  void saturate(std::size_t round) {
    while (!queue.empty()) {
      const std::string key = std::move(queue.front());
      queue.pop_front();
      const FormulaPtr f = closure.facts.at(key).formula;
      if (f->kind == NodeKind::Implies) {
        const std::string antecedent = print(f->left);
        if (closure.facts.count(antecedent)) {
          fire(antecedent, key, round);
        } else {
          waiting[antecedent].push_back(key);
        }
      }
      if (auto it = waiting.find(key); it != waiting.end()) {
        const std::vector<std::string> majors = std::move(it->second);
        waiting.erase(it);
        for (const std::string& major : majors) fire(key, major, round);
      }
    }
  }

  void fire(const std::string& minor, const std::string& major, std::size_t round) {
    const FormulaPtr implication = closure.facts.at(major).formula;
    Closure::Fact fact;
    fact.formula = implication->right;
    fact.depth = round;
    fact.source = Closure::Fact::Source::ModusPonens;
    fact.minor = minor;
    fact.major = major;
    add_fact(std::move(fact));
  }

  void instantiate_schemata(std::size_t round) {
    const std::vector<FormulaPtr> candidates = universe.bounded(options.max_universe);
    // Schemata with three or more metavariables get a tighter binding budget:
    // the instance count is cubic in it, and the building blocks a derivation
    // needs sort early anyway (smallest first).
    const std::size_t wide_cap = std::min(options.wide_universe, options.max_universe);
    const std::vector<FormulaPtr> wide_candidates = universe.bounded(wide_cap);
    for (const AxiomSchema& schema : theory.axioms()) {
      const std::set<std::string> metas = meta_names(schema.schema);
      const std::vector<std::string> names(metas.begin(), metas.end());
      Bindings bindings;
      instantiate_rec(schema, names, 0, bindings,
                      names.size() >= 3 ? wide_candidates : candidates, round);
    }
  }

  void instantiate_rec(const AxiomSchema& schema, const std::vector<std::string>& names,
                       std::size_t i, Bindings& bindings,
                       const std::vector<FormulaPtr>& candidates, std::size_t round) {
    if (i == names.size()) {
      Closure::Fact fact;
      fact.formula = desugar(substitute(schema.schema, bindings));
      fact.depth = round;
      fact.source = Closure::Fact::Source::Axiom;
      fact.axiom_id = schema.id;
      fact.bindings = bindings;
      add_fact(std::move(fact));
      return;
    }
    for (const FormulaPtr& candidate : candidates) {
      bindings[names[i]] = candidate;
      instantiate_rec(schema, names, i + 1, bindings, candidates, round);
    }
    bindings.erase(names[i]);
  }

  void run(const std::vector<FormulaPtr>& seeds, std::size_t depth) {
    if (depth > options.max_depth) {
      throw std::invalid_argument("closure depth exceeds the configured cap");
    }
    universe.add(falsum());
    universe.add(verum());
    for (const FormulaPtr& seed : seeds) {
      Closure::Fact fact;
      fact.formula = desugar(seed);
      fact.depth = 0;
      fact.source = Closure::Fact::Source::Seed;
      add_fact(std::move(fact));
      universe.add(seed);
    }
    saturate(0);
    added_this_round.clear();
    for (std::size_t round = 1; round <= depth; ++round) {
      instantiate_schemata(round);
      saturate(round);
      // Refresh binding candidates with targeted material only: the conjuncts
      // of conjunction-shaped facts, so projection schemata can take a derived
      // conjunction apart next round.  Feeding every derived fact back in
      // floods the universe with junk implications and buries the useful
      // bindings past the budget.
      for (const std::string& key : added_this_round) {
        std::deque<FormulaPtr> stack{closure.facts.at(key).formula};
        while (!stack.empty()) {
          const FormulaPtr f = stack.front();
          stack.pop_front();
          if (f->kind == NodeKind::And) {
            universe.add(f->left);
            universe.add(f->right);
            stack.push_back(f->left);
            stack.push_back(f->right);
          }
        }
      }
      added_this_round.clear();
    }
  }
};

}  // namespace

Closure derive_closure(const Theory& theory, const std::vector<FormulaPtr>& seeds,
                       std::size_t depth, const ClosureOptions& options) {
  ClosureEngine engine(theory, options);
  engine.run(seeds, depth);
  return std::move(engine.closure);
}

namespace {

std::size_t emit_witness_line(const Closure& closure, const std::string& key,
                              std::map<std::string, std::size_t>& line_of, ProofScript& script) {
  if (auto it = line_of.find(key); it != line_of.end()) return it->second;
  const Closure::Fact& fact = closure.facts.at(key);
  ProofLine line;
  switch (fact.source) {
    case Closure::Fact::Source::Seed:
      throw std::logic_error("seed fact reached witness reconstruction without an axiom id");
    case Closure::Fact::Source::Axiom: {
      line.justification.kind = Justification::Kind::Axiom;
      line.justification.axiom_id = fact.axiom_id;
      line.justification.bindings = fact.bindings;
      line.justification.explicit_bindings = !fact.bindings.empty();
      break;
    }
    case Closure::Fact::Source::ModusPonens: {
      const std::size_t minor = emit_witness_line(closure, fact.minor, line_of, script);
      const std::size_t major = emit_witness_line(closure, fact.major, line_of, script);
      line.justification.kind = Justification::Kind::ModusPonens;
      line.justification.minor = minor;
      line.justification.major = major;
      break;
    }
  }
  line.number = script.lines.size() + 1;
  line.formula = fact.formula;
  line.text = print(fact.formula);
  script.lines.push_back(std::move(line));
  line_of.emplace(key, script.lines.back().number);
  return script.lines.back().number;
}

}  // namespace

ProbeResult consistency_probe(const Theory& theory, const std::vector<FormulaPtr>& hypotheses,
                              std::size_t depth, const ClosureOptions& options) {
  std::vector<AxiomSchema> extra;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    extra.push_back({"H" + std::to_string(i + 1), hypotheses[i]});
  }
  ProbeResult result;
  result.theory = Theory::custom(theory.id() + "+hyp", theory, std::move(extra));

  // Seeds enter the closure as instances of their hypothesis axioms so the
  // reconstructed script never cites a bare seed.
  ClosureEngine engine(*result.theory, options);
  std::vector<FormulaPtr> seeds;
  seeds.reserve(hypotheses.size());
  for (const FormulaPtr& h : hypotheses) seeds.push_back(h);
  engine.run(seeds, depth);
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    auto it = engine.closure.facts.find(print(desugar(hypotheses[i])));
    if (it != engine.closure.facts.end() && it->second.source == Closure::Fact::Source::Seed) {
      it->second.source = Closure::Fact::Source::Axiom;
      it->second.axiom_id = "H" + std::to_string(i + 1);
    }
  }

  const std::string goal = print(falsum());
  if (!engine.closure.facts.count(goal)) {
    result.inconsistent = false;
    return result;
  }
  result.inconsistent = true;
  ProofScript script;
  script.theory_id = result.theory->id();
  std::map<std::string, std::size_t> line_of;
  emit_witness_line(engine.closure, goal, line_of, script);
  result.witness = std::move(script);
  return result;
}

}  // namespace ulogic
