#include "ulogic/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ulogic/formula.hpp"
#include "ulogic/zoo.hpp"

namespace ulogic {

using nlohmann::json;

json element_to_json(const Algebra& alg, const Element& e) {
  if (e.is_real()) {
    if (e.is_inf()) return json("inf");
    return json(e.as_real());
  }
  if (e.is_index()) return json(alg.element_to_string(e));
  const auto components = alg.component_algebras();
  const Element::Tuple& parts = e.as_tuple();
  if (components.size() != parts.size()) {
    throw std::invalid_argument("tuple element does not fit algebra " + alg.name());
  }
  json out = json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(element_to_json(*components[i], parts[i]));
  }
  return out;
}

Element element_from_json(const Algebra& alg, const json& v) {
  if (v.is_array()) {
    const auto components = alg.component_algebras();
    if (components.size() != v.size()) {
      throw std::invalid_argument("a " + std::to_string(components.size()) +
                                  "-component value of " + alg.name() + " cannot be built from " +
                                  std::to_string(v.size()) + " entries");
    }
    Element::Tuple parts;
    parts.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      parts.push_back(element_from_json(*components[i], v[i]));
    }
    return Element::tuple(alg.id(), std::move(parts));
  }
  std::optional<Element> parsed;
  if (v.is_string()) {
    parsed = alg.element_from_string(v.get<std::string>());
  } else if (v.is_number()) {
    parsed = alg.element_from_string(v.dump());
  }
  if (!parsed) {
    throw std::invalid_argument("value " + v.dump() + " is not an element of " + alg.name());
  }
  return *parsed;
}

namespace {

FormulaPtr parse_or_wrap(const json& v, const char* what) {
  if (!v.is_string()) {
    throw std::invalid_argument(std::string(what) + " must be a formula string");
  }
  try {
    return parse(v.get<std::string>());
  } catch (const FormulaParseError& e) {
    throw std::invalid_argument(std::string(what) + " does not parse: " + e.what());
  }
}

}  // namespace

Evaluation evaluation_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("assignment document must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "algebra" && key != "atoms" && key != "policy" && key != "table") {
      throw std::invalid_argument("unknown key '" + key + "' in assignment document");
    }
  }
  if (!doc.contains("algebra") || !doc["algebra"].is_string()) {
    throw std::invalid_argument("assignment document needs an \"algebra\" id");
  }
  Evaluation ev;
  ev.algebra = algebra_by_id(doc["algebra"].get<std::string>());

  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_object()) {
      throw std::invalid_argument("\"atoms\" must map atom names to values");
    }
    for (const auto& [name, value] : doc["atoms"].items()) {
      ev.atoms.insert_or_assign(name, element_from_json(*ev.algebra, value));
    }
  }

  std::string policy = "min";
  if (doc.contains("policy")) {
    if (!doc["policy"].is_string()) throw std::invalid_argument("\"policy\" must be a string id");
    policy = doc["policy"].get<std::string>();
  } else if (doc.contains("table")) {
    policy = "table";
  }
  if (policy == "table") {
    std::vector<TableEntry> entries;
    if (doc.contains("table")) {
      if (!doc["table"].is_array()) {
        throw std::invalid_argument("\"table\" must be a list of {left, right, value} entries");
      }
      for (const auto& entry : doc["table"]) {
        if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
            !entry.contains("value")) {
          throw std::invalid_argument("table entries need \"left\", \"right\" and \"value\"");
        }
        entries.push_back({parse_or_wrap(entry["left"], "a table \"left\" formula"),
                           parse_or_wrap(entry["right"], "a table \"right\" formula"),
                           element_from_json(*ev.algebra, entry["value"])});
      }
    }
    ev.policy = ConjunctionPolicy::table(std::move(entries));
  } else {
    if (doc.contains("table")) {
      throw std::invalid_argument("a \"table\" requires the table policy, not '" + policy + "'");
    }
    if (policy == "min") {
      ev.policy = ConjunctionPolicy::min();
    } else if (policy == "star") {
      ev.policy = ConjunctionPolicy::star();
    } else if (policy == "product-then-min") {
      ev.policy = ConjunctionPolicy::product_then_min();
    } else {
      throw std::invalid_argument("unknown conjunction policy '" + policy + "'");
    }
  }
  return ev;
}

nlohmann::json evaluation_to_json(const Evaluation& ev) {
  if (!ev.algebra) throw std::invalid_argument("the evaluation carries no algebra");
  json doc;
  doc["algebra"] = ev.algebra->name();
  json atoms = json::object();
  for (const auto& [name, value] : ev.atoms) atoms[name] = element_to_json(*ev.algebra, value);
  doc["atoms"] = std::move(atoms);
  switch (ev.policy.kind()) {
    case ConjunctionPolicy::Kind::Min:
      doc["policy"] = "min";
      break;
    case ConjunctionPolicy::Kind::Star:
      doc["policy"] = "star";
      break;
    case ConjunctionPolicy::Kind::ProductThenMin:
      doc["policy"] = "product-then-min";
      break;
    case ConjunctionPolicy::Kind::Table: {
      doc["policy"] = "table";
      json table = json::array();
      for (const TableEntry& entry : ev.policy.entries()) {
        json row;
        row["left"] = print(entry.left);
        row["right"] = print(entry.right);
        row["value"] = element_to_json(*ev.algebra, entry.value);
        table.push_back(std::move(row));
      }
      doc["table"] = std::move(table);
      break;
    }
    case ConjunctionPolicy::Kind::Custom:
      throw std::invalid_argument("custom conjunction policies have no document form");
  }
  return doc;
}

Evaluation parse_assignment(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("assignment document is not valid JSON: ") + e.what());
  }
  return evaluation_from_json(doc);
}

Evaluation parse_assignment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open assignment '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_assignment(buffer.str());
}

std::string format_assignment(const Evaluation& ev) { return evaluation_to_json(ev).dump(2) + "\n"; }

json witness_to_json(const AlgebraPtr& algebra, const Witness& w) {
  return evaluation_to_json(witness_evaluation(algebra, w));
}

json verdict_to_json(const AlgebraPtr& algebra, const Verdict& v) {
  json doc;
  switch (v.outcome) {
    case Outcome::HoldsOnSampled:
      doc["outcome"] = "holds-on-sampled";
      break;
    case Outcome::Counterexample:
      doc["outcome"] = "counterexample";
      break;
    case Outcome::ProvenExhaustive:
      doc["outcome"] = "proven-exhaustive";
      break;
  }
  doc["evaluations"] = v.evaluations;
  if (v.witness) {
    doc["witness"] = witness_to_json(algebra, *v.witness);
    doc["value"] = element_to_json(*algebra, v.witness->value);
  }
  return doc;
}

json law_report_to_json(const Algebra& alg, const LawReport& report) {
  json doc;
  doc["algebra"] = report.algebra;
  doc["seed"] = report.seed;
  doc["samples"] = report.samples;
  doc["exhaustive"] = report.exhaustive;
  doc["all_passed"] = report.all_passed();
  json laws = json::array();
  for (const LawResult& law : report.laws) {
    json row;
    row["law"] = law.law;
    row["checked"] = law.checked;
    row["failures"] = law.failures;
    row["passed"] = law.passed();
    if (!law.detail.empty()) row["detail"] = law.detail;
    if (!law.witness.empty()) {
      json witness = json::array();
      for (const Element& e : law.witness) witness.push_back(element_to_json(alg, e));
      row["witness"] = std::move(witness);
    }
    laws.push_back(std::move(row));
  }
  doc["laws"] = std::move(laws);
  return doc;
}

json proof_verdict_to_json(const ProofScript& script, const ProofVerdict& verdict) {
  json doc;
  doc["theory"] = script.theory_id;
  doc["accepted"] = verdict.accepted;
  json lines = json::array();
  for (const LineVerdict& lv : verdict.lines) {
    json row;
    row["line"] = lv.line;
    row["ok"] = lv.ok;
    if (!lv.message.empty()) row["message"] = lv.message;
    lines.push_back(std::move(row));
  }
  doc["lines"] = std::move(lines);
  if (verdict.first_failure) doc["first_failure"] = *verdict.first_failure;
  return doc;
}

}  // namespace ulogic
