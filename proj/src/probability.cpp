#include "ulogic/probability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ulogic/algebra.hpp"
#include "ulogic/zoo.hpp"

namespace ulogic {

namespace {

using nlohmann::json;

std::string brace(const std::string& key) { return "{" + key + "}"; }

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

std::uint64_t ProbabilitySpace::universe() const {
  if (omega.size() >= 64) return ~0ull;
  return (1ull << omega.size()) - 1;
}

std::string ProbabilitySpace::event_key(std::uint64_t mask) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < omega.size() && i < 64; ++i) {
    if (mask & (1ull << i)) labels.push_back(omega[i]);
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out;
}

std::string ProbabilitySpace::atom_name(std::uint64_t mask) const {
  for (const auto& [name, m] : events) {
    if (m == mask) return name;
  }
  const auto it = std::lower_bound(field.begin(), field.end(), mask);
  if (it == field.end() || *it != mask) {
    throw std::invalid_argument("event " + brace(event_key(mask)) + " is not in the field");
  }
  return "E" + std::to_string(static_cast<std::size_t>(it - field.begin()));
}

std::optional<std::uint64_t> ProbabilitySpace::event_by_atom(const std::string& name) const {
  if (const auto it = events.find(name); it != events.end()) return it->second;
  if (name.size() >= 2 && name.size() <= 8 && name.front() == 'E' &&
      all_digits(name.substr(1)) && (name[1] != '0' || name.size() == 2)) {
    const std::size_t k = std::stoull(name.substr(1));
    if (k < field.size()) return field[k];
  }
  return std::nullopt;
}

namespace {

std::uint64_t mask_of_labels(const std::vector<std::string>& omega, const json& labels,
                             const std::string& where) {
  std::uint64_t mask = 0;
  for (const auto& item : labels) {
    if (!item.is_string()) {
      throw std::invalid_argument(where + " must list outcome labels as strings");
    }
    const std::string label = item.get<std::string>();
    const auto it = std::find(omega.begin(), omega.end(), label);
    if (it == omega.end()) {
      throw std::invalid_argument(where + " names an unknown outcome '" + label + "'");
    }
    mask |= 1ull << static_cast<std::size_t>(it - omega.begin());
  }
  return mask;
}

std::uint64_t mask_of_key(const std::vector<std::string>& omega, const std::string& key) {
  std::uint64_t mask = 0;
  std::stringstream ss(key);
  std::string label;
  while (std::getline(ss, label, ',')) {
    const auto it = std::find(omega.begin(), omega.end(), label);
    if (it == omega.end()) {
      throw std::invalid_argument("event key '" + key + "' names an unknown outcome '" + label +
                                  "'");
    }
    mask |= 1ull << static_cast<std::size_t>(it - omega.begin());
  }
  return mask;
}

}  // namespace

ProbabilitySpace parse_space(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("probability space document is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("probability space document must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "omega" && key != "field" && key != "p" && key != "events") {
      throw std::invalid_argument("unknown key '" + key + "' in probability space document");
    }
  }
  if (!doc.contains("omega") || !doc["omega"].is_array()) {
    throw std::invalid_argument("probability space document needs an \"omega\" label array");
  }

  ProbabilitySpace space;
  for (const auto& item : doc["omega"]) {
    if (!item.is_string()) throw std::invalid_argument("\"omega\" must list outcome labels");
    const std::string label = item.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos) {
      throw std::invalid_argument("outcome label '" + label +
                                  "' cannot be used in comma-joined event keys");
    }
    if (std::find(space.omega.begin(), space.omega.end(), label) != space.omega.end()) {
      throw std::invalid_argument("duplicate outcome label '" + label + "'");
    }
    space.omega.push_back(label);
  }
  if (space.omega.empty()) throw std::invalid_argument("\"omega\" must not be empty");
  if (space.omega.size() > 64) throw std::invalid_argument("at most 64 outcomes are supported");

  if (!doc.contains("field")) {
    throw std::invalid_argument("probability space document needs a \"field\"");
  }
  std::vector<std::uint64_t> masks;
  if (doc["field"].is_string() && doc["field"].get<std::string>() == "powerset") {
    if (space.omega.size() > 16) {
      throw std::invalid_argument("\"powerset\" fields are limited to 16 outcomes");
    }
    for (std::uint64_t m = 0; m <= space.universe(); ++m) masks.push_back(m);
  } else if (doc["field"].is_array()) {
    for (const auto& entry : doc["field"]) {
      if (!entry.is_array()) {
        throw std::invalid_argument("\"field\" must be \"powerset\" or a list of label lists");
      }
      masks.push_back(mask_of_labels(space.omega, entry, "a \"field\" event"));
    }
  } else {
    throw std::invalid_argument("\"field\" must be \"powerset\" or a list of label lists");
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  space.field = std::move(masks);

  if (!doc.contains("p") || !doc["p"].is_object()) {
    throw std::invalid_argument("probability space document needs a \"p\" object");
  }
  for (const auto& [key, value] : doc["p"].items()) {
    if (!value.is_number()) {
      throw std::invalid_argument("P(" + brace(key) + ") must be a number");
    }
    const std::uint64_t mask = mask_of_key(space.omega, key);
    if (!space.p.emplace(mask, value.get<double>()).second) {
      throw std::invalid_argument("duplicate P entry for event " + brace(space.event_key(mask)));
    }
  }

  if (doc.contains("events")) {
    if (!doc["events"].is_object()) {
      throw std::invalid_argument("\"events\" must map atom names to label lists");
    }
    for (const auto& [name, labels] : doc["events"].items()) {
      if (!labels.is_array()) {
        throw std::invalid_argument("event '" + name + "' must be a label list");
      }
      FormulaPtr as_formula;
      try {
        as_formula = parse(name);
      } catch (const FormulaParseError&) {
      }
      if (!as_formula || as_formula->kind != NodeKind::Atom || as_formula->name != name) {
        throw std::invalid_argument("event name '" + name + "' is not a usable atom name");
      }
      const std::uint64_t mask = mask_of_labels(space.omega, labels, "event '" + name + "'");
      if (!std::binary_search(space.field.begin(), space.field.end(), mask)) {
        throw std::invalid_argument("event '" + name + "' = " + brace(space.event_key(mask)) +
                                    " is not a member of the field");
      }
      // E<k> is the automatic name of the k-th field member; a friendly name
      // of that shape must agree with it.
      if (name.front() == 'E' && all_digits(name.substr(1))) {
        ProbabilitySpace probe = space;
        probe.events.clear();
        const auto automatic = probe.event_by_atom(name);
        if (automatic && *automatic != mask) {
          throw std::invalid_argument("event name '" + name +
                                      "' collides with an automatic event name");
        }
      }
      space.events.emplace(name, mask);
    }
  }
  return space;
}

ProbabilitySpace parse_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open probability space '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_space(buffer.str());
}

std::string format_space(const ProbabilitySpace& space) {
  json doc;
  doc["omega"] = space.omega;
  const bool powerset =
      space.omega.size() <= 16 && space.field.size() == (1ull << space.omega.size());
  if (powerset) {
    doc["field"] = "powerset";
  } else {
    json field = json::array();
    for (const std::uint64_t mask : space.field) {
      json labels = json::array();
      for (std::size_t i = 0; i < space.omega.size(); ++i) {
        if (mask & (1ull << i)) labels.push_back(space.omega[i]);
      }
      std::sort(labels.begin(), labels.end());
      field.push_back(std::move(labels));
    }
    doc["field"] = std::move(field);
  }
  json p = json::object();
  for (const auto& [mask, value] : space.p) p[space.event_key(mask)] = value;
  doc["p"] = std::move(p);
  if (!space.events.empty()) {
    json events = json::object();
    for (const auto& [name, mask] : space.events) {
      json labels = json::array();
      for (std::size_t i = 0; i < space.omega.size(); ++i) {
        if (mask & (1ull << i)) labels.push_back(space.omega[i]);
      }
      std::sort(labels.begin(), labels.end());
      events[name] = std::move(labels);
    }
    doc["events"] = std::move(events);
  }
  return doc.dump(2) + "\n";
}

SpaceReport validate_space(const ProbabilitySpace& space) {
  SpaceReport report;
  auto complain = [&](std::string message) { report.violations.push_back(std::move(message)); };

  if (space.omega.empty()) complain("the outcome set is empty");
  if (space.omega.size() > 64) complain("more than 64 outcomes");
  {
    std::set<std::string> seen;
    for (const std::string& label : space.omega) {
      if (!seen.insert(label).second) complain("duplicate outcome label '" + label + "'");
      if (label.empty() || label.find(',') != std::string::npos) {
        complain("outcome label '" + label + "' cannot be used in comma-joined event keys");
      }
    }
  }
  const std::uint64_t universe = space.universe();
  auto key = [&](std::uint64_t mask) { return brace(space.event_key(mask)); };

  bool sorted = std::is_sorted(space.field.begin(), space.field.end()) &&
                std::adjacent_find(space.field.begin(), space.field.end()) == space.field.end();
  if (!sorted) complain("the field must be stored ascending without duplicates");
  auto in_field = [&](std::uint64_t mask) {
    return std::binary_search(space.field.begin(), space.field.end(), mask);
  };

  for (const std::uint64_t mask : space.field) {
    if (mask & ~universe) {
      complain("event " + key(mask & universe) + " includes bits outside the outcome set");
    }
  }
  if (!in_field(universe)) complain("the field lacks the universal set " + key(universe));
  for (const std::uint64_t a : space.field) {
    if (!in_field(~a & universe)) {
      complain("the field lacks the complement of " + key(a));
    }
  }
  for (std::size_t i = 0; i < space.field.size(); ++i) {
    for (std::size_t j = i + 1; j < space.field.size(); ++j) {
      const std::uint64_t a = space.field[i], b = space.field[j];
      if (!in_field(a | b)) {
        complain("the field lacks the union of " + key(a) + " and " + key(b));
      }
    }
  }

  for (const std::uint64_t mask : space.field) {
    if (!space.p.count(mask)) complain("P is undefined on " + key(mask));
  }
  for (const auto& [mask, value] : space.p) {
    if (!in_field(mask)) {
      complain("P assigns a value outside the field: " + key(mask));
      continue;
    }
    if (!std::isfinite(value) || value < -kEps || value > 1 + kEps) {
      complain("P(" + space.event_key(mask) + ") = " + std::to_string(value) +
               " lies outside [0, 1]");
    }
  }

  auto p_of = [&](std::uint64_t mask) -> std::optional<double> {
    const auto it = space.p.find(mask);
    if (it == space.p.end()) return std::nullopt;
    return it->second;
  };
  auto near = [](double a, double b) { return std::fabs(a - b) <= kEps; };

  // P1 and P1': the endpoints of the measure.
  if (const auto pu = p_of(universe); pu && !near(*pu, 1.0)) {
    complain("P1 violated: P(" + space.event_key(universe) + ") = " + std::to_string(*pu));
  }
  if (const auto pe = p_of(0); pe && !near(*pe, 0.0)) {
    complain("P1' violated: P of the empty set = " + std::to_string(*pe));
  }
  // P2': complements.
  for (const std::uint64_t a : space.field) {
    const auto pa = p_of(a), pc = p_of(~a & universe);
    if (pa && pc && !near(*pc, 1.0 - *pa)) {
      complain("P2' violated on " + key(a) + ": P(complement) = " + std::to_string(*pc) +
               ", expected " + std::to_string(1.0 - *pa));
    }
  }
  // P2 (disjoint additivity) and P3' (inclusion-exclusion) over all pairs.
  for (std::size_t i = 0; i < space.field.size(); ++i) {
    for (std::size_t j = i + 1; j < space.field.size(); ++j) {
      const std::uint64_t a = space.field[i], b = space.field[j];
      const auto pa = p_of(a), pb = p_of(b), pu = p_of(a | b), pi = p_of(a & b);
      if (pa && pb && pu && (a & b) == 0 && !near(*pu, *pa + *pb)) {
        complain("P2 violated: P(" + space.event_key(a | b) + ") = " + std::to_string(*pu) +
                 " but " + key(a) + " and " + key(b) + " are disjoint with P summing to " +
                 std::to_string(*pa + *pb));
      }
      if (pa && pb && pu && pi && !near(*pu, *pa + *pb - *pi)) {
        complain("P3' violated on " + key(a) + " and " + key(b));
      }
    }
  }
  return report;
}

std::optional<std::uint64_t> event_denotation(const ProbabilitySpace& space, const FormulaPtr& f) {
  if (!f) return std::nullopt;
  switch (f->kind) {
    case NodeKind::Atom:
      return space.event_by_atom(f->name);
    case NodeKind::False:
      return 0;
    case NodeKind::Not: {
      const auto d = event_denotation(space, f->left);
      if (!d) return std::nullopt;
      return ~*d & space.universe();
    }
    case NodeKind::And:
    case NodeKind::Or: {
      const auto l = event_denotation(space, f->left);
      if (!l) return std::nullopt;
      const auto r = event_denotation(space, f->right);
      if (!r) return std::nullopt;
      return f->kind == NodeKind::And ? (*l & *r) : (*l | *r);
    }
    default:
      return std::nullopt;  // implication and sugar are not events
  }
}

Evaluation extend_to_evaluation(const ProbabilitySpace& space) {
  const SpaceReport report = validate_space(space);
  if (!report.ok()) {
    throw std::invalid_argument("invalid probability space: " + report.violations.front());
  }
  Evaluation ev;
  ev.algebra = algebra_by_id("prob-ray");
  const AlgebraId owner = ev.algebra->id();
  for (std::size_t k = 0; k < space.field.size(); ++k) {
    ev.atoms.insert_or_assign("E" + std::to_string(k),
                              Element::real(owner, space.p.at(space.field[k])));
  }
  for (const auto& [name, mask] : space.events) {
    ev.atoms.insert_or_assign(name, Element::real(owner, space.p.at(mask)));
  }
  ev.policy = ConjunctionPolicy::custom(
      "event-intersection",
      [space, owner](const FormulaPtr& l, const FormulaPtr& r, const Element&,
                     const Element&) -> std::optional<Element> {
        const auto dl = event_denotation(space, l);
        if (!dl) return std::nullopt;
        const auto dr = event_denotation(space, r);
        if (!dr) return std::nullopt;
        const auto it = space.p.find(*dl & *dr);
        if (it == space.p.end()) return std::nullopt;
        return Element::real(owner, it->second);
      });
  return ev;
}

Restriction restrict_evaluation(const Evaluation& e, const ProbabilitySpace& space) {
  if (!e.algebra) throw std::invalid_argument("the evaluation carries no algebra");
  if (e.algebra->name() != "prob-ray") {
    throw std::invalid_argument("restriction is defined over the probability ray algebra, not " +
                                e.algebra->name());
  }
  Restriction out;
  for (std::size_t k = 0; k < space.field.size(); ++k) {
    const std::uint64_t mask = space.field[k];
    std::vector<std::pair<std::string, Element>> found;
    auto try_name = [&](const std::string& n) {
      if (const auto it = e.atoms.find(n); it != e.atoms.end()) found.emplace_back(n, it->second);
    };
    try_name("E" + std::to_string(k));
    for (const auto& [n, m] : space.events) {
      if (m == mask) try_name(n);
    }
    if (found.empty()) {
      out.report.violations.push_back("event " + brace(space.event_key(mask)) +
                                      " has no atom in the evaluation");
      continue;
    }
    for (std::size_t i = 1; i < found.size(); ++i) {
      if (!e.algebra->eq(found[i].second, found.front().second)) {
        out.report.violations.push_back("atoms '" + found.front().first + "' and '" +
                                        found[i].first + "' disagree on event " +
                                        brace(space.event_key(mask)));
      }
    }
    const Element& value = found.front().second;
    if (!e.algebra->leq(value, e.algebra->one())) {
      throw std::invalid_argument("restriction hypothesis fails: e(" + found.front().first +
                                  ") = " + e.algebra->element_to_string(value) + " exceeds 1");
    }
    out.p[mask] = value.as_real();
  }
  ProbabilitySpace restricted{space.omega, space.field, out.p, space.events};
  SpaceReport axioms = validate_space(restricted);
  for (std::string& violation : axioms.violations) {
    out.report.violations.push_back(std::move(violation));
  }
  return out;
}

ModusPonensBounds mp_bounds(const FuzzyRandomJudgment& phi, const FuzzyRandomJudgment& implication) {
  auto check = [](double v, const char* what) {
    if (!(v >= 0.0) || v > 1.0) {
      throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
  };
  check(phi.p, "the premise belief degree");
  check(phi.t, "the premise truth degree");
  check(implication.p, "the implication belief degree");
  check(implication.t, "the implication truth degree");
  ModusPonensBounds out;
  out.p = {phi.p * implication.p, implication.p};
  out.t = {std::min(phi.t, implication.t), implication.t};
  return out;
}

}  // namespace ulogic
