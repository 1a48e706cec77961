#pragma once

#include <string>

#include "json.hpp"
#include "ulogic/algebra.hpp"
#include "ulogic/evaluation.hpp"
#include "ulogic/proof.hpp"
#include "ulogic/tautology.hpp"

namespace ulogic {

// Document forms for elements: a number, "inf", a finite-table label, or an
// array of component values for tuple carriers.  Conversions throw
// std::invalid_argument when the value does not name a carrier element.
nlohmann::json element_to_json(const Algebra& alg, const Element& e);
Element element_from_json(const Algebra& alg, const nlohmann::json& v);

// Assignment document:
//   { "algebra": id,
//     "atoms": {name: value},
//     "policy": "min" | "star" | "product-then-min" | "table",
//     "table": [{"left": formula, "right": formula, "value": v}] }
// "policy" defaults to "min"; "table" requires (and implies) the table
// policy.  Custom conjunction policies have no document form.
Evaluation evaluation_from_json(const nlohmann::json& doc);
nlohmann::json evaluation_to_json(const Evaluation& ev);
Evaluation parse_assignment(const std::string& text);
Evaluation parse_assignment_file(const std::string& path);
std::string format_assignment(const Evaluation& ev);

// A witness serializes to a complete assignment document (table policy), so
// it can be fed straight back into evaluation.
nlohmann::json witness_to_json(const AlgebraPtr& algebra, const Witness& w);
nlohmann::json verdict_to_json(const AlgebraPtr& algebra, const Verdict& v);

nlohmann::json law_report_to_json(const Algebra& alg, const LawReport& report);
nlohmann::json proof_verdict_to_json(const ProofScript& script, const ProofVerdict& verdict);

}  // namespace ulogic
