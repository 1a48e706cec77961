#include "ulogic/algebra.hpp"

#include <atomic>
#include <cmath>

namespace ulogic {

namespace {

std::atomic<AlgebraId> next_id{1};

}  // namespace

Algebra::Algebra() : id_(next_id.fetch_add(1)) {}

void Algebra::check_owned(const Element& a) const {
  if (a.owner() != id_)
    throw AlgebraError("element does not belong to algebra '" + name_ + "'");
}

bool Algebra::leq(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return leq_impl(a, b);
}

bool Algebra::eq(const Element& a, const Element& b) const {
  return leq(a, b) && leq(b, a);
}

Element Algebra::star(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return star_impl(a, b);
}

Element Algebra::oplus(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return oplus_impl(a, b);
}

Element Algebra::neg(const Element& a) const {
  check_owned(a);
  return neg_impl(a);
}

Element Algebra::residuum(const Element& a, const Element& x) const {
  check_owned(a);
  check_owned(x);
  return residuum_impl(a, x);
}

Element Algebra::max_solution(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  if (!leq_impl(a, b))
    throw AlgebraError("max_solution requires the first argument below the second");
  return max_solution_impl(a, b);
}

std::optional<Element> Algebra::meet(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  if (leq_impl(a, b)) return a;
  if (leq_impl(b, a)) return b;
  return meet_impl(a, b);
}

std::optional<Element> Algebra::meet_impl(const Element&, const Element&) const {
  return std::nullopt;
}

std::vector<Element> Algebra::enumerate() const {
  throw AlgebraError("algebra '" + name_ + "' has no finite enumeration");
}

std::vector<AlgebraPtr> Algebra::component_algebras() const { return {}; }

std::vector<Element> Algebra::unit_grid(double) const {
  // a discrete carrier is its own grid at every resolution
  if (finite_carrier()) {
    std::vector<Element> out;
    for (const Element& e : enumerate()) {
      if (in_unit_interval(e)) out.push_back(e);
    }
    return out;
  }
  throw AlgebraError("algebra '" + name_ + "' has no unit grid");
}

bool LawReport::all_passed() const {
  for (const auto& l : laws)
    if (!l.passed()) return false;
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws)
    if (l.law == law) return &l;
  return nullptr;
}

namespace {

// One structure law over a triple of elements.  Vacuously true cases (e.g.
// monotonicity when the sampled pair is incomparable) report applied=false
// and are not counted.
struct Law {
  const char* id;
  bool (*holds)(const Algebra&, const Element&, const Element&, const Element&, bool& applied);
};

bool law_reflexive(const Algebra& A, const Element& x, const Element&, const Element&, bool&) {
  return A.leq(x, x);
}

bool law_antisymmetric(const Algebra& A, const Element& x, const Element& y, const Element&, bool& applied) {
  applied = A.leq(x, y) && A.leq(y, x);
  return !applied || A.eq(x, y);
}

bool law_transitive(const Algebra& A, const Element& x, const Element& y, const Element& z, bool& applied) {
  applied = A.leq(x, y) && A.leq(y, z);
  return !applied || A.leq(x, z);
}

bool law_zero_least(const Algebra& A, const Element& x, const Element&, const Element&, bool&) {
  return A.leq(A.zero(), x);
}

bool law_star_comm(const Algebra& A, const Element& x, const Element& y, const Element&, bool&) {
  return A.eq(A.star(x, y), A.star(y, x));
}

bool law_star_assoc(const Algebra& A, const Element& x, const Element& y, const Element& z, bool&) {
  return A.eq(A.star(A.star(x, y), z), A.star(x, A.star(y, z)));
}

bool law_star_unit(const Algebra& A, const Element& x, const Element&, const Element&, bool&) {
  return A.eq(A.star(x, A.one()), x);
}

bool law_star_unit_closed(const Algebra& A, const Element& x, const Element& y, const Element&, bool& applied) {
  applied = A.in_unit_interval(x) && A.in_unit_interval(y);
  return !applied || A.in_unit_interval(A.star(x, y));
}

bool law_oplus_comm(const Algebra& A, const Element& x, const Element& y, const Element&, bool&) {
  return A.eq(A.oplus(x, y), A.oplus(y, x));
}

bool law_oplus_assoc(const Algebra& A, const Element& x, const Element& y, const Element& z, bool&) {
  return A.eq(A.oplus(A.oplus(x, y), z), A.oplus(x, A.oplus(y, z)));
}

bool law_oplus_unit(const Algebra& A, const Element& x, const Element&, const Element&, bool&) {
  return A.eq(A.oplus(x, A.zero()), x);
}

bool law_oplus_monotone(const Algebra& A, const Element& x, const Element& y, const Element& z, bool& applied) {
  applied = A.leq(x, y);
  return !applied || A.leq(A.oplus(x, z), A.oplus(y, z));
}

bool law_max_solution(const Algebra& A, const Element& x, const Element& y, const Element& z, bool& applied) {
  applied = A.leq(x, y);
  if (!applied) return true;
  Element c = A.max_solution(x, y);
  if (!A.eq(A.oplus(x, c), y)) return false;
  // z probes maximality: any other solution must sit below c.
  if (A.eq(A.oplus(x, z), y) && !A.leq(z, c)) return false;
  return true;
}

bool law_neg_bounds(const Algebra& A, const Element&, const Element&, const Element&, bool&) {
  return A.eq(A.neg(A.zero()), A.one()) && A.eq(A.neg(A.one()), A.zero());
}

bool law_neg_antitone(const Algebra& A, const Element& x, const Element& y, const Element&, bool& applied) {
  applied = A.leq(x, y);
  return !applied || A.leq(A.neg(y), A.neg(x));
}

bool law_adjunction(const Algebra& A, const Element& a, const Element& x, const Element& y, bool&) {
  return A.leq(y, A.residuum(a, x)) == A.leq(A.star(a, y), x);
}

bool law_star_monotone(const Algebra& A, const Element& x, const Element& y, const Element& z, bool& applied) {
  applied = A.leq(x, y);
  return !applied || A.leq(A.star(x, z), A.star(y, z));
}

bool law_residuum_monotone_right(const Algebra& A, const Element& x, const Element& y, const Element& a, bool& applied) {
  applied = A.leq(x, y);
  return !applied || A.leq(A.residuum(a, x), A.residuum(a, y));
}

bool law_residuum_antitone_left(const Algebra& A, const Element& x, const Element& y, const Element& a, bool& applied) {
  applied = A.leq(x, y);
  return !applied || A.leq(A.residuum(y, a), A.residuum(x, a));
}

bool law_oplus_upper(const Algebra& A, const Element& x, const Element& y, const Element&, bool&) {
  return A.leq(x, A.oplus(x, y));
}

bool law_unit_residuum_below(const Algebra& A, const Element& x, const Element& y, const Element&, bool& applied) {
  applied = A.leq(A.one(), A.residuum(x, y));
  return !applied || A.leq(x, y);
}

bool law_residuum_by_one(const Algebra& A, const Element& x, const Element&, const Element&, bool&) {
  return A.eq(A.residuum(A.one(), x), x);
}

constexpr Law kLaws[] = {
    {"order.reflexive", law_reflexive},
    {"order.antisymmetric", law_antisymmetric},
    {"order.transitive", law_transitive},
    {"order.zero-least", law_zero_least},
    {"star.commutative", law_star_comm},
    {"star.associative", law_star_assoc},
    {"star.unit", law_star_unit},
    {"star.unit-interval-closed", law_star_unit_closed},
    {"oplus.commutative", law_oplus_comm},
    {"oplus.associative", law_oplus_assoc},
    {"oplus.unit", law_oplus_unit},
    {"oplus.monotone", law_oplus_monotone},
    {"oplus.max-solution", law_max_solution},
    {"neg.bounds", law_neg_bounds},
    {"neg.antitone", law_neg_antitone},
    {"residuum.adjunction", law_adjunction},
    {"star.monotone", law_star_monotone},
    {"residuum.monotone-right", law_residuum_monotone_right},
    {"residuum.antitone-left", law_residuum_antitone_left},
    {"oplus.upper-bound", law_oplus_upper},
    {"residuum.unit-below", law_unit_residuum_below},
    {"residuum.by-unit", law_residuum_by_one},
};

}  // namespace

LawReport check_laws(const Algebra& alg, std::uint64_t samples, std::uint64_t seed) {
  LawReport report;
  report.algebra = alg.name();
  report.seed = seed;
  report.laws.reserve(std::size(kLaws));
  for (const Law& law : kLaws) report.laws.push_back(LawResult{law.id});

  auto run_triple = [&](const Element& x, const Element& y, const Element& z) {
    for (std::size_t i = 0; i < std::size(kLaws); ++i) {
      bool applied = true;
      bool ok = false;
      std::string error;
      // A thrown AlgebraError (a table without the required greatest
      // solution, for instance) counts as a failure of the law that needed
      // the operation.
      try {
        ok = kLaws[i].holds(alg, x, y, z, applied);
      } catch (const AlgebraError& e) {
        ok = false;
        error = e.what();
      }
      if (!applied) continue;
      LawResult& r = report.laws[i];
      ++r.checked;
      if (!ok) {
        if (r.failures == 0) {
          r.witness = {x, y, z};
          r.detail = error;
        }
        ++r.failures;
      }
    }
  };

  bool exhaust = alg.finite_carrier();
  std::vector<Element> carrier;
  if (exhaust) {
    carrier = alg.enumerate();
    // Exhaustive triple enumeration only while it stays cheaper than the
    // requested sample count.
    std::uint64_t n = carrier.size();
    exhaust = n * n * n <= std::max<std::uint64_t>(samples, 1);
  }

  if (exhaust) {
    report.exhaustive = true;
    report.samples = static_cast<std::uint64_t>(carrier.size() * carrier.size() * carrier.size());
    for (const Element& x : carrier)
      for (const Element& y : carrier)
        for (const Element& z : carrier) run_triple(x, y, z);
  } else {
    report.samples = samples;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
      Element x = alg.sample(rng);
      Element y = alg.sample(rng);
      Element z = alg.sample(rng);
      run_triple(x, y, z);
    }
  }

  for (std::size_t i = 0; i < std::size(kLaws); ++i) {
    LawResult& r = report.laws[i];
    if (!r.witness.empty()) {
      std::string where = "first failure at (";
      for (std::size_t j = 0; j < r.witness.size(); ++j) {
        if (j) where += ", ";
        where += alg.element_to_string(r.witness[j]);
      }
      where += ")";
      r.detail = r.detail.empty() ? where : where + ": " + r.detail;
    }
  }
  return report;
}

}  // namespace ulogic
