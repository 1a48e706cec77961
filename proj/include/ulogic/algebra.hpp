#ifndef ULOGIC_ALGEBRA_HPP
#define ULOGIC_ALGEBRA_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ulogic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance used for equality and order comparisons on continuous
// carriers.  Infinity compares exactly.
inline constexpr double kEps = 1e-9;

using AlgebraId = std::uint32_t;

enum class CarrierKind { UnitInterval, Ray, Tuple, Table };

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A carrier element tagged with the algebra that owns it.  Values are
// nonnegative reals (possibly infinite), table indices, or tuples of
// component elements for product algebras.
class Element {
 public:
  using Tuple = std::vector<Element>;

  static Element real(AlgebraId owner, double v) { return Element(owner, v); }
  static Element index(AlgebraId owner, std::size_t i) { return Element(owner, i); }
  static Element tuple(AlgebraId owner, Tuple parts) { return Element(owner, std::move(parts)); }

  bool is_real() const { return std::holds_alternative<double>(value_); }
  bool is_index() const { return std::holds_alternative<std::size_t>(value_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value_); }

  double as_real() const { return std::get<double>(value_); }
  std::size_t as_index() const { return std::get<std::size_t>(value_); }
  const Tuple& as_tuple() const { return std::get<Tuple>(value_); }

  bool is_inf() const { return is_real() && as_real() == kInf; }
  AlgebraId owner() const { return owner_; }

 private:
  Element(AlgebraId owner, double v) : value_(v), owner_(owner) {}
  Element(AlgebraId owner, std::size_t i) : value_(i), owner_(owner) {}
  Element(AlgebraId owner, Tuple t) : value_(std::move(t)), owner_(owner) {}

  std::variant<double, std::size_t, Tuple> value_;
  AlgebraId owner_;
};

// A bounded-lattice-like structure (L, leq, star, oplus, neg, 0, 1):
//   - leq is a partial order with least element zero;
//   - (L, star, one) is a commutative monoid whose restriction to the unit
//     interval {a : a leq one} is again a monoid;
//   - (L, oplus, zero) is a commutative monoid, oplus is monotone, and for
//     a leq b the value max_solution(a, b) = max{c : a oplus c = b} exists;
//   - neg maps zero to one and one to zero and is antitone;
//   - residuum is the right adjoint of star: y leq residuum(a, x) iff
//     star(a, y) leq x.
// check_laws() probes all of the above plus the derived monotonicity facts.
class Algebra {
 public:
  Algebra();
  virtual ~Algebra() = default;

  AlgebraId id() const { return id_; }
  const std::string& name() const { return name_; }
  virtual CarrierKind carrier() const = 0;

  bool leq(const Element& a, const Element& b) const;
  bool eq(const Element& a, const Element& b) const;
  Element star(const Element& a, const Element& b) const;
  Element oplus(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element residuum(const Element& a, const Element& x) const;
  // Requires leq(a, b); the largest c with oplus(a, c) == b.
  Element max_solution(const Element& a, const Element& b) const;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;

  bool in_unit_interval(const Element& a) const { return leq(a, one()); }

  // Greatest lower bound when one is representable; nullopt otherwise.
  std::optional<Element> meet(const Element& a, const Element& b) const;

  virtual bool finite_carrier() const { return false; }
  // Finite carriers only; deterministic order.
  virtual std::vector<Element> enumerate() const;

  virtual Element sample(std::mt19937_64& rng) const = 0;
  // Samples within the unit interval {a : a leq one}.
  virtual Element sample_unit(std::mt19937_64& rng) const = 0;

  // Component algebras for tuple carriers; empty otherwise.
  virtual std::vector<AlgebraPtr> component_algebras() const;

  // Parses a single element from text ("inf", a number, a table label or a
  // table index); nullopt when the text names nothing in the carrier.
  virtual std::optional<Element> element_from_string(const std::string& s) const = 0;

  // Deterministic unit-interval grid for tautology search.  The anchor
  // points 0, 1/2 and 1 come first, then remaining multiples of step in
  // increasing order, then any additional carrier landmarks (2 and infinity
  // where those lie inside the unit interval).
  virtual std::vector<Element> unit_grid(double step) const;

  virtual std::string element_to_string(const Element& a) const = 0;

 protected:
  void set_name(std::string n) { name_ = std::move(n); }
  void check_owned(const Element& a) const;

  virtual bool leq_impl(const Element& a, const Element& b) const = 0;
  virtual Element star_impl(const Element& a, const Element& b) const = 0;
  virtual Element oplus_impl(const Element& a, const Element& b) const = 0;
  virtual Element neg_impl(const Element& a) const = 0;
  virtual Element residuum_impl(const Element& a, const Element& x) const = 0;
  virtual Element max_solution_impl(const Element& a, const Element& b) const = 0;
  virtual std::optional<Element> meet_impl(const Element& a, const Element& b) const;

 private:
  AlgebraId id_;
  std::string name_;
};

struct LawResult {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  // Elements of the first failing sample, in the order the law consumed them.
  std::vector<Element> witness;
  std::string detail;
  bool passed() const { return failures == 0; }
};

struct LawReport {
  std::string algebra;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool exhaustive = false;
  std::vector<LawResult> laws;
  bool all_passed() const;
  const LawResult* find(const std::string& law) const;
};

// Probes the structure laws on `samples` pseudo-random element triples
// (exhaustively when the carrier is finite and small enough).  The sample
// stream is fully determined by `seed`; the witness stored for a failing law
// is the first failure in sample order.
LawReport check_laws(const Algebra& alg, std::uint64_t samples, std::uint64_t seed);

}  // namespace ulogic

#endif
