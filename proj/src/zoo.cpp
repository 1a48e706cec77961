#include "ulogic/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace ulogic {

namespace {

std::string format_real(double v) {
  if (v == kInf) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::optional<double> parse_real(const std::string& s) {
  if (s == "inf" || s == "INF" || s == "Inf") return kInf;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || v < 0.0 || std::isnan(v)) return std::nullopt;
  return v;
}

// Anchor points first (0, 1/2, 1), then remaining step multiples ascending.
std::vector<double> unit_grid_values(double step) {
  if (!(step > 0.0) || step > 1.0)
    throw std::invalid_argument("grid step must lie in (0, 1]");
  std::vector<double> out = {0.0, 0.5, 1.0};
  auto known = [&out](double v) {
    return std::any_of(out.begin(), out.end(), [v](double w) { return std::abs(w - v) <= kEps; });
  };
  for (double v = step; v < 1.0 - kEps; v += step)
    if (!known(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// [0, 1] with a t-norm, oplus = max, neg = 1 - x.

class TnormUnitAlgebra final : public Algebra {
 public:
  TnormUnitAlgebra(std::string name, Tnorm t) : tnorm_(t) { set_name(std::move(name)); }

  CarrierKind carrier() const override { return CarrierKind::UnitInterval; }
  Element zero() const override { return Element::real(id(), 0.0); }
  Element one() const override { return Element::real(id(), 1.0); }

  Element sample(std::mt19937_64& rng) const override {
    return Element::real(id(), std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  }
  Element sample_unit(std::mt19937_64& rng) const override { return sample(rng); }

  std::vector<Element> unit_grid(double step) const override {
    std::vector<Element> out;
    for (double v : unit_grid_values(step)) out.push_back(Element::real(id(), v));
    return out;
  }

  std::string element_to_string(const Element& a) const override { return format_real(a.as_real()); }

  std::optional<Element> element_from_string(const std::string& s) const override {
    auto v = parse_real(s);
    if (!v || *v > 1.0) return std::nullopt;
    return Element::real(id(), *v);
  }

 protected:
  bool leq_impl(const Element& a, const Element& b) const override {
    return a.as_real() <= b.as_real() + kEps;
  }

  Element star_impl(const Element& a, const Element& b) const override {
    double x = a.as_real(), y = b.as_real();
    double v = 0.0;
    switch (tnorm_) {
      case Tnorm::Minimum: v = std::min(x, y); break;
      case Tnorm::Product: v = x * y; break;
      case Tnorm::Lukasiewicz: v = std::max(0.0, x + y - 1.0); break;
    }
    return Element::real(id(), v);
  }

  Element oplus_impl(const Element& a, const Element& b) const override {
    return Element::real(id(), std::max(a.as_real(), b.as_real()));
  }

  Element neg_impl(const Element& a) const override {
    return Element::real(id(), std::max(0.0, 1.0 - a.as_real()));
  }

  Element residuum_impl(const Element& a, const Element& x) const override {
    double av = a.as_real(), xv = x.as_real();
    switch (tnorm_) {
      case Tnorm::Minimum:
        return Element::real(id(), av <= xv + kEps ? 1.0 : xv);
      case Tnorm::Product:
        return Element::real(id(), av <= xv + kEps ? 1.0 : xv / av);
      case Tnorm::Lukasiewicz:
        return Element::real(id(), std::min(1.0, 1.0 - av + xv));
    }
    return zero();
  }

  // max{c : max(a, c) = b} is b itself whenever a leq b.
  Element max_solution_impl(const Element&, const Element& b) const override { return b; }

 private:
  Tnorm tnorm_;
};

// ---------------------------------------------------------------------------
// [0, inf] with star in {min, product} and oplus in {max, sum}.  The star
// unit is inf for the min variants and 1 for the product variants; the
// product absorbs: 0 * inf = 0 and a * inf = inf for a != 0.

class RayAlgebra final : public Algebra {
 public:
  RayAlgebra(std::string name, RayStar s, RayOplus o) : star_(s), oplus_(o) {
    set_name(std::move(name));
  }

  CarrierKind carrier() const override { return CarrierKind::Ray; }
  Element zero() const override { return Element::real(id(), 0.0); }
  Element one() const override {
    return Element::real(id(), star_ == RayStar::Min ? kInf : 1.0);
  }

  Element sample(std::mt19937_64& rng) const override {
    // Mixture biased toward the unit interval, with mass on (1, 10] and on
    // infinity so that the absorbing cases are exercised.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double pick = u(rng);
    if (pick < 0.6) return Element::real(id(), u(rng));
    if (pick < 0.9)
      return Element::real(id(), std::uniform_real_distribution<double>(1.0, 10.0)(rng));
    return Element::real(id(), kInf);
  }

  Element sample_unit(std::mt19937_64& rng) const override {
    if (star_ == RayStar::Min) return sample(rng);  // the unit interval is the whole ray
    return Element::real(id(), std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  }

  std::vector<Element> unit_grid(double step) const override {
    std::vector<Element> out;
    for (double v : unit_grid_values(step)) out.push_back(Element::real(id(), v));
    if (star_ == RayStar::Min) {
      out.push_back(Element::real(id(), 2.0));
      out.push_back(Element::real(id(), kInf));
    }
    return out;
  }

  std::string element_to_string(const Element& a) const override { return format_real(a.as_real()); }

  std::optional<Element> element_from_string(const std::string& s) const override {
    auto v = parse_real(s);
    if (!v) return std::nullopt;
    return Element::real(id(), *v);
  }

 protected:
  bool leq_impl(const Element& a, const Element& b) const override {
    return a.as_real() <= b.as_real() + kEps;
  }

  Element star_impl(const Element& a, const Element& b) const override {
    double x = a.as_real(), y = b.as_real();
    if (star_ == RayStar::Min) return Element::real(id(), std::min(x, y));
    if (x == 0.0 || y == 0.0) return Element::real(id(), 0.0);
    return Element::real(id(), x * y);
  }

  Element oplus_impl(const Element& a, const Element& b) const override {
    double x = a.as_real(), y = b.as_real();
    return Element::real(id(), oplus_ == RayOplus::Max ? std::max(x, y) : x + y);
  }

  Element neg_impl(const Element& a) const override {
    double x = a.as_real();
    if (star_ == RayStar::Min && x <= kEps) return one();  // neg(0) must reach the unit
    if (x <= 1.0 + kEps) return Element::real(id(), std::max(0.0, 1.0 - x));
    return Element::real(id(), 0.0);
  }

  Element residuum_impl(const Element& a, const Element& x) const override {
    double av = a.as_real(), xv = x.as_real();
    if (star_ == RayStar::Min)
      return Element::real(id(), av <= xv + kEps ? kInf : xv);
    if (av == 0.0) return Element::real(id(), kInf);
    if (xv == kInf) return Element::real(id(), kInf);
    if (av == kInf) return Element::real(id(), 0.0);
    return Element::real(id(), xv / av);
  }

  Element max_solution_impl(const Element& a, const Element& b) const override {
    double av = a.as_real(), bv = b.as_real();
    if (oplus_ == RayOplus::Max) return b;
    if (bv == kInf) return Element::real(id(), kInf);
    return Element::real(id(), std::max(0.0, bv - av));
  }

 private:
  RayStar star_;
  RayOplus oplus_;
};

// ---------------------------------------------------------------------------
// Explicitly tabled finite carrier.  residuum and max_solution are recovered
// by enumeration at construction; entries without a greatest solution stay
// empty and raise AlgebraError when used, which the law harness records as a
// failure of the corresponding law.

class FiniteTableAlgebra final : public Algebra {
 public:
  FiniteTableAlgebra(std::string name, std::shared_ptr<const FiniteTables> t)
      : t_(std::move(t)) {
    set_name(std::move(name));
    const std::size_t n = t_->size;
    residuum_.assign(n, std::vector<std::optional<std::size_t>>(n));
    max_solution_.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        residuum_[a][x] = greatest([&](std::size_t y) { return t_->leq[t_->star[a][y]][x]; });
        if (t_->leq[a][x])
          max_solution_[a][x] = greatest([&](std::size_t c) { return t_->oplus[a][c] == x; });
      }
    }
  }

  CarrierKind carrier() const override { return CarrierKind::Table; }
  Element zero() const override { return Element::index(id(), t_->zero); }
  Element one() const override { return Element::index(id(), t_->one); }

  bool finite_carrier() const override { return true; }

  std::vector<Element> enumerate() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < t_->size; ++i) out.push_back(Element::index(id(), i));
    return out;
  }

  Element sample(std::mt19937_64& rng) const override {
    return Element::index(id(), std::uniform_int_distribution<std::size_t>(0, t_->size - 1)(rng));
  }

  Element sample_unit(std::mt19937_64& rng) const override {
    std::vector<std::size_t> unit;
    for (std::size_t i = 0; i < t_->size; ++i)
      if (t_->leq[i][t_->one]) unit.push_back(i);
    return Element::index(id(), unit[std::uniform_int_distribution<std::size_t>(0, unit.size() - 1)(rng)]);
  }

  std::string element_to_string(const Element& a) const override {
    std::size_t i = a.as_index();
    if (i < t_->labels.size()) return t_->labels[i];
    return std::to_string(i);
  }

  std::optional<Element> element_from_string(const std::string& s) const override {
    for (std::size_t i = 0; i < t_->labels.size(); ++i)
      if (t_->labels[i] == s) return Element::index(id(), i);
    char* end = nullptr;
    unsigned long v = std::strtoul(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || v >= t_->size) return std::nullopt;
    return Element::index(id(), v);
  }

  const FiniteTables& tables() const { return *t_; }

 protected:
  bool leq_impl(const Element& a, const Element& b) const override {
    return t_->leq[a.as_index()][b.as_index()];
  }
  Element star_impl(const Element& a, const Element& b) const override {
    return Element::index(id(), t_->star[a.as_index()][b.as_index()]);
  }
  Element oplus_impl(const Element& a, const Element& b) const override {
    return Element::index(id(), t_->oplus[a.as_index()][b.as_index()]);
  }
  Element neg_impl(const Element& a) const override {
    return Element::index(id(), t_->neg[a.as_index()]);
  }
  Element residuum_impl(const Element& a, const Element& x) const override {
    const auto& r = residuum_[a.as_index()][x.as_index()];
    if (!r) throw AlgebraError("residuum has no greatest solution in '" + name() + "'");
    return Element::index(id(), *r);
  }
  Element max_solution_impl(const Element& a, const Element& b) const override {
    const auto& r = max_solution_[a.as_index()][b.as_index()];
    if (!r) throw AlgebraError("oplus equation has no greatest solution in '" + name() + "'");
    return Element::index(id(), *r);
  }
  std::optional<Element> meet_impl(const Element& a, const Element& b) const override {
    auto glb = greatest([&](std::size_t c) {
      return t_->leq[c][a.as_index()] && t_->leq[c][b.as_index()];
    });
    if (!glb) return std::nullopt;
    return Element::index(id(), *glb);
  }

 private:
  // The greatest index satisfying pred, where "greatest" means it dominates
  // every satisfying index in the table order; nullopt when none dominates.
  template <class Pred>
  std::optional<std::size_t> greatest(Pred pred) const {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < t_->size; ++c) {
      if (!pred(c)) continue;
      if (!best || t_->leq[*best][c])
        best = c;
    }
    if (!best) return std::nullopt;
    for (std::size_t c = 0; c < t_->size; ++c)
      if (pred(c) && !t_->leq[c][*best]) return std::nullopt;
    return best;
  }

  std::shared_ptr<const FiniteTables> t_;
  std::vector<std::vector<std::optional<std::size_t>>> residuum_;
  std::vector<std::vector<std::optional<std::size_t>>> max_solution_;
};

// ---------------------------------------------------------------------------
// Pointwise product of component algebras.

class ProductAlgebra final : public Algebra {
 public:
  ProductAlgebra(std::string name, std::vector<AlgebraPtr> parts) : parts_(std::move(parts)) {
    set_name(std::move(name));
  }

  CarrierKind carrier() const override { return CarrierKind::Tuple; }

  Element zero() const override { return collect([](const Algebra& a) { return a.zero(); }); }
  Element one() const override { return collect([](const Algebra& a) { return a.one(); }); }

  bool finite_carrier() const override {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const AlgebraPtr& p) { return p->finite_carrier(); });
  }

  std::vector<Element> enumerate() const override {
    std::vector<Element::Tuple> rows = {{}};
    for (const AlgebraPtr& p : parts_) {
      std::vector<Element::Tuple> next;
      for (const Element::Tuple& row : rows)
        for (const Element& e : p->enumerate()) {
          Element::Tuple r = row;
          r.push_back(e);
          next.push_back(std::move(r));
        }
      rows = std::move(next);
    }
    std::vector<Element> out;
    out.reserve(rows.size());
    for (Element::Tuple& row : rows) out.push_back(Element::tuple(id(), std::move(row)));
    return out;
  }

  Element sample(std::mt19937_64& rng) const override {
    return collect([&rng](const Algebra& a) { return a.sample(rng); });
  }
  Element sample_unit(std::mt19937_64& rng) const override {
    return collect([&rng](const Algebra& a) { return a.sample_unit(rng); });
  }

  std::vector<Element> unit_grid(double step) const override {
    std::vector<Element::Tuple> rows = {{}};
    for (const AlgebraPtr& p : parts_) {
      std::vector<Element::Tuple> next;
      for (const Element::Tuple& row : rows)
        for (const Element& e : p->unit_grid(step)) {
          Element::Tuple r = row;
          r.push_back(e);
          next.push_back(std::move(r));
        }
      rows = std::move(next);
    }
    std::vector<Element> out;
    out.reserve(rows.size());
    for (Element::Tuple& row : rows) out.push_back(Element::tuple(id(), std::move(row)));
    return out;
  }

  std::string element_to_string(const Element& a) const override {
    const Element::Tuple& t = a.as_tuple();
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ", ";
      out += parts_[i]->element_to_string(t[i]);
    }
    out += ")";
    return out;
  }

  std::vector<AlgebraPtr> component_algebras() const override { return parts_; }

  std::optional<Element> element_from_string(const std::string&) const override {
    return std::nullopt;  // tuples have no single-token form
  }

  Element make(Element::Tuple parts) const {
    if (parts.size() != parts_.size())
      throw AlgebraError("tuple arity mismatch in '" + name() + "'");
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].owner() != parts_[i]->id())
        throw AlgebraError("tuple component does not belong to its component algebra");
    return Element::tuple(id(), std::move(parts));
  }

 protected:
  bool leq_impl(const Element& a, const Element& b) const override {
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (!parts_[i]->leq(ta[i], tb[i])) return false;
    return true;
  }

  Element star_impl(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Algebra& p, const Element& x, const Element& y) { return p.star(x, y); });
  }
  Element oplus_impl(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Algebra& p, const Element& x, const Element& y) { return p.oplus(x, y); });
  }
  Element neg_impl(const Element& a) const override {
    const auto& t = a.as_tuple();
    Element::Tuple out;
    out.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(parts_[i]->neg(t[i]));
    return Element::tuple(id(), std::move(out));
  }
  Element residuum_impl(const Element& a, const Element& x) const override {
    return zip(a, x, [](const Algebra& p, const Element& u, const Element& v) { return p.residuum(u, v); });
  }
  Element max_solution_impl(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Algebra& p, const Element& u, const Element& v) { return p.max_solution(u, v); });
  }
  std::optional<Element> meet_impl(const Element& a, const Element& b) const override {
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    Element::Tuple out;
    out.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto m = parts_[i]->meet(ta[i], tb[i]);
      if (!m) return std::nullopt;
      out.push_back(std::move(*m));
    }
    return Element::tuple(id(), std::move(out));
  }

 private:
  template <class F>
  Element collect(F f) const {
    Element::Tuple out;
    out.reserve(parts_.size());
    for (const AlgebraPtr& p : parts_) out.push_back(f(*p));
    return Element::tuple(id(), std::move(out));
  }

  template <class F>
  Element zip(const Element& a, const Element& b, F f) const {
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    if (ta.size() != parts_.size() || tb.size() != parts_.size())
      throw AlgebraError("tuple arity mismatch in '" + name() + "'");
    Element::Tuple out;
    out.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(f(*parts_[i], ta[i], tb[i]));
    return Element::tuple(id(), std::move(out));
  }

  std::vector<AlgebraPtr> parts_;
};

void validate_tables(const FiniteTables& t) {
  const std::size_t n = t.size;
  if (n == 0) throw AlgebraError("finite table has empty carrier");
  auto square = [n](const auto& m, const char* what) {
    if (m.size() != n) throw AlgebraError(std::string(what) + " table has wrong row count");
    for (const auto& row : m)
      if (row.size() != n) throw AlgebraError(std::string(what) + " table has wrong column count");
  };
  square(t.leq, "leq");
  square(t.star, "star");
  square(t.oplus, "oplus");
  if (t.neg.size() != n) throw AlgebraError("neg table has wrong size");
  auto in_range = [n](std::size_t i) { return i < n; };
  for (const auto& row : t.star)
    for (std::size_t v : row)
      if (!in_range(v)) throw AlgebraError("star table entry out of range");
  for (const auto& row : t.oplus)
    for (std::size_t v : row)
      if (!in_range(v)) throw AlgebraError("oplus table entry out of range");
  for (std::size_t v : t.neg)
    if (!in_range(v)) throw AlgebraError("neg table entry out of range");
  if (!in_range(t.zero) || !in_range(t.one)) throw AlgebraError("constant index out of range");
  if (!t.labels.empty() && t.labels.size() != n)
    throw AlgebraError("labels list has wrong size");
}

AlgebraPtr build(const AlgebraSpec& spec) {
  switch (spec.family) {
    case AlgebraSpec::Family::TnormUnit:
      return std::make_shared<TnormUnitAlgebra>(spec.id, spec.tnorm);
    case AlgebraSpec::Family::Ray:
      return std::make_shared<RayAlgebra>(spec.id, spec.ray_star, spec.ray_oplus);
    case AlgebraSpec::Family::FiniteTable:
      if (!spec.tables) throw AlgebraError("finite table spec without tables");
      validate_tables(*spec.tables);
      return std::make_shared<FiniteTableAlgebra>(spec.id, spec.tables);
    case AlgebraSpec::Family::Product: {
      if (spec.components.size() < 2)
        throw AlgebraError("product spec needs at least two components");
      std::vector<AlgebraPtr> parts;
      parts.reserve(spec.components.size());
      for (const AlgebraSpec& c : spec.components) parts.push_back(build(c));
      return std::make_shared<ProductAlgebra>(spec.id, std::move(parts));
    }
  }
  throw AlgebraError("unknown algebra family");
}

}  // namespace

AlgebraSpec AlgebraSpec::godel_unit() {
  AlgebraSpec s;
  s.family = Family::TnormUnit;
  s.tnorm = Tnorm::Minimum;
  s.id = "godel-unit";
  return s;
}

AlgebraSpec AlgebraSpec::tnorm_unit(Tnorm t) {
  AlgebraSpec s;
  s.family = Family::TnormUnit;
  s.tnorm = t;
  switch (t) {
    case Tnorm::Minimum: s.id = "tnorm-min"; break;
    case Tnorm::Product: s.id = "tnorm-product"; break;
    case Tnorm::Lukasiewicz: s.id = "tnorm-lukasiewicz"; break;
  }
  return s;
}

AlgebraSpec AlgebraSpec::prob_ray() {
  AlgebraSpec s = ray(RayStar::Times, RayOplus::Plus);
  s.id = "prob-ray";
  return s;
}

AlgebraSpec AlgebraSpec::ray(RayStar st, RayOplus op) {
  AlgebraSpec s;
  s.family = Family::Ray;
  s.ray_star = st;
  s.ray_oplus = op;
  if (st == RayStar::Min)
    s.id = op == RayOplus::Max ? "ray-min-max" : "ray-min-plus";
  else
    s.id = op == RayOplus::Max ? "ray-prod-max" : "prob-ray";
  return s;
}

AlgebraSpec AlgebraSpec::boolean2() {
  AlgebraSpec s;
  s.family = Family::FiniteTable;
  s.tables = boolean2_tables();
  s.id = "boolean2";
  return s;
}

AlgebraSpec AlgebraSpec::finite_table(std::string id, std::shared_ptr<const FiniteTables> t) {
  AlgebraSpec s;
  s.family = Family::FiniteTable;
  s.tables = std::move(t);
  s.id = std::move(id);
  return s;
}

AlgebraSpec AlgebraSpec::product(std::vector<AlgebraSpec> components) {
  AlgebraSpec s;
  s.family = Family::Product;
  s.components = std::move(components);
  s.id = "product(";
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) s.id += ",";
    s.id += s.components[i].id;
  }
  s.id += ")";
  return s;
}

std::shared_ptr<const FiniteTables> boolean2_tables() {
  auto t = std::make_shared<FiniteTables>();
  t->size = 2;
  t->leq = {{true, true}, {false, true}};
  t->star = {{0, 0}, {0, 1}};
  t->oplus = {{0, 1}, {1, 1}};
  t->neg = {1, 0};
  t->zero = 0;
  t->one = 1;
  t->labels = {"0", "1"};
  return t;
}

std::shared_ptr<const FiniteTables> heyting3_tables() {
  auto t = std::make_shared<FiniteTables>();
  t->size = 3;
  t->leq = {{true, true, true}, {false, true, true}, {false, false, true}};
  t->star = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  t->oplus = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  t->neg = {2, 0, 0};
  t->zero = 0;
  t->one = 2;
  t->labels = {"0", "half", "1"};
  return t;
}

AlgebraPtr make_algebra(const AlgebraSpec& spec) {
  AlgebraPtr alg = build(spec);
  if (spec.family == AlgebraSpec::Family::FiniteTable ||
      (spec.family == AlgebraSpec::Family::Product && alg->finite_carrier())) {
    LawReport report = check_laws(*alg, 1u << 20, 0);
    if (!report.all_passed()) {
      for (const LawResult& r : report.laws)
        if (!r.passed())
          throw AlgebraError("table algebra '" + spec.id + "' fails " + r.law +
                             (r.detail.empty() ? "" : ": " + r.detail));
    }
  }
  return alg;
}

AlgebraPtr make_algebra_unchecked(const AlgebraSpec& spec) { return build(spec); }

std::vector<AlgebraSpec> catalogue() {
  AlgebraSpec prod = AlgebraSpec::product({AlgebraSpec::godel_unit(), AlgebraSpec::prob_ray()});
  prod.id = "product-godel-prob";
  return {
      AlgebraSpec::godel_unit(),
      AlgebraSpec::prob_ray(),
      AlgebraSpec::ray(RayStar::Min, RayOplus::Max),
      AlgebraSpec::ray(RayStar::Min, RayOplus::Plus),
      AlgebraSpec::ray(RayStar::Times, RayOplus::Max),
      AlgebraSpec::boolean2(),
      AlgebraSpec::tnorm_unit(Tnorm::Minimum),
      AlgebraSpec::tnorm_unit(Tnorm::Product),
      AlgebraSpec::tnorm_unit(Tnorm::Lukasiewicz),
      prod,
      AlgebraSpec::finite_table("heyting3", heyting3_tables()),
  };
}

AlgebraPtr algebra_by_id(const std::string& id) {
  for (const AlgebraSpec& spec : catalogue())
    if (spec.id == id) return make_algebra(spec);
  throw std::invalid_argument("unknown algebra '" + id + "'");
}

}  // namespace ulogic
