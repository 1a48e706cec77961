#include "doctest.h"
#include "oracles.hpp"
#include "ulogic/algebra.hpp"
#include "ulogic/zoo.hpp"

#include <memory>
#include <random>

using namespace ulogic;

namespace {

Element r(const AlgebraPtr& a, double v) { return Element::real(a->id(), v); }

// Two-element tables with a non-monotone oplus: 0 oplus 1 = 1 but 1 oplus 1
// = 0.  Everything else is the Boolean algebra.
std::shared_ptr<const FiniteTables> broken_oplus_tables() {
  auto t = std::make_shared<FiniteTables>(*boolean2_tables());
  t->oplus = {{0, 1}, {1, 0}};
  return t;
}

}  // namespace

TEST_CASE("order examples across carriers") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->leq(r(ray, 0.4), r(ray, kInf)));
  auto godel = algebra_by_id("godel-unit");
  CHECK_FALSE(godel->leq(r(godel, 0.7), r(godel, 0.3)));
  for (const auto& spec : catalogue()) {
    auto alg = make_algebra(spec);
    CAPTURE(alg->name());
    CHECK(alg->leq(alg->zero(), alg->one()));
  }
}

TEST_CASE("ray star handles the infinity rules") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->star(r(ray, 0), r(ray, kInf)).as_real() == 0.0);
  CHECK(ray->star(r(ray, 2.0), r(ray, kInf)).is_inf());
  CHECK(ray->star(r(ray, kInf), r(ray, 0)).as_real() == 0.0);
}

TEST_CASE("godel star is the minimum") {
  auto godel = algebra_by_id("godel-unit");
  CHECK(godel->star(r(godel, 0.3), r(godel, 0.8)).as_real() == doctest::Approx(0.3));
}

TEST_CASE("oplus examples") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->oplus(r(ray, 0.3), r(ray, 0.4)).as_real() == doctest::Approx(0.7));
  CHECK(ray->oplus(r(ray, 0.3), r(ray, kInf)).is_inf());
  auto godel = algebra_by_id("godel-unit");
  CHECK(godel->oplus(r(godel, 0.3), r(godel, 0.4)).as_real() == doctest::Approx(0.4));
}

TEST_CASE("negation clamps above the unit on the probability ray") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->neg(r(ray, 2.5)).as_real() == 0.0);
  CHECK(ray->neg(r(ray, 0.4)).as_real() == doctest::Approx(0.6));
  CHECK(ray->neg(ray->zero()).as_real() == 1.0);
  auto godel = algebra_by_id("godel-unit");
  CHECK(godel->neg(r(godel, 0.4)).as_real() == doctest::Approx(0.6));
}

TEST_CASE("product operations act pointwise") {
  auto prod = algebra_by_id("product-godel-prob");
  auto parts = prod->component_algebras();
  REQUIRE(parts.size() == 2);
  auto e = Element::tuple(prod->id(), {r(parts[0], 0.4), r(parts[1], 2.5)});
  auto n = prod->neg(e);
  REQUIRE(n.is_tuple());
  CHECK(n.as_tuple()[0].as_real() == doctest::Approx(0.6));
  CHECK(n.as_tuple()[1].as_real() == 0.0);

  auto both = Element::tuple(prod->id(), {r(parts[0], 0.4), r(parts[1], 0.4)});
  auto nb = prod->neg(both);
  CHECK(nb.as_tuple()[0].as_real() == doctest::Approx(0.6));
  CHECK(nb.as_tuple()[1].as_real() == doctest::Approx(0.6));
}

TEST_CASE("residuum examples, cross-checked against the grid oracle") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->residuum(r(ray, 0), r(ray, 0.2)).is_inf());
  CHECK(ray->residuum(r(ray, 0.8), r(ray, 0.4)).as_real() == doctest::Approx(0.5));
  auto ray_candidates = oracle::real_grid(*ray, 10.0, 0.001, true);
  auto best = oracle::grid_residuum(*ray, r(ray, 0.8), r(ray, 0.4), ray_candidates);
  REQUIRE(best.has_value());
  CHECK(best->as_real() == doctest::Approx(0.5).epsilon(0.01));

  auto godel = algebra_by_id("godel-unit");
  CHECK(godel->residuum(r(godel, 0.5), r(godel, 0.3)).as_real() == doctest::Approx(0.3));
  auto unit_candidates = oracle::real_grid(*godel, 1.0, 0.001, false);
  auto gbest = oracle::grid_residuum(*godel, r(godel, 0.5), r(godel, 0.3), unit_candidates);
  REQUIRE(gbest.has_value());
  CHECK(gbest->as_real() == doctest::Approx(0.3).epsilon(0.01));
}

TEST_CASE("godel residuum agrees with the grid oracle on sampled pairs") {
  auto godel = algebra_by_id("godel-unit");
  auto candidates = oracle::real_grid(*godel, 1.0, 0.001, false);
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    auto a = godel->sample(rng);
    auto x = godel->sample(rng);
    auto fast = godel->residuum(a, x);
    auto slow = oracle::grid_residuum(*godel, a, x, candidates);
    REQUIRE(slow.has_value());
    CAPTURE(a.as_real());
    CAPTURE(x.as_real());
    CHECK(slow->as_real() <= fast.as_real() + kEps);
    CHECK(fast.as_real() - slow->as_real() <= 0.0011);
  }
}

TEST_CASE("max_solution examples, cross-checked against the grid oracle") {
  auto godel = algebra_by_id("godel-unit");
  CHECK(godel->max_solution(r(godel, 0.2), r(godel, 0.7)).as_real() == doctest::Approx(0.7));
  auto grid = oracle::real_grid(*godel, 1.0, 0.001, false);
  auto best = oracle::grid_max_solution(*godel, r(godel, 0.2), r(godel, 0.7), grid);
  REQUIRE(best.has_value());
  CHECK(best->as_real() == doctest::Approx(0.7).epsilon(0.01));

  auto ray = algebra_by_id("prob-ray");
  CHECK(ray->max_solution(r(ray, 0.3), r(ray, 1.0)).as_real() == doctest::Approx(0.7));
  CHECK(ray->max_solution(r(ray, 0.3), r(ray, kInf)).is_inf());
}

TEST_CASE("max_solution is maximal among sampled solutions") {
  std::mt19937_64 rng(7);
  for (const auto& id : {"godel-unit", "prob-ray", "ray-min-max"}) {
    auto alg = algebra_by_id(id);
    CAPTURE(id);
    for (int i = 0; i < 300; ++i) {
      auto a = alg->sample(rng);
      auto c = alg->sample(rng);
      auto b = alg->oplus(a, c);
      auto m = alg->max_solution(a, b);
      CHECK(alg->eq(alg->oplus(a, m), b));
      CHECK(alg->leq(c, m));
    }
  }
}

TEST_CASE("adjunction and the derived monotonicity facts hold on samples") {
  std::mt19937_64 rng(99);
  for (const auto& id : {"godel-unit", "prob-ray", "product-godel-prob", "tnorm-lukasiewicz"}) {
    auto alg = algebra_by_id(id);
    CAPTURE(id);
    for (int i = 0; i < 400; ++i) {
      auto a = alg->sample(rng);
      auto x = alg->sample(rng);
      auto y = alg->sample(rng);
      CHECK(alg->leq(y, alg->residuum(a, x)) == alg->leq(alg->star(a, y), x));
      CHECK(alg->leq(x, alg->oplus(x, y)));
      if (alg->leq(x, y)) {
        CHECK(alg->leq(alg->star(x, a), alg->star(y, a)));
        CHECK(alg->leq(alg->residuum(a, x), alg->residuum(a, y)));
        CHECK(alg->leq(alg->residuum(y, a), alg->residuum(x, a)));
      }
      if (alg->leq(alg->one(), alg->residuum(x, y))) CHECK(alg->leq(x, y));
    }
  }
}

TEST_CASE("probability ray adjunction behaves at infinity") {
  auto ray = algebra_by_id("prob-ray");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = ray->sample(rng);
    CHECK(ray->residuum(a, r(ray, kInf)).is_inf());
    auto x = ray->sample(rng);
    CHECK(ray->leq(ray->star(a, ray->residuum(a, x)), x));
  }
}

TEST_CASE("check_laws passes the shipped instances") {
  auto b2 = algebra_by_id("boolean2");
  auto rep = check_laws(*b2, 10000, 7);
  CHECK(rep.exhaustive);
  CHECK(rep.all_passed());

  auto godel = algebra_by_id("godel-unit");
  auto grep = check_laws(*godel, 10000, 7);
  CHECK_FALSE(grep.exhaustive);
  CHECK(grep.all_passed());
  CHECK(grep.laws.size() >= 20);
}

TEST_CASE("check_laws is deterministic in the seed") {
  auto godel = algebra_by_id("godel-unit");
  auto a = check_laws(*godel, 2000, 42);
  auto b = check_laws(*godel, 2000, 42);
  REQUIRE(a.laws.size() == b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    CHECK(a.laws[i].law == b.laws[i].law);
    CHECK(a.laws[i].failures == b.laws[i].failures);
    CHECK(a.laws[i].checked == b.laws[i].checked);
  }
}

TEST_CASE("a non-monotone oplus is caught with a witness") {
  auto alg = make_algebra_unchecked(AlgebraSpec::finite_table("broken", broken_oplus_tables()));
  auto rep = check_laws(*alg, 10000, 7);
  CHECK_FALSE(rep.all_passed());
  bool monotone_failed = false;
  for (const auto& law : rep.laws) {
    if (law.passed()) continue;
    if (law.law.find("oplus") != std::string::npos) {
      monotone_failed = true;
      CHECK(!law.witness.empty());
      CHECK(law.failures > 0);
    }
  }
  CHECK(monotone_failed);
  CHECK_THROWS_AS(make_algebra(AlgebraSpec::finite_table("broken", broken_oplus_tables())),
                  AlgebraError);
}

TEST_CASE("product laws fail when a component is broken") {
  auto spec = AlgebraSpec::product(
      {AlgebraSpec::godel_unit(), AlgebraSpec::finite_table("broken", broken_oplus_tables())});
  auto alg = make_algebra_unchecked(spec);
  CHECK_FALSE(check_laws(*alg, 4000, 7).all_passed());
}

TEST_CASE("cross-algebra elements are rejected") {
  auto godel = algebra_by_id("godel-unit");
  auto ray = algebra_by_id("prob-ray");
  CHECK_THROWS_AS(godel->star(godel->one(), ray->one()), AlgebraError);
  CHECK_THROWS_AS(godel->leq(ray->zero(), godel->one()), AlgebraError);
}

TEST_CASE("elements are nonnegative reals, indices or tuples") {
  auto ray = algebra_by_id("prob-ray");
  CHECK(r(ray, 0.5).is_real());
  CHECK_FALSE(r(ray, 0.5).is_inf());
  CHECK(r(ray, kInf).is_inf());
  auto h3 = algebra_by_id("heyting3");
  auto e = h3->element_from_string("half");
  REQUIRE(e.has_value());
  CHECK(e->is_index());
}
