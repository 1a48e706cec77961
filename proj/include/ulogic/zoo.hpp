#ifndef ULOGIC_ZOO_HPP
#define ULOGIC_ZOO_HPP

#include <memory>
#include <string>
#include <vector>

#include "ulogic/algebra.hpp"

namespace ulogic {

enum class Tnorm { Minimum, Product, Lukasiewicz };
enum class RayStar { Min, Times };
enum class RayOplus { Max, Plus };

// Explicit operation tables over a finite carrier {0, ..., size-1}.
// residuum and max_solution are not listed; they are recovered by
// enumeration where they exist.
struct FiniteTables {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;         // leq[a][b]
  std::vector<std::vector<std::size_t>> star;
  std::vector<std::vector<std::size_t>> oplus;
  std::vector<std::size_t> neg;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::string> labels;  // optional display names
};

struct AlgebraSpec {
  enum class Family { TnormUnit, Ray, FiniteTable, Product };

  Family family = Family::TnormUnit;
  Tnorm tnorm = Tnorm::Minimum;
  RayStar ray_star = RayStar::Times;
  RayOplus ray_oplus = RayOplus::Plus;
  std::vector<AlgebraSpec> components;
  std::shared_ptr<const FiniteTables> tables;
  std::string id;  // stable identifier, used as the algebra name

  // The unit interval [0,1] with a t-norm, join and 1-x negation.
  static AlgebraSpec godel_unit();
  static AlgebraSpec tnorm_unit(Tnorm t);
  // The extended ray [0, inf] with min or product, join or sum.  The
  // monoid unit is 1 for the product variants and inf for the min variants.
  static AlgebraSpec prob_ray();
  static AlgebraSpec ray(RayStar s, RayOplus o);
  static AlgebraSpec boolean2();
  static AlgebraSpec finite_table(std::string id, std::shared_ptr<const FiniteTables> t);
  static AlgebraSpec product(std::vector<AlgebraSpec> components);
};

// Constructs the algebra for a spec.  Finite tables are checked exhaustively
// against the structure laws first; an AlgebraError describing the first
// failing law is thrown when they do not hold.
AlgebraPtr make_algebra(const AlgebraSpec& spec);

// Same, but skips the law check (used to probe deliberately broken tables).
AlgebraPtr make_algebra_unchecked(const AlgebraSpec& spec);

// The built-in instances, in catalogue order.
std::vector<AlgebraSpec> catalogue();

// Resolves a catalogue identifier; throws std::invalid_argument on unknown
// ids.
AlgebraPtr algebra_by_id(const std::string& id);

// Three-element chain {0, half, 1} with meet, join and the residuated
// negation a -> 0 (so half and 1 both negate to 0).
std::shared_ptr<const FiniteTables> heyting3_tables();
std::shared_ptr<const FiniteTables> boolean2_tables();

}  // namespace ulogic

#endif
