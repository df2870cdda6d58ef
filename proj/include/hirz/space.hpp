#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hirz/cohomology.hpp"
#include "hirz/graded_ring.hpp"

namespace hirz {

/// Vector-bundle class: rank plus total Chern class (constant term 1).
struct BundleClass {
  BundleClass(int rank, CohClass total_chern);

  const RingPtr& ring() const { return total_chern.ring(); }
  CohClass chern(int i) const { return total_chern.component(i); }

  int rank;
  CohClass total_chern;

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.rank == b.rank && a.total_chern == b.total_chern;
  }
};

/// Normal-crossing boundary of an open complement: divisor classes and Omega^1(log D).
struct LogStructure {
  std::vector<CohClass> divisors;
  BundleClass log_cotangent;
};

class SpaceModel;
using SpacePtr = std::shared_ptr<const SpaceModel>;

/// Truncated cohomology-ring model of a smooth projective variety.
class SpaceModel {
 public:
  enum class Kind { Projective, Product, ProjectiveBundle, Hypersurface, Custom };

  struct Parts {
    Kind kind = Kind::Custom;
    std::string key;
    RingPtr ring;
    CohClass tangent_chern;
    CohClass hyperplane;
    std::optional<LogStructure> log;
    int ambient_dimension = 0;  // n for P^n, hypersurfaces in P^n and arrangements
    int hypersurface_degree = 0;
    int hyperplanes = 0;  // arrangement size k
    SpacePtr first;       // product factor / bundle base
    SpacePtr second;      // product factor
    std::optional<BundleClass> bundle;            // E for P(E)
    std::optional<BundleClass> relative_tangent;  // T_pi for P(E)
  };

  explicit SpaceModel(Parts parts);

  Kind kind() const { return p_.kind; }
  int dim() const { return p_.ring->dim(); }
  const RingPtr& ring() const { return p_.ring; }
  /// Canonical description, e.g. "P2", "P1xP1", "Proj(P1;0,1)", "Hyp(3,4)", "Arr(2,3)".
  const std::string& key() const { return p_.key; }

  const CohClass& tangent_chern() const { return p_.tangent_chern; }
  BundleClass tangent_bundle() const { return BundleClass(dim(), p_.tangent_chern); }
  BundleClass cotangent_bundle() const;
  /// Degree-1 class defining O(1); zero when the model has none.
  const CohClass& hyperplane() const { return p_.hyperplane; }
  const std::optional<LogStructure>& log_structure() const { return p_.log; }

  int ambient_dimension() const { return p_.ambient_dimension; }
  int hypersurface_degree() const { return p_.hypersurface_degree; }
  int hyperplanes() const { return p_.hyperplanes; }
  const SpacePtr& first() const { return p_.first; }
  const SpacePtr& second() const { return p_.second; }
  const std::optional<BundleClass>& bundle() const { return p_.bundle; }
  const std::optional<BundleClass>& relative_tangent() const { return p_.relative_tangent; }

  bool is_point() const { return dim() == 0 && ring()->size() == 1; }

 private:
  Parts p_;
};

/// P^n: Q[h]/(h^{n+1}), integral of h^n = 1, c(T) = (1+h)^{n+1}.
SpacePtr make_projective(int n);
inline SpacePtr make_point() { return make_projective(0); }
/// A x B with c(T) = c(TA) (x) c(TB); a point factor is dropped.
SpacePtr make_product(const SpacePtr& a, const SpacePtr& b);
/// P(E) of lines in E: xi^r = -sum c_i(E) xi^{r-i}, T = pi^*T_base + T_pi,
/// c(T_pi) = c(pi^*E (x) O(1)).
SpacePtr make_projective_bundle(const SpacePtr& base, const BundleClass& e);
/// P(O(a_1) + ... + O(a_r)).
SpacePtr make_projective_bundle(const SpacePtr& base, const std::vector<long>& line_degrees);
/// Degree-d hypersurface in P^n, modelled in the restricted ring Q[h]/(h^n) with
/// integral of h^{n-1} = d and c(TX) = (1+h)^{n+1} / (1+dh).
SpacePtr make_hypersurface(int n, int d);
/// P^n with k hyperplanes in general position as boundary; Omega^1(log D) has rank n and
/// c = (1-h)^{n+1-k}.
SpacePtr make_arrangement(int n, int k);

/// Polynomial over a ring's generators.
using GeneratorPoly = std::map<Monomial, Rational>;

/// User-supplied presentation: generators, monomial rewrite rules, integrals of top-degree
/// monomials, tangent Chern class, optional hyperplane class and log structure.
struct CustomSpaceSpec {
  std::string name = "Custom";
  int dim = 0;
  std::vector<Generator> generators;
  std::vector<std::pair<Monomial, GeneratorPoly>> rules;
  std::vector<std::pair<Monomial, Rational>> integrals;
  GeneratorPoly tangent_chern;
  std::optional<GeneratorPoly> hyperplane;
  struct Log {
    int rank = 0;
    GeneratorPoly chern;
    std::vector<GeneratorPoly> divisors;
  };
  std::optional<Log> log;
};

SpacePtr make_custom(const CustomSpaceSpec& spec);

/// O(a) = 1 + a H.
BundleClass line_bundle(const SpaceModel& space, long degree);
BundleClass trivial_bundle(const RingPtr& ring, int rank);

/// c(E (x) L) = sum_i c_i(E) (1 + l)^{r-i} for a line bundle L with first Chern class l.
CohClass twisted_chern(const BundleClass& e, const CohClass& l);

}  // namespace hirz
