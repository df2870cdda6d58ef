#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hirz/rational.hpp"

namespace hirz {

struct Generator {
  std::string name;
  int degree = 1;  // complex codimension
};

/// Exponent vector over a ring's generators.
using Monomial = std::vector<int>;

/// Finite-dimensional commutative graded Q-algebra given by a monomial basis, structure
/// constants and an integration functional on the top degree. Index 0 is always the unit.
class GradedRing {
 public:
  struct Term {
    std::size_t index;
    Rational coefficient;
  };

  struct Data {
    int dim = 0;
    std::vector<Generator> generators;
    std::vector<Monomial> basis;
    std::vector<std::vector<std::vector<Term>>> products;  // [i][j] -> sparse b_i * b_j
    std::vector<Rational> integrals;                       // per basis element
    std::string key;                                       // equal keys mean equal rings
  };

  explicit GradedRing(Data data);

  int dim() const { return data_.dim; }
  std::size_t size() const { return data_.basis.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const Monomial& monomial(std::size_t i) const { return data_.basis[i]; }
  const std::vector<Generator>& generators() const { return data_.generators; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return data_.products[i][j]; }
  const Rational& integral(std::size_t i) const { return data_.integrals[i]; }
  const std::string& key() const { return data_.key; }

  std::optional<std::size_t> find(const Monomial& m) const;
  /// "1", "h^2", "h*xi"
  std::string label(std::size_t i) const;

 private:
  Data data_;
  std::vector<int> degrees_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->key() == b->key());
}

/// Q[h]/(h^{dim+1}) with the integral of h^dim equal to `top_integral`.
RingPtr truncated_polynomial_ring(int dim, const Rational& top_integral, std::string key,
                                  std::string generator = "h");

/// A (x) B with basis index i * |B| + j; the point ring is a two-sided unit.
RingPtr tensor_ring(const RingPtr& a, const RingPtr& b);

/// Picks a generator name not yet used in `taken`, appending "_2", "_3", ... on collision.
std::string fresh_generator_name(const std::string& wanted, const std::vector<Generator>& taken);

}  // namespace hirz
