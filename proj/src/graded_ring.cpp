#include "hirz/graded_ring.hpp"

#include <algorithm>

#include "hirz/error.hpp"
#include "hirz/poly_text.hpp"

namespace hirz {

GradedRing::GradedRing(Data data) : data_(std::move(data)) {
  const std::size_t n = data_.basis.size();
  if (n == 0) throw InvalidParameter("graded ring needs at least the unit");
  if (data_.products.size() != n || data_.integrals.size() != n)
    throw InvalidParameter("graded ring tables do not match the basis");
  degrees_.reserve(n);
  for (const auto& m : data_.basis) {
    if (m.size() != data_.generators.size()) throw InvalidParameter("monomial length does not match generators");
    int d = 0;
    for (std::size_t g = 0; g < m.size(); ++g) d += m[g] * data_.generators[g].degree;
    if (d < 0 || d > data_.dim) throw InvalidParameter("basis degree outside [0, dim]");
    degrees_.push_back(d);
  }
  if (degrees_[0] != 0) throw InvalidParameter("basis element 0 must be the unit");
}

std::optional<std::size_t> GradedRing::find(const Monomial& m) const {
  for (std::size_t i = 0; i < data_.basis.size(); ++i)
    if (data_.basis[i] == m) return i;
  return std::nullopt;
}

std::string GradedRing::label(std::size_t i) const {
  std::string out;
  const Monomial& m = data_.basis[i];
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += render_power(data_.generators[g].name, m[g]);
  }
  return out.empty() ? "1" : out;
}

RingPtr truncated_polynomial_ring(int dim, const Rational& top_integral, std::string key, std::string generator) {
  if (dim < 0) throw InvalidParameter("negative dimension");
  GradedRing::Data d;
  d.dim = dim;
  d.key = std::move(key);
  if (dim > 0) d.generators.push_back({std::move(generator), 1});
  const std::size_t n = static_cast<std::size_t>(dim) + 1;
  for (std::size_t i = 0; i < n; ++i) d.basis.push_back(dim > 0 ? Monomial{static_cast<int>(i)} : Monomial{});
  d.products.assign(n, std::vector<std::vector<GradedRing::Term>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) d.products[i][j].push_back({i + j, Rational(1)});
  d.integrals.assign(n, Rational(0));
  d.integrals[n - 1] = top_integral;
  return std::make_shared<const GradedRing>(std::move(d));
}

std::string fresh_generator_name(const std::string& wanted, const std::vector<Generator>& taken) {
  auto used = [&](const std::string& name) {
    return std::any_of(taken.begin(), taken.end(), [&](const Generator& g) { return g.name == name; });
  };
  if (!used(wanted)) return wanted;
  for (int i = 2;; ++i) {
    std::string candidate = wanted + "_" + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

namespace {

bool is_point_ring(const GradedRing& r) { return r.size() == 1 && r.integral(0) == Rational(1); }

}  // namespace

RingPtr tensor_ring(const RingPtr& a, const RingPtr& b) {
  if (is_point_ring(*a)) return b;
  if (is_point_ring(*b)) return a;
  GradedRing::Data d;
  d.dim = a->dim() + b->dim();
  const std::string bkey = b->key().find('x') != std::string::npos ? "(" + b->key() + ")" : b->key();
  d.key = a->key() + "x" + bkey;
  d.generators = a->generators();
  for (const auto& g : b->generators()) d.generators.push_back({fresh_generator_name(g.name, d.generators), g.degree});

  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Monomial m = a->monomial(i);
      m.insert(m.end(), b->monomial(j).begin(), b->monomial(j).end());
      d.basis.push_back(std::move(m));
      d.integrals.push_back(a->integral(i) * b->integral(j));
    }
  d.products.assign(n, std::vector<std::vector<GradedRing::Term>>(n));
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto& out = d.products[i1 * nb + j1][i2 * nb + j2];
          for (const auto& ta : a->product(i1, i2))
            for (const auto& tb : b->product(j1, j2))
              out.push_back({ta.index * nb + tb.index, ta.coefficient * tb.coefficient});
        }
  return std::make_shared<const GradedRing>(std::move(d));
}

}  // namespace hirz
