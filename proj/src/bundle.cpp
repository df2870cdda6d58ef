#include "hirz/bundle.hpp"

#include "hirz/error.hpp"

namespace hirz {

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
  return BundleClass(a.rank + b.rank, a.total_chern * b.total_chern);
}

BundleClass dual_bundle(const BundleClass& a) {
  CohClass c = a.total_chern;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (a.ring()->degree(i) % 2 == 1) c[i] = -c[i];
  return BundleClass(a.rank, c);
}

BundleClass tensor_product(const BundleClass& a, const BundleClass& b) {
  const CohClass ch = chern_character(a) * chern_character(b);
  const int dim = a.ring()->dim();
  std::vector<CohClass> p;
  p.push_back(ch.component(0));
  for (int m = 1; m <= dim; ++m) p.push_back(ch.component(m).scaled(Rational(factorial(m))));
  return bundle_from_power_sums(a.ring(), a.rank * b.rank, p);
}

BundleClass virtual_difference(const BundleClass& a, const BundleClass& b) {
  if (a.rank < b.rank) throw InvalidParameter("virtual difference has negative rank");
  return BundleClass(a.rank - b.rank, a.total_chern * inverse_unipotent(b.total_chern));
}

BundleClass bundle_combine(BundleOp op, const BundleClass& a, const BundleClass& b) {
  switch (op) {
    case BundleOp::Sum: return whitney_sum(a, b);
    case BundleOp::Tensor: return tensor_product(a, b);
    case BundleOp::Dual: return dual_bundle(a);
  }
  throw InvalidParameter("unknown bundle operation");
}

BundleClass bundle_combine(BundleOp op, const BundleClass& a) {
  if (op != BundleOp::Dual) throw InvalidParameter("binary bundle operation needs two operands");
  return dual_bundle(a);
}

std::vector<CohClass> power_sums(const BundleClass& v) {
  const int dim = v.ring()->dim();
  std::vector<CohClass> c;
  for (int i = 0; i <= dim; ++i) c.push_back(v.chern(i));
  std::vector<CohClass> p;
  p.push_back(CohClass::unit(v.ring()).scaled(Rational(v.rank)));
  for (int m = 1; m <= dim; ++m) {
    // p_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m
    CohClass s = c[static_cast<std::size_t>(m)].scaled(Rational(m % 2 == 1 ? m : -m));
    for (int i = 1; i < m; ++i) {
      CohClass t = c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(m - i)];
      if (i % 2 == 1) s += t;
      else s -= t;
    }
    p.push_back(std::move(s));
  }
  return p;
}

CohClass chern_character(const BundleClass& v) {
  const auto p = power_sums(v);
  CohClass ch = p[0];
  for (std::size_t m = 1; m < p.size(); ++m) ch += p[m].scaled(Rational(1) / Rational(factorial(static_cast<long>(m))));
  return ch;
}

BundleClass bundle_from_power_sums(const RingPtr& ring, int rank, const std::vector<CohClass>& p) {
  const int dim = ring->dim();
  // c_m = (1/m) sum_{i=1}^m (-1)^{i-1} c_{m-i} p_i
  std::vector<CohClass> c;
  c.push_back(CohClass::unit(ring));
  for (int m = 1; m <= dim; ++m) {
    CohClass s(ring);
    for (int i = 1; i <= m; ++i) {
      CohClass t = c[static_cast<std::size_t>(m - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2 == 1) s += t;
      else s -= t;
    }
    c.push_back(s.scaled(Rational(1, m)));
  }
  CohClass total(ring);
  for (const auto& x : c) total += x;
  return BundleClass(rank, total);
}

CohClassY apply_series(const ChernRootSeries& s, const BundleClass& v) {
  const int dim = v.ring()->dim();
  if (s.order < dim) throw InvalidParameter("series order below the dimension of the space");
  const PowerSeries logs = series_log(s.coefficients, dim);
  const auto p = power_sums(v);
  CohClassY exponent(v.ring());
  for (int m = 1; m <= dim; ++m) {
    const LaurentY& l = logs[static_cast<std::size_t>(m)];
    if (l.is_zero()) continue;
    exponent += lift<LaurentY>(p[static_cast<std::size_t>(m)]).scaled(l);
  }
  return exp_nilpotent(exponent);
}

}  // namespace hirz
