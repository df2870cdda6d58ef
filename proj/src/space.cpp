#include "hirz/space.hpp"

#include <algorithm>
#include <functional>

#include "hirz/error.hpp"

namespace hirz {

BundleClass::BundleClass(int rank_, CohClass total_chern_) : rank(rank_), total_chern(std::move(total_chern_)) {
  if (rank < 0) throw InvalidParameter("bundle rank must be non-negative");
  if (total_chern.constant_term() != Rational(1)) throw InvalidParameter("total Chern class must start with 1");
}

SpaceModel::SpaceModel(Parts parts) : p_(std::move(parts)) {
  if (!p_.ring) throw InvalidParameter("space model without a ring");
  if (!same_ring(p_.tangent_chern.ring(), p_.ring) || p_.tangent_chern.constant_term() != Rational(1))
    throw InvalidParameter("tangent Chern class must be a class on the space starting with 1");
  if (!same_ring(p_.hyperplane.ring(), p_.ring)) throw InvalidParameter("hyperplane class lives on another ring");
  if (p_.log && p_.log->log_cotangent.rank != dim())
    throw InvalidParameter("log cotangent bundle must have rank equal to the dimension");
}

BundleClass SpaceModel::cotangent_bundle() const {
  CohClass c(ring());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = ring()->degree(i) % 2 == 0 ? p_.tangent_chern[i] : -p_.tangent_chern[i];
  return BundleClass(dim(), c);
}

namespace {

CohClass one_plus(const CohClass& x) { return CohClass::unit(x.ring()) + x; }

CohClass hyperplane_of(const RingPtr& ring) {
  return ring->size() > 1 ? CohClass::basis_element(ring, 1) : CohClass(ring);
}

std::string wrap_product_key(const std::string& key) {
  return key.find('x') != std::string::npos ? "(" + key + ")" : key;
}

}  // namespace

SpacePtr make_projective(int n) {
  if (n < 0) throw InvalidParameter("projective dimension must be non-negative");
  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::Projective;
  p.key = "P" + std::to_string(n);
  p.ring = truncated_polynomial_ring(n, Rational(1), p.key);
  p.hyperplane = hyperplane_of(p.ring);
  p.tangent_chern = power(one_plus(p.hyperplane), static_cast<unsigned>(n + 1));
  p.ambient_dimension = n;
  return std::make_shared<const SpaceModel>(std::move(p));
}

SpacePtr make_product(const SpacePtr& a, const SpacePtr& b) {
  if (a->is_point()) return b;
  if (b->is_point()) return a;
  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::Product;
  p.key = a->key() + "x" + wrap_product_key(b->key());
  p.ring = tensor_ring(a->ring(), b->ring());
  p.tangent_chern = exterior(a->tangent_chern(), b->tangent_chern());
  p.hyperplane = exterior(a->hyperplane(), CohClass::unit(b->ring())) +
                 exterior(CohClass::unit(a->ring()), b->hyperplane());
  p.first = a;
  p.second = b;
  return std::make_shared<const SpaceModel>(std::move(p));
}

CohClass twisted_chern(const BundleClass& e, const CohClass& l) {
  CohClass sum(e.ring());
  const CohClass shifted = one_plus(l);
  for (int i = 0; i <= e.rank; ++i) sum += e.chern(i) * power(shifted, static_cast<unsigned>(e.rank - i));
  return sum;
}

namespace {

SpacePtr build_projective_bundle(const SpacePtr& base, const BundleClass& e, std::string key) {
  const int r = e.rank;
  if (r < 1) throw InvalidParameter("projective bundle needs a bundle of rank >= 1");
  if (!same_ring(e.ring(), base->ring())) throw InvalidParameter("bundle does not live on the base");
  const RingPtr& B = base->ring();
  const std::size_t N = B->size();

  // xi^m as coefficients of xi^0..xi^{r-1} over the base, using xi^r = -sum c_i xi^{r-i}.
  std::vector<CohClass> chern;
  for (int i = 0; i <= r; ++i) chern.push_back(e.chern(i));
  std::vector<std::vector<CohClass>> xi_pow;
  for (int m = 0; m <= 2 * r - 2; ++m) {
    std::vector<CohClass> coeff(static_cast<std::size_t>(r), CohClass(B));
    if (m < r) {
      coeff[static_cast<std::size_t>(m)] = CohClass::unit(B);
    } else {
      const auto& prev = xi_pow.back();
      for (int c = 0; c + 1 < r; ++c) coeff[static_cast<std::size_t>(c + 1)] = prev[static_cast<std::size_t>(c)];
      const CohClass& top = prev[static_cast<std::size_t>(r - 1)];
      for (int c = 0; c < r; ++c) coeff[static_cast<std::size_t>(c)] -= chern[static_cast<std::size_t>(r - c)] * top;
    }
    xi_pow.push_back(std::move(coeff));
  }

  GradedRing::Data d;
  d.dim = B->dim() + r - 1;
  d.key = key;
  d.generators = B->generators();
  d.generators.push_back({fresh_generator_name("xi", d.generators), 1});
  const std::size_t n = N * static_cast<std::size_t>(r);
  for (int a = 0; a < r; ++a)
    for (std::size_t i = 0; i < N; ++i) {
      Monomial m = B->monomial(i);
      m.push_back(a);
      d.basis.push_back(std::move(m));
      d.integrals.push_back(a == r - 1 ? B->integral(i) : Rational(0));
    }
  d.products.assign(n, std::vector<std::vector<GradedRing::Term>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a1 = x / N, i1 = x % N, a2 = y / N, i2 = y % N;
      const CohClass base_product = CohClass::basis_element(B, i1) * CohClass::basis_element(B, i2);
      if (base_product.is_zero()) continue;
      for (int c = 0; c < r; ++c) {
        const CohClass coeff = base_product * xi_pow[a1 + a2][static_cast<std::size_t>(c)];
        for (std::size_t l = 0; l < N; ++l)
          if (!coeff[l].is_zero()) d.products[x][y].push_back({static_cast<std::size_t>(c) * N + l, coeff[l]});
      }
    }
  RingPtr ring = std::make_shared<const GradedRing>(std::move(d));

  auto pull = [&](const CohClass& c) {
    CohClass out(ring);
    for (std::size_t i = 0; i < N; ++i) out[i] = c[i];
    return out;
  };
  // For r = 1 the relation reads xi = -c_1(E) and xi is not a basis element.
  const CohClass xi = r > 1 ? CohClass::basis_element(ring, N) : -pull(chern[1]);
  BundleClass pulled_e(r, pull(e.total_chern));
  BundleClass relative(r - 1, twisted_chern(pulled_e, xi));

  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::ProjectiveBundle;
  p.key = std::move(key);
  p.ring = ring;
  p.tangent_chern = pull(base->tangent_chern()) * relative.total_chern;
  p.hyperplane = pull(base->hyperplane());
  p.first = base;
  p.bundle = e;
  p.relative_tangent = relative;
  return std::make_shared<const SpaceModel>(std::move(p));
}

std::string render_chern_key(const BundleClass& e) {
  std::string out = "rank=" + std::to_string(e.rank) + ",c=[";
  for (std::size_t i = 0; i < e.total_chern.size(); ++i) {
    if (i) out += ",";
    out += e.total_chern[i].to_string();
  }
  return out + "]";
}

}  // namespace

SpacePtr make_projective_bundle(const SpacePtr& base, const BundleClass& e) {
  return build_projective_bundle(base, e, "Proj(" + base->key() + ";" + render_chern_key(e) + ")");
}

SpacePtr make_projective_bundle(const SpacePtr& base, const std::vector<long>& line_degrees) {
  if (line_degrees.empty()) throw InvalidParameter("projective bundle needs at least one summand");
  CohClass c = CohClass::unit(base->ring());
  std::string key = "Proj(" + base->key() + ";";
  for (std::size_t i = 0; i < line_degrees.size(); ++i) {
    c = c * line_bundle(*base, line_degrees[i]).total_chern;
    if (i) key += ",";
    key += std::to_string(line_degrees[i]);
  }
  key += ")";
  return build_projective_bundle(base, BundleClass(static_cast<int>(line_degrees.size()), c), key);
}

SpacePtr make_hypersurface(int n, int d) {
  if (n < 2 || d < 1) throw InvalidParameter("hypersurface needs n >= 2 and d >= 1");
  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::Hypersurface;
  p.key = "Hyp(" + std::to_string(n) + "," + std::to_string(d) + ")";
  p.ring = truncated_polynomial_ring(n - 1, Rational(d), p.key);
  p.hyperplane = hyperplane_of(p.ring);
  p.tangent_chern = power(one_plus(p.hyperplane), static_cast<unsigned>(n + 1)) *
                    inverse_unipotent(one_plus(p.hyperplane.scaled(Rational(d))));
  p.ambient_dimension = n;
  p.hypersurface_degree = d;
  return std::make_shared<const SpaceModel>(std::move(p));
}

SpacePtr make_arrangement(int n, int k) {
  if (n < 1 || k < 0 || k > n + 1) throw InvalidParameter("arrangement needs n >= 1 and 0 <= k <= n+1");
  SpacePtr pn = make_projective(n);
  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::Projective;
  p.key = "Arr(" + std::to_string(n) + "," + std::to_string(k) + ")";
  p.ring = pn->ring();
  p.hyperplane = pn->hyperplane();
  p.tangent_chern = pn->tangent_chern();
  p.ambient_dimension = n;
  p.hyperplanes = k;
  LogStructure log{std::vector<CohClass>(static_cast<std::size_t>(k), p.hyperplane),
                   BundleClass(n, power(CohClass::unit(p.ring) - p.hyperplane, static_cast<unsigned>(n + 1 - k)))};
  p.log = std::move(log);
  return std::make_shared<const SpaceModel>(std::move(p));
}

BundleClass line_bundle(const SpaceModel& space, long degree) {
  return BundleClass(1, CohClass::unit(space.ring()) + space.hyperplane().scaled(Rational(degree)));
}

BundleClass trivial_bundle(const RingPtr& ring, int rank) { return BundleClass(rank, CohClass::unit(ring)); }

// ---------------------------------------------------------------------------
// Custom presentations

namespace {

int monomial_degree(const Monomial& m, const std::vector<Generator>& gens) {
  int d = 0;
  for (std::size_t g = 0; g < m.size(); ++g) d += m[g] * gens[g].degree;
  return d;
}

bool divides(const Monomial& lhs, const Monomial& m) {
  for (std::size_t g = 0; g < m.size(); ++g)
    if (lhs[g] > m[g]) return false;
  return true;
}

class Presentation {
 public:
  explicit Presentation(const CustomSpaceSpec& spec) : spec_(spec) {
    for (const auto& g : spec_.generators)
      if (g.degree < 1) throw InvalidParameter("generator '" + g.name + "' must have positive degree");
    for (const auto& [lhs, rhs] : spec_.rules) {
      if (lhs.size() != spec_.generators.size()) throw InvalidParameter("rule monomial has wrong length");
      const int d = monomial_degree(lhs, spec_.generators);
      if (d == 0) throw InvalidParameter("rule left-hand side must not be constant");
      for (const auto& [m, c] : rhs)
        if (!c.is_zero() && monomial_degree(m, spec_.generators) != d)
          throw InvalidParameter("relation is not homogeneous");
    }
  }

  GeneratorPoly reduce(GeneratorPoly p) const {
    for (int iter = 0; iter < 100000; ++iter) {
      bool changed = false;
      for (auto it = p.begin(); it != p.end();) {
        if (it->second.is_zero() || monomial_degree(it->first, spec_.generators) > spec_.dim) {
          it = p.erase(it);
          continue;
        }
        ++it;
      }
      for (auto it = p.begin(); it != p.end() && !changed; ++it) {
        for (const auto& [lhs, rhs] : spec_.rules) {
          if (!divides(lhs, it->first)) continue;
          Monomial quotient = it->first;
          for (std::size_t g = 0; g < quotient.size(); ++g) quotient[g] -= lhs[g];
          const Rational c = it->second;
          p.erase(it);
          for (const auto& [m, rc] : rhs) {
            Monomial prod = m;
            for (std::size_t g = 0; g < prod.size(); ++g) prod[g] += quotient[g];
            p[prod] += c * rc;
          }
          changed = true;
          break;
        }
        if (changed) break;
      }
      if (!changed) {
        std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
        return p;
      }
    }
    throw InvalidParameter("rewrite rules do not terminate");
  }

  std::vector<Monomial> standard_monomials() const {
    std::vector<Monomial> out;
    Monomial m(spec_.generators.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int budget) {
      if (g == m.size()) {
        for (const auto& [lhs, rhs] : spec_.rules)
          if (divides(lhs, m)) return;
        out.push_back(m);
        return;
      }
      for (int e = 0; e * spec_.generators[g].degree <= budget; ++e) {
        m[g] = e;
        rec(g + 1, budget - e * spec_.generators[g].degree);
      }
      m[g] = 0;
    };
    rec(0, spec_.dim);
    std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      int da = monomial_degree(a, spec_.generators), db = monomial_degree(b, spec_.generators);
      if (da != db) return da < db;
      return a > b;
    });
    return out;
  }

 private:
  const CustomSpaceSpec& spec_;
};

std::string poly_key(const GeneratorPoly& p) {
  std::string out;
  for (const auto& [m, c] : p) {
    out += c.to_string() + "*";
    for (int e : m) out += std::to_string(e) + ".";
    out += "+";
  }
  return out;
}

/// Rings are compared by key, so the key spells out the whole presentation.
std::string presentation_key(const CustomSpaceSpec& spec) {
  std::string key = spec.name + "{dim=" + std::to_string(spec.dim) + ";gens=";
  for (const auto& g : spec.generators) key += g.name + ":" + std::to_string(g.degree) + ",";
  key += ";rels=";
  for (const auto& [lhs, rhs] : spec.rules) key += poly_key({{lhs, Rational(1)}}) + "=" + poly_key(rhs) + ",";
  key += ";ints=";
  for (const auto& [m, v] : spec.integrals) key += poly_key({{m, Rational(1)}}) + "=" + v.to_string() + ",";
  return key + "}";
}

}  // namespace

SpacePtr make_custom(const CustomSpaceSpec& spec) {
  if (spec.dim < 0) throw InvalidParameter("negative dimension");
  Presentation pres(spec);
  GradedRing::Data d;
  d.dim = spec.dim;
  d.generators = spec.generators;
  d.basis = pres.standard_monomials();
  d.key = presentation_key(spec);
  const std::vector<Monomial> basis = d.basis;  // d is moved into the ring below
  const std::size_t n = basis.size();
  auto index_of = [&](const Monomial& m) -> std::size_t {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw InvalidParameter("normal form left the standard basis");
    return static_cast<std::size_t>(it - basis.begin());
  };
  auto coordinates = [&](const GeneratorPoly& poly) {
    std::vector<Rational> c(n);
    for (const auto& [m, v] : pres.reduce(poly)) c[index_of(m)] += v;
    return c;
  };

  d.products.assign(n, std::vector<std::vector<GradedRing::Term>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m = basis[i];
      for (std::size_t g = 0; g < m.size(); ++g) m[g] += basis[j][g];
      auto c = coordinates({{m, Rational(1)}});
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) d.products[i][j].push_back({k, c[k]});
    }

  d.integrals.assign(n, Rational(0));
  bool any = false;
  for (const auto& [m, value] : spec.integrals) {
    if (monomial_degree(m, spec.generators) != spec.dim)
      throw InvalidParameter("integrals are only given on top-degree monomials");
    auto c = coordinates({{m, Rational(1)}});
    std::size_t hits = 0, where = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!c[k].is_zero()) {
        ++hits;
        where = k;
      }
    if (hits != 1) throw InvalidParameter("integral monomial does not reduce to a single basis element");
    d.integrals[where] = value / c[where];
    any = any || !value.is_zero();
  }
  if (!any) {
    if (spec.dim != 0 || !spec.integrals.empty()) throw InvalidParameter("integration functional is zero");
    d.integrals[0] = Rational(1);
  }
  RingPtr ring = std::make_shared<const GradedRing>(std::move(d));

  auto as_class = [&](const GeneratorPoly& poly) { return CohClass(ring, coordinates(poly)); };
  SpaceModel::Parts p;
  p.kind = SpaceModel::Kind::Custom;
  p.key = spec.name;
  p.ring = ring;
  p.tangent_chern = as_class(spec.tangent_chern);
  if (spec.hyperplane) {
    p.hyperplane = as_class(*spec.hyperplane);
  } else {
    p.hyperplane = CohClass(ring);
    for (std::size_t g = 0; g < spec.generators.size(); ++g)
      if (spec.generators[g].degree == 1) {
        Monomial m(spec.generators.size(), 0);
        m[g] = 1;
        p.hyperplane = as_class({{m, Rational(1)}});
        break;
      }
  }
  if (spec.log) {
    if (spec.log->rank != spec.dim) throw InvalidParameter("log cotangent bundle must have rank equal to the dimension");
    std::vector<CohClass> divisors;
    for (const auto& dpoly : spec.log->divisors) divisors.push_back(as_class(dpoly));
    p.log = LogStructure{std::move(divisors), BundleClass(spec.log->rank, as_class(spec.log->chern))};
  }
  return std::make_shared<const SpaceModel>(std::move(p));
}

}  // namespace hirz
