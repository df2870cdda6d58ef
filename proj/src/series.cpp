#include "hirz/series.hpp"

#include "hirz/error.hpp"
#include "hirz/poly_text.hpp"

namespace hirz {

namespace {

LaurentY at(const PowerSeries& s, int j) {
  return j < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(j)] : LaurentY();
}

}  // namespace

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b, int order) {
  PowerSeries r(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return r;
}

PowerSeries series_inverse(const PowerSeries& a, int order) {
  const LaurentY a0 = at(a, 0);
  if (!a0.is_constant() || a0.is_zero()) throw InvalidParameter("series constant term is not a unit");
  const Rational inv0 = Rational(1) / a0.coefficient(0);
  PowerSeries r(static_cast<std::size_t>(order) + 1);
  r[0] = LaurentY(inv0);
  for (int n = 1; n <= order; ++n) {
    LaurentY s;
    for (int k = 1; k <= n; ++k) s += at(a, k) * r[static_cast<std::size_t>(n - k)];
    r[static_cast<std::size_t>(n)] = -s * inv0;
  }
  return r;
}

PowerSeries series_log(const PowerSeries& a, int order) {
  if (!(at(a, 0) == LaurentY(1))) throw InvalidParameter("log needs constant term 1");
  // (log a)' = a'/a
  PowerSeries derivative(static_cast<std::size_t>(order) + 1);
  for (int j = 1; j <= order; ++j) derivative[static_cast<std::size_t>(j - 1)] = at(a, j) * Rational(j);
  PowerSeries q = series_multiply(derivative, series_inverse(a, order), order);
  PowerSeries r(static_cast<std::size_t>(order) + 1);
  for (int j = 1; j <= order; ++j) r[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)] * Rational(1, j);
  return r;
}

PowerSeries series_exp(const PowerSeries& a, int order) {
  if (!at(a, 0).is_zero()) throw InvalidParameter("exp needs constant term 0");
  // r' = a' r
  PowerSeries r(static_cast<std::size_t>(order) + 1);
  r[0] = LaurentY(1);
  for (int n = 1; n <= order; ++n) {
    LaurentY s;
    for (int k = 1; k <= n; ++k) s += at(a, k) * Rational(k) * r[static_cast<std::size_t>(n - k)];
    r[static_cast<std::size_t>(n)] = s * Rational(1, n);
  }
  return r;
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Chern: return "chern";
    case SeriesKind::Todd: return "todd";
    case SeriesKind::LClass: return "lclass";
    case SeriesKind::Hirzebruch: return "hirzebruch";
  }
  return "?";
}

namespace {

// x/(1-e^{-x}) = 1 / sum_k (-1)^k x^k/(k+1)!
PowerSeries todd_series(int order) {
  PowerSeries d(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k)
    d[static_cast<std::size_t>(k)] = LaurentY(Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k + 1)));
  return series_inverse(d, order);
}

}  // namespace

ChernRootSeries genus_series(SeriesKind kind, int order) {
  if (order < 1) throw InvalidParameter("series order must be at least 1");
  ChernRootSeries s;
  s.kind = kind;
  s.order = order;
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  switch (kind) {
    case SeriesKind::Chern:
      s.coefficients.assign(n, LaurentY());
      s.coefficients[0] = LaurentY(1);
      s.coefficients[1] = LaurentY(1);
      break;
    case SeriesKind::Todd:
      s.coefficients = todd_series(order);
      break;
    case SeriesKind::LClass: {
      // x cosh x / sinh x
      PowerSeries sinh_over_x(n), cosh(n);
      for (int k = 0; k <= order; ++k) {
        if (k % 2 == 0) {
          sinh_over_x[static_cast<std::size_t>(k)] = LaurentY(Rational(1) / Rational(factorial(k + 1)));
          cosh[static_cast<std::size_t>(k)] = LaurentY(Rational(1) / Rational(factorial(k)));
        }
      }
      s.coefficients = series_multiply(cosh, series_inverse(sinh_over_x, order), order);
      break;
    }
    case SeriesKind::Hirzebruch: {
      // todd evaluated at x(1+y), minus xy
      PowerSeries t = todd_series(order);
      for (int k = 0; k <= order; ++k)
        t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)] * one_plus_y().pow(static_cast<unsigned>(k));
      t[1] -= LaurentY::y();
      s.coefficients = std::move(t);
      break;
    }
  }
  return s;
}

ChernRootSeries specialize(const ChernRootSeries& s, const Rational& y) {
  ChernRootSeries r = s;
  for (auto& c : r.coefficients) c = LaurentY(c.evaluate(y));
  return r;
}

std::string render(const ChernRootSeries& s) {
  std::string out;
  for (int j = 0; j <= s.order; ++j) {
    const LaurentY& c = s[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    std::string mono = render_power("x", j);
    std::string coeff = render(c);
    std::string term;
    if (c.is_constant()) {
      term = render_terms({{c.coefficient(0), mono}});
    } else {
      term = "(" + coeff + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hirz
