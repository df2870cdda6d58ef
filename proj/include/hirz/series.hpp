#pragma once

#include <string>
#include <vector>

#include "hirz/laurent.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// Truncated power series in x, coefficient j at index j.
using PowerSeries = std::vector<LaurentY>;

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b, int order);
/// Requires a non-zero rational constant term.
PowerSeries series_inverse(const PowerSeries& a, int order);
/// Requires constant term 1.
PowerSeries series_log(const PowerSeries& a, int order);
/// Requires constant term 0.
PowerSeries series_exp(const PowerSeries& a, int order);

enum class SeriesKind { Chern, Todd, LClass, Hirzebruch };

std::string to_string(SeriesKind kind);

/// Normalized per-root series f(x) = 1 + a_1 x + ... of a multiplicative class.
struct ChernRootSeries {
  SeriesKind kind = SeriesKind::Chern;
  int order = 0;
  std::vector<LaurentY> coefficients;  // order + 1 entries

  const LaurentY& operator[](std::size_t j) const { return coefficients[j]; }
};

/// chern: 1 + x; todd: x/(1-e^{-x}); lclass: x/tanh x;
/// hirzebruch: x(1+y)/(1-e^{-x(1+y)}) - xy.
ChernRootSeries genus_series(SeriesKind kind, int order);

/// Evaluates every coefficient at a rational y.
ChernRootSeries specialize(const ChernRootSeries& s, const Rational& y);

/// "1 + 1/2*x + 1/12*x^2" with LaurentY coefficients parenthesised when needed.
std::string render(const ChernRootSeries& s);

}  // namespace hirz
