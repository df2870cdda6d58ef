#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hirz/error.hpp"
#include "hirz/graded_ring.hpp"
#include "hirz/laurent.hpp"
#include "hirz/rational.hpp"
#include "hirz/rational_function.hpp"

namespace hirz {

/// Element of a GradedRing with coefficients in R (Rational, LaurentY or RationalFunctionY).
template <class R>
class Cohomology {
 public:
  Cohomology() = default;
  explicit Cohomology(RingPtr ring) : ring_(std::move(ring)), c_(ring_->size()) {}
  Cohomology(RingPtr ring, std::vector<R> coordinates) : ring_(std::move(ring)), c_(std::move(coordinates)) {
    if (c_.size() != ring_->size()) throw InvalidParameter("coordinate vector does not match ring size");
  }

  static Cohomology unit(RingPtr ring) { return basis_element(std::move(ring), 0); }
  static Cohomology basis_element(RingPtr ring, std::size_t i, R coefficient = R(1)) {
    Cohomology c(std::move(ring));
    c.c_.at(i) = std::move(coefficient);
    return c;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coordinates() const { return c_; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }
  const R& constant_term() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Homogeneous part of the given degree.
  Cohomology component(int degree) const {
    Cohomology r(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (ring_->degree(i) == degree) r.c_[i] = c_[i];
    return r;
  }

  template <class F>
  auto transform(F f) const -> Cohomology<decltype(f(std::declval<const R&>()))> {
    using T = decltype(f(std::declval<const R&>()));
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Cohomology<T>(ring_, std::move(out));
  }

  Cohomology& operator+=(const Cohomology& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cohomology& operator-=(const Cohomology& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cohomology& operator*=(const Cohomology& o) { return *this = *this * o; }

  friend Cohomology operator+(Cohomology a, const Cohomology& b) { return a += b; }
  friend Cohomology operator-(Cohomology a, const Cohomology& b) { return a -= b; }
  Cohomology operator-() const {
    Cohomology r(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }

  friend Cohomology operator*(const Cohomology& a, const Cohomology& b) {
    a.check(b);
    Cohomology r(a.ring_);
    const GradedRing& ring = *a.ring_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        const auto& terms = ring.product(i, j);
        if (terms.empty()) continue;
        R ab = a.c_[i] * b.c_[j];
        for (const auto& t : terms) r.c_[t.index] += ab * t.coefficient;
      }
    }
    return r;
  }

  Cohomology scaled(const R& s) const {
    Cohomology r(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) r.c_[i] = c_[i] * s;
    return r;
  }

  friend bool operator==(const Cohomology& a, const Cohomology& b) {
    return same_ring(a.ring_, b.ring_) && a.c_ == b.c_;
  }

 private:
  void check(const Cohomology& o) const {
    if (!same_ring(ring_, o.ring_))
      throw InvalidParameter("classes live on different spaces: " + ring_->key() + " vs " + o.ring_->key());
  }

  RingPtr ring_;
  std::vector<R> c_;
};

using CohClass = Cohomology<Rational>;
using CohClassY = Cohomology<LaurentY>;
using CohClassF = Cohomology<RationalFunctionY>;

/// Coefficient change, e.g. Rational -> LaurentY.
template <class To, class From>
Cohomology<To> lift(const Cohomology<From>& c) {
  return c.transform([](const From& x) { return To(x); });
}

template <class R>
R integrate(const Cohomology<R>& c) {
  R sum{};
  const GradedRing& ring = *c.ring();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!ring.integral(i).is_zero() && !c[i].is_zero()) sum += c[i] * ring.integral(i);
  return sum;
}

/// exp(x) for x without constant term (nilpotent, so the series is finite).
template <class R>
Cohomology<R> exp_nilpotent(const Cohomology<R>& x) {
  if (!x.constant_term().is_zero()) throw InvalidParameter("exp of a class with constant term");
  Cohomology<R> sum = Cohomology<R>::unit(x.ring());
  Cohomology<R> term = sum;
  for (int k = 1; k <= x.ring()->dim(); ++k) {
    term = (term * x).scaled(R(Rational(1, k)));
    sum += term;
  }
  return sum;
}

/// log(x) for x with constant term 1.
template <class R>
Cohomology<R> log_unipotent(const Cohomology<R>& x) {
  if (!(x.constant_term() == R(1))) throw InvalidParameter("log of a class with constant term != 1");
  Cohomology<R> g = x - Cohomology<R>::unit(x.ring());
  Cohomology<R> sum(x.ring());
  Cohomology<R> power = Cohomology<R>::unit(x.ring());
  for (int k = 1; k <= x.ring()->dim(); ++k) {
    power = power * g;
    sum += power.scaled(R(Rational(k % 2 == 1 ? 1 : -1, k)));
  }
  return sum;
}

/// 1/x for x with constant term 1.
template <class R>
Cohomology<R> inverse_unipotent(const Cohomology<R>& x) {
  if (!(x.constant_term() == R(1))) throw InvalidParameter("inverse of a class with constant term != 1");
  Cohomology<R> minus_g = Cohomology<R>::unit(x.ring()) - x;
  Cohomology<R> sum = Cohomology<R>::unit(x.ring());
  Cohomology<R> power = sum;
  for (int k = 1; k <= x.ring()->dim(); ++k) {
    power = power * minus_g;
    sum += power;
  }
  return sum;
}

template <class R>
Cohomology<R> power(const Cohomology<R>& x, unsigned k) {
  Cohomology<R> r = Cohomology<R>::unit(x.ring());
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

/// a (x) b in tensor_ring(a.ring(), b.ring()).
template <class R>
Cohomology<R> exterior(const Cohomology<R>& a, const Cohomology<R>& b) {
  RingPtr ring = tensor_ring(a.ring(), b.ring());
  Cohomology<R> r(ring);
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j)
      if (!b[j].is_zero()) r[i * nb + j] = a[i] * b[j];
  }
  return r;
}

}  // namespace hirz
