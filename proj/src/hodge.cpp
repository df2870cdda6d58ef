#include "hirz/hodge.hpp"

#include "hirz/error.hpp"

namespace hirz {

HodgeDiamond::HodgeDiamond(Entries entries) {
  for (auto& [i, c] : entries)
    if (c != 0) h_.emplace(i, std::move(c));
}

HodgeDiamond HodgeDiamond::pure(int weight, Entries entries) {
  HodgeDiamond d(std::move(entries));
  for (const auto& [i, c] : d.h_) {
    if (i.first + i.second != weight)
      throw InvalidParameter("entry (" + std::to_string(i.first) + "," + std::to_string(i.second) +
                             ") does not have weight " + std::to_string(weight));
    if (d.at(i.second, i.first) != c) throw InvalidParameter("pure diamond is not Hodge symmetric");
  }
  d.weight_ = weight;
  return d;
}

HodgeDiamond HodgeDiamond::tate(int n) { return pure(-2 * n, {{{-n, -n}, Integer(1)}}); }

Integer HodgeDiamond::at(int p, int q) const {
  auto it = h_.find({p, q});
  return it == h_.end() ? Integer(0) : it->second;
}

Integer HodgeDiamond::total_dimension() const {
  Integer s = 0;
  for (const auto& [i, c] : h_) s += c;
  return s;
}

void HodgeDiamond::add(const Index& i, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = h_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) h_.erase(it);
  }
}

HodgeDiamond& HodgeDiamond::operator+=(const HodgeDiamond& o) {
  for (const auto& [i, c] : o.h_) add(i, c);
  if (weight_ != o.weight_) weight_.reset();
  return *this;
}

HodgeDiamond& HodgeDiamond::operator-=(const HodgeDiamond& o) {
  for (const auto& [i, c] : o.h_) add(i, -c);
  if (weight_ != o.weight_) weight_.reset();
  return *this;
}

HodgeDiamond operator*(const Integer& n, const HodgeDiamond& a) {
  HodgeDiamond r;
  if (n == 0) return r;
  for (const auto& [i, c] : a.h_) r.h_.emplace(i, n * c);
  r.weight_ = a.weight_;
  return r;
}

HodgeDiamond HodgeDiamond::operator-() const { return Integer(-1) * *this; }

HodgeDiamond tensor(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond r;
  for (const auto& [ia, ca] : a.h_)
    for (const auto& [ib, cb] : b.h_) r.add({ia.first + ib.first, ia.second + ib.second}, ca * cb);
  if (a.weight_ && b.weight_) r.weight_ = *a.weight_ + *b.weight_;
  return r;
}

HodgeDiamond dual(const HodgeDiamond& a) {
  HodgeDiamond r;
  for (const auto& [i, c] : a.h_) r.h_.emplace(HodgeDiamond::Index{-i.first, -i.second}, c);
  if (a.weight_) r.weight_ = -*a.weight_;
  return r;
}

HodgeDiamond tate_twist(const HodgeDiamond& a, int n) {
  HodgeDiamond r;
  for (const auto& [i, c] : a.h_) r.h_.emplace(HodgeDiamond::Index{i.first - n, i.second - n}, c);
  if (a.weight_) r.weight_ = *a.weight_ - 2 * n;
  return r;
}

PolyUV e_polynomial(const HodgeDiamond& a) {
  PolyUV e;
  for (const auto& [i, c] : a.entries()) e += PolyUV::monomial(c, i.first, i.second);
  return e;
}

LaurentY chi_y(const HodgeDiamond& a) {
  std::map<int, Integer> by_p;
  for (const auto& [i, c] : a.entries()) by_p[i.first] += c;
  LaurentY r;
  for (const auto& [p, c] : by_p) r += LaurentY::monomial(Rational(p % 2 == 0 ? c : -c), p);
  return r;
}

std::string render_triples(const HodgeDiamond& a) {
  std::string out = "[";
  bool first = true;
  for (const auto& [i, c] : a.entries()) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(i.first) + "," + std::to_string(i.second) + "," + c.get_str() + "]";
  }
  return out + "]";
}

}  // namespace hirz
