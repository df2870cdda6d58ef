#pragma once

#include <vector>

#include "hirz/series.hpp"
#include "hirz/space.hpp"

namespace hirz {

enum class BundleOp { Sum, Tensor, Dual };

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);
/// c_i -> (-1)^i c_i
BundleClass dual_bundle(const BundleClass& a);
/// Splitting principle: ch(a (x) b) = ch(a) ch(b), Chern classes recovered by Newton.
BundleClass tensor_product(const BundleClass& a, const BundleClass& b);
/// a - b in K-theory; c = c(a)/c(b). Throws InvalidParameter if the rank goes negative.
BundleClass virtual_difference(const BundleClass& a, const BundleClass& b);
/// Dispatches on op; `b` is ignored for Dual.
BundleClass bundle_combine(BundleOp op, const BundleClass& a, const BundleClass& b);
BundleClass bundle_combine(BundleOp op, const BundleClass& a);

/// Power sums p_m of the Chern roots, m = 0..dim (p_0 = rank), via Newton's identities.
std::vector<CohClass> power_sums(const BundleClass& v);
/// ch(V) = rank + sum_m p_m / m!
CohClass chern_character(const BundleClass& v);
/// Inverse of chern_character for a given rank.
BundleClass bundle_from_power_sums(const RingPtr& ring, int rank, const std::vector<CohClass>& p);

/// Product over the Chern roots of s(root), via exp(sum_m l_m p_m) where log s = sum l_m x^m.
/// Requires s.order >= dim of the ring.
CohClassY apply_series(const ChernRootSeries& s, const BundleClass& v);

}  // namespace hirz
