#include "realstruct/core.hpp"

#include <stdexcept>

namespace realstruct {

MapClass classify_map(const DistMap& d) {
  const Index n = d.size();
  const RationalMatrix& v = d.values();

  MapClass out;
  out.symmetric = is_symmetric_dense(v);

  out.triangle = true;
  for (Index i = 0; i < n && out.triangle; ++i)
    for (Index j = 0; j < n && out.triangle; ++j)
      for (Index k = 0; k < n; ++k)
        if (v(i, k) + v(k, j) < v(i, j)) {
          out.triangle = false;
          break;
        }

  out.diagonal_zero_points = empty_point_set(d.carrier());
  for (Index i = 0; i < n; ++i)
    out.diagonal_zero_points.mask(i) = v(i, i).is_zero();

  const Index zeros = out.diagonal_zero_points.count();
  if (out.symmetric && out.triangle && zeros == n)
    out.classification = Classification::pseudo_metric;
  else if (out.symmetric && out.triangle && zeros > 0)
    out.classification = Classification::weak_pseudo_metric;
  else
    out.classification = Classification::general;
  return out;
}

DistMap scale(const DistMap& d, const Rational& alpha) {
  if (!(Rational(0) < alpha))
    throw std::invalid_argument("scale: factor must be positive, got " + to_string(alpha));
  return DistMap(d.carrier(), to_string(alpha) + "\xC2\xB7" + d.name(), alpha * d.values());
}

DistMap max_combine(const DistMap& d1, const DistMap& d2) {
  require_same_carrier(d1.carrier(), d2.carrier(), "max_combine");
  return DistMap(d1.carrier(), d1.name() + "\xE2\x88\xA8" + d2.name(),
                 d1.values().cwiseMax(d2.values()));
}

bool dominates(const DistMap& d1, const DistMap& d2) {
  require_same_carrier(d1.carrier(), d2.carrier(), "dominates");
  return entrywise_leq(d1.values(), d2.values());
}

DistMap pullback(const DistMap& d, const PointMap& f) {
  require_same_carrier(f.codomain(), d.carrier(), "pullback");
  const Index n = f.domain()->size();
  RationalMatrix v(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) v(i, j) = d.at(f(i), f(j));
  return DistMap(f.domain(), d.name() + "\xE2\x88\x98" "f", std::move(v));
}

DistMap family_max(const MapFamily& family) {
  const Index n = family.carrier()->size();
  RationalMatrix acc = zero_matrix(n);
  for (const auto& d : family.members()) acc = acc.cwiseMax(d.values());
  return DistMap(family.carrier(), "\xE2\x88\xA8" + family.name(), std::move(acc));
}

}  // namespace realstruct
