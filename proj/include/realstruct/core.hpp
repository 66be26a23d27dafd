#pragma once

#include "realstruct/types.hpp"

namespace realstruct {

/// Classifies a map: symmetry, the triangle inequality
/// d(x1,x2) <= d(x1,x) + d(x,x2) over all triples, the diagonal zero set,
/// and the strongest label (pseudo-metric > weak-pseudo-metric > general).
/// A weak pseudo-metric must vanish at at least one diagonal point; a
/// pseudo-metric vanishes on the whole diagonal.
MapClass classify_map(const DistMap& d);

/// Entrywise product alpha * d. Requires alpha > 0; name becomes "alpha·name".
DistMap scale(const DistMap& d, const Rational& alpha);

/// Entrywise maximum of two maps over the same carrier.
DistMap max_combine(const DistMap& d1, const DistMap& d2);

/// True iff every entry of d1 is <= the corresponding entry of d2.
bool dominates(const DistMap& d1, const DistMap& d2);

/// Pullback along f : X -> Y of a map over Y: result(x1,x2) = d(f(x1),f(x2)).
DistMap pullback(const DistMap& d, const PointMap& f);

/// Entrywise maximum over all members; the constant-zero map for an empty
/// family (the neutral element of max).
DistMap family_max(const MapFamily& family);

}  // namespace realstruct
