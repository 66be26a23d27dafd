#pragma once

#include <cstdint>
#include <vector>

#include "realstruct/core.hpp"

namespace realstruct {

/// Per-point principal filters on X x X, each stored by its minimal
/// entourage M_x. The filter at x is the upward closure of M_x; the whole
/// object is the union over x of those filters.
class DeltaLocalFilter {
 public:
  DeltaLocalFilter(CarrierPtr carrier, std::vector<PairSet> minimal_entourages);

  const CarrierPtr& carrier() const { return carrier_; }
  const PairSet& minimal_entourage(Index x) const {
    return entourages_.at(static_cast<std::size_t>(x));
  }
  const std::vector<PairSet>& minimal_entourages() const { return entourages_; }

  /// Well-formed iff (x,x) is in M_x for every x.
  bool well_formed() const;

  /// U belongs to the filter at x iff M_x is a subset of U.
  bool contains_at(Index x, const PairSet& u) const;
  /// U belongs to the union filter iff it belongs to some per-point filter.
  bool contains(const PairSet& u) const;

  friend bool operator==(const DeltaLocalFilter& a, const DeltaLocalFilter& b);

 private:
  CarrierPtr carrier_;
  std::vector<PairSet> entourages_;
};

/// Finite topology stored by its minimal-open assignment: m(x) is the
/// smallest open set containing x. The n minimal opens determine every open
/// (A is open iff m(a) is contained in A for each a in A); the open-set list
/// is materialized only on demand.
class Topology {
 public:
  Topology(CarrierPtr carrier, std::vector<PointSet> minimal_opens);

  const CarrierPtr& carrier() const { return carrier_; }
  const PointSet& minimal_open(Index x) const {
    return minimal_opens_.at(static_cast<std::size_t>(x));
  }
  const std::vector<PointSet>& minimal_opens() const { return minimal_opens_; }

  bool is_open(const PointSet& a) const;

  /// All opens, canonically sorted (by size, then lexicographically by
  /// element indices). Throws when more than max_opens sets would be
  /// produced; carriers wider than 64 elements are rejected.
  std::vector<PointSet> opens(std::size_t max_opens = (std::size_t{1} << 20)) const;

  /// Equality of minimal-open assignments (labeled topologies).
  friend bool operator==(const Topology& a, const Topology& b);

 private:
  CarrierPtr carrier_;
  std::vector<PointSet> minimal_opens_;
};

/// Minimum of the filter generated at x by the prebase
/// {d^-1([0,eps)) : d in P, eps > d(x,x)}. On a finite carrier the prebase
/// sets stabilize, as eps decreases toward d(x,x), to {d <= d(x,x)}; the
/// minimum is the intersection of those stabilized sets over all of P.
/// For an empty family this is all of X x X.
PairSet minimal_entourage(const MapFamily& p, Index x);

/// Assembles minimal_entourage(p, x) for every point.
DeltaLocalFilter delta_local_filter(const MapFamily& p);

/// Minimum of the neighborhood filter at x generated by the prebase
/// {U_{d,eps}(x) : d in P, eps > d(x,x)} with
/// U_{d,eps}(x) = {xi : d(xi,x) < eps and d(x,xi) < eps}.
PointSet minimal_neighborhood(const MapFamily& p, Index x);

/// Topology generated by a family of maps: minimal opens are the least
/// fixpoints of S -> S union (union of minimal neighborhoods over S).
Topology topology_from_family(const MapFamily& p);

/// Topology induced by a well-formed filter: the neighborhood minimum at x
/// is M_x[x] = {xi : (xi,x) and (x,xi) in M_x}. Throws on malformed input.
Topology topology_from_filter(const DeltaLocalFilter& f);

/// The smallest open set containing x.
PointSet minimal_open(const Topology& t, Index x);

/// True iff the family contains the empty set and the whole carrier and is
/// closed under pairwise union and intersection (sufficient on a finite
/// carrier). Duplicates are ignored.
bool is_topology(const std::vector<PointSet>& opens);

/// Canonical subset order: smaller size first, then lexicographic by
/// element index sequence.
bool canonical_subset_less(const PointSet& a, const PointSet& b);

Topology indiscrete_topology(CarrierPtr carrier);
Topology discrete_topology(CarrierPtr carrier);

/// Rebuilds the minimal-open representation from an explicit open-set list;
/// throws if the list is not a topology.
Topology topology_from_opens(CarrierPtr carrier, const std::vector<PointSet>& opens);

}  // namespace realstruct
