#pragma once

#include "realstruct/preorders.hpp"

namespace realstruct {

/// Intensional real space: a carrier together with a generating family and a
/// preorder kind. The represented structure is the set of maps absorbed by
/// the generators; membership is decided by member(), never materialized.
class RealSpace {
 public:
  RealSpace(MapFamily generators, PreorderKind kind);

  const CarrierPtr& carrier() const { return generators_.carrier(); }
  const MapFamily& generators() const { return generators_; }
  const PreorderKind& kind() const { return kind_; }

 private:
  MapFamily generators_;
  PreorderKind kind_;
};

/// Adds a generator that is already a member of the structure; the
/// represented structure is unchanged. Refuses non-members.
RealSpace generator_extend(const RealSpace& space, const DistMap& d);

struct InitialTarget {
  PointMap map;     // X -> Y_i
  RealSpace space;  // over Y_i
};

/// Initial space over the shared domain of the target maps: generators are
/// the pullbacks of every target generator; the kind is inherited. All
/// targets must agree on the kind and on the domain carrier.
RealSpace initial_family(const std::vector<InitialTarget>& targets);

/// Carrier made of the selected elements, in carrier order.
CarrierPtr subset_carrier(const PointSet& subset);

/// The inclusion of the subset carrier into the full one.
PointMap inclusion_map(const PointSet& subset);

/// Structure induced on a nonempty subset: the initial space for the
/// inclusion map, i.e. every generator matrix restricted to the subset.
RealSpace subspace_family(const RealSpace& space, const PointSet& subset);

/// Cartesian product carrier; element names are tuples "(a,u,...)" in
/// row-major order, first factor outermost.
CarrierPtr product_carrier(const std::vector<CarrierPtr>& factors, Index max_size);

/// Projection from the product carrier onto factor i.
PointMap product_projection(const CarrierPtr& product,
                            const std::vector<CarrierPtr>& factors, std::size_t i);

/// Product space: the initial space for the projections. The product carrier
/// size is capped (default 64).
RealSpace product_family(const std::vector<RealSpace>& factors, Index max_size = 64);

}  // namespace realstruct
