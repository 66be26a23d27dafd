#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realstruct/dense.hpp"

namespace realstruct {

/// Finite carrier set. Element names are opaque text; the list order is the
/// canonical index order used by every matrix and characteristic vector.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> elements);

  Index size() const { return static_cast<Index>(names_.size()); }
  const std::string& name(Index i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> find(std::string_view name) const;
  /// Index of a named element; throws if unknown.
  Index index_of(std::string_view name) const;

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> elements);

inline bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b, const char* context);

/// Subset of a carrier as a characteristic vector.
struct PointSet {
  CarrierPtr carrier;
  BoolVector mask;

  bool contains(Index i) const { return mask(i); }
  Index count() const { return static_cast<Index>(mask.count()); }
  bool empty() const { return !mask.any(); }
  std::vector<std::string> element_names() const;
  std::vector<Index> indices() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return same_carrier(a.carrier, b.carrier) && (a.mask == b.mask).all();
  }
};

PointSet empty_point_set(CarrierPtr carrier);
PointSet full_point_set(CarrierPtr carrier);
PointSet singleton(CarrierPtr carrier, Index i);
PointSet point_set_of(CarrierPtr carrier, const std::vector<Index>& elements);

bool subset_of(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);

/// Subset of X x X as a characteristic matrix; entry (i, j) is the pair
/// (x_i, x_j), row = first argument.
struct PairSet {
  CarrierPtr carrier;
  BoolMatrix mask;

  bool contains(Index i, Index j) const { return mask(i, j); }

  friend bool operator==(const PairSet& a, const PairSet& b) {
    return same_carrier(a.carrier, b.carrier) && (a.mask == b.mask).all();
  }
};

PairSet empty_pair_set(CarrierPtr carrier);
PairSet full_pair_set(CarrierPtr carrier);
bool subset_of(const PairSet& a, const PairSet& b);
PairSet set_intersection(const PairSet& a, const PairSet& b);

/// A map d : X x X -> Q+ as an exact rational matrix. Entries are
/// validated nonnegative on construction; values are immutable after that.
class DistMap {
 public:
  DistMap(CarrierPtr carrier, std::string name, RationalMatrix values);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }
  const RationalMatrix& values() const { return values_; }
  const Rational& at(Index i, Index j) const { return values_(i, j); }
  Index size() const { return values_.rows(); }

  friend bool operator==(const DistMap& a, const DistMap& b) {
    return same_carrier(a.carrier_, b.carrier_) && entrywise_equal(a.values_, b.values_);
  }

 private:
  CarrierPtr carrier_;
  std::string name_;
  RationalMatrix values_;
};

DistMap zero_map(CarrierPtr carrier, std::string name = "0");

/// A named finite family of DistMaps over one carrier. May be empty.
class MapFamily {
 public:
  MapFamily(CarrierPtr carrier, std::string name, std::vector<DistMap> members);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }
  const std::vector<DistMap>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const DistMap& operator[](std::size_t i) const { return members_.at(i); }

 private:
  CarrierPtr carrier_;
  std::string name_;
  std::vector<DistMap> members_;
};

enum class Classification { general, weak_pseudo_metric, pseudo_metric };

std::string_view to_string(Classification c);

/// Result of classifying a DistMap: symmetry, triangle inequality over all
/// triples, diagonal zero set, and the strongest applicable label.
struct MapClass {
  bool symmetric = false;
  bool triangle = false;
  PointSet diagonal_zero_points;
  Classification classification = Classification::general;
};

/// Total map between two carriers, stored as an index assignment.
class PointMap {
 public:
  PointMap(CarrierPtr domain, CarrierPtr codomain, std::vector<Index> assignment);

  const CarrierPtr& domain() const { return domain_; }
  const CarrierPtr& codomain() const { return codomain_; }
  const std::vector<Index>& assignment() const { return assignment_; }
  Index operator()(Index i) const { return assignment_.at(static_cast<std::size_t>(i)); }

 private:
  CarrierPtr domain_;
  CarrierPtr codomain_;
  std::vector<Index> assignment_;
};

PointMap identity_map(CarrierPtr carrier);
PointMap constant_map(CarrierPtr domain, CarrierPtr codomain, Index target);

}  // namespace realstruct
