#include "realstruct/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace realstruct {

Carrier::Carrier(std::vector<std::string> elements) : names_(std::move(elements)) {
  if (names_.empty()) throw std::invalid_argument("carrier: must have at least one element");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("carrier: duplicate element name '" + n + "'");
  }
}

std::optional<Index> Carrier::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Index>(i);
  return std::nullopt;
}

Index Carrier::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("carrier: unknown element '" + std::string(name) + "'");
}

CarrierPtr make_carrier(std::vector<std::string> elements) {
  return std::make_shared<const Carrier>(std::move(elements));
}

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b, const char* context) {
  if (!same_carrier(a, b))
    throw std::invalid_argument(std::string(context) + ": carrier mismatch");
}

std::vector<std::string> PointSet::element_names() const {
  std::vector<std::string> out;
  for (Index i = 0; i < mask.size(); ++i)
    if (mask(i)) out.push_back(carrier->name(i));
  return out;
}

std::vector<Index> PointSet::indices() const {
  std::vector<Index> out;
  for (Index i = 0; i < mask.size(); ++i)
    if (mask(i)) out.push_back(i);
  return out;
}

PointSet empty_point_set(CarrierPtr carrier) {
  const Index n = carrier->size();
  return PointSet{std::move(carrier), BoolVector::Constant(n, false)};
}

PointSet full_point_set(CarrierPtr carrier) {
  const Index n = carrier->size();
  return PointSet{std::move(carrier), BoolVector::Constant(n, true)};
}

PointSet singleton(CarrierPtr carrier, Index i) {
  PointSet s = empty_point_set(std::move(carrier));
  s.mask(i) = true;
  return s;
}

PointSet point_set_of(CarrierPtr carrier, const std::vector<Index>& elements) {
  PointSet s = empty_point_set(std::move(carrier));
  for (Index i : elements) s.mask(i) = true;
  return s;
}

bool subset_of(const PointSet& a, const PointSet& b) {
  require_same_carrier(a.carrier, b.carrier, "subset_of");
  return mask_subset(a.mask, b.mask);
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_carrier(a.carrier, b.carrier, "set_union");
  return PointSet{a.carrier, a.mask || b.mask};
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_same_carrier(a.carrier, b.carrier, "set_intersection");
  return PointSet{a.carrier, a.mask && b.mask};
}

PairSet empty_pair_set(CarrierPtr carrier) {
  const Index n = carrier->size();
  return PairSet{std::move(carrier), BoolMatrix::Constant(n, n, false)};
}

PairSet full_pair_set(CarrierPtr carrier) {
  const Index n = carrier->size();
  return PairSet{std::move(carrier), BoolMatrix::Constant(n, n, true)};
}

bool subset_of(const PairSet& a, const PairSet& b) {
  require_same_carrier(a.carrier, b.carrier, "subset_of");
  return mask_subset(a.mask, b.mask);
}

PairSet set_intersection(const PairSet& a, const PairSet& b) {
  require_same_carrier(a.carrier, b.carrier, "set_intersection");
  return PairSet{a.carrier, a.mask && b.mask};
}

DistMap::DistMap(CarrierPtr carrier, std::string name, RationalMatrix values)
    : carrier_(std::move(carrier)), name_(std::move(name)), values_(std::move(values)) {
  const Index n = carrier_->size();
  if (values_.rows() != n || values_.cols() != n)
    throw std::invalid_argument("dist map '" + name_ + "': shape mismatch with carrier");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (values_(i, j).is_negative())
        throw std::invalid_argument("dist map '" + name_ + "': negative value at (" +
                                    carrier_->name(i) + "," + carrier_->name(j) + ")");
}

DistMap zero_map(CarrierPtr carrier, std::string name) {
  const Index n = carrier->size();
  return DistMap(std::move(carrier), std::move(name), zero_matrix(n));
}

MapFamily::MapFamily(CarrierPtr carrier, std::string name, std::vector<DistMap> members)
    : carrier_(std::move(carrier)), name_(std::move(name)), members_(std::move(members)) {
  for (const auto& m : members_)
    require_same_carrier(carrier_, m.carrier(), "map family");
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::general: return "general";
    case Classification::weak_pseudo_metric: return "weak-pseudo-metric";
    case Classification::pseudo_metric: return "pseudo-metric";
  }
  return "general";
}

PointMap::PointMap(CarrierPtr domain, CarrierPtr codomain, std::vector<Index> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (static_cast<Index>(assignment_.size()) != domain_->size())
    throw std::invalid_argument("point map: assignment must be total on the domain");
  for (Index v : assignment_)
    if (v < 0 || v >= codomain_->size())
      throw std::invalid_argument("point map: image outside the codomain");
}

PointMap identity_map(CarrierPtr carrier) {
  std::vector<Index> a(static_cast<std::size_t>(carrier->size()));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Index>(i);
  return PointMap(carrier, carrier, std::move(a));
}

PointMap constant_map(CarrierPtr domain, CarrierPtr codomain, Index target) {
  std::vector<Index> a(static_cast<std::size_t>(domain->size()), target);
  return PointMap(std::move(domain), std::move(codomain), std::move(a));
}

}  // namespace realstruct
