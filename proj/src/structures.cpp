#include "realstruct/structures.hpp"

#include <stdexcept>

namespace realstruct {

RealSpace::RealSpace(MapFamily generators, PreorderKind kind)
    : generators_(std::move(generators)), kind_(kind) {
  require_admissible(generators_, kind_.pi);
}

RealSpace generator_extend(const RealSpace& space, const DistMap& d) {
  require_same_carrier(space.carrier(), d.carrier(), "generator_extend");
  if (!member(d, space.generators(), space.kind()).holds)
    throw std::invalid_argument("generator_extend: '" + d.name() +
                                "' is not a member of the structure; extending would change it");
  std::vector<DistMap> members = space.generators().members();
  members.push_back(d);
  return RealSpace(MapFamily(space.carrier(), space.generators().name(), std::move(members)),
                   space.kind());
}

RealSpace initial_family(const std::vector<InitialTarget>& targets) {
  if (targets.empty()) throw std::invalid_argument("initial_family: no targets");
  const PreorderKind kind = targets.front().space.kind();
  const CarrierPtr domain = targets.front().map.domain();
  std::vector<DistMap> pulled;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& t = targets[i];
    if (!(t.space.kind() == kind))
      throw std::invalid_argument("initial_family: kind mismatch across targets");
    require_same_carrier(domain, t.map.domain(), "initial_family (domains)");
    require_same_carrier(t.map.codomain(), t.space.carrier(), "initial_family (codomain)");
    for (const auto& g : t.space.generators().members()) {
      DistMap p = pullback(g, t.map);
      pulled.emplace_back(p.carrier(), std::to_string(i) + "/" + g.name(), p.values());
    }
  }
  return RealSpace(MapFamily(domain, "initial", std::move(pulled)), kind);
}

CarrierPtr subset_carrier(const PointSet& subset) {
  if (subset.empty()) throw std::invalid_argument("subset_carrier: empty subset");
  return make_carrier(subset.element_names());
}

PointMap inclusion_map(const PointSet& subset) {
  CarrierPtr sub = subset_carrier(subset);
  return PointMap(sub, subset.carrier, subset.indices());
}

RealSpace subspace_family(const RealSpace& space, const PointSet& subset) {
  require_same_carrier(space.carrier(), subset.carrier, "subspace_family");
  RealSpace initial = initial_family({{inclusion_map(subset), space}});
  // Restriction keeps the original generator names.
  std::vector<DistMap> members;
  const auto& originals = space.generators().members();
  for (std::size_t i = 0; i < originals.size(); ++i)
    members.emplace_back(initial.carrier(), originals[i].name(),
                         initial.generators()[i].values());
  return RealSpace(MapFamily(initial.carrier(), space.generators().name(), std::move(members)),
                   space.kind());
}

CarrierPtr product_carrier(const std::vector<CarrierPtr>& factors, Index max_size) {
  if (factors.empty()) throw std::invalid_argument("product_carrier: no factors");
  Index total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > max_size)
      throw std::invalid_argument("product_carrier: size exceeds the bound of " +
                                  std::to_string(max_size));
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(total));
  for (Index idx = 0; idx < total; ++idx) {
    Index rest = idx;
    std::vector<std::string> parts(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      const Index nk = factors[k]->size();
      parts[k] = factors[k]->name(rest % nk);
      rest /= nk;
    }
    std::string name = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) name += ",";
      name += parts[k];
    }
    name += ")";
    names.push_back(std::move(name));
  }
  return make_carrier(std::move(names));
}

PointMap product_projection(const CarrierPtr& product, const std::vector<CarrierPtr>& factors,
                            std::size_t i) {
  Index stride = 1;
  for (std::size_t k = factors.size(); k-- > i + 1;) stride *= factors[k]->size();
  const Index ni = factors[i]->size();
  std::vector<Index> assignment(static_cast<std::size_t>(product->size()));
  for (Index idx = 0; idx < product->size(); ++idx)
    assignment[static_cast<std::size_t>(idx)] = (idx / stride) % ni;
  return PointMap(product, factors[i], std::move(assignment));
}

RealSpace product_family(const std::vector<RealSpace>& factors, Index max_size) {
  if (factors.empty()) throw std::invalid_argument("product_family: no factors");
  const PreorderKind kind = factors.front().kind();
  std::vector<CarrierPtr> carriers;
  for (const auto& s : factors) {
    if (!(s.kind() == kind))
      throw std::invalid_argument("product_family: kind mismatch across factors");
    carriers.push_back(s.carrier());
  }
  CarrierPtr product = product_carrier(carriers, max_size);
  std::vector<InitialTarget> targets;
  targets.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    targets.push_back({product_projection(product, carriers, i), factors[i]});
  return initial_family(targets);
}

}  // namespace realstruct
