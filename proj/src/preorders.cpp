#include "realstruct/preorders.hpp"

#include <stdexcept>

namespace realstruct {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::topological: return "topological";
    case Kind::delta_local: return "delta-local";
    case Kind::strong_delta_local: return "strong-delta-local";
    case Kind::lipschitz: return "lipschitz";
    case Kind::uniform: return "uniform";
    case Kind::quasi_lipschitz: return "quasi-lipschitz";
    case Kind::uniform_quasi_lipschitz: return "uniform-quasi-lipschitz";
    case Kind::local_quasi_lipschitz: return "local-quasi-lipschitz";
  }
  return "topological";
}

std::string_view to_string(PiDomain pi) {
  switch (pi) {
    case PiDomain::all_maps: return "all";
    case PiDomain::weak_pseudo_metrics: return "weak";
    case PiDomain::pseudo_metrics: return "pseudo";
  }
  return "all";
}

Kind kind_from_string(std::string_view s) {
  for (Kind k : {Kind::topological, Kind::delta_local, Kind::strong_delta_local, Kind::lipschitz,
                 Kind::uniform, Kind::quasi_lipschitz, Kind::uniform_quasi_lipschitz,
                 Kind::local_quasi_lipschitz})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown preorder kind '" + std::string(s) + "'");
}

PiDomain pi_from_string(std::string_view s) {
  for (PiDomain pi : {PiDomain::all_maps, PiDomain::weak_pseudo_metrics, PiDomain::pseudo_metrics})
    if (to_string(pi) == s) return pi;
  throw std::invalid_argument("unknown pi domain '" + std::string(s) + "'");
}

namespace {

bool requires_pseudo(Kind k) {
  return k == Kind::uniform || k == Kind::quasi_lipschitz ||
         k == Kind::uniform_quasi_lipschitz || k == Kind::local_quasi_lipschitz;
}

}  // namespace

PiDomain default_pi(Kind k) {
  return requires_pseudo(k) ? PiDomain::pseudo_metrics : PiDomain::all_maps;
}

PreorderKind make_preorder_kind(Kind k, PiDomain pi) {
  if (requires_pseudo(k) && pi != PiDomain::pseudo_metrics)
    throw std::invalid_argument("kind '" + std::string(to_string(k)) +
                                "' requires pi = pseudo-metrics");
  return PreorderKind{k, pi};
}

bool admissible(const MapClass& c, PiDomain pi) {
  switch (pi) {
    case PiDomain::all_maps: return true;
    case PiDomain::weak_pseudo_metrics:
      return c.classification != Classification::general;
    case PiDomain::pseudo_metrics:
      return c.classification == Classification::pseudo_metric;
  }
  return false;
}

void require_admissible(const DistMap& d, PiDomain pi) {
  if (!admissible(classify_map(d), pi))
    throw std::invalid_argument("map '" + d.name() + "' is not admissible for pi = " +
                                std::string(to_string(pi)));
}

void require_admissible(const MapFamily& family, PiDomain pi) {
  if (pi == PiDomain::all_maps) return;
  for (const auto& d : family.members()) require_admissible(d, pi);
}

namespace {

std::vector<std::size_t> full_subfamily(const MapFamily& family) {
  std::vector<std::size_t> ids(family.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

// Largest ratio d'(p)/D(p) over pairs with D(p) > 0 and all absorbed maps;
// 1 when there is no positive pair (any positive factor works then).
Rational lipschitz_alpha(const MapFamily& absorbed, const DistMap& big) {
  Rational alpha(0);
  const Index n = big.size();
  for (const auto& d : absorbed.members())
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (!big.at(i, j).is_zero()) alpha = max(alpha, d.at(i, j) / big.at(i, j));
  if (alpha.is_zero()) alpha = Rational(1);
  return alpha;
}

// Half the smallest positive value of the map; 1 when it has none.
Rational half_min_positive(const DistMap& d) {
  std::optional<Rational> smallest;
  const Index n = d.size();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Rational& v = d.at(i, j);
      if (!v.is_zero() && (!smallest || v < *smallest)) smallest = v;
    }
  if (!smallest) return Rational(1);
  return *smallest / 2;
}

std::optional<PairFailure> find_zero_violation(const MapFamily& absorbed, const DistMap& big,
                                               const PairSet& on,
                                               std::optional<Index> at_point = std::nullopt) {
  const Index n = big.size();
  for (const auto& d : absorbed.members())
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (on.contains(i, j) && big.at(i, j).is_zero() && !d.at(i, j).is_zero())
          return PairFailure{d.name(), i, j, at_point};
  return std::nullopt;
}

}  // namespace

Absorber::Absorber(const PreorderKind& kind, MapFamily absorbing)
    : kind_(kind), absorbing_(std::move(absorbing)) {
  require_admissible(absorbing_, kind_.pi);
  switch (kind_.kind) {
    case Kind::topological:
      topology_ = topology_from_family(absorbing_);
      break;
    case Kind::delta_local:
    case Kind::strong_delta_local:
      for (Index x = 0; x < absorbing_.carrier()->size(); ++x)
        entourages_.push_back(minimal_entourage(absorbing_, x));
      break;
    case Kind::lipschitz:
    case Kind::uniform:
    case Kind::quasi_lipschitz:
    case Kind::uniform_quasi_lipschitz:
      family_maximum_ = family_max(absorbing_);
      break;
    case Kind::local_quasi_lipschitz:
      family_maximum_ = family_max(absorbing_);
      topology_ = topology_from_family(absorbing_);
      break;
  }
}

AbsorptionResult Absorber::absorbs(const MapFamily& absorbed) const {
  require_same_carrier(absorbed.carrier(), absorbing_.carrier(), "absorbs");
  require_admissible(absorbed, kind_.pi);
  const Index n = absorbed.carrier()->size();

  switch (kind_.kind) {
    case Kind::topological: {
      // Every open of the absorbed topology is a union of its minimal opens,
      // so inclusion reduces to those being open on the absorbing side.
      const Topology t_absorbed = topology_from_family(absorbed);
      for (Index x = 0; x < n; ++x) {
        const PointSet& mx = t_absorbed.minimal_open(x);
        if (!topology_->is_open(mx)) return {false, TopologicalFailure{x, mx}};
      }
      return {true, std::monostate{}};
    }

    case Kind::delta_local: {
      for (Index x = 0; x < n; ++x) {
        const PairSet mx = minimal_entourage(absorbed, x);
        bool covered = false;
        for (Index y = 0; y < n && !covered; ++y)
          covered = subset_of(entourages_[static_cast<std::size_t>(y)], mx);
        if (!covered) return {false, PointFailure{x}};
      }
      return {true, std::monostate{}};
    }

    case Kind::strong_delta_local: {
      for (Index x = 0; x < n; ++x)
        if (!subset_of(entourages_[static_cast<std::size_t>(x)], minimal_entourage(absorbed, x)))
          return {false, PointFailure{x}};
      return {true, std::monostate{}};
    }

    case Kind::lipschitz:
    case Kind::uniform:
    case Kind::quasi_lipschitz:
    case Kind::uniform_quasi_lipschitz: {
      const DistMap& big = *family_maximum_;
      if (auto violation = find_zero_violation(absorbed, big, full_pair_set(absorbed.carrier())))
        return {false, std::move(*violation)};
      switch (kind_.kind) {
        case Kind::lipschitz:
        case Kind::quasi_lipschitz:
          return {true,
                  LipschitzWitness{full_subfamily(absorbing_), lipschitz_alpha(absorbed, big)}};
        case Kind::uniform: return {true, UniformWitness{half_min_positive(big)}};
        default:
          return {true, UniformQuasiLipschitzWitness{full_subfamily(absorbing_), Rational(1),
                                                     half_min_positive(big)}};
      }
    }

    case Kind::local_quasi_lipschitz: {
      const DistMap& big = *family_maximum_;
      Rational alpha(0);
      for (Index x = 0; x < n; ++x) {
        const PointSet& u = topology_->minimal_open(x);
        PairSet square = empty_pair_set(absorbed.carrier());
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j) square.mask(i, j) = u.contains(i) && u.contains(j);
        if (auto violation = find_zero_violation(absorbed, big, square, x))
          return {false, std::move(*violation)};
        for (const auto& d : absorbed.members())
          for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
              if (square.contains(i, j) && !big.at(i, j).is_zero())
                alpha = max(alpha, d.at(i, j) / big.at(i, j));
      }
      if (alpha.is_zero()) alpha = Rational(1);
      return {true, LocalQuasiLipschitzWitness{full_subfamily(absorbing_), alpha}};
    }
  }
  throw std::logic_error("absorbs: unknown kind");
}

AbsorptionResult Absorber::member(const DistMap& d) const {
  return absorbs(MapFamily(d.carrier(), "{" + d.name() + "}", {d}));
}

AbsorptionResult absorbs(const PreorderKind& kind, const MapFamily& absorbed,
                         const MapFamily& absorbing) {
  require_same_carrier(absorbed.carrier(), absorbing.carrier(), "absorbs");
  return Absorber(kind, absorbing).absorbs(absorbed);
}

bool zero_coincidence(const MapFamily& absorbed, const MapFamily& absorbing, const PairSet& on) {
  require_same_carrier(absorbed.carrier(), absorbing.carrier(), "zero_coincidence");
  require_same_carrier(absorbed.carrier(), on.carrier, "zero_coincidence");
  return !find_zero_violation(absorbed, family_max(absorbing), on).has_value();
}

AbsorptionResult member(const DistMap& d, const MapFamily& family, const PreorderKind& kind) {
  return absorbs(kind, MapFamily(d.carrier(), "{" + d.name() + "}", {d}), family);
}

bool equivalent(const MapFamily& p, const MapFamily& q, const PreorderKind& kind) {
  return absorbs(kind, p, q).holds && absorbs(kind, q, p).holds;
}

namespace {

DistMap subfamily_max(const MapFamily& family, const std::vector<std::size_t>& ids) {
  RationalMatrix acc = zero_matrix(family.carrier()->size());
  for (std::size_t i : ids) acc = acc.cwiseMax(family[i].values());
  return DistMap(family.carrier(), "subfamily-max", std::move(acc));
}

}  // namespace

bool validate_witness(const PreorderKind& kind, const MapFamily& absorbed,
                      const MapFamily& absorbing, const AbsorptionWitness& witness,
                      std::span<const Rational> epsilons) {
  const Index n = absorbed.carrier()->size();

  if (const auto* w = std::get_if<LipschitzWitness>(&witness)) {
    if (!(Rational(0) < w->alpha)) return false;
    const DistMap big = subfamily_max(absorbing, w->subfamily);
    for (const auto& d : absorbed.members())
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (w->alpha * big.at(i, j) < d.at(i, j)) return false;
    return true;
  }

  if (const auto* w = std::get_if<UniformWitness>(&witness)) {
    if (!(Rational(0) < w->delta)) return false;
    const DistMap big = family_max(absorbing);
    for (const Rational& eps : epsilons)
      for (const auto& d : absorbed.members())
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j)
            if (!(w->delta < big.at(i, j)) && eps < d.at(i, j)) return false;
    return true;
  }

  if (const auto* w = std::get_if<UniformQuasiLipschitzWitness>(&witness)) {
    if (!(Rational(0) < w->alpha) || !(Rational(0) < w->beta)) return false;
    const DistMap big = subfamily_max(absorbing, w->subfamily);
    for (const Rational& eps : epsilons)
      for (const auto& d : absorbed.members())
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j)
            if (!(w->beta < big.at(i, j)) && w->alpha * big.at(i, j) + eps < d.at(i, j))
              return false;
    return true;
  }

  if (const auto* w = std::get_if<LocalQuasiLipschitzWitness>(&witness)) {
    if (!(Rational(0) < w->alpha)) return false;
    const DistMap big = subfamily_max(absorbing, w->subfamily);
    const Topology t = topology_from_family(absorbing);
    for (const Rational& eps : epsilons)
      for (Index x = 0; x < n; ++x) {
        const PointSet& u = t.minimal_open(x);
        for (const auto& d : absorbed.members())
          for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
              if (u.contains(i) && u.contains(j) &&
                  w->alpha * big.at(i, j) + eps < d.at(i, j))
                return false;
      }
    return true;
  }

  // Containment kinds carry no positive witness data; re-run the decision.
  if (std::holds_alternative<std::monostate>(witness))
    return absorbs(kind, absorbed, absorbing).holds;
  return false;
}

}  // namespace realstruct
