#include "realstruct/morphisms.hpp"

#include <algorithm>
#include <set>

namespace realstruct {

namespace {

MapFamily pulled_family(const PointMap& f, const MapFamily& py) {
  std::vector<DistMap> pulled;
  pulled.reserve(py.size());
  for (const auto& d : py.members()) pulled.push_back(pullback(d, f));
  return MapFamily(f.domain(), py.name() + "\xE2\x88\x98" "f", std::move(pulled));
}

}  // namespace

MorphismResult is_morphism(const PointMap& f, const RealSpace& sx, const RealSpace& sy) {
  if (!(sx.kind() == sy.kind()))
    throw std::invalid_argument("is_morphism: the two spaces have different kinds");
  require_same_carrier(f.domain(), sx.carrier(), "is_morphism (domain)");
  require_same_carrier(f.codomain(), sy.carrier(), "is_morphism (codomain)");

  const MapFamily pulled = pulled_family(f, sy.generators());
  AbsorptionResult res = absorbs(sx.kind(), pulled, sx.generators());
  if (res.holds) return {true, std::nullopt, std::move(res.witness)};

  for (std::size_t i = 0; i < pulled.size(); ++i)
    if (!member(pulled[i], sx.generators(), sx.kind()).holds)
      return {false, sy.generators()[i].name(), std::move(res.witness)};
  return {false, std::nullopt, std::move(res.witness)};
}

bool continuity_oracle(const PointMap& f, const Topology& tx, const Topology& ty) {
  require_same_carrier(f.domain(), tx.carrier(), "continuity_oracle (domain)");
  require_same_carrier(f.codomain(), ty.carrier(), "continuity_oracle (codomain)");
  for (Index x = 0; x < tx.carrier()->size(); ++x) {
    const PointSet& mx = tx.minimal_open(x);
    const PointSet& target = ty.minimal_open(f(x));
    for (Index a = 0; a < tx.carrier()->size(); ++a)
      if (mx.contains(a) && !target.contains(f(a))) return false;
  }
  return true;
}

namespace {

// Distinct values of the map, the midpoints between consecutive ones, and
// one value past the maximum. On a finite value set only these can change
// any strict comparison, so quantifying over them is complete.
std::vector<Rational> adversarial_epsilons(const DistMap& d) {
  std::set<Rational> values;
  for (Index i = 0; i < d.size(); ++i)
    for (Index j = 0; j < d.size(); ++j) values.insert(d.at(i, j));
  std::vector<Rational> sorted(values.begin(), values.end());
  std::vector<Rational> out = sorted;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    out.push_back((sorted[i] + sorted[i + 1]) / 2);
  out.push_back(sorted.empty() ? Rational(1) : sorted.back() + 1);
  return out;
}

// Premise of one subfamily choice, stabilized at its smallest admissible
// threshold: pairs where the subfamily maximum is <= the given bound.
BoolMatrix stabilized_premise(const RationalMatrix& sub_max, const Rational& bound) {
  const Index n = sub_max.rows();
  BoolMatrix premise(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) premise(i, j) = !(bound < sub_max(i, j));
  return premise;
}

}  // namespace

bool epsilon_morphism_oracle(const PreorderKind& kind, const PointMap& f, const MapFamily& px,
                             const MapFamily& py) {
  if (kind.kind != Kind::delta_local && kind.kind != Kind::strong_delta_local)
    throw std::invalid_argument(
        "epsilon_morphism_oracle: only the delta-local kinds have an epsilon form");
  require_same_carrier(f.domain(), px.carrier(), "epsilon_morphism_oracle (domain)");
  require_same_carrier(f.codomain(), py.carrier(), "epsilon_morphism_oracle (codomain)");
  require_admissible(px, kind.pi);
  require_admissible(py, kind.pi);
  if (px.size() > 20)
    throw std::invalid_argument("epsilon_morphism_oracle: domain family too large");

  const Index n = px.carrier()->size();
  const std::size_t subsets = std::size_t{1} << px.size();

  // Subfamily maxima and their per-point diagonal thresholds, precomputed.
  std::vector<RationalMatrix> sub_max(subsets);
  for (std::size_t g = 0; g < subsets; ++g) {
    RationalMatrix acc = zero_matrix(n);
    for (std::size_t k = 0; k < px.size(); ++k)
      if ((g >> k) & 1) acc = acc.cwiseMax(px[k].values());
    sub_max[g] = std::move(acc);
  }

  const bool pointwise = (kind.kind == Kind::strong_delta_local);
  const Index point_count = pointwise ? n : 1;

  for (const auto& dy : py.members()) {
    const DistMap pulled = pullback(dy, f);
    const std::vector<Rational> epsilons = adversarial_epsilons(dy);
    for (Index x = 0; x < point_count; ++x) {
      // Codomain threshold: the diagonal of the pulled map at x for the
      // pointwise kind, its minimum over the carrier otherwise.
      Rational ty = pulled.at(x, x);
      if (!pointwise) {
        ty = pulled.at(0, 0);
        for (Index z = 1; z < n; ++z) ty = min(ty, pulled.at(z, z));
      }
      for (const Rational& eps_y : epsilons) {
        if (!(ty < eps_y)) continue;
        bool some_subfamily_works = false;
        for (std::size_t g = 0; g < subsets && !some_subfamily_works; ++g) {
          // Domain threshold of the subfamily maximum, per the kind.
          Rational tx = sub_max[g](0, 0);
          if (pointwise) {
            tx = sub_max[g](x, x);
          } else {
            for (Index z = 1; z < n; ++z) tx = min(tx, sub_max[g](z, z));
          }
          const BoolMatrix premise = stabilized_premise(sub_max[g], tx);
          bool ok = true;
          for (Index i = 0; i < n && ok; ++i)
            for (Index j = 0; j < n; ++j)
              if (premise(i, j) && !(pulled.at(i, j) < eps_y)) {
                ok = false;
                break;
              }
          some_subfamily_works = ok;
        }
        if (!some_subfamily_works) return false;
      }
    }
  }
  return true;
}

namespace {

// Saturating |codomain|^|domain|.
std::uint64_t map_count(Index domain, Index codomain, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (Index i = 0; i < domain; ++i) {
    if (count > cap / std::max<std::uint64_t>(1, static_cast<std::uint64_t>(codomain)))
      return cap + 1;
    count *= static_cast<std::uint64_t>(codomain);
  }
  return count;
}

std::optional<PointMap> first_morphism(const RealSpace& from, const RealSpace& to) {
  const Index nd = from.carrier()->size();
  const Index nc = to.carrier()->size();
  std::vector<Index> assignment(static_cast<std::size_t>(nd), 0);
  while (true) {
    PointMap f(from.carrier(), to.carrier(), assignment);
    if (is_morphism(f, from, to).holds) return f;
    // Next assignment in lexicographic order.
    Index pos = nd - 1;
    while (pos >= 0) {
      if (++assignment[static_cast<std::size_t>(pos)] < nc) break;
      assignment[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace

SameTypeResult same_type_search(const RealSpace& sx, const RealSpace& sy,
                                std::uint64_t max_search) {
  if (!(sx.kind() == sy.kind()))
    throw std::invalid_argument("same_type_search: the two spaces have different kinds");
  const std::uint64_t forward = map_count(sx.carrier()->size(), sy.carrier()->size(), max_search);
  const std::uint64_t backward = map_count(sy.carrier()->size(), sx.carrier()->size(), max_search);
  if (forward > max_search || backward > max_search || forward + backward > max_search)
    throw SearchBoundExceeded("same_type_search: search space exceeds " +
                              std::to_string(max_search) + " maps");

  SameTypeResult result;
  result.forward = first_morphism(sx, sy);
  if (!result.forward) return result;
  result.backward = first_morphism(sy, sx);
  result.same_type = result.backward.has_value();
  if (!result.same_type) result.forward.reset();
  return result;
}

}  // namespace realstruct
