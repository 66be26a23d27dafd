#include "realstruct/generate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace realstruct {

namespace {

std::uint64_t to_bits(const PointSet& s) {
  std::uint64_t bits = 0;
  for (Index i = 0; i < s.mask.size(); ++i)
    if (s.mask(i)) bits |= (std::uint64_t{1} << i);
  return bits;
}

PointSet from_bits(const CarrierPtr& carrier, std::uint64_t bits) {
  PointSet s = empty_point_set(carrier);
  for (Index i = 0; i < s.mask.size(); ++i) s.mask(i) = (bits >> i) & 1;
  return s;
}

void require_small_carrier(const CarrierPtr& c, const char* context) {
  if (c->size() > 64)
    throw std::invalid_argument(std::string(context) + ": carrier wider than 64 elements");
}

// Least fixpoint of S -> S u U_{a in S} N(a) starting from {x}, for all x.
std::vector<PointSet> close_minimal_opens(const CarrierPtr& carrier,
                                          const std::vector<PointSet>& n) {
  const Index size = carrier->size();
  std::vector<PointSet> opens;
  opens.reserve(static_cast<std::size_t>(size));
  for (Index x = 0; x < size; ++x) {
    BoolVector s = BoolVector::Constant(size, false);
    s(x) = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Index a = 0; a < size; ++a) {
        if (!s(a)) continue;
        const BoolVector grown = s || n[static_cast<std::size_t>(a)].mask;
        if ((grown != s).any()) {
          s = grown;
          changed = true;
        }
      }
    }
    opens.push_back(PointSet{carrier, s});
  }
  return opens;
}

}  // namespace

DeltaLocalFilter::DeltaLocalFilter(CarrierPtr carrier, std::vector<PairSet> minimal_entourages)
    : carrier_(std::move(carrier)), entourages_(std::move(minimal_entourages)) {
  if (static_cast<Index>(entourages_.size()) != carrier_->size())
    throw std::invalid_argument("delta-local filter: one entourage per point required");
  for (const auto& e : entourages_) require_same_carrier(carrier_, e.carrier, "delta-local filter");
}

bool DeltaLocalFilter::well_formed() const {
  for (Index x = 0; x < carrier_->size(); ++x)
    if (!minimal_entourage(x).contains(x, x)) return false;
  return true;
}

bool DeltaLocalFilter::contains_at(Index x, const PairSet& u) const {
  require_same_carrier(carrier_, u.carrier, "filter membership");
  return subset_of(minimal_entourage(x), u);
}

bool DeltaLocalFilter::contains(const PairSet& u) const {
  for (Index x = 0; x < carrier_->size(); ++x)
    if (contains_at(x, u)) return true;
  return false;
}

bool operator==(const DeltaLocalFilter& a, const DeltaLocalFilter& b) {
  if (!same_carrier(a.carrier_, b.carrier_)) return false;
  return a.entourages_ == b.entourages_;
}

Topology::Topology(CarrierPtr carrier, std::vector<PointSet> minimal_opens)
    : carrier_(std::move(carrier)), minimal_opens_(std::move(minimal_opens)) {
  const Index n = carrier_->size();
  if (static_cast<Index>(minimal_opens_.size()) != n)
    throw std::invalid_argument("topology: one minimal open per point required");
  for (Index x = 0; x < n; ++x) {
    const PointSet& mx = minimal_opens_[static_cast<std::size_t>(x)];
    require_same_carrier(carrier_, mx.carrier, "topology");
    if (!mx.contains(x))
      throw std::invalid_argument("topology: minimal open of '" + carrier_->name(x) +
                                  "' does not contain it");
  }
  // Nesting law: y in m(x) implies m(y) subset of m(x).
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (minimal_opens_[static_cast<std::size_t>(x)].contains(y) &&
          !subset_of(minimal_opens_[static_cast<std::size_t>(y)],
                     minimal_opens_[static_cast<std::size_t>(x)]))
        throw std::invalid_argument("topology: minimal opens violate nesting at '" +
                                    carrier_->name(x) + "','" + carrier_->name(y) + "'");
}

bool Topology::is_open(const PointSet& a) const {
  require_same_carrier(carrier_, a.carrier, "is_open");
  for (Index x = 0; x < carrier_->size(); ++x)
    if (a.contains(x) && !subset_of(minimal_open(x), a)) return false;
  return true;
}

bool canonical_subset_less(const PointSet& a, const PointSet& b) {
  const Index ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.indices() < b.indices();
}

std::vector<PointSet> Topology::opens(std::size_t max_opens) const {
  require_small_carrier(carrier_, "opens");
  const Index n = carrier_->size();
  std::vector<std::uint64_t> mins(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) mins[static_cast<std::size_t>(x)] = to_bits(minimal_open(x));

  // Every open is a union of minimal opens, so the union closure of the
  // minimal opens together with the empty set is exactly the open-set family.
  std::unordered_set<std::uint64_t> seen{0};
  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (Index x = 0; x < n; ++x) {
      const std::uint64_t grown = s | mins[static_cast<std::size_t>(x)];
      if (seen.insert(grown).second) {
        if (seen.size() > max_opens)
          throw std::length_error("opens: more than " + std::to_string(max_opens) + " open sets");
        queue.push_back(grown);
      }
    }
  }

  std::vector<PointSet> out;
  out.reserve(seen.size());
  for (std::uint64_t bits : seen) out.push_back(from_bits(carrier_, bits));
  std::sort(out.begin(), out.end(), canonical_subset_less);
  return out;
}

bool operator==(const Topology& a, const Topology& b) {
  if (!same_carrier(a.carrier_, b.carrier_)) return false;
  return a.minimal_opens_ == b.minimal_opens_;
}

PairSet minimal_entourage(const MapFamily& p, Index x) {
  if (x < 0 || x >= p.carrier()->size())
    throw std::invalid_argument("minimal_entourage: unknown element index");
  const Index n = p.carrier()->size();
  PairSet m = full_pair_set(p.carrier());
  for (const auto& d : p.members()) {
    const Rational& threshold = d.at(x, x);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (threshold < d.at(i, j)) m.mask(i, j) = false;
  }
  return m;
}

DeltaLocalFilter delta_local_filter(const MapFamily& p) {
  std::vector<PairSet> entourages;
  entourages.reserve(static_cast<std::size_t>(p.carrier()->size()));
  for (Index x = 0; x < p.carrier()->size(); ++x) entourages.push_back(minimal_entourage(p, x));
  return DeltaLocalFilter(p.carrier(), std::move(entourages));
}

PointSet minimal_neighborhood(const MapFamily& p, Index x) {
  if (x < 0 || x >= p.carrier()->size())
    throw std::invalid_argument("minimal_neighborhood: unknown element index");
  const Index n = p.carrier()->size();
  PointSet s = full_point_set(p.carrier());
  for (const auto& d : p.members()) {
    const Rational& threshold = d.at(x, x);
    for (Index xi = 0; xi < n; ++xi)
      if (threshold < d.at(xi, x) || threshold < d.at(x, xi)) s.mask(xi) = false;
  }
  return s;
}

Topology topology_from_family(const MapFamily& p) {
  const Index n = p.carrier()->size();
  std::vector<PointSet> neighborhoods;
  neighborhoods.reserve(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) neighborhoods.push_back(minimal_neighborhood(p, x));
  return Topology(p.carrier(), close_minimal_opens(p.carrier(), neighborhoods));
}

Topology topology_from_filter(const DeltaLocalFilter& f) {
  if (!f.well_formed())
    throw std::invalid_argument("topology_from_filter: malformed filter (missing diagonal point)");
  const CarrierPtr& carrier = f.carrier();
  const Index n = carrier->size();
  std::vector<PointSet> neighborhoods;
  neighborhoods.reserve(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    const PairSet& m = f.minimal_entourage(x);
    PointSet s = empty_point_set(carrier);
    for (Index xi = 0; xi < n; ++xi) s.mask(xi) = m.contains(xi, x) && m.contains(x, xi);
    neighborhoods.push_back(std::move(s));
  }
  return Topology(carrier, close_minimal_opens(carrier, neighborhoods));
}

PointSet minimal_open(const Topology& t, Index x) {
  if (x < 0 || x >= t.carrier()->size())
    throw std::invalid_argument("minimal_open: unknown element index");
  return t.minimal_open(x);
}

bool is_topology(const std::vector<PointSet>& opens) {
  if (opens.empty()) return false;
  const CarrierPtr carrier = opens.front().carrier;
  require_small_carrier(carrier, "is_topology");
  std::unordered_set<std::uint64_t> family;
  for (const auto& s : opens) {
    require_same_carrier(carrier, s.carrier, "is_topology");
    family.insert(to_bits(s));
  }
  const std::uint64_t full = to_bits(full_point_set(carrier));
  if (!family.count(0) || !family.count(full)) return false;
  for (std::uint64_t a : family)
    for (std::uint64_t b : family) {
      if (!family.count(a | b)) return false;
      if (!family.count(a & b)) return false;
    }
  return true;
}

Topology indiscrete_topology(CarrierPtr carrier) {
  std::vector<PointSet> mins(static_cast<std::size_t>(carrier->size()), full_point_set(carrier));
  return Topology(std::move(carrier), std::move(mins));
}

Topology discrete_topology(CarrierPtr carrier) {
  std::vector<PointSet> mins;
  for (Index x = 0; x < carrier->size(); ++x) mins.push_back(singleton(carrier, x));
  return Topology(std::move(carrier), std::move(mins));
}

Topology topology_from_opens(CarrierPtr carrier, const std::vector<PointSet>& opens) {
  for (const auto& s : opens) require_same_carrier(carrier, s.carrier, "topology_from_opens");
  if (!is_topology(opens)) throw std::invalid_argument("topology_from_opens: not a topology");
  const Index n = carrier->size();
  std::vector<PointSet> mins;
  mins.reserve(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    PointSet m = full_point_set(carrier);
    for (const auto& s : opens)
      if (s.contains(x)) m = set_intersection(m, s);
    mins.push_back(std::move(m));
  }
  return Topology(std::move(carrier), std::move(mins));
}

}  // namespace realstruct
