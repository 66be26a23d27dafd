#include <doctest.h>

#include "helpers.hpp"
#include "independent_deciders.hpp"
#include "realstruct/preorders.hpp"

using namespace realstruct;

namespace {

const CarrierPtr ab = make_carrier({"a", "b"});

const std::vector<Kind> kAllKinds = {
    Kind::topological,         Kind::delta_local,     Kind::strong_delta_local,
    Kind::lipschitz,           Kind::uniform,         Kind::quasi_lipschitz,
    Kind::uniform_quasi_lipschitz, Kind::local_quasi_lipschitz};

const std::vector<Rational> kEpsSamples = {rat("1"), rat("1/2"), rat("1/100")};

DistMap discrete2() { return dm(ab, "d", {{"0", "1"}, {"1", "0"}}); }

MapFamily random_admissible_family(Rng& rng, const CarrierPtr& c, const PreorderKind& pk,
                                   std::size_t min_maps, std::size_t max_maps,
                                   const std::string& name) {
  return random_family(rng, c, pk.pi, min_maps, max_maps, name);
}

}  // namespace

TEST_CASE("pi-domain constraints on kind construction") {
  CHECK_THROWS_AS(make_preorder_kind(Kind::uniform, PiDomain::all_maps), std::invalid_argument);
  CHECK_THROWS_AS(make_preorder_kind(Kind::local_quasi_lipschitz, PiDomain::weak_pseudo_metrics),
                  std::invalid_argument);
  CHECK(make_preorder_kind(Kind::uniform).pi == PiDomain::pseudo_metrics);
  CHECK(make_preorder_kind(Kind::topological).pi == PiDomain::all_maps);
  CHECK(make_preorder_kind(Kind::topological, PiDomain::weak_pseudo_metrics).pi ==
        PiDomain::weak_pseudo_metrics);
}

TEST_CASE("absorbs rejects inadmissible maps") {
  const DistMap asym = dm(ab, "asym", {{"0", "2"}, {"1", "0"}});
  const MapFamily p(ab, "P", {asym});
  const MapFamily q(ab, "Q", {discrete2()});
  CHECK_THROWS_AS(absorbs(make_preorder_kind(Kind::uniform), p, q), std::invalid_argument);
  CHECK_THROWS_AS(absorbs(make_preorder_kind(Kind::topological, PiDomain::pseudo_metrics), p, q),
                  std::invalid_argument);
}

TEST_CASE("subsets are absorbed under every kind") {
  Rng rng(37);
  for (Kind kind : kAllKinds) {
    const PreorderKind pk = make_preorder_kind(kind);
    for (int i = 0; i < 25; ++i) {
      const CarrierPtr c = random_carrier(rng, 2, 4);
      const MapFamily p = random_admissible_family(rng, c, pk, 1, 3, "p");
      std::vector<DistMap> sub;
      for (const auto& d : p.members())
        if (rng.coin()) sub.push_back(d);
      if (sub.empty()) sub.push_back(p[0]);
      CHECK(absorbs(pk, MapFamily(c, "sub", sub), p).holds);
    }
  }
}

TEST_CASE("lipschitz absorption of a scaled family carries alpha") {
  const MapFamily small(ab, "P", {discrete2()});
  const MapFamily scaled(ab, "P3", {scale(discrete2(), 3)});
  const AbsorptionResult res = absorbs(make_preorder_kind(Kind::lipschitz), scaled, small);
  REQUIRE(res.holds);
  const auto& w = std::get<LipschitzWitness>(res.witness);
  CHECK(w.alpha == rat("3"));
  CHECK(w.subfamily == std::vector<std::size_t>{0});
  CHECK(validate_witness(make_preorder_kind(Kind::lipschitz), scaled, small, res.witness,
                         kEpsSamples));
}

TEST_CASE("lipschitz absorption fails against the zero family") {
  const MapFamily p(ab, "P", {discrete2()});
  const MapFamily zero(ab, "Z", {zero_map(ab)});
  const AbsorptionResult res = absorbs(make_preorder_kind(Kind::lipschitz), p, zero);
  REQUIRE_FALSE(res.holds);
  const auto& w = std::get<PairFailure>(res.witness);
  CHECK(w.map_name == "d");
  CHECK(((w.x1 == 0 && w.x2 == 1) || (w.x1 == 1 && w.x2 == 0)));
}

TEST_CASE("topological absorption failure reports a separating open set") {
  const MapFamily sier(ab, "P1", {dm(ab, "dp", {{"0", "1"}, {"1", "1"}})});
  const MapFamily constant(ab, "P2", {dm(ab, "one", {{"1", "1"}, {"1", "1"}})});
  const AbsorptionResult res = absorbs(make_preorder_kind(Kind::topological), sier, constant);
  REQUIRE_FALSE(res.holds);
  const auto& w = std::get<TopologicalFailure>(res.witness);
  CHECK(w.open_set == pts(ab, {"a"}));
  // The separating set is open for the absorbed family, not the absorbing one.
  CHECK(topology_from_family(sier).is_open(w.open_set));
  CHECK_FALSE(topology_from_family(constant).is_open(w.open_set));
}

TEST_CASE("zero-coincidence basics") {
  const MapFamily positive(ab, "P", {dm(ab, "p", {{"0", "1"}, {"1", "0"}})});
  const MapFamily metric(ab, "M", {discrete2()});
  CHECK(zero_coincidence(metric, positive, full_pair_set(ab)));

  const MapFamily zero(ab, "Z", {zero_map(ab)});
  CHECK_FALSE(zero_coincidence(metric, zero, full_pair_set(ab)));
  CHECK(zero_coincidence(metric, zero, empty_pair_set(ab)));
}

TEST_CASE("membership examples") {
  const PreorderKind lip = make_preorder_kind(Kind::lipschitz);
  const MapFamily p(ab, "P", {discrete2()});
  CHECK(member(discrete2(), p, lip).holds);
  CHECK(member(zero_map(ab), p, lip).holds);

  const MapFamily constant(ab, "C", {dm(ab, "one", {{"1", "1"}, {"1", "1"}})});
  CHECK_FALSE(member(dm(ab, "dp", {{"0", "1"}, {"1", "1"}}), constant,
                     make_preorder_kind(Kind::topological))
                  .holds);
}

TEST_CASE("equivalence examples") {
  const MapFamily p(ab, "P", {discrete2()});
  for (Kind kind : kAllKinds) CHECK(equivalent(p, p, make_preorder_kind(kind)));

  const MapFamily doubled(ab, "P2", {scale(discrete2(), 2)});
  CHECK(equivalent(p, doubled, make_preorder_kind(Kind::lipschitz)));

  const MapFamily zero(ab, "Z", {zero_map(ab)});
  CHECK_FALSE(equivalent(p, zero, make_preorder_kind(Kind::topological)));
}

TEST_CASE("reflexivity under every kind (random)") {
  Rng rng(41);
  for (Kind kind : kAllKinds) {
    const PreorderKind pk = make_preorder_kind(kind);
    for (int i = 0; i < 20; ++i) {
      const CarrierPtr c = random_carrier(rng, 2, 4);
      const MapFamily p = random_admissible_family(rng, c, pk, 0, 3, "p");
      CHECK(absorbs(pk, p, p).holds);
    }
  }
}

namespace {

// A family verified to be absorbed by `base`: a subset of the base members
// plus absorption-checked scaled maxima and fresh draws.
MapFamily absorbed_family(Rng& rng, const MapFamily& base, const PreorderKind& pk,
                          const std::string& name) {
  static const std::vector<Rational> factors = {rat("1/2"), rat("1"), rat("2"), rat("3")};
  std::vector<DistMap> members;
  for (const auto& d : base.members())
    if (rng.coin()) members.push_back(d);
  for (int attempt = 0; attempt < 6 && members.size() < 3; ++attempt) {
    std::optional<DistMap> candidate;
    if (rng.coin() && !base.empty()) {
      RationalMatrix acc = zero_matrix(base.carrier()->size());
      for (const auto& d : base.members())
        if (rng.coin()) acc = acc.cwiseMax(d.values());
      candidate = DistMap(base.carrier(), name, (rng.pick(factors) * acc).eval());
    } else {
      candidate = random_dist_map(rng, base.carrier(), pk.pi, name);
    }
    if (!admissible(classify_map(*candidate), pk.pi)) continue;
    if (member(*candidate, base, pk).holds) members.push_back(*candidate);
  }
  if (members.empty() && !base.empty()) members.push_back(base[0]);
  std::vector<DistMap> renamed;
  for (std::size_t i = 0; i < members.size(); ++i)
    renamed.emplace_back(base.carrier(), name + std::to_string(i), members[i].values());
  return MapFamily(base.carrier(), name, std::move(renamed));
}

}  // namespace

TEST_CASE("transitivity with witness composition (constructed chains)") {
  Rng rng(43);
  for (Kind kind : kAllKinds) {
    const PreorderKind pk = make_preorder_kind(kind);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 25; ++i) {
      const CarrierPtr c = random_carrier(rng, 2, 4);
      const MapFamily p3 = random_admissible_family(rng, c, pk, 1, 3, "p3");
      const MapFamily p2 = absorbed_family(rng, p3, pk, "p2");
      const MapFamily p1 = absorbed_family(rng, p2, pk, "p1");
      const AbsorptionResult r12 = absorbs(pk, p1, p2);
      const AbsorptionResult r23 = absorbs(pk, p2, p3);
      if (!r12.holds || !r23.holds) continue;
      ++checked;
      const AbsorptionResult r13 = absorbs(pk, p1, p3);
      CHECK(r13.holds);
      if (kind == Kind::lipschitz && r13.holds) {
        const Rational a12 = std::get<LipschitzWitness>(r12.witness).alpha;
        const Rational a23 = std::get<LipschitzWitness>(r23.witness).alpha;
        std::vector<std::size_t> all(p3.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        CHECK(validate_witness(pk, p1, p3, LipschitzWitness{all, a12 * a23}, kEpsSamples));
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("family absorption implies member absorption (hard direction)") {
  Rng rng(47);
  for (Kind kind : kAllKinds) {
    const PreorderKind pk = make_preorder_kind(kind);
    int checked = 0;
    for (int i = 0; i < 80 && checked < 20; ++i) {
      const CarrierPtr c = random_carrier(rng, 2, 4);
      const MapFamily p = random_admissible_family(rng, c, pk, 1, 3, "p");
      const MapFamily q = random_admissible_family(rng, c, pk, 1, 3, "q");
      if (!absorbs(pk, q, p).holds) continue;
      ++checked;
      for (const auto& d : q.members()) CHECK(member(d, p, pk).holds);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("positive witnesses re-validate under every kind (random)") {
  Rng rng(53);
  for (Kind kind : kAllKinds) {
    const PreorderKind pk = make_preorder_kind(kind);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
      const CarrierPtr c = random_carrier(rng, 2, 4);
      const MapFamily p = random_admissible_family(rng, c, pk, 1, 3, "p");
      const MapFamily q = random_admissible_family(rng, c, pk, 1, 3, "q");
      const AbsorptionResult res = absorbs(pk, q, p);
      if (!res.holds) continue;
      ++checked;
      CHECK(validate_witness(pk, q, p, res.witness, kEpsSamples));
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("finite-carrier collapse of the four Lipschitz-type kinds (random)") {
  Rng rng(59);
  for (int i = 0; i < 150; ++i) {
    const CarrierPtr c = random_carrier(rng, 2, 4);
    const MapFamily p = random_family(rng, c, PiDomain::pseudo_metrics, 1, 3, "p");
    const MapFamily q = random_family(rng, c, PiDomain::pseudo_metrics, 1, 3, "q");
    const bool lip = absorbs(make_preorder_kind(Kind::lipschitz, PiDomain::pseudo_metrics), q, p).holds;
    const bool uni = absorbs(make_preorder_kind(Kind::uniform), q, p).holds;
    const bool ql = absorbs(make_preorder_kind(Kind::quasi_lipschitz), q, p).holds;
    const bool uql = absorbs(make_preorder_kind(Kind::uniform_quasi_lipschitz), q, p).holds;
    CHECK(lip == uni);
    CHECK(lip == ql);
    CHECK(lip == uql);
    CHECK(lip == indep::lipschitz(q, p));
    CHECK(uni == indep::uniform(q, p));
    CHECK(ql == indep::quasi_lipschitz(q, p));
    CHECK(uql == indep::uniform_quasi_lipschitz(q, p));
  }
}

TEST_CASE("quasi-Lipschitz witness transforms into the uniform rule at eps = 1") {
  Rng rng(61);
  int checked = 0;
  for (int i = 0; i < 100 && checked < 30; ++i) {
    const CarrierPtr c = random_carrier(rng, 2, 4);
    const MapFamily p = random_family(rng, c, PiDomain::pseudo_metrics, 1, 3, "p");
    const MapFamily q = random_family(rng, c, PiDomain::pseudo_metrics, 1, 3, "q");
    const AbsorptionResult res = absorbs(make_preorder_kind(Kind::quasi_lipschitz), q, p);
    if (!res.holds) continue;
    ++checked;
    const Rational alpha = std::get<LipschitzWitness>(res.witness).alpha;
    const Rational eps(1);
    const std::vector<Rational> only_eps = {eps};
    CHECK(validate_witness(make_preorder_kind(Kind::uniform), q, p,
                           UniformWitness{Rational(1) / (2 * alpha)}, only_eps));
  }
  CHECK(checked > 0);
}

TEST_CASE("delta-local absorption does not imply the pointwise one") {
  const CarrierPtr abc = make_carrier({"a", "b", "c"});
  const MapFamily p(abc, "P", {dm(abc, "D", {{"1", "2", "2"}, {"2", "1", "2"}, {"2", "2", "0"}})});
  const MapFamily q(abc, "Q", {dm(abc, "Dp", {{"1", "2", "2"}, {"2", "2", "2"}, {"2", "2", "1"}})});
  CHECK(absorbs(make_preorder_kind(Kind::delta_local), q, p).holds);
  const AbsorptionResult strong = absorbs(make_preorder_kind(Kind::strong_delta_local), q, p);
  CHECK_FALSE(strong.holds);
  CHECK(std::get<PointFailure>(strong.witness).point == 0);
}

TEST_CASE("strong equivalence forces equal filters") {
  Rng rng(67);
  const PreorderKind pk = make_preorder_kind(Kind::strong_delta_local);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 10; ++i) {
    const CarrierPtr c = random_carrier(rng, 2, 3);
    const MapFamily p = random_family(rng, c, PiDomain::all_maps, 1, 2, "p");
    const MapFamily q = random_family(rng, c, PiDomain::all_maps, 1, 2, "q");
    if (!absorbs(pk, q, p).holds || !absorbs(pk, p, q).holds) continue;
    ++checked;
    CHECK(delta_local_filter(p) == delta_local_filter(q));
  }
  CHECK(checked > 0);
}

TEST_CASE("local quasi-Lipschitz restricts zero-coincidence to minimal-open squares") {
  const CarrierPtr abc = make_carrier({"a", "b", "c"});
  // D separates {a,b} from {c}; its topology has minimal opens {a,b},{a,b},{c}.
  const MapFamily p(abc, "P", {dm(abc, "D", {{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "0"}})});
  // d' vanishes inside both squares but not across them.
  const DistMap dp = dm(abc, "dp", {{"0", "0", "2"}, {"0", "0", "2"}, {"2", "2", "0"}});
  const DistMap cross = dm(abc, "cross", {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
  CHECK(member(dp, p, make_preorder_kind(Kind::local_quasi_lipschitz)).holds);
  CHECK_FALSE(member(cross, p, make_preorder_kind(Kind::local_quasi_lipschitz)).holds);
  // 'cross' fails globally too, and the failure pair sits inside a square.
  const AbsorptionResult res =
      member(cross, p, make_preorder_kind(Kind::local_quasi_lipschitz));
  const auto& w = std::get<PairFailure>(res.witness);
  CHECK(w.point.has_value());
}
