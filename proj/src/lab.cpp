#include "realstruct/lab.hpp"

#include <chrono>
#include <stdexcept>

namespace realstruct {

const std::vector<PropertyInfo>& property_catalogue() {
  static const std::vector<PropertyInfo> catalogue = {
      {PropertyId::preorder_equiv_topological, "preorder-equiv-topological",
       "if every member of a family is singly absorbed by P in the topological way, "
       "the whole family is absorbed by P (over all maps)"},
      {PropertyId::preorder_equiv_delta_local, "preorder-equiv-delta-local",
       "if every member of a family is singly absorbed by P in the delta-local way, "
       "the whole family is absorbed by P (over all maps)"},
      {PropertyId::closure_domination_topological, "closure-domination-topological",
       "topological membership is downward closed under entrywise domination "
       "(over all maps)"},
      {PropertyId::closure_scale_topological, "closure-scale-topological",
       "topological membership is closed under positive scaling"},
      {PropertyId::closure_max_topological, "closure-max-topological",
       "topological membership is closed under the entrywise maximum of two members"},
      {PropertyId::lipschitz_implies_topological_membership,
       "lipschitz-implies-topological-membership",
       "Lipschitz membership over a family implies topological membership over the "
       "same family (over all maps)"},
      {PropertyId::strong_implies_delta_local, "strong-implies-delta-local",
       "pointwise filter absorption implies union-filter absorption"},
      {PropertyId::delta_local_converse_fails, "delta-local-converse-fails",
       "union-filter absorption implies pointwise filter absorption"},
      {PropertyId::quasi_lipschitz_delta_rule, "quasi-lipschitz-delta-rule",
       "a quasi-Lipschitz witness alpha yields the uniform threshold rule "
       "delta = 1/(2*alpha) at eps = 1"},
  };
  return catalogue;
}

const PropertyInfo& property_info(PropertyId id) {
  for (const auto& p : property_catalogue())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown property id");
}

PropertyId property_from_string(std::string_view name) {
  for (const auto& p : property_catalogue())
    if (p.name == name) return p.id;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 0x51AB5EEDull));
}

const std::vector<Rational>& entry_pool() {
  static const std::vector<Rational> pool = {Rational(0), Rational(1) / 4, Rational(1) / 2,
                                             Rational(1), Rational(2)};
  return pool;
}

CarrierPtr random_carrier(Rng& rng, Index min_size, Index max_size) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  const Index n = min_size + rng.index_below(max_size - min_size + 1);
  std::vector<std::string> names(kNames, kNames + n);
  return make_carrier(std::move(names));
}

namespace {

// Min-plus closure until the triangle inequality holds everywhere; entries
// only decrease, so nonnegativity, symmetry and diagonal zeros are kept.
void close_triangle(RationalMatrix& v) {
  const Index n = v.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index k = 0; k < n; ++k)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Rational through = v(i, k) + v(k, j);
          if (through < v(i, j)) {
            v(i, j) = through;
            changed = true;
          }
        }
  }
}

}  // namespace

DistMap random_dist_map(Rng& rng, const CarrierPtr& carrier, PiDomain pi, std::string name) {
  const Index n = carrier->size();
  RationalMatrix v(n, n);
  if (pi == PiDomain::all_maps) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i, j) = rng.pick(entry_pool());
    return DistMap(carrier, std::move(name), std::move(v));
  }
  for (Index i = 0; i < n; ++i) {
    v(i, i) = rng.pick(entry_pool());
    for (Index j = i + 1; j < n; ++j) v(i, j) = v(j, i) = rng.pick(entry_pool());
  }
  if (pi == PiDomain::pseudo_metrics) {
    for (Index i = 0; i < n; ++i) v(i, i) = Rational(0);
  } else {
    const Index z = rng.index_below(n);  // weak: at least one diagonal zero
    v(z, z) = Rational(0);
  }
  close_triangle(v);
  return DistMap(carrier, std::move(name), std::move(v));
}

MapFamily random_family(Rng& rng, const CarrierPtr& carrier, PiDomain pi, std::size_t min_maps,
                        std::size_t max_maps, std::string name) {
  const std::size_t count = min_maps + rng.below(max_maps - min_maps + 1);
  std::vector<DistMap> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    members.push_back(random_dist_map(rng, carrier, pi, name + std::to_string(i)));
  return MapFamily(carrier, std::move(name), std::move(members));
}

DistMap random_dominated_map(Rng& rng, const DistMap& bound, PiDomain pi, std::string name) {
  const Index n = bound.size();
  RationalMatrix v(n, n);
  const auto draw_leq = [&](const Rational& cap) {
    std::vector<Rational> options{cap};
    for (const auto& p : entry_pool())
      if (p < cap) options.push_back(p);
    return rng.pick(options);
  };
  if (pi == PiDomain::all_maps) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i, j) = draw_leq(bound.at(i, j));
    return DistMap(bound.carrier(), std::move(name), std::move(v));
  }
  for (Index i = 0; i < n; ++i) {
    v(i, i) = pi == PiDomain::pseudo_metrics ? Rational(0) : draw_leq(bound.at(i, i));
    for (Index j = i + 1; j < n; ++j)
      v(i, j) = v(j, i) = draw_leq(min(bound.at(i, j), bound.at(j, i)));
  }
  if (pi == PiDomain::weak_pseudo_metrics) v(0, 0) = Rational(0);
  close_triangle(v);  // entries only decrease, so domination is preserved
  return DistMap(bound.carrier(), std::move(name), std::move(v));
}

namespace {

struct TrialContext {
  Rng rng;
  PiDomain pi;
};

Json base_instance(const CarrierPtr& carrier) {
  Json doc;
  doc["carrier"] = carrier->names();
  doc["maps"] = Json::object();
  doc["families"] = Json::object();
  return doc;
}

void add_map(Json& doc, const DistMap& d) { doc["maps"][d.name()] = dist_map_to_json(d); }

void add_family(Json& doc, const std::string& name, const MapFamily& fam) {
  Json list = Json::array();
  for (const auto& d : fam.members()) {
    add_map(doc, d);
    list.push_back(d.name());
  }
  doc["families"][name] = std::move(list);
}

// Candidate maps likely (or guaranteed) to be members of the structure
// generated by the prepared family: scaled subfamily maxima, dominated
// draws, and fresh random maps. Only member-verified candidates are
// returned.
std::vector<DistMap> verified_members(TrialContext& ctx, const Absorber& structure,
                                      std::size_t want, std::size_t attempts,
                                      const std::string& prefix) {
  const MapFamily& family = structure.absorbing();
  std::vector<DistMap> out;
  static const std::vector<Rational> factors = {Rational(1) / 4, Rational(1) / 2, Rational(1),
                                                Rational(2), Rational(3)};
  for (std::size_t a = 0; a < attempts && out.size() < want; ++a) {
    std::optional<DistMap> candidate;
    const std::string name = prefix + std::to_string(out.size());
    switch (ctx.rng.below(3)) {
      case 0: {
        if (family.empty()) break;
        RationalMatrix acc = zero_matrix(family.carrier()->size());
        for (const auto& d : family.members())
          if (ctx.rng.coin()) acc = acc.cwiseMax(d.values());
        DistMap combo(family.carrier(), name, std::move(acc));
        candidate = scale(combo, ctx.rng.pick(factors));
        break;
      }
      case 1: {
        if (family.empty()) break;
        const DistMap& base = family[ctx.rng.below(family.size())];
        candidate = random_dominated_map(ctx.rng, base, ctx.pi, name);
        break;
      }
      default:
        candidate = random_dist_map(ctx.rng, family.carrier(), ctx.pi, name);
    }
    if (!candidate) continue;
    DistMap named(candidate->carrier(), name, candidate->values());
    if (admissible(classify_map(named), structure.kind().pi) && structure.member(named).holds)
      out.push_back(std::move(named));
  }
  return out;
}

std::optional<Counterexample> trial_preorder_equiv(TrialContext& ctx, Kind kind,
                                                   std::uint64_t trial) {
  const PreorderKind pk = make_preorder_kind(kind, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  const Absorber structure(pk, p);
  std::vector<DistMap> members = verified_members(ctx, structure, 3, 10, "q");
  if (members.size() < 2) return std::nullopt;  // vacuous draw
  const MapFamily pprime(carrier, "pprime", std::move(members));
  if (structure.absorbs(pprime).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_family(doc, "Pprime", pprime);
  return Counterexample{trial, std::move(doc),
                        "every member of Pprime is absorbed by P on its own, "
                        "but the family Pprime is not"};
}

std::optional<Counterexample> trial_closure_domination(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind pk = make_preorder_kind(Kind::topological, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  const Absorber structure(pk, p);
  std::vector<DistMap> members = verified_members(ctx, structure, 1, 6, "d");
  if (members.empty()) return std::nullopt;
  const DistMap d = DistMap(carrier, "d", members.front().values());
  const DistMap dprime = random_dominated_map(ctx.rng, d, ctx.pi, "dprime");
  if (structure.member(dprime).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_map(doc, d);
  add_map(doc, dprime);
  return Counterexample{trial, std::move(doc),
                        "dprime <= d, d is a topological member of P, dprime is not"};
}

std::optional<Counterexample> trial_closure_scale(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind pk = make_preorder_kind(Kind::topological, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  const Absorber structure(pk, p);
  std::vector<DistMap> members = verified_members(ctx, structure, 1, 6, "d");
  if (members.empty()) return std::nullopt;
  const DistMap d = DistMap(carrier, "d", members.front().values());
  static const std::vector<Rational> factors = {Rational(1) / 4, Rational(1) / 2, Rational(2),
                                                Rational(3), Rational(5)};
  const Rational alpha = ctx.rng.pick(factors);
  DistMap scaled(carrier, "scaled", scale(d, alpha).values());
  if (structure.member(scaled).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_map(doc, d);
  doc["data"]["alpha"] = to_string(alpha);
  return Counterexample{trial, std::move(doc),
                        "d is a topological member of P but alpha*d is not"};
}

std::optional<Counterexample> trial_closure_max(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind pk = make_preorder_kind(Kind::topological, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  const Absorber structure(pk, p);
  std::vector<DistMap> members = verified_members(ctx, structure, 2, 10, "d");
  if (members.size() < 2) return std::nullopt;
  const DistMap d1 = DistMap(carrier, "d1", members[0].values());
  const DistMap d2 = DistMap(carrier, "d2", members[1].values());
  DistMap combined(carrier, "max", max_combine(d1, d2).values());
  if (structure.member(combined).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_map(doc, d1);
  add_map(doc, d2);
  return Counterexample{trial, std::move(doc),
                        "d1 and d2 are topological members of P but max(d1,d2) is not"};
}

std::optional<Counterexample> trial_lipschitz_implies_topological(TrialContext& ctx,
                                                                  std::uint64_t trial) {
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  static const std::vector<Rational> factors = {Rational(1) / 2, Rational(1), Rational(2),
                                                Rational(3)};
  // Anything dominated by a positive multiple of the family maximum is a
  // Lipschitz member by construction.
  DistMap bound(carrier, "bound", (ctx.rng.pick(factors) * family_max(p).values()).eval());
  const DistMap dprime = random_dominated_map(ctx.rng, bound, ctx.pi, "dprime");
  const PreorderKind lip = make_preorder_kind(Kind::lipschitz, ctx.pi);
  const PreorderKind top = make_preorder_kind(Kind::topological, ctx.pi);
  if (!member(dprime, p, lip).holds) return std::nullopt;
  if (member(dprime, p, top).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_map(doc, dprime);
  return Counterexample{trial, std::move(doc),
                        "dprime is a Lipschitz member of P but not a topological member"};
}

std::optional<Counterexample> trial_strong_implies_delta(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind strong = make_preorder_kind(Kind::strong_delta_local, ctx.pi);
  const PreorderKind delta = make_preorder_kind(Kind::delta_local, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  MapFamily pprime = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "q");
  if (ctx.rng.coin()) {
    // Bias toward non-vacuous draws: scaled subfamily maxima are always
    // absorbed in the pointwise way.
    const Absorber structure(strong, p);
    std::vector<DistMap> members = verified_members(ctx, structure, 2, 6, "q");
    if (!members.empty()) pprime = MapFamily(carrier, "q", std::move(members));
  }
  if (!absorbs(strong, pprime, p).holds) return std::nullopt;
  if (absorbs(delta, pprime, p).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_family(doc, "Pprime", pprime);
  return Counterexample{trial, std::move(doc),
                        "Pprime is absorbed pointwise but not union-wise"};
}

std::optional<Counterexample> trial_delta_converse(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind strong = make_preorder_kind(Kind::strong_delta_local, ctx.pi);
  const PreorderKind delta = make_preorder_kind(Kind::delta_local, ctx.pi);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "p");
  const MapFamily pprime = random_family(ctx.rng, carrier, ctx.pi, 1, 3, "q");
  if (!absorbs(delta, pprime, p).holds) return std::nullopt;
  if (absorbs(strong, pprime, p).holds) return std::nullopt;

  Json doc = base_instance(carrier);
  add_family(doc, "P", p);
  add_family(doc, "Pprime", pprime);
  return Counterexample{trial, std::move(doc),
                        "Pprime is absorbed union-wise but not pointwise"};
}

std::optional<Counterexample> trial_delta_rule(TrialContext& ctx, std::uint64_t trial) {
  const PreorderKind ql = make_preorder_kind(Kind::quasi_lipschitz, PiDomain::pseudo_metrics);
  CarrierPtr carrier = random_carrier(ctx.rng, 2, 4);
  const MapFamily p = random_family(ctx.rng, carrier, PiDomain::pseudo_metrics, 1, 3, "p");
  const MapFamily pprime = random_family(ctx.rng, carrier, PiDomain::pseudo_metrics, 1, 3, "q");
  const AbsorptionResult res = absorbs(ql, pprime, p);
  if (!res.holds) return std::nullopt;
  const auto& w = std::get<LipschitzWitness>(res.witness);
  const Rational delta = Rational(1) / (2 * w.alpha);
  const Rational eps(1);
  const DistMap big = family_max(p);
  for (const auto& d : pprime.members())
    for (Index i = 0; i < carrier->size(); ++i)
      for (Index j = 0; j < carrier->size(); ++j)
        if (!(delta < big.at(i, j)) && eps < d.at(i, j)) {
          Json doc = base_instance(carrier);
          add_family(doc, "P", p);
          add_family(doc, "Pprime", pprime);
          doc["data"]["alpha"] = to_string(w.alpha);
          return Counterexample{trial, std::move(doc),
                                "delta = 1/(2*alpha) fails the uniform rule at eps = 1"};
        }
  return std::nullopt;
}

std::optional<Counterexample> run_trial(PropertyId prop, TrialContext& ctx, std::uint64_t trial) {
  switch (prop) {
    case PropertyId::preorder_equiv_topological:
      return trial_preorder_equiv(ctx, Kind::topological, trial);
    case PropertyId::preorder_equiv_delta_local:
      return trial_preorder_equiv(ctx, Kind::delta_local, trial);
    case PropertyId::closure_domination_topological:
      return trial_closure_domination(ctx, trial);
    case PropertyId::closure_scale_topological: return trial_closure_scale(ctx, trial);
    case PropertyId::closure_max_topological: return trial_closure_max(ctx, trial);
    case PropertyId::lipschitz_implies_topological_membership:
      return trial_lipschitz_implies_topological(ctx, trial);
    case PropertyId::strong_implies_delta_local: return trial_strong_implies_delta(ctx, trial);
    case PropertyId::delta_local_converse_fails: return trial_delta_converse(ctx, trial);
    case PropertyId::quasi_lipschitz_delta_rule: return trial_delta_rule(ctx, trial);
  }
  throw std::invalid_argument("unknown property id");
}

PiDomain property_pi(PropertyId prop) {
  return prop == PropertyId::quasi_lipschitz_delta_rule ? PiDomain::pseudo_metrics
                                                        : PiDomain::all_maps;
}

}  // namespace

FalsifyReport falsify(PropertyId prop, std::uint64_t trials, std::uint64_t seed,
                      std::optional<PiDomain> pi_override) {
  if (trials < 1) throw std::invalid_argument("falsify: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  FalsifyReport report;
  report.prop = prop;
  report.trials_requested = trials;
  report.seed = seed;
  const PiDomain pi = pi_override.value_or(property_pi(prop));

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    TrialContext ctx{Rng(sub_seed(seed, trial)), pi};
    if (auto ce = run_trial(prop, ctx, trial)) {
      if (!revalidate(prop, ce->instance))
        throw std::logic_error("falsify: counterexample failed re-validation");
      report.counterexample = std::move(ce);
      report.trials_executed = trial + 1;
      report.runtime_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
  }
  report.trials_executed = trials;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool revalidate(PropertyId prop, const Json& instance) {
  const Instance inst = parse_instance(instance.dump());
  // Verdicts are pi-independent (pi only gates admission), so re-validation
  // always runs over all maps.
  switch (prop) {
    case PropertyId::preorder_equiv_topological:
    case PropertyId::preorder_equiv_delta_local: {
      const Kind kind = prop == PropertyId::preorder_equiv_topological ? Kind::topological
                                                                       : Kind::delta_local;
      const MapFamily& p = inst.family("P");
      const MapFamily& pprime = inst.family("Pprime");
      const PreorderKind pk = make_preorder_kind(kind, PiDomain::all_maps);
      for (const auto& d : pprime.members())
        if (!member(d, p, pk).holds) return false;
      return !absorbs(pk, pprime, p).holds;
    }
    case PropertyId::closure_domination_topological: {
      const PreorderKind pk = make_preorder_kind(Kind::topological, PiDomain::all_maps);
      const MapFamily& p = inst.family("P");
      const DistMap& d = inst.map("d");
      const DistMap& dprime = inst.map("dprime");
      return dominates(dprime, d) && member(d, p, pk).holds && !member(dprime, p, pk).holds;
    }
    case PropertyId::closure_scale_topological: {
      const PreorderKind pk = make_preorder_kind(Kind::topological, PiDomain::all_maps);
      const MapFamily& p = inst.family("P");
      const DistMap& d = inst.map("d");
      const Rational alpha = parse_rational(instance.at("data").at("alpha").get<std::string>());
      return member(d, p, pk).holds && !member(scale(d, alpha), p, pk).holds;
    }
    case PropertyId::closure_max_topological: {
      const PreorderKind pk = make_preorder_kind(Kind::topological, PiDomain::all_maps);
      const MapFamily& p = inst.family("P");
      const DistMap& d1 = inst.map("d1");
      const DistMap& d2 = inst.map("d2");
      return member(d1, p, pk).holds && member(d2, p, pk).holds &&
             !member(max_combine(d1, d2), p, pk).holds;
    }
    case PropertyId::lipschitz_implies_topological_membership: {
      const MapFamily& p = inst.family("P");
      const DistMap& dprime = inst.map("dprime");
      return member(dprime, p, make_preorder_kind(Kind::lipschitz, PiDomain::all_maps)).holds &&
             !member(dprime, p, make_preorder_kind(Kind::topological, PiDomain::all_maps)).holds;
    }
    case PropertyId::strong_implies_delta_local: {
      const MapFamily& p = inst.family("P");
      const MapFamily& pprime = inst.family("Pprime");
      return absorbs(make_preorder_kind(Kind::strong_delta_local, PiDomain::all_maps), pprime, p)
                 .holds &&
             !absorbs(make_preorder_kind(Kind::delta_local, PiDomain::all_maps), pprime, p).holds;
    }
    case PropertyId::delta_local_converse_fails: {
      const MapFamily& p = inst.family("P");
      const MapFamily& pprime = inst.family("Pprime");
      return absorbs(make_preorder_kind(Kind::delta_local, PiDomain::all_maps), pprime, p).holds &&
             !absorbs(make_preorder_kind(Kind::strong_delta_local, PiDomain::all_maps), pprime, p)
                  .holds;
    }
    case PropertyId::quasi_lipschitz_delta_rule: {
      const MapFamily& p = inst.family("P");
      const MapFamily& pprime = inst.family("Pprime");
      const AbsorptionResult res =
          absorbs(make_preorder_kind(Kind::quasi_lipschitz, PiDomain::pseudo_metrics), pprime, p);
      if (!res.holds) return false;
      const auto& w = std::get<LipschitzWitness>(res.witness);
      const Rational delta = Rational(1) / (2 * w.alpha);
      const DistMap big = family_max(p);
      for (const auto& d : pprime.members())
        for (Index i = 0; i < p.carrier()->size(); ++i)
          for (Index j = 0; j < p.carrier()->size(); ++j)
            if (!(delta < big.at(i, j)) && Rational(1) < d.at(i, j)) return true;
      return false;
    }
  }
  throw std::invalid_argument("unknown property id");
}

Json report_to_json(const FalsifyReport& report) {
  const PropertyInfo& info = property_info(report.prop);
  Json doc;
  doc["property"] = std::string(info.name);
  doc["claim"] = std::string(info.claim);
  doc["seed"] = report.seed;
  doc["trials_requested"] = report.trials_requested;
  doc["trials_executed"] = report.trials_executed;
  if (report.counterexample) {
    doc["verdict"] = "counterexample";
    Json ce;
    ce["trial"] = report.counterexample->trial;
    ce["details"] = report.counterexample->details;
    ce["instance"] = report.counterexample->instance;
    doc["counterexample"] = std::move(ce);
  } else {
    doc["verdict"] = "none-found";
  }
  return doc;
}

}  // namespace realstruct
