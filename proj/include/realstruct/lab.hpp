#pragma once

#include <cstdint>
#include <random>

#include "realstruct/io.hpp"

namespace realstruct {

/// Registered catalogue of claims the falsifier probes. Some are theorems at
/// this level (expected outcome: no counterexample), some are refutable; the
/// findings table lives in the README.
enum class PropertyId {
  preorder_equiv_topological,
  preorder_equiv_delta_local,
  closure_domination_topological,
  closure_scale_topological,
  closure_max_topological,
  lipschitz_implies_topological_membership,
  strong_implies_delta_local,
  delta_local_converse_fails,
  quasi_lipschitz_delta_rule
};

struct PropertyInfo {
  PropertyId id;
  std::string_view name;   // kebab-case identifier
  std::string_view claim;  // the statement under test, self-contained
};

const std::vector<PropertyInfo>& property_catalogue();
const PropertyInfo& property_info(PropertyId id);
PropertyId property_from_string(std::string_view name);

struct Counterexample {
  std::uint64_t trial = 0;
  Json instance;        // a standard instance document plus a "data" block
  std::string details;  // one-line human summary
};

struct FalsifyReport {
  PropertyId prop;
  std::uint64_t trials_requested = 0;
  std::uint64_t trials_executed = 0;
  std::uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
  double runtime_seconds = 0;  // never part of the canonical report
};

/// Draws random instances (carrier size 2..4, 1..3 maps, entries from
/// {0, 1/4, 1/2, 1, 2}, map class filtered per the property's domain),
/// evaluates the property, and stops at the first counterexample. Trials are
/// seeded independently from (seed, trial index), so runs are deterministic
/// and parallelizable. Every reported counterexample is re-validated from
/// its own serialization before being returned.
FalsifyReport falsify(PropertyId prop, std::uint64_t trials, std::uint64_t seed,
                      std::optional<PiDomain> pi_override = std::nullopt);

/// Re-evaluates a serialized counterexample instance; true iff it still
/// refutes the property.
bool revalidate(PropertyId prop, const Json& instance);

/// Canonical report document (runtime excluded: reports must be
/// byte-identical for identical (prop, trials, seed)).
Json report_to_json(const FalsifyReport& report);

// -- Deterministic generation helpers (shared with the test suites) ----------

std::uint64_t splitmix64(std::uint64_t z);
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial);

/// mt19937_64 with explicit bounding; std distributions are avoided because
/// their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : next() % k; }
  Index index_below(Index k) { return static_cast<Index>(below(static_cast<std::uint64_t>(k))); }
  bool coin() { return next() & 1; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

 private:
  std::mt19937_64 engine_;
};

/// The entry pool {0, 1/4, 1/2, 1, 2}: zeros and near-threshold values, so
/// draws hit the comparisons where behavior changes.
const std::vector<Rational>& entry_pool();

CarrierPtr random_carrier(Rng& rng, Index min_size, Index max_size);

/// A random map admissible for the domain: arbitrary entries for all-maps;
/// for the metric domains a symmetric draw (full or partial zero diagonal)
/// closed under min-plus until the triangle inequality holds.
DistMap random_dist_map(Rng& rng, const CarrierPtr& carrier, PiDomain pi, std::string name);

MapFamily random_family(Rng& rng, const CarrierPtr& carrier, PiDomain pi, std::size_t min_maps,
                        std::size_t max_maps, std::string name);

/// Entrywise random value <= the bound (pool values clipped to each entry),
/// optionally forced admissible for the metric domains.
DistMap random_dominated_map(Rng& rng, const DistMap& bound, PiDomain pi, std::string name);

}  // namespace realstruct
