#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "realstruct/generate.hpp"

namespace realstruct {

/// The eight absorption preorders. The first four are defined over any maps;
/// the uniform/quasi-Lipschitz group is defined over pseudo-metrics only.
enum class Kind {
  topological,
  delta_local,
  strong_delta_local,
  lipschitz,
  uniform,
  quasi_lipschitz,
  uniform_quasi_lipschitz,
  local_quasi_lipschitz
};

/// The universe of maps the preorder lives on.
enum class PiDomain { all_maps, weak_pseudo_metrics, pseudo_metrics };

std::string_view to_string(Kind k);
std::string_view to_string(PiDomain pi);
Kind kind_from_string(std::string_view s);
PiDomain pi_from_string(std::string_view s);

/// Natural universe of a kind: pseudo-metrics for the uniform/quasi-Lipschitz
/// group, all maps otherwise.
PiDomain default_pi(Kind k);

struct PreorderKind {
  Kind kind;
  PiDomain pi;

  friend bool operator==(const PreorderKind&, const PreorderKind&) = default;
};

/// Validates the domain constraint: the uniform and quasi-Lipschitz kinds
/// require pi = pseudo-metrics.
PreorderKind make_preorder_kind(Kind k, PiDomain pi);
inline PreorderKind make_preorder_kind(Kind k) { return make_preorder_kind(k, default_pi(k)); }

bool admissible(const MapClass& c, PiDomain pi);
void require_admissible(const MapFamily& family, PiDomain pi);
void require_admissible(const DistMap& d, PiDomain pi);

// -- Witness records ---------------------------------------------------------

/// d' <= alpha * max over the subfamily, for every absorbed d'.
struct LipschitzWitness {
  std::vector<std::size_t> subfamily;  // indices into the absorbing family
  Rational alpha;
};

/// Constant rule delta_eps = delta for every eps: wherever the absorbing
/// maximum is <= delta it is exactly zero, so every absorbed map vanishes.
struct UniformWitness {
  Rational delta;
};

/// max <= beta implies d' <= alpha * max + eps, for every eps.
struct UniformQuasiLipschitzWitness {
  std::vector<std::size_t> subfamily;
  Rational alpha;
  Rational beta;
};

/// Per-point neighborhoods are fixed to the minimal opens of the absorbing
/// family's topology; alpha works on every such neighborhood square.
struct LocalQuasiLipschitzWitness {
  std::vector<std::size_t> subfamily;
  Rational alpha;
};

/// An open set of the absorbed family's topology that is not open for the
/// absorbing one (it is the minimal open of `point`).
struct TopologicalFailure {
  Index point;
  PointSet open_set;
};

/// Failure point for the delta-local kinds: for delta-local no minimal
/// entourage of the absorbing family fits inside M_point of the absorbed
/// one; for strong-delta-local the inclusion fails at the point itself.
struct PointFailure {
  Index point;
};

/// Zero-coincidence violation: the absorbing maximum vanishes at the pair
/// but the named absorbed map does not. `point` is set for the local kind
/// (the pair lies in that point's minimal-open square).
struct PairFailure {
  std::string map_name;
  Index x1;
  Index x2;
  std::optional<Index> point;
};

using AbsorptionWitness =
    std::variant<std::monostate, LipschitzWitness, UniformWitness, UniformQuasiLipschitzWitness,
                 LocalQuasiLipschitzWitness, TopologicalFailure, PointFailure, PairFailure>;

struct AbsorptionResult {
  bool holds = false;
  AbsorptionWitness witness;

  explicit operator bool() const { return holds; }
};

// -- Decision procedures ------------------------------------------------------

/// Decides "absorbing absorbs absorbed" for the given kind, by the
/// finite-carrier reductions (see docs/finite-model.md):
///   topological          tau(absorbed) subset of tau(absorbing)
///   delta-local          for all x there is y with M_y(absorbing) subset of M_x(absorbed)
///   strong-delta-local   for all x, M_x(absorbing) subset of M_x(absorbed)
///   lipschitz / quasi-lipschitz / uniform / uniform-quasi-lipschitz
///                        zero-coincidence of the pair, with kind-specific witnesses
///   local-quasi-lipschitz  zero-coincidence on each minimal-open square of
///                        the absorbing family's topology
/// Throws on carrier mismatch or a pi-domain violation.
AbsorptionResult absorbs(const PreorderKind& kind, const MapFamily& absorbed,
                         const MapFamily& absorbing);

/// Absorbing family prepared once (topology, minimal entourages, family
/// maximum — whatever its kind needs), for deciding many absorptions against
/// the same right-hand side. Probe batteries over a fixed structure go
/// through this.
class Absorber {
 public:
  Absorber(const PreorderKind& kind, MapFamily absorbing);

  const PreorderKind& kind() const { return kind_; }
  const MapFamily& absorbing() const { return absorbing_; }

  AbsorptionResult absorbs(const MapFamily& absorbed) const;
  AbsorptionResult member(const DistMap& d) const;

 private:
  PreorderKind kind_;
  MapFamily absorbing_;
  std::optional<Topology> topology_;            // topological, local-quasi-lipschitz
  std::vector<PairSet> entourages_;             // delta-local, strong-delta-local
  std::optional<DistMap> family_maximum_;       // zero-coincidence kinds
};

/// True iff, on every pair of `on`, whenever the maximum of the absorbing
/// family vanishes every absorbed map vanishes too. The common finite-carrier
/// core of the Lipschitz-type kinds.
bool zero_coincidence(const MapFamily& absorbed, const MapFamily& absorbing, const PairSet& on);

/// Membership of a single map in the structure generated by a family:
/// absorbs(kind, {d}, family).
AbsorptionResult member(const DistMap& d, const MapFamily& family, const PreorderKind& kind);

/// Absorption in both directions.
bool equivalent(const MapFamily& p, const MapFamily& q, const PreorderKind& kind);

/// Re-checks a positive witness against the defining inequality over all
/// pairs; eps-indexed kinds are validated at each sampled eps.
bool validate_witness(const PreorderKind& kind, const MapFamily& absorbed,
                      const MapFamily& absorbing, const AbsorptionWitness& witness,
                      std::span<const Rational> epsilons);

}  // namespace realstruct
