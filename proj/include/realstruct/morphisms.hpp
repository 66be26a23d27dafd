#pragma once

#include <cstdint>

#include "realstruct/structures.hpp"

namespace realstruct {

struct MorphismResult {
  bool holds = false;
  /// On failure, the name of a codomain generator whose pullback is not
  /// absorbed on its own, when one exists (a family-level failure with every
  /// single pullback absorbed leaves this empty).
  std::optional<std::string> failing_generator;
  AbsorptionWitness witness;

  explicit operator bool() const { return holds; }
};

/// f : X -> Y is a morphism iff the pullbacks of the codomain generators are
/// absorbed by the domain generators (same kind on both sides).
MorphismResult is_morphism(const PointMap& f, const RealSpace& sx, const RealSpace& sy);

/// Continuity between finite topologies, checked through minimal opens:
/// for every x, f(m_X(x)) is a subset of m_Y(f(x)).
bool continuity_oracle(const PointMap& f, const Topology& tx, const Topology& ty);

/// Direct generator-level form of the epsilon characterizations for the
/// delta-local and strong-delta-local kinds, with the single comparison map
/// replaced by a finite-subfamily maximum. The epsilon quantifier on the
/// codomain side runs over the finitely many relevant thresholds (pulled
/// values of each codomain map, midpoints between consecutive values, and
/// one value above the maximum); the domain-side epsilon is eliminated by
/// threshold stabilization. See docs/finite-model.md.
bool epsilon_morphism_oracle(const PreorderKind& kind, const PointMap& f, const MapFamily& px,
                             const MapFamily& py);

class SearchBoundExceeded : public std::runtime_error {
 public:
  explicit SearchBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SameTypeResult {
  bool same_type = false;
  std::optional<PointMap> forward;   // X -> Y
  std::optional<PointMap> backward;  // Y -> X
};

/// Exhaustively searches for morphisms in both directions; returns the
/// lexicographically first witness in each. Throws SearchBoundExceeded when
/// |Y|^|X| + |X|^|Y| exceeds max_search.
SameTypeResult same_type_search(const RealSpace& sx, const RealSpace& sy,
                                std::uint64_t max_search = 1000000);

}  // namespace realstruct
