#pragma once

#include "realstruct/generate.hpp"

namespace realstruct {

/// Two-valued realizing family {d_x : x in X} with d_x(u,v) = 0 when both
/// u and v lie in the minimal open m(x) (or u = v = x), and 1 otherwise.
/// Each d_x is symmetric, satisfies the triangle inequality, and vanishes at
/// (x,x); the family generates exactly the given topology
/// (proof in docs/finite-model.md).
MapFamily realize_topology(const Topology& t);

/// All labeled topologies on an n-element carrier (elements named "a".."e"),
/// enumerated through minimal-open assignments, canonically ordered.
/// n ranges over 1..4; n = 5 (6942 topologies) is allowed only when
/// allow_large is set.
std::vector<Topology> enumerate_topologies(int n, bool allow_large = false);

}  // namespace realstruct
