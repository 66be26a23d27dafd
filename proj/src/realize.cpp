#include "realstruct/realize.hpp"

#include <stdexcept>

namespace realstruct {

MapFamily realize_topology(const Topology& t) {
  const CarrierPtr& carrier = t.carrier();
  const Index n = carrier->size();
  std::vector<DistMap> maps;
  maps.reserve(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    const PointSet& m = t.minimal_open(x);
    RationalMatrix v(n, n);
    for (Index u = 0; u < n; ++u)
      for (Index w = 0; w < n; ++w) {
        const bool zero = (m.contains(u) && m.contains(w)) || (u == x && w == x);
        v(u, w) = zero ? Rational(0) : Rational(1);
      }
    maps.emplace_back(carrier, "d_" + carrier->name(x), std::move(v));
  }
  return MapFamily(carrier, "realized", std::move(maps));
}

std::vector<Topology> enumerate_topologies(int n, bool allow_large) {
  const int cap = allow_large ? 5 : 4;
  if (n < 1 || n > cap)
    throw std::invalid_argument("enumerate_topologies: n must be in 1.." + std::to_string(cap));

  static const char* kNames[] = {"a", "b", "c", "d", "e"};
  std::vector<std::string> names(kNames, kNames + n);
  CarrierPtr carrier = make_carrier(names);

  // A minimal-open assignment determines the topology; an assignment is
  // valid iff x is in m(x) and y in m(x) implies m(y) subset of m(x).
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint32_t> choice(static_cast<std::size_t>(n));
  std::vector<Topology> out;

  const auto valid = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((choice[x] >> y) & 1)
          if ((choice[y] & ~choice[x]) != 0) return false;
    return true;
  };

  // Odometer over assignments, most significant digit first, so the output
  // comes out in lexicographic order of (m(x_0), ..., m(x_{n-1})).
  const auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (!valid()) return;
      std::vector<PointSet> mins;
      mins.reserve(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) {
        PointSet s = empty_point_set(carrier);
        for (int q = 0; q < n; ++q) s.mask(q) = (choice[p] >> q) & 1;
        mins.push_back(std::move(s));
      }
      out.emplace_back(carrier, std::move(mins));
      return;
    }
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      if (!((mask >> x) & 1)) continue;  // x must lie in m(x)
      choice[static_cast<std::size_t>(x)] = mask;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace realstruct
