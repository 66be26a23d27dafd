#pragma once

#include <string>
#include <vector>

#include "realstruct/lab.hpp"
#include "realstruct/structures.hpp"

namespace rs = realstruct;

// Builds a map from rows of rational strings.
inline rs::DistMap dm(const rs::CarrierPtr& carrier, const std::string& name,
                      const std::vector<std::vector<std::string>>& rows) {
  const rs::Index n = carrier->size();
  rs::RationalMatrix v(n, n);
  for (rs::Index i = 0; i < n; ++i)
    for (rs::Index j = 0; j < n; ++j)
      v(i, j) = rs::parse_rational(rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)));
  return rs::DistMap(carrier, name, v);
}

inline rs::MapFamily fam(const rs::CarrierPtr& carrier, const std::string& name,
                         std::vector<rs::DistMap> members) {
  return rs::MapFamily(carrier, name, std::move(members));
}

inline rs::PointSet pts(const rs::CarrierPtr& carrier, const std::vector<std::string>& names) {
  rs::PointSet s = rs::empty_point_set(carrier);
  for (const auto& n : names) s.mask(carrier->index_of(n)) = true;
  return s;
}

inline rs::Rational rat(const std::string& s) { return rs::parse_rational(s); }
