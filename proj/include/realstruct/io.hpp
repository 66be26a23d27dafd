#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "realstruct/preorders.hpp"

namespace realstruct {

using Json = nlohmann::ordered_json;

/// A parsed instance document: one carrier, named maps, named families.
struct Instance {
  CarrierPtr carrier;
  std::map<std::string, DistMap> maps;
  std::map<std::string, MapFamily> families;

  const DistMap& map(const std::string& name) const;
  const MapFamily& family(const std::string& name) const;
};

/// Parses { "carrier": [names...], "maps": {name: [[rational,...],...]},
/// "families": {name: [map-names...]} }. Rationals are strings "p" or "p/q"
/// with p >= 0 and q >= 1; lowest terms are not required on input. Rejects
/// malformed rationals, shape mismatches, unknown map names, and duplicate
/// names.
Instance parse_instance(const std::string& text);

/// Canonical serialization: names sorted, rationals in lowest terms.
Json instance_to_json(const Instance& instance);

Json topology_to_json(const Topology& t);
Topology parse_topology(const std::string& text);

/// Parses { "map": {domain-element: codomain-element, ...} }; the assignment
/// must be total on the domain.
PointMap parse_point_map(const std::string& text, const CarrierPtr& domain,
                         const CarrierPtr& codomain);
Json point_map_to_json(const PointMap& f);

Json point_set_to_json(const PointSet& s);
Json pair_set_to_json(const PairSet& s);
Json dist_map_to_json(const DistMap& d);

/// Witness rendering for reports; absorbing supplies subfamily names and the
/// carrier supplies point names.
Json witness_to_json(const AbsorptionWitness& witness, const MapFamily& absorbing);

Json map_class_to_json(const MapClass& c);

std::string read_file(const std::string& path);

/// Canonical document rendering: two-space indentation and a trailing
/// newline, so identical inputs produce byte-identical reports.
std::string render_document(const Json& doc);

}  // namespace realstruct
