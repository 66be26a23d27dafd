#include "realstruct/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace realstruct {

namespace {

// nlohmann keeps the last of two equal keys; detect duplicates up front.
void reject_duplicate_keys(const std::string& text) {
  std::vector<std::unordered_set<std::string>> stack;
  nlohmann::json::parser_callback_t cb = [&stack](int /*depth*/, nlohmann::json::parse_event_t ev,
                                                  nlohmann::json& parsed) {
    switch (ev) {
      case nlohmann::json::parse_event_t::object_start: stack.emplace_back(); break;
      case nlohmann::json::parse_event_t::object_end: stack.pop_back(); break;
      case nlohmann::json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!stack.back().insert(key).second)
          throw std::invalid_argument("duplicate name '" + key + "'");
        break;
      }
      default: break;
    }
    return true;
  };
  nlohmann::json::parse(text, cb);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    reject_duplicate_keys(text);
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const nlohmann::json& expect(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return doc.at(key);
}

CarrierPtr parse_carrier(const nlohmann::json& doc) {
  const auto& arr = expect(doc, "carrier");
  if (!arr.is_array()) throw std::invalid_argument("'carrier' must be an array of names");
  std::vector<std::string> names;
  for (const auto& e : arr) {
    if (!e.is_string()) throw std::invalid_argument("'carrier' must be an array of names");
    names.push_back(e.get<std::string>());
  }
  return make_carrier(std::move(names));
}

RationalMatrix parse_matrix(const nlohmann::json& rows, const std::string& name, Index n) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n)
    throw std::invalid_argument("map '" + name + "': shape mismatch (expected " +
                                std::to_string(n) + " rows)");
  RationalMatrix v(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw std::invalid_argument("map '" + name + "': shape mismatch in row " +
                                  std::to_string(i));
    for (Index j = 0; j < n; ++j) {
      const auto& cell = row.at(static_cast<std::size_t>(j));
      if (!cell.is_string())
        throw std::invalid_argument("map '" + name + "': entries must be rational strings");
      v(i, j) = parse_rational(cell.get<std::string>());
    }
  }
  return v;
}

}  // namespace

const DistMap& Instance::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw std::invalid_argument("unknown map '" + name + "'");
  return it->second;
}

const MapFamily& Instance::family(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) throw std::invalid_argument("unknown family '" + name + "'");
  return it->second;
}

Instance parse_instance(const std::string& text) {
  const nlohmann::json doc = parse_json(text);
  Instance out;
  out.carrier = parse_carrier(doc);
  const Index n = out.carrier->size();

  if (doc.contains("maps")) {
    const auto& maps = doc.at("maps");
    if (!maps.is_object()) throw std::invalid_argument("'maps' must be an object");
    for (const auto& [name, rows] : maps.items())
      out.maps.emplace(name, DistMap(out.carrier, name, parse_matrix(rows, name, n)));
  }

  if (doc.contains("families")) {
    const auto& families = doc.at("families");
    if (!families.is_object()) throw std::invalid_argument("'families' must be an object");
    for (const auto& [name, list] : families.items()) {
      if (!list.is_array())
        throw std::invalid_argument("family '" + name + "' must be an array of map names");
      std::vector<DistMap> members;
      for (const auto& ref : list) {
        if (!ref.is_string())
          throw std::invalid_argument("family '" + name + "' must be an array of map names");
        const auto member = ref.get<std::string>();
        auto it = out.maps.find(member);
        if (it == out.maps.end())
          throw std::invalid_argument("family '" + name + "': unknown map '" + member + "'");
        members.push_back(it->second);
      }
      out.families.emplace(name, MapFamily(out.carrier, name, std::move(members)));
    }
  }
  return out;
}

Json instance_to_json(const Instance& instance) {
  Json doc;
  doc["carrier"] = instance.carrier->names();
  Json maps = Json::object();
  for (const auto& [name, d] : instance.maps) {
    Json rows = Json::array();
    for (Index i = 0; i < d.size(); ++i) {
      Json row = Json::array();
      for (Index j = 0; j < d.size(); ++j) row.push_back(to_string(d.at(i, j)));
      rows.push_back(std::move(row));
    }
    maps[name] = std::move(rows);
  }
  doc["maps"] = std::move(maps);
  Json families = Json::object();
  for (const auto& [name, fam] : instance.families) {
    Json list = Json::array();
    for (const auto& d : fam.members()) list.push_back(d.name());
    families[name] = std::move(list);
  }
  doc["families"] = std::move(families);
  return doc;
}

Json point_set_to_json(const PointSet& s) {
  Json out = Json::array();
  for (const auto& name : s.element_names()) out.push_back(name);
  return out;
}

Json pair_set_to_json(const PairSet& s) {
  Json out = Json::array();
  for (Index i = 0; i < s.carrier->size(); ++i)
    for (Index j = 0; j < s.carrier->size(); ++j)
      if (s.contains(i, j)) out.push_back(Json::array({s.carrier->name(i), s.carrier->name(j)}));
  return out;
}

Json dist_map_to_json(const DistMap& d) {
  Json rows = Json::array();
  for (Index i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < d.size(); ++j) row.push_back(to_string(d.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json topology_to_json(const Topology& t) {
  Json doc;
  doc["carrier"] = t.carrier()->names();
  Json opens = Json::array();
  for (const auto& s : t.opens()) opens.push_back(point_set_to_json(s));
  doc["opens"] = std::move(opens);
  return doc;
}

Topology parse_topology(const std::string& text) {
  const nlohmann::json doc = parse_json(text);
  CarrierPtr carrier = parse_carrier(doc);
  const auto& arr = expect(doc, "opens");
  if (!arr.is_array()) throw std::invalid_argument("'opens' must be an array of element lists");
  std::vector<PointSet> opens;
  for (const auto& set : arr) {
    if (!set.is_array()) throw std::invalid_argument("'opens' must be an array of element lists");
    PointSet s = empty_point_set(carrier);
    for (const auto& e : set) {
      if (!e.is_string()) throw std::invalid_argument("open sets must list element names");
      s.mask(carrier->index_of(e.get<std::string>())) = true;
    }
    opens.push_back(std::move(s));
  }
  return topology_from_opens(carrier, opens);
}

PointMap parse_point_map(const std::string& text, const CarrierPtr& domain,
                         const CarrierPtr& codomain) {
  const nlohmann::json doc = parse_json(text);
  const auto& obj = expect(doc, "map");
  if (!obj.is_object()) throw std::invalid_argument("'map' must be an object");
  std::vector<Index> assignment(static_cast<std::size_t>(domain->size()), -1);
  for (const auto& [from, to] : obj.items()) {
    if (!to.is_string()) throw std::invalid_argument("'map' values must be element names");
    assignment[static_cast<std::size_t>(domain->index_of(from))] =
        codomain->index_of(to.get<std::string>());
  }
  for (Index i = 0; i < domain->size(); ++i)
    if (assignment[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("point map is partial: no image for '" + domain->name(i) + "'");
  return PointMap(domain, codomain, std::move(assignment));
}

Json point_map_to_json(const PointMap& f) {
  Json obj = Json::object();
  for (Index i = 0; i < f.domain()->size(); ++i)
    obj[f.domain()->name(i)] = f.codomain()->name(f(i));
  Json doc;
  doc["map"] = std::move(obj);
  return doc;
}

namespace {

Json subfamily_names(const MapFamily& absorbing, const std::vector<std::size_t>& ids) {
  Json out = Json::array();
  for (std::size_t i : ids) out.push_back(absorbing[i].name());
  return out;
}

}  // namespace

Json witness_to_json(const AbsorptionWitness& witness, const MapFamily& absorbing) {
  const CarrierPtr& carrier = absorbing.carrier();
  if (const auto* w = std::get_if<LipschitzWitness>(&witness)) {
    Json out;
    out["alpha"] = to_string(w->alpha);
    out["subfamily"] = subfamily_names(absorbing, w->subfamily);
    return out;
  }
  if (const auto* w = std::get_if<UniformWitness>(&witness)) {
    Json out;
    out["delta"] = to_string(w->delta);
    return out;
  }
  if (const auto* w = std::get_if<UniformQuasiLipschitzWitness>(&witness)) {
    Json out;
    out["alpha"] = to_string(w->alpha);
    out["beta"] = to_string(w->beta);
    out["subfamily"] = subfamily_names(absorbing, w->subfamily);
    return out;
  }
  if (const auto* w = std::get_if<LocalQuasiLipschitzWitness>(&witness)) {
    Json out;
    out["alpha"] = to_string(w->alpha);
    out["neighborhoods"] = "minimal-opens";
    out["subfamily"] = subfamily_names(absorbing, w->subfamily);
    return out;
  }
  if (const auto* w = std::get_if<TopologicalFailure>(&witness)) {
    Json out;
    out["open_not_absorbed"] = point_set_to_json(w->open_set);
    out["at_point"] = carrier->name(w->point);
    return out;
  }
  if (const auto* w = std::get_if<PointFailure>(&witness)) {
    Json out;
    out["point"] = carrier->name(w->point);
    return out;
  }
  if (const auto* w = std::get_if<PairFailure>(&witness)) {
    Json out;
    out["map"] = w->map_name;
    out["pair"] = Json::array({carrier->name(w->x1), carrier->name(w->x2)});
    if (w->point) out["point"] = carrier->name(*w->point);
    return out;
  }
  return Json(nullptr);
}

Json map_class_to_json(const MapClass& c) {
  Json out;
  out["symmetric"] = c.symmetric;
  out["triangle"] = c.triangle;
  out["diagonal_zero_points"] = point_set_to_json(c.diagonal_zero_points);
  out["classification"] = std::string(to_string(c.classification));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace realstruct
