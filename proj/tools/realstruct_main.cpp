// Command-line surface for the realstruct library. Every subcommand emits a
// single JSON document on standard output; decision subcommands exit 0 when
// the relation holds, 1 when it fails, and 2 on usage or data errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "realstruct/io.hpp"
#include "realstruct/lab.hpp"
#include "realstruct/morphisms.hpp"
#include "realstruct/realize.hpp"
#include "realstruct/structures.hpp"

namespace rs = realstruct;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct KindFlags {
  std::string kind;
  std::string pi;

  rs::PreorderKind resolve() const {
    const rs::Kind k = rs::kind_from_string(kind);
    if (pi.empty()) return rs::make_preorder_kind(k);
    return rs::make_preorder_kind(k, rs::pi_from_string(pi));
  }
};

void add_kind_flags(CLI::App* cmd, KindFlags& flags) {
  cmd->add_option("--kind", flags.kind,
                  "preorder kind: topological|delta-local|strong-delta-local|lipschitz|"
                  "uniform|quasi-lipschitz|uniform-quasi-lipschitz|local-quasi-lipschitz")
      ->required();
  cmd->add_option("--pi", flags.pi, "map universe: all|weak|pseudo (default: kind's natural one)");
}

void emit(const rs::Json& doc) { std::cout << rs::render_document(doc); }

rs::Json kind_header(const rs::PreorderKind& pk) {
  rs::Json doc;
  doc["kind"] = std::string(rs::to_string(pk.kind));
  doc["pi"] = std::string(rs::to_string(pk.pi));
  return doc;
}

int emit_decision(rs::Json doc, bool holds) {
  doc["holds"] = holds;
  emit(doc);
  return holds ? kExitHolds : kExitFails;
}

rs::RealSpace load_space(const std::string& path, const std::string& family,
                         const rs::PreorderKind& pk) {
  const rs::Instance inst = rs::parse_instance(rs::read_file(path));
  return rs::RealSpace(inst.family(family), pk);
}

std::uint64_t same_type_bound() {
  if (const char* env = std::getenv("REALSTRUCT_MAX_SEARCH")) return std::stoull(env);
  return 1000000;
}

rs::Json instance_doc_from_space(const rs::RealSpace& space, const std::string& family_name) {
  rs::Instance out;
  out.carrier = space.carrier();
  std::vector<rs::DistMap> members;
  for (const auto& d : space.generators().members()) out.maps.emplace(d.name(), d);
  out.families.emplace(family_name,
                       rs::MapFamily(space.carrier(), family_name,
                                     space.generators().members()));
  return rs::instance_to_json(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for map-generated filters, topologies and absorption preorders"};
  app.require_subcommand(1);

  std::string inst_path, inst_path2, map_file;
  std::string map_name, family_name, family2_name, point_name, subset_csv, prop_name;
  KindFlags kind_flags;
  std::vector<std::string> target_specs, factor_specs;
  int enum_n = 0;
  bool count_only = false, allow_large = false;
  std::uint64_t trials = 10000, seed = 0;
  rs::Index max_product = 64;

  // check
  auto* c_check = app.add_subcommand("check", "classify a map");
  c_check->add_option("instance", inst_path)->required();
  c_check->add_option("--map", map_name)->required();

  // topology
  auto* c_topology = app.add_subcommand("topology", "topology generated by a family");
  c_topology->add_option("instance", inst_path)->required();
  c_topology->add_option("--family", family_name)->required();

  // filter
  auto* c_filter = app.add_subcommand("filter", "minimal entourages of the generated filter");
  c_filter->add_option("instance", inst_path)->required();
  c_filter->add_option("--family", family_name)->required();

  // minopen
  auto* c_minopen = app.add_subcommand("minopen", "minimal open sets of the generated topology");
  c_minopen->add_option("instance", inst_path)->required();
  c_minopen->add_option("--family", family_name)->required();
  c_minopen->add_option("--point", point_name);

  // absorbs
  auto* c_absorbs = app.add_subcommand("absorbs", "decide family absorption");
  c_absorbs->add_option("instance", inst_path)->required();
  add_kind_flags(c_absorbs, kind_flags);
  c_absorbs->add_option("--absorbed", family_name)->required();
  c_absorbs->add_option("--absorbing", family2_name)->required();

  // member
  auto* c_member = app.add_subcommand("member", "decide structure membership of a map");
  c_member->add_option("instance", inst_path)->required();
  add_kind_flags(c_member, kind_flags);
  c_member->add_option("--map", map_name)->required();
  c_member->add_option("--family", family_name)->required();

  // equivalent
  auto* c_equiv = app.add_subcommand("equivalent", "decide two-way absorption");
  c_equiv->add_option("instance", inst_path)->required();
  add_kind_flags(c_equiv, kind_flags);
  c_equiv->add_option("--left", family_name)->required();
  c_equiv->add_option("--right", family2_name)->required();

  // morphism
  auto* c_morph = app.add_subcommand("morphism", "decide whether a point map is a morphism");
  c_morph->add_option("domain", inst_path)->required();
  c_morph->add_option("codomain", inst_path2)->required();
  c_morph->add_option("pointmap", map_file)->required();
  add_kind_flags(c_morph, kind_flags);
  c_morph->add_option("--domain-family", family_name)->required();
  c_morph->add_option("--codomain-family", family2_name)->required();

  // oracle-morphism
  auto* c_oracle = app.add_subcommand(
      "oracle-morphism", "independent morphism oracle (continuity / epsilon characterization)");
  c_oracle->add_option("domain", inst_path)->required();
  c_oracle->add_option("codomain", inst_path2)->required();
  c_oracle->add_option("pointmap", map_file)->required();
  add_kind_flags(c_oracle, kind_flags);
  c_oracle->add_option("--domain-family", family_name)->required();
  c_oracle->add_option("--codomain-family", family2_name)->required();

  // same-type
  auto* c_same = app.add_subcommand("same-type", "search for morphisms in both directions");
  c_same->add_option("left", inst_path)->required();
  c_same->add_option("right", inst_path2)->required();
  add_kind_flags(c_same, kind_flags);
  c_same->add_option("--left-family", family_name)->required();
  c_same->add_option("--right-family", family2_name)->required();

  // initial
  auto* c_initial = app.add_subcommand("initial", "initial structure for a family of maps");
  c_initial->add_option("domain", inst_path, "instance supplying the domain carrier")->required();
  add_kind_flags(c_initial, kind_flags);
  c_initial
      ->add_option("--target", target_specs,
                   "codomain-instance,family,pointmap-file (repeatable)")
      ->required();

  // subspace
  auto* c_subspace = app.add_subcommand("subspace", "structure induced on a subset");
  c_subspace->add_option("instance", inst_path)->required();
  add_kind_flags(c_subspace, kind_flags);
  c_subspace->add_option("--family", family_name)->required();
  c_subspace->add_option("--subset", subset_csv, "comma-separated element names")->required();

  // product
  auto* c_product = app.add_subcommand("product", "product structure");
  add_kind_flags(c_product, kind_flags);
  c_product->add_option("--factor", factor_specs, "instance,family (repeatable)")->required();
  c_product->add_option("--max-size", max_product, "product carrier size bound");

  // realize
  auto* c_realize = app.add_subcommand("realize", "weak-pseudo-metric family generating a topology");
  c_realize->add_option("topology", inst_path, "topology document")->required();

  // enumerate
  auto* c_enum = app.add_subcommand("enumerate", "all topologies on a small carrier");
  c_enum->add_option("-n", enum_n, "carrier size (1..4; 5 with --large)")->required();
  c_enum->add_flag("--count-only", count_only);
  c_enum->add_flag("--large", allow_large, "allow n = 5");

  // falsify
  auto* c_falsify = app.add_subcommand("falsify", "randomized search for a counterexample");
  c_falsify->add_option("--prop", prop_name, "property identifier")->required();
  c_falsify->add_option("--trials", trials);
  c_falsify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (*c_check) {
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      rs::Json doc;
      doc["map"] = map_name;
      doc.update(rs::map_class_to_json(rs::classify_map(inst.map(map_name))));
      emit(doc);
      return kExitHolds;
    }

    if (*c_topology) {
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      emit(rs::topology_to_json(rs::topology_from_family(inst.family(family_name))));
      return kExitHolds;
    }

    if (*c_filter) {
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      const rs::DeltaLocalFilter f = rs::delta_local_filter(inst.family(family_name));
      rs::Json entourages = rs::Json::object();
      for (rs::Index x = 0; x < inst.carrier->size(); ++x)
        entourages[inst.carrier->name(x)] = rs::pair_set_to_json(f.minimal_entourage(x));
      rs::Json doc;
      doc["carrier"] = inst.carrier->names();
      doc["minimal_entourages"] = std::move(entourages);
      emit(doc);
      return kExitHolds;
    }

    if (*c_minopen) {
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      const rs::Topology t = rs::topology_from_family(inst.family(family_name));
      rs::Json doc;
      doc["carrier"] = inst.carrier->names();
      if (!point_name.empty()) {
        doc["minimal_open"] = rs::point_set_to_json(t.minimal_open(inst.carrier->index_of(point_name)));
      } else {
        rs::Json mins = rs::Json::object();
        for (rs::Index x = 0; x < inst.carrier->size(); ++x)
          mins[inst.carrier->name(x)] = rs::point_set_to_json(t.minimal_open(x));
        doc["minimal_opens"] = std::move(mins);
      }
      emit(doc);
      return kExitHolds;
    }

    if (*c_absorbs) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      const rs::MapFamily& absorbed = inst.family(family_name);
      const rs::MapFamily& absorbing = inst.family(family2_name);
      const rs::AbsorptionResult res = rs::absorbs(pk, absorbed, absorbing);
      rs::Json doc = kind_header(pk);
      doc["absorbed"] = family_name;
      doc["absorbing"] = family2_name;
      doc["witness"] = rs::witness_to_json(res.witness, absorbing);
      return emit_decision(std::move(doc), res.holds);
    }

    if (*c_member) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      const rs::MapFamily& family = inst.family(family_name);
      const rs::AbsorptionResult res = rs::member(inst.map(map_name), family, pk);
      rs::Json doc = kind_header(pk);
      doc["map"] = map_name;
      doc["family"] = family_name;
      doc["witness"] = rs::witness_to_json(res.witness, family);
      return emit_decision(std::move(doc), res.holds);
    }

    if (*c_equiv) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      const bool holds = rs::equivalent(inst.family(family_name), inst.family(family2_name), pk);
      rs::Json doc = kind_header(pk);
      doc["left"] = family_name;
      doc["right"] = family2_name;
      return emit_decision(std::move(doc), holds);
    }

    if (*c_morph || *c_oracle) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance dom = rs::parse_instance(rs::read_file(inst_path));
      const rs::Instance cod = rs::parse_instance(rs::read_file(inst_path2));
      const rs::PointMap f =
          rs::parse_point_map(rs::read_file(map_file), dom.carrier, cod.carrier);
      const rs::MapFamily& px = dom.family(family_name);
      const rs::MapFamily& py = cod.family(family2_name);
      rs::Json doc = kind_header(pk);
      doc["domain_family"] = family_name;
      doc["codomain_family"] = family2_name;
      if (*c_morph) {
        const rs::MorphismResult res =
            rs::is_morphism(f, rs::RealSpace(px, pk), rs::RealSpace(py, pk));
        if (res.failing_generator) doc["failing_generator"] = *res.failing_generator;
        doc["witness"] = rs::witness_to_json(res.witness, px);
        return emit_decision(std::move(doc), res.holds);
      }
      bool holds = false;
      if (pk.kind == rs::Kind::topological) {
        doc["oracle"] = "continuity";
        holds = rs::continuity_oracle(f, rs::topology_from_family(px),
                                      rs::topology_from_family(py));
      } else {
        doc["oracle"] = "epsilon-characterization";
        holds = rs::epsilon_morphism_oracle(pk, f, px, py);
      }
      return emit_decision(std::move(doc), holds);
    }

    if (*c_same) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::RealSpace left = load_space(inst_path, family_name, pk);
      const rs::RealSpace right = load_space(inst_path2, family2_name, pk);
      const rs::SameTypeResult res = rs::same_type_search(left, right, same_type_bound());
      rs::Json doc = kind_header(pk);
      if (res.same_type) {
        doc["f"] = rs::point_map_to_json(*res.forward);
        doc["g"] = rs::point_map_to_json(*res.backward);
      }
      return emit_decision(std::move(doc), res.same_type);
    }

    if (*c_initial) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance dom = rs::parse_instance(rs::read_file(inst_path));
      std::vector<rs::InitialTarget> targets;
      for (const auto& spec : target_specs) {
        const auto first = spec.find(',');
        const auto second = spec.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos)
          throw std::invalid_argument("--target expects instance,family,pointmap-file");
        const rs::Instance cod = rs::parse_instance(rs::read_file(spec.substr(0, first)));
        const rs::MapFamily& fam = cod.family(spec.substr(first + 1, second - first - 1));
        rs::PointMap f = rs::parse_point_map(rs::read_file(spec.substr(second + 1)), dom.carrier,
                                             cod.carrier);
        targets.push_back({std::move(f), rs::RealSpace(fam, pk)});
      }
      emit(instance_doc_from_space(rs::initial_family(targets), "induced"));
      return kExitHolds;
    }

    if (*c_subspace) {
      const rs::PreorderKind pk = kind_flags.resolve();
      const rs::Instance inst = rs::parse_instance(rs::read_file(inst_path));
      rs::PointSet subset = rs::empty_point_set(inst.carrier);
      std::stringstream ss(subset_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        subset.mask(inst.carrier->index_of(item)) = true;
      const rs::RealSpace sub =
          rs::subspace_family(rs::RealSpace(inst.family(family_name), pk), subset);
      emit(instance_doc_from_space(sub, family_name));
      return kExitHolds;
    }

    if (*c_product) {
      const rs::PreorderKind pk = kind_flags.resolve();
      std::vector<rs::RealSpace> factors;
      for (const auto& spec : factor_specs) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("--factor expects instance,family");
        factors.push_back(load_space(spec.substr(0, comma), spec.substr(comma + 1), pk));
      }
      emit(instance_doc_from_space(rs::product_family(factors, max_product), "product"));
      return kExitHolds;
    }

    if (*c_realize) {
      const rs::Topology t = rs::parse_topology(rs::read_file(inst_path));
      const rs::MapFamily family = rs::realize_topology(t);
      rs::Instance out;
      out.carrier = t.carrier();
      for (const auto& d : family.members()) out.maps.emplace(d.name(), d);
      out.families.emplace(family.name(), family);
      emit(rs::instance_to_json(out));
      return kExitHolds;
    }

    if (*c_enum) {
      const auto topologies = rs::enumerate_topologies(enum_n, allow_large);
      rs::Json doc;
      doc["n"] = enum_n;
      doc["count"] = topologies.size();
      if (!count_only) {
        rs::Json list = rs::Json::array();
        for (const auto& t : topologies) list.push_back(rs::topology_to_json(t));
        doc["topologies"] = std::move(list);
      }
      emit(doc);
      return kExitHolds;
    }

    if (*c_falsify) {
      const rs::PropertyId prop = rs::property_from_string(prop_name);
      const rs::FalsifyReport report = rs::falsify(prop, trials, seed);
      std::cerr << "runtime: " << report.runtime_seconds << " s\n";
      emit(rs::report_to_json(report));
      return report.counterexample ? kExitFails : kExitHolds;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
