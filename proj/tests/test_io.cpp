#include <doctest.h>

#include "helpers.hpp"
#include "realstruct/io.hpp"

using namespace realstruct;

TEST_CASE("minimal instance parses") {
  const Instance inst =
      parse_instance(R"({"carrier":["a"],"maps":{"z":[["0"]]},"families":{"P":["z"]}})");
  CHECK(inst.carrier->size() == 1);
  CHECK(inst.map("z").at(0, 0).is_zero());
  CHECK(inst.family("P").size() == 1);
}

TEST_CASE("negative entries are rejected with a clear message") {
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"carrier":["a"],"maps":{"z":[["-1/2"]]}})"),
      doctest::Contains("negative value"), std::invalid_argument);
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"carrier":["a"],"maps":{"z":[["1/0"]]}})"),
                       doctest::Contains("zero denominator"), std::invalid_argument);
}

TEST_CASE("families must reference known maps") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"carrier":["a"],"maps":{},"families":{"P":["q"]}})"),
                       doctest::Contains("unknown map"), std::invalid_argument);
}

TEST_CASE("duplicate names are rejected") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"carrier":["a","a"],"maps":{}})"),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"carrier":["a"],"maps":{"z":[["0"]],"z":[["1"]]}})"),
      doctest::Contains("duplicate"), std::invalid_argument);
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"carrier":["a","b"],"maps":{"z":[["0"]]}})"),
                       doctest::Contains("shape mismatch"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"carrier":["a","b"],"maps":{"z":[["0","1"],["1"]]}})"),
      doctest::Contains("shape mismatch"), std::invalid_argument);
}

TEST_CASE("the empty carrier is rejected") {
  CHECK_THROWS_AS(parse_instance(R"({"carrier":[],"maps":{}})"), std::invalid_argument);
}

TEST_CASE("serialization canonicalizes and round-trips") {
  const std::string text =
      R"({"carrier":["a","b"],"maps":{"z":[["2/4","1"],["1","0"]]},"families":{"P":["z"]}})";
  const Instance inst = parse_instance(text);
  const std::string once = render_document(instance_to_json(inst));
  CHECK(once.find("\"1/2\"") != std::string::npos);
  const Instance again = parse_instance(once);
  CHECK(render_document(instance_to_json(again)) == once);
}

TEST_CASE("topology documents parse and validate") {
  const Topology t = parse_topology(R"({"carrier":["a","b"],"opens":[[],["b"],["a","b"]]})");
  CHECK(t.minimal_open(0) == pts(make_carrier({"a", "b"}), {"a", "b"}));
  CHECK_THROWS_AS(parse_topology(R"({"carrier":["a","b"],"opens":[[],["b"]]})"),
                  std::invalid_argument);
}

TEST_CASE("topology documents render opens canonically") {
  const CarrierPtr ab = make_carrier({"a", "b"});
  const Json doc = topology_to_json(Topology(ab, {pts(ab, {"a", "b"}), pts(ab, {"b"})}));
  CHECK(doc.at("opens") == Json::parse(R"([[],["b"],["a","b"]])"));
}

TEST_CASE("point maps parse against their carriers") {
  const CarrierPtr ab = make_carrier({"a", "b"});
  const CarrierPtr uv = make_carrier({"u", "v"});
  const PointMap f = parse_point_map(R"({"map":{"a":"u","b":"v"}})", ab, uv);
  CHECK(f(0) == 0);
  CHECK(f(1) == 1);
  CHECK_THROWS_WITH_AS(parse_point_map(R"({"map":{"a":"u"}})", ab, uv),
                       doctest::Contains("partial"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_map(R"({"map":{"a":"u","b":"x"}})", ab, uv),
                  std::invalid_argument);
}

TEST_CASE("identical inputs serialize identically") {
  const std::string text = R"({"carrier":["b","a"],"maps":{"m":[["0","1"],["3/6","0"]]}})";
  CHECK(render_document(instance_to_json(parse_instance(text))) ==
        render_document(instance_to_json(parse_instance(text))));
}
