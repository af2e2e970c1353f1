#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hopf/io.hpp"
#include "hopf/suites.hpp"
#include "instances.hpp"

using namespace hopf;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("the bundled instance loads with all blocks") {
  const Instance& inst = kashina();
  CHECK(inst.fusion.name() == "kashina16");
  CHECK(inst.fusion.size() == 7);
  CHECK_FALSE(inst.comment.empty());
  CHECK(inst.subalgebras.size() == 5);
  CHECK_FALSE(inst.clifford.has_value());
  CHECK_FALSE(inst.conjugation.has_value());
}

TEST_CASE("round trips are lossless and deterministic") {
  const json j1 = serialize_instance(kashina());
  const Instance reparsed = parse_instance(j1);
  const json j2 = serialize_instance(reparsed);
  CHECK(j1 == j2);
  CHECK(j1.dump(2) == j2.dump(2));

  const FusionData& a = kashina().fusion;
  const FusionData& b = reparsed.fusion;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.label(i) == b.label(i));
    CHECK(a.dim(i) == b.dim(i));
    CHECK(a.star_of(i) == b.star_of(i));
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a.structure_constant(i, j, k) == b.structure_constant(i, j, k));
  }
}

TEST_CASE("parse errors carry context") {
  const auto path = temp_file("hopf_io_malformed.json");
  std::ofstream(path) << "{ this is not json";
  CHECK_THROWS_AS(load_instance(path.string()), ParseError);
  std::remove(path.string().c_str());

  json j = serialize_instance(kashina());
  j["fusion"].push_back(json::array({"nope", "x", "y", 1}));
  CHECK_THROWS_WITH(parse_instance(j),
                    Catch::Matchers::ContainsSubstring("unknown label"));

  json j2 = serialize_instance(kashina());
  j2.erase("unit");
  CHECK_THROWS_WITH(parse_instance(j2),
                    Catch::Matchers::ContainsSubstring("missing field"));

  json j3 = serialize_instance(kashina());
  j3["fusion"][0][3] = -1;
  CHECK_THROWS_AS(parse_instance(j3), ParseError);

  json j4 = serialize_instance(kashina());
  j4["conjugation"] = json::object();
  CHECK_THROWS_WITH(parse_instance(j4),
                    Catch::Matchers::ContainsSubstring("requires a clifford"));
}

TEST_CASE("group specs load and reject bad images") {
  const GroupSpec spec = group_spec("s3");
  CHECK(spec.degree == 3);
  CHECK(spec.generators.size() == 2);
  CHECK(spec.subgroups.size() == 2);

  json j;
  j["degree"] = 3;
  j["generators"] = json::array({json::array({1, 2, 4})});
  CHECK_THROWS_AS(parse_group_spec(j), ParseError);
  j["generators"] = json::array({json::array({1, 1, 2})});
  CHECK_THROWS_AS(parse_group_spec(j), ParseError);
}

TEST_CASE("emitted group instances carry every block and pass every suite") {
  const Instance inst = build_group_instance(group_spec("s3"), "A3");
  CHECK(validate(inst.fusion).empty());
  REQUIRE(inst.clifford.has_value());
  REQUIRE(inst.conjugation.has_value());
  CHECK(inst.clifford_subalgebra == "A3");
  CHECK_FALSE(inst.clifford->star_k.empty());

  const Report cl = suite_clifford(inst);
  for (const auto& c : cl.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.status == Status::pass);
  }
  const Report cj = suite_conjugation(inst);
  for (const auto& c : cj.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.status == Status::pass);
  }

  // survives a save/load cycle
  const auto path = temp_file("hopf_io_s3a3.json");
  save_instance(inst, path.string());
  const Instance back = load_instance(path.string());
  std::remove(path.string().c_str());
  CHECK(serialize_instance(back) == serialize_instance(inst));
  CHECK(suite_clifford(back).all_pass());
  CHECK(suite_conjugation(back).all_pass());
  CHECK(suite_check_all(back).all_pass());
}

TEST_CASE("bundled emitted instances match a fresh emission") {
  for (const auto& [stem, sub, file] :
       std::vector<std::tuple<std::string, std::string, std::string>>{
           {"s3", "A3", "s3_a3.json"}, {"s4", "V4", "s4_v4.json"}}) {
    const Instance fresh = build_group_instance(group_spec(stem), sub);
    const Instance bundled =
        load_instance(std::string(HOPF_DATA_DIR) + "/" + file);
    CHECK(serialize_instance(fresh) == serialize_instance(bundled));
    CHECK(suite_check_all(bundled).all_pass());
  }
}

TEST_CASE("reserved subalgebra names resolve") {
  const Subalgebra t = subalgebra_by_name(kashina(), "trivial");
  CHECK(t.members == std::vector<std::size_t>{kashina().fusion.unit()});
  CHECK(subalgebra_by_name(kashina(), "full").members.size() == 7);
  CHECK_THROWS_AS(subalgebra_by_name(kashina(), "nope"), InputError);
}

TEST_CASE("check-all skips absent blocks and exits clean") {
  const Report rep = suite_check_all(kashina());
  CHECK(rep.exit_code() == 0);
  bool clifford_skipped = false;
  for (const auto& c : rep.checks)
    if (c.name == "clifford:branching-valid" && c.status == Status::skip)
      clifford_skipped = true;
  CHECK(clifford_skipped);
}

TEST_CASE("reports render to versioned JSON") {
  const Report rep = suite_validate(kashina());
  const json j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "validate");
  CHECK(j["exit_code"] == 0);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == rep.checks.size());
}
