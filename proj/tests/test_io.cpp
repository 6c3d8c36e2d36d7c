#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "rrp/errors.hpp"
#include "rrp/generators.hpp"
#include "rrp/instance_io.hpp"
#include "rrp/knapsack.hpp"
#include "rrp/solvers.hpp"
#include "test_util.hpp"

using namespace rrp;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("rrp_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) {
    std::ofstream out(path);
    out << text;
  }
};

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("instances round-trip through JSON") {
  Digraph g = gen_erdos_renyi(50, 4.0, 77);
  Instance inst = sample_settings(g, 3, 4, 0.3, 77, StepModel::uniform_steps);

  TempFile f("roundtrip.json");
  write_instance(inst, f.path);
  Instance back = read_instance(f.path);

  CHECK(back.costs == inst.costs);
  CHECK(back.budget == inst.budget);
  REQUIRE(back.num_models() == inst.num_models());
  // exact round trip, stronger than the 1e-12 contract
  CHECK(instance_to_json(back) == instance_to_json(inst));
}

TEST_CASE("a missing field is named in the parse error") {
  Instance inst = rrp_test::value_instance({{1.0, 2.0}}, {1, 1}, 1);
  nlohmann::json j = nlohmann::json::parse(instance_to_json(inst));
  j.erase("costs");

  TempFile f("missing.json");
  f.write(j.dump());
  CHECK_THROWS_WITH_AS(read_instance(f.path),
                       doctest::Contains("missing field 'costs'"), ParseError);
}

TEST_CASE("invalid JSON reports parse context") {
  TempFile f("bad.json");
  f.write("{\"n\": 2, ");
  CHECK_THROWS_AS(read_instance(f.path), ParseError);
}

TEST_CASE("a negative probability fails validation") {
  Instance inst = rrp_test::value_instance({{1.0, 2.0}}, {1, 1}, 1);
  nlohmann::json j = nlohmann::json::parse(instance_to_json(inst));
  j["models"][0]["initial"][0] = -0.25;
  TempFile f("negative.json");
  f.write(j.dump());
  CHECK_THROWS_AS(read_instance(f.path), ValidationError);
}

TEST_CASE("reading a nonexistent file is a parse error") {
  CHECK_THROWS_AS(read_instance("does_not_exist.json"), ParseError);
}

TEST_CASE("collections parse whitespace-separated identifiers") {
  TempFile f("collection.txt");
  f.write("a b\n\nc d\na e\n");
  SubsetCollection col = read_collection(f.path);
  CHECK(col.num_items == 5);
  REQUIRE(col.subsets.size() == 3);
  CHECK(col.subsets[0] == std::vector<int>{0, 1});
  CHECK(col.subsets[2] == std::vector<int>{0, 4});
  CHECK(col.item_names[4] == "e");
  CHECK_THROWS_AS(read_collection("nope.txt"), ParseError);
}

TEST_CASE("the MNK envelope serializes for debugging") {
  Instance inst = rrp_test::value_instance({{1.0, 2.0}, {2.0, 1.0}}, {1, 1}, 1);
  RewardProfile profile = reward_profile(inst.models);
  optimal_per_model(inst, profile);
  TempFile f("mnk.json");
  write_mnk(reduce_to_mnk(inst, profile), f.path);
  std::ifstream in(f.path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("\"scenarios\"") != std::string::npos);
}

TEST_SUITE_END();
