#include <gtest/gtest.h>

#include "vecalloc/config.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

const std::string kData = VECALLOC_TEST_DATA;

TEST(Config, DefaultRoundTrips) {
  const Architecture arch = default_architecture();
  const Architecture back = architecture_from_json(architecture_to_json(arch));
  EXPECT_EQ(back, arch);
  EXPECT_EQ(architecture_to_json(back), architecture_to_json(arch));
}

TEST(Config, SmallFileLoadsAndExpandsReplicas) {
  const Architecture arch = load_architecture(kData + "/small_arch.json");
  ASSERT_EQ(arch.units.size(), 3u);
  EXPECT_EQ(arch.units[0].id, "VN[0]");
  EXPECT_EQ(arch.units[1].id, "VN[1]");
  EXPECT_EQ(arch.units[2].id, "NF");
  EXPECT_TRUE(validate(arch).empty());
  EXPECT_EQ(architecture_from_json(architecture_to_json(arch)), arch);
  // Both interfaces are metered through the AP.
  EXPECT_EQ(arch.devices[*arch.find_device("ap_wired")].power_meter, arch.find_device("ap"));
}

TEST(Config, SyntaxErrorCarriesLineAndColumn) {
  try {
    architecture_from_json("{\n  \"devices\": [,]\n}");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Config, SchemaErrorCarriesFieldPath) {
  try {
    architecture_from_json(R"({"nodes": [{"id": "NF", "layer": "NF",
        "processor": {"capacity": "fast", "max_power_w": 1, "idle_power_w": 0},
        "path": []}]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.where(), "nodes[0].processor.capacity");
  }
}

TEST(Config, UnknownPathDeviceNamesUnit) {
  try {
    architecture_from_json(R"({"nodes": [{"id": "NF", "layer": "NF",
        "processor": {"capacity": 1, "max_power_w": 1, "idle_power_w": 0},
        "path": [{"device": "nowhere"}]}]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.where(), "NF");
    EXPECT_NE(e.message().find("nowhere"), std::string::npos);
  }
}

TEST(Config, MissingFileIsConfigError) {
  EXPECT_THROW(load_architecture(kData + "/does_not_exist.json"), ConfigError);
}

TEST(Config, IdleAboveMaxLoadsButFailsValidation) {
  const Architecture arch = load_architecture(kData + "/bad_idle.json");
  const auto v = validate(arch);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].subject, "onu");
}

TEST(Config, TasksetRoundTrips) {
  const TaskSet tasks = load_taskset(kData + "/tasks.json");
  ASSERT_EQ(tasks.size(), 3u);
  EXPECT_EQ(tasks[1].id, "lidar");
  EXPECT_EQ(tasks.total_traffic_mbps(), 90);
  EXPECT_EQ(taskset_from_json(taskset_to_json(tasks)), tasks);
}

TEST(Config, BareTaskArrayGetsIds) {
  const TaskSet tasks = taskset_from_json(R"([{"mips": 10, "traffic_mbps": 1}])");
  EXPECT_EQ(tasks[0].id, "t1");
}

TEST(Config, NonPositiveTaskDemandRejected) {
  EXPECT_THROW(taskset_from_json(R"([{"mips": 0, "traffic_mbps": 1}])"), ConfigError);
}

TEST(Config, HashIsStableAndSensitive) {
  Architecture arch = default_architecture();
  const std::string h = architecture_hash(arch);
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(architecture_hash(default_architecture()), h);
  arch.units[8].access_path[1].link.distance_km = 0.6;
  EXPECT_NE(architecture_hash(arch), h);
}

}  // namespace
}  // namespace vecalloc
