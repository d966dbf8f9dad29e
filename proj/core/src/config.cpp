#include "vecalloc/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The message already carries "line N, column M".
    throw ConfigError("", e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Field accessors that report the JSON path of whatever is wrong.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Node at(const char* key) const {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
    if (!j_.contains(key)) throw ConfigError(join(key), "missing field");
    return Node(j_.at(key), join(key));
  }
  Node at(std::size_t i) const { return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

  std::size_t size() const {
    if (!j_.is_array()) throw ConfigError(path_, "expected an array");
    return j_.size();
  }

  double number() const {
    if (!j_.is_number()) throw ConfigError(path_, "expected a number");
    return j_.get<double>();
  }
  double number_or(const char* key, double fallback) const {
    return has(key) ? at(key).number() : fallback;
  }
  std::string string() const {
    if (!j_.is_string()) throw ConfigError(path_, "expected a string");
    return j_.get<std::string>();
  }
  bool is_string() const { return j_.is_string(); }
  int integer() const {
    if (!j_.is_number_integer()) throw ConfigError(path_, "expected an integer");
    return j_.get<int>();
  }

 private:
  std::string join(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& j_;
  std::string path_;
};

DeviceKind kind_of(const Node& n) {
  auto k = parse_device_kind(n.string());
  if (!k) throw ConfigError(n.path(), "unknown device kind '" + n.string() + "'");
  return *k;
}

// Power meter names are returned separately and resolved once all shared
// devices are known.
DeviceProfile device_of(const Node& n, std::string* meter, bool processor = false) {
  DeviceProfile d;
  if (n.has("name")) d.name = n.at("name").string();
  else if (!processor) throw ConfigError(n.path() + ".name", "missing field");
  d.kind = processor ? DeviceKind::kProcessor : kind_of(n.at("kind"));
  d.capacity = n.at("capacity").number();
  d.max_power_w = n.at("max_power_w").number();
  d.idle_power_w = n.at("idle_power_w").number();
  d.service_rate_bps = n.number_or("service_rate_bps", 0.0);
  if (n.has("power_meter")) {
    if (!meter) throw ConfigError(n.path() + ".power_meter", "not allowed here");
    *meter = n.at("power_meter").string();
  }
  return d;
}

Link link_of(const Node& n) {
  Link l;
  l.distance_km = n.number_or("distance_km", 0.0);
  if (n.has("medium")) {
    auto m = parse_medium(n.at("medium").string());
    if (!m) throw ConfigError(n.path() + ".medium", "expected 'fiber' or 'wireless'");
    l.medium = *m;
  }
  return l;
}

ordered_json device_json(const Architecture& arch, const DeviceProfile& d) {
  ordered_json j;
  j["name"] = d.name;
  j["kind"] = std::string(to_string(d.kind));
  j["capacity"] = d.capacity;
  j["max_power_w"] = d.max_power_w;
  j["idle_power_w"] = d.idle_power_w;
  if (d.service_rate_bps != 0.0) j["service_rate_bps"] = d.service_rate_bps;
  if (d.power_meter) j["power_meter"] = arch.devices.at(*d.power_meter).name;
  return j;
}

}  // namespace

Architecture architecture_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const Node root(doc, "");
  if (!doc.is_object()) throw ConfigError("", "top level must be an object");

  ArchitectureBuilder b;
  b.packet_size_bits(root.number_or("packet_size_bits", kDefaultPacketBits));
  DelayConstants dc;
  dc.light_speed_km_s = root.number_or("light_speed_km_s", dc.light_speed_km_s);
  dc.fiber_velocity_factor = root.number_or("fiber_velocity_factor", dc.fiber_velocity_factor);
  b.delay_constants(dc);

  // Shared devices: collect first so meters may be declared in any order.
  std::vector<DeviceProfile> shared;
  std::vector<std::string> meters;
  std::map<std::string, std::size_t, std::less<>> index;
  if (root.has("devices")) {
    const Node devices = root.at("devices");
    for (std::size_t i = 0; i < devices.size(); ++i) {
      std::string meter;
      shared.push_back(device_of(devices.at(i), &meter));
      meters.push_back(meter);
      index.emplace(shared.back().name, i);
    }
  }
  for (std::size_t i = 0; i < shared.size(); ++i) {
    if (meters[i].empty()) continue;
    auto it = index.find(meters[i]);
    if (it == index.end())
      throw ConfigError("devices[" + std::to_string(i) + "].power_meter",
                        "unknown device '" + meters[i] + "'");
    shared[i].power_meter = it->second;
  }
  for (auto& d : shared) b.add_device(std::move(d));

  const Node nodes = root.at("nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node n = nodes.at(i);
    NodeSpec spec;
    spec.id = n.at("id").string();
    if (n.has("node")) spec.group = n.at("node").string();
    const Node layer = n.at("layer");
    auto l = parse_layer(layer.string());
    if (!l) throw ConfigError(layer.path(), "unknown layer '" + layer.string() + "'");
    spec.layer = *l;
    if (n.has("count")) spec.count = n.at("count").integer();
    if (spec.count < 1) throw ConfigError(n.path() + ".count", "must be positive");

    const Node proc = n.at("processor");
    if (proc.is_string()) {
      spec.processor = proc.string();
    } else {
      spec.processor = device_of(proc, nullptr, /*processor=*/true);
    }

    if (n.has("private_devices")) {
      const Node priv = n.at("private_devices");
      for (std::size_t k = 0; k < priv.size(); ++k) {
        std::string meter;
        DeviceProfile d = device_of(priv.at(k), &meter);
        if (!meter.empty()) {
          auto it = index.find(meter);
          if (it == index.end())
            throw ConfigError(priv.at(k).path() + ".power_meter", "unknown device '" + meter + "'");
          d.power_meter = it->second;
        }
        spec.private_devices.push_back(std::move(d));
      }
    }

    const Node path = n.at("path");
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Node hop = path.at(k);
      spec.path.push_back({hop.at("device").string(), link_of(hop)});
    }
    b.add_node(std::move(spec));
  }
  return b.build();
}

Architecture load_architecture(const std::filesystem::path& path) {
  try {
    return architecture_from_json(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + (e.where().empty() ? "" : ":" + e.where()), e.message());
  }
}

std::string architecture_to_json(const Architecture& arch) {
  ordered_json doc;
  doc["packet_size_bits"] = arch.packet_size_bits;
  doc["light_speed_km_s"] = arch.delay.light_speed_km_s;
  doc["fiber_velocity_factor"] = arch.delay.fiber_velocity_factor;

  ordered_json devices = ordered_json::array();
  for (const auto& d : arch.devices) devices.push_back(device_json(arch, d));
  doc["devices"] = std::move(devices);

  ordered_json nodes = ordered_json::array();
  for (const auto& u : arch.units) {
    ordered_json n;
    n["id"] = u.id;
    n["node"] = u.node;
    n["layer"] = std::string(to_string(u.layer));
    n["processor"] = arch.devices.at(u.processor).name;
    ordered_json path = ordered_json::array();
    for (const auto& h : u.access_path) {
      ordered_json hop;
      hop["device"] = arch.devices.at(h.device).name;
      hop["distance_km"] = h.link.distance_km;
      hop["medium"] = std::string(to_string(h.link.medium));
      path.push_back(std::move(hop));
    }
    n["path"] = std::move(path);
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

TaskSet taskset_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const Node root(doc, "");
  const Node list = doc.is_array() ? root : root.at("tasks");
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Node t = list.at(i);
    Task task;
    task.id = t.has("id") ? t.at("id").string() : "t" + std::to_string(i + 1);
    task.mips = t.at("mips").number();
    task.traffic_mbps = t.at("traffic_mbps").number();
    if (!(task.mips > 0)) throw ConfigError(t.path() + ".mips", "must be positive");
    if (!(task.traffic_mbps > 0)) throw ConfigError(t.path() + ".traffic_mbps", "must be positive");
    tasks.push_back(std::move(task));
  }
  return TaskSet(std::move(tasks));
}

TaskSet load_taskset(const std::filesystem::path& path) {
  return taskset_from_json(read_file(path));
}

std::string taskset_to_json(const TaskSet& tasks) {
  ordered_json list = ordered_json::array();
  for (const auto& t : tasks.tasks()) {
    ordered_json j;
    j["id"] = t.id;
    j["mips"] = t.mips;
    j["traffic_mbps"] = t.traffic_mbps;
    list.push_back(std::move(j));
  }
  ordered_json doc;
  doc["tasks"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string architecture_hash(const Architecture& arch) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : architecture_to_json(arch)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vecalloc
