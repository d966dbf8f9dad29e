#include "vecalloc/topology.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "vecalloc/errors.hpp"

namespace vecalloc {
namespace {

constexpr std::array<std::pair<DeviceKind, std::string_view>, 9> kKindNames{{
    {DeviceKind::kProcessor, "processor"},
    {DeviceKind::kAccessPoint, "access_point"},
    {DeviceKind::kApWiredIf, "ap_wired_if"},
    {DeviceKind::kApWirelessIf, "ap_wireless_if"},
    {DeviceKind::kWifiAdapter, "wifi_adapter"},
    {DeviceKind::kOnu, "onu"},
    {DeviceKind::kOlt, "olt"},
    {DeviceKind::kSwitch, "switch"},
    {DeviceKind::kRouterPort, "router_port"},
}};

constexpr std::array<std::pair<Layer, std::string_view>, 5> kLayerNames{{
    {Layer::kVN, "VN"},
    {Layer::kNF, "NF"},
    {Layer::kLF, "LF"},
    {Layer::kMF, "MF"},
    {Layer::kCC, "CC"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [value, name] : table)
    if (value == e) return name;
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table,
                          std::string_view s) {
  for (const auto& [value, name] : table)
    if (name == s) return value;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(DeviceKind kind) { return name_of(kKindNames, kind); }
std::string_view to_string(Layer layer) { return name_of(kLayerNames, layer); }
std::string_view to_string(Medium medium) {
  return medium == Medium::kFiber ? "fiber" : "wireless";
}

std::optional<DeviceKind> parse_device_kind(std::string_view s) {
  return value_of(kKindNames, s);
}
std::optional<Layer> parse_layer(std::string_view s) { return value_of(kLayerNames, s); }
std::optional<Medium> parse_medium(std::string_view s) {
  if (s == "fiber") return Medium::kFiber;
  if (s == "wireless") return Medium::kWireless;
  return std::nullopt;
}

std::string_view layer_column(Layer layer) {
  return layer == Layer::kVN ? "VEC" : to_string(layer);
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Architecture::find_device(std::string_view name) const {
  for (std::size_t i = 0; i < devices.size(); ++i)
    if (devices[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Architecture::find_unit(std::string_view id) const {
  for (std::size_t i = 0; i < units.size(); ++i)
    if (units[i].id == id) return i;
  return std::nullopt;
}

const ProcessingUnit& Architecture::unit(Layer layer, std::size_t ordinal) const {
  for (const auto& u : units) {
    if (u.layer != layer) continue;
    if (ordinal == 0) return u;
    --ordinal;
  }
  throw std::out_of_range("no unit #" + std::to_string(ordinal) + " in layer " +
                          std::string(to_string(layer)));
}

std::size_t Architecture::units_in(Layer layer) const {
  return static_cast<std::size_t>(
      std::count_if(units.begin(), units.end(), [&](const auto& u) { return u.layer == layer; }));
}

double Architecture::service_rate_pps(std::size_t device) const {
  return devices.at(device).service_rate_bps / packet_size_bits;
}

Architecture Architecture::restricted_to(std::span<const std::size_t> unit_indices) const {
  Architecture out;
  out.devices = devices;
  out.delay = delay;
  out.packet_size_bits = packet_size_bits;
  out.units.reserve(unit_indices.size());
  for (std::size_t i : unit_indices) out.units.push_back(units.at(i));
  return out;
}

// ---------------------------------------------------------------------------

ArchitectureBuilder& ArchitectureBuilder::packet_size_bits(double bits) {
  arch_.packet_size_bits = bits;
  return *this;
}

ArchitectureBuilder& ArchitectureBuilder::delay_constants(DelayConstants constants) {
  arch_.delay = constants;
  return *this;
}

std::size_t ArchitectureBuilder::add_device(DeviceProfile profile, std::string_view meter) {
  if (!meter.empty()) {
    auto idx = arch_.find_device(meter);
    if (!idx) throw ConfigError(profile.name, "unknown power meter '" + std::string(meter) + "'");
    profile.power_meter = *idx;
  }
  arch_.devices.push_back(std::move(profile));
  return arch_.devices.size() - 1;
}

ArchitectureBuilder& ArchitectureBuilder::add_node(std::string id, Layer layer, int count,
                                                   DeviceProfile processor,
                                                   std::vector<DeviceProfile> private_devices,
                                                   std::vector<PathRef> path) {
  NodeSpec spec;
  spec.id = std::move(id);
  spec.layer = layer;
  spec.count = count;
  spec.processor = std::move(processor);
  spec.private_devices = std::move(private_devices);
  spec.path = std::move(path);
  return add_node(std::move(spec));
}

ArchitectureBuilder& ArchitectureBuilder::add_node(NodeSpec spec) {
  if (spec.count < 1) throw ConfigError(spec.id, "count must be positive");
  if (spec.group.empty()) spec.group = spec.id;
  nodes_.push_back(std::move(spec));
  return *this;
}

Architecture ArchitectureBuilder::build() const {
  Architecture arch = arch_;
  for (const auto& node : nodes_) {
    for (int r = 0; r < node.count; ++r) {
      const std::string unit_id =
          node.count == 1 ? node.id : node.id + "[" + std::to_string(r) + "]";

      ProcessingUnit unit;
      unit.id = unit_id;
      unit.node = node.group;
      unit.layer = node.layer;

      if (const auto* shared = std::get_if<std::string>(&node.processor)) {
        auto idx = arch_.find_device(*shared);
        if (!idx) throw ConfigError(unit_id, "unknown processor device '" + *shared + "'");
        unit.processor = *idx;
      } else {
        DeviceProfile cpu = std::get<DeviceProfile>(node.processor);
        cpu.kind = DeviceKind::kProcessor;
        cpu.name = unit_id + "/" + (cpu.name.empty() ? "cpu" : cpu.name);
        arch.devices.push_back(std::move(cpu));
        unit.processor = arch.devices.size() - 1;
      }

      std::map<std::string, std::size_t, std::less<>> local;
      for (const auto& dev : node.private_devices) {
        DeviceProfile copy = dev;
        copy.name = unit_id + "/" + dev.name;
        arch.devices.push_back(std::move(copy));
        local.emplace(dev.name, arch.devices.size() - 1);
      }

      for (const auto& ref : node.path) {
        std::optional<std::size_t> idx;
        if (auto it = local.find(ref.device); it != local.end()) {
          idx = it->second;
        } else {
          idx = arch_.find_device(ref.device);
        }
        if (!idx) throw ConfigError(unit_id, "path references unknown device '" + ref.device + "'");
        unit.access_path.push_back(Hop{*idx, ref.link});
      }
      arch.units.push_back(std::move(unit));
    }
  }
  return arch;
}

// ---------------------------------------------------------------------------

Architecture default_architecture() {
  constexpr double kGbps = 1e9;
  constexpr double kMbps = 1e6;

  auto net = [](std::string name, DeviceKind kind, double capacity_bps, double max_w,
                double idle_w, double service_bps) {
    return DeviceProfile{std::move(name), kind, capacity_bps, max_w, idle_w, service_bps, {}};
  };
  auto cpu = [](double mips, double max_w, double idle_w) {
    return DeviceProfile{"cpu", DeviceKind::kProcessor, mips, max_w, idle_w, 0.0, {}};
  };

  ArchitectureBuilder b;
  b.add_device(net("ap", DeviceKind::kAccessPoint, 1 * kGbps, 11, 4.8, 0));
  b.add_device(net("ap_wired", DeviceKind::kApWiredIf, 10 * kGbps, 0, 0, 10 * kGbps), "ap");
  b.add_device(net("ap_wireless", DeviceKind::kApWirelessIf, 1 * kGbps, 0, 0, 1 * kGbps), "ap");
  b.add_device(net("onu", DeviceKind::kOnu, 10 * kGbps, 15, 13.5, 10 * kGbps));
  b.add_device(net("olt", DeviceKind::kOlt, 1920 * kGbps, 50, 45, 10 * kGbps));
  b.add_device(net("lf_switch", DeviceKind::kSwitch, 200 * kGbps, 245, 220.5, 10 * kGbps));
  b.add_device(net("lf_router_port", DeviceKind::kRouterPort, 40 * kGbps, 13, 11.7, 10 * kGbps));
  b.add_device(net("metro_switch", DeviceKind::kSwitch, 1800 * kGbps, 500, 450, 10 * kGbps));
  b.add_device(
      net("metro_router_port", DeviceKind::kRouterPort, 40 * kGbps, 25, 22.5, 10 * kGbps));
  b.add_device(net("mf_switch", DeviceKind::kSwitch, 200 * kGbps, 245, 220.5, 10 * kGbps));
  b.add_device(net("mf_router_port", DeviceKind::kRouterPort, 40 * kGbps, 13, 11.7, 10 * kGbps));
  b.add_device(
      net("core_router_port_1", DeviceKind::kRouterPort, 40 * kGbps, 638, 574.2, 40 * kGbps));
  b.add_device(
      net("core_router_port_2", DeviceKind::kRouterPort, 40 * kGbps, 638, 574.2, 40 * kGbps));
  b.add_device(net("cc_router_port", DeviceKind::kRouterPort, 40 * kGbps, 25, 22.5, 40 * kGbps));
  b.add_device(net("cc_switch", DeviceKind::kSwitch, 600 * kGbps, 460, 414, 40 * kGbps));

  // Assumed distances (km). Only ONU-OLT (10 km) is a stated value.
  constexpr double kApToVn = 0.05;
  constexpr double kApToOnu = 0.5;
  constexpr double kOnuToOlt = 10.0;
  constexpr double kOltToMetro = 10.0;
  constexpr double kMetroToCore = 50.0;
  constexpr double kCoreToCloud = 100.0;

  const Link here{0.0, Medium::kFiber};
  auto fiber = [](double km) { return Link{km, Medium::kFiber}; };

  b.add_node("VN", Layer::kVN, 8, cpu(3200, 10, 6),
             {net("wifi", DeviceKind::kWifiAdapter, 72.2 * kMbps, 2.5, 1.5, 0)},
             {{"ap_wireless", here}, {"wifi", Link{kApToVn, Medium::kWireless}}});
  b.add_node("NF", Layer::kNF, 1, cpu(6000, 15, 9), {},
             {{"ap_wired", here}, {"onu", fiber(kApToOnu)}});
  b.add_node("LF", Layer::kLF, 1, cpu(54'400, 85, 51), {},
             {{"ap_wired", here},
              {"onu", fiber(kApToOnu)},
              {"olt", fiber(kOnuToOlt)},
              {"lf_switch", here},
              {"lf_router_port", here}});
  b.add_node("MF", Layer::kMF, 1, cpu(88'000, 85, 51), {},
             {{"ap_wired", here},
              {"onu", fiber(kApToOnu)},
              {"olt", fiber(kOnuToOlt)},
              {"metro_switch", fiber(kOltToMetro)},
              {"metro_router_port", here},
              {"mf_switch", here},
              {"mf_router_port", here}});
  b.add_node("CC", Layer::kCC, 1, cpu(144'000, 115, 69), {},
             {{"ap_wired", here},
              {"onu", fiber(kApToOnu)},
              {"olt", fiber(kOnuToOlt)},
              {"metro_switch", fiber(kOltToMetro)},
              {"metro_router_port", here},
              {"core_router_port_1", fiber(kMetroToCore)},
              {"core_router_port_2", here},
              {"cc_router_port", fiber(kCoreToCloud)},
              {"cc_switch", here}});
  return b.build();
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const Architecture& arch) {
  std::vector<Violation> out;
  auto fail = [&](std::string subject, std::string message) {
    out.push_back({std::move(subject), std::move(message)});
  };

  if (!(arch.packet_size_bits > 0)) fail("architecture", "packet_size_bits must be positive");
  if (!(arch.delay.light_speed_km_s > 0)) fail("architecture", "light speed must be positive");
  if (!(arch.delay.fiber_velocity_factor > 0))
    fail("architecture", "fiber velocity factor must be positive");

  std::map<std::string, int, std::less<>> names;
  for (std::size_t i = 0; i < arch.devices.size(); ++i) {
    const auto& d = arch.devices[i];
    if (++names[d.name] == 2)
      fail(d.name, "device identity is duplicated: distinct objects share this name");
    if (!(d.capacity > 0)) fail(d.name, "capacity must be positive");
    if (d.idle_power_w < 0) fail(d.name, "idle power must be non-negative");
    if (d.idle_power_w > d.max_power_w) fail(d.name, "idle power exceeds max power");
    if (d.service_rate_bps < 0) fail(d.name, "service rate must be non-negative");
    if (d.power_meter) {
      if (*d.power_meter >= arch.devices.size() || *d.power_meter == i)
        fail(d.name, "power meter does not reference another device");
      else if (arch.devices[*d.power_meter].power_meter)
        fail(d.name, "power meter is itself metered");
    }
  }

  // A single AP and PON tree: these kinds must exist at most once.
  for (DeviceKind k : {DeviceKind::kAccessPoint, DeviceKind::kApWiredIf,
                       DeviceKind::kApWirelessIf, DeviceKind::kOnu, DeviceKind::kOlt}) {
    std::vector<std::string> seen;
    for (const auto& d : arch.devices)
      if (d.kind == k) seen.push_back(d.name);
    if (seen.size() > 1)
      fail(seen[1], "second " + std::string(to_string(k)) + " instance; paths must share '" +
                        seen[0] + "'");
  }

  std::set<std::string, std::less<>> unit_ids;
  for (const auto& u : arch.units) {
    if (!unit_ids.insert(u.id).second) fail(u.id, "duplicate unit id");
    if (u.processor >= arch.devices.size()) {
      fail(u.id, "processor index out of range");
    } else if (!arch.devices[u.processor].is_processor()) {
      fail(u.id, "processor reference is not a processor device");
    }
    if (u.access_path.empty()) {
      fail(u.id, "empty access path");
      continue;
    }
    bool refs_ok = true;
    for (const auto& hop : u.access_path) {
      if (hop.device >= arch.devices.size()) {
        fail(u.id, "path references a device that does not exist");
        refs_ok = false;
      } else if (arch.devices[hop.device].is_processor()) {
        fail(u.id, "path routes through a processor");
      }
      if (hop.link.distance_km < 0) fail(u.id, "negative link distance");
    }
    if (!refs_ok) continue;

    const DeviceKind first = arch.devices[u.access_path.front().device].kind;
    const DeviceKind want =
        u.layer == Layer::kVN ? DeviceKind::kApWirelessIf : DeviceKind::kApWiredIf;
    if (first != want)
      fail(u.id, "path must begin at " + std::string(to_string(want)));

    const auto adapters =
        std::count_if(u.access_path.begin(), u.access_path.end(), [&](const Hop& h) {
          return arch.devices[h.device].kind == DeviceKind::kWifiAdapter;
        });
    if (u.layer == Layer::kVN && adapters != 1)
      fail(u.id, "VN path must contain exactly one wifi_adapter hop");
    if (u.layer != Layer::kVN && adapters != 0)
      fail(u.id, "only VN paths may contain a wifi_adapter hop");
  }
  return out;
}

}  // namespace vecalloc
