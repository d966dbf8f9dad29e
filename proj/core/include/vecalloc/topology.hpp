#ifndef VECALLOC_TOPOLOGY_HPP
#define VECALLOC_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vecalloc {

enum class DeviceKind {
  kProcessor,
  kAccessPoint,  // power meter for both AP interfaces
  kApWiredIf,
  kApWirelessIf,
  kWifiAdapter,
  kOnu,
  kOlt,
  kSwitch,
  kRouterPort,
};

enum class Layer { kVN, kNF, kLF, kMF, kCC };
inline constexpr int kLayerCount = 5;

enum class Medium { kFiber, kWireless };

std::string_view to_string(DeviceKind kind);
std::string_view to_string(Layer layer);
std::string_view to_string(Medium medium);
std::optional<DeviceKind> parse_device_kind(std::string_view s);
std::optional<Layer> parse_layer(std::string_view s);
std::optional<Medium> parse_medium(std::string_view s);

// Column label used for per-layer allocation tables; all VNs collapse into
// "VEC".
std::string_view layer_column(Layer layer);

struct DeviceProfile {
  std::string name;
  DeviceKind kind = DeviceKind::kProcessor;
  // MIPS for processors, bit/s for everything else.
  double capacity = 0.0;
  double max_power_w = 0.0;
  double idle_power_w = 0.0;
  // Transmission rate of the device's M/M/1 queue in bit/s; 0 means the
  // device is a pure capacity constraint with no queue.
  double service_rate_bps = 0.0;
  // When set, this device's load is also credited to the metering device and
  // its own max/idle power are ignored (the AP interfaces share one meter).
  std::optional<std::size_t> power_meter;

  bool is_processor() const { return kind == DeviceKind::kProcessor; }
  bool is_queue() const { return service_rate_bps > 0.0; }
  bool draws_power() const { return !power_meter.has_value(); }

  bool operator==(const DeviceProfile&) const = default;
};

struct Link {
  double distance_km = 0.0;
  Medium medium = Medium::kFiber;

  bool operator==(const Link&) const = default;
};

// One step along a unit's access path: the link traversed to reach `device`
// from the previous hop (or from the task sources, for the first hop).
struct Hop {
  std::size_t device = 0;
  Link link;

  bool operator==(const Hop&) const = default;
};

// A single schedulable processing unit. A node declared with count = 8 (the
// VEC) expands into eight units that share the AP but own their processor and
// Wi-Fi adapter.
struct ProcessingUnit {
  std::string id;
  std::string node;
  Layer layer = Layer::kVN;
  std::size_t processor = 0;
  std::vector<Hop> access_path;

  bool operator==(const ProcessingUnit&) const = default;
};

struct DelayConstants {
  double light_speed_km_s = 299'792.458;
  // Reciprocal refractive index of fibre; wireless links propagate at c.
  double fiber_velocity_factor = 2.0 / 3.0;

  bool operator==(const DelayConstants&) const = default;
};

inline constexpr double kDefaultPacketBits = 1500.0 * 8.0;

/// Immutable device graph. Devices are identified by index; two paths that
/// reference the same index share that device's aggregated load.
struct Architecture {
  std::vector<DeviceProfile> devices;
  std::vector<ProcessingUnit> units;
  DelayConstants delay;
  double packet_size_bits = kDefaultPacketBits;

  std::optional<std::size_t> find_device(std::string_view name) const;
  std::optional<std::size_t> find_unit(std::string_view id) const;

  // The `ordinal`-th unit of a layer, in declaration order.
  const ProcessingUnit& unit(Layer layer, std::size_t ordinal = 0) const;
  std::size_t units_in(Layer layer) const;

  // Service rate of a queued device in packets per second.
  double service_rate_pps(std::size_t device) const;

  // Keeps only the listed units (in the given order). Devices are kept
  // unchanged so indices stay valid.
  Architecture restricted_to(std::span<const std::size_t> unit_indices) const;

  bool operator==(const Architecture&) const = default;
};

struct PathRef {
  std::string device;
  Link link;
};

/// A node declaration. With count > 1 the node expands into units
/// "<id>[0]".."<id>[count-1]", each with its own copy of the processor and of
/// the private devices.
struct NodeSpec {
  std::string id;
  std::string group;  // ProcessingUnit::node; defaults to id
  Layer layer = Layer::kVN;
  int count = 1;
  // Inline processor profile, or the name of an existing shared device.
  std::variant<DeviceProfile, std::string> processor;
  std::vector<DeviceProfile> private_devices;
  std::vector<PathRef> path;
};

/// Assembles an Architecture from named devices and node declarations.
/// Path references resolve to a node's private devices first, then to shared
/// devices. Private devices and processors are cloned per replica.
class ArchitectureBuilder {
 public:
  ArchitectureBuilder& packet_size_bits(double bits);
  ArchitectureBuilder& delay_constants(DelayConstants constants);

  // Adds a shared device; `meter` names a previously added device.
  std::size_t add_device(DeviceProfile profile, std::string_view meter = {});

  ArchitectureBuilder& add_node(std::string id, Layer layer, int count,
                                DeviceProfile processor,
                                std::vector<DeviceProfile> private_devices,
                                std::vector<PathRef> path);
  ArchitectureBuilder& add_node(NodeSpec spec);

  Architecture build() const;

 private:
  Architecture arch_;
  std::vector<NodeSpec> nodes_;
};

/// The reference five-layer setup: 8 VNs and one NF, LF, MF and CC server.
/// Link distances other than ONU-OLT are assumed values.
Architecture default_architecture();

struct Violation {
  std::string subject;  // device name or unit id
  std::string message;
};

/// Checks every structural invariant; an empty result means valid.
std::vector<Violation> validate(const Architecture& arch);

}  // namespace vecalloc

#endif  // VECALLOC_TOPOLOGY_HPP
