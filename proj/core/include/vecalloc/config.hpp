#ifndef VECALLOC_CONFIG_HPP
#define VECALLOC_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "vecalloc/topology.hpp"
#include "vecalloc/workload.hpp"

namespace vecalloc {

// Architecture and task files are JSON documents; the schema is described in
// README.md. Parse and schema errors throw ConfigError carrying either a
// "line N, column M" location or the offending field path.

Architecture architecture_from_json(std::string_view text);
Architecture load_architecture(const std::filesystem::path& path);

/// Fully expanded form (every unit listed with count 1); re-loading it yields
/// an equal Architecture.
std::string architecture_to_json(const Architecture& arch);

TaskSet taskset_from_json(std::string_view text);
TaskSet load_taskset(const std::filesystem::path& path);
std::string taskset_to_json(const TaskSet& tasks);

/// 64-bit FNV-1a of the canonical JSON form, as 16 hex digits.
std::string architecture_hash(const Architecture& arch);

}  // namespace vecalloc

#endif  // VECALLOC_CONFIG_HPP
