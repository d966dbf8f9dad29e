#ifndef VECALLOC_ERRORS_HPP
#define VECALLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vecalloc {

/// Malformed or invalid configuration input. `where` holds the field path
/// (e.g. "nodes[2].processor.idle_power_w") or a line/column location.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)),
        message_(what) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string where_;
  std::string message_;
};

/// Argument outside the mathematical domain of a model function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A device is loaded beyond its capacity.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string device, double load, double limit)
      : std::runtime_error("capacity exceeded on '" + device + "': load " +
                           std::to_string(load) + " > " + std::to_string(limit)),
        device_(std::move(device)),
        load_(load),
        limit_(limit) {}

  const std::string& device() const noexcept { return device_; }
  double load() const noexcept { return load_; }
  double limit() const noexcept { return limit_; }

 private:
  std::string device_;
  double load_;
  double limit_;
};

/// M/M/1 queue with arrival rate at or above its service rate.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(std::string device, double lambda, double mu)
      : std::runtime_error("unstable queue at '" + device + "': lambda " +
                           std::to_string(lambda) + " >= mu " + std::to_string(mu)),
        device_(std::move(device)) {}

  const std::string& device() const noexcept { return device_; }

 private:
  std::string device_;
};

/// Allocation or instance that violates a hard constraint.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance too large for the exhaustive oracle.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vecalloc

#endif  // VECALLOC_ERRORS_HPP
