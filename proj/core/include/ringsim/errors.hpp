#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringsim {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration, bad arguments, schema violations. CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Physically infeasible request (e.g. precision unreachable at any power,
/// level synthesis exceeding the electro-optic range). CLI exit code 3.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Filesystem / serialization failures. CLI exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Charge accumulator exceeded its capacity. Carries the offending cycle.
class SaturationError : public Error {
 public:
  SaturationError(const std::string& what, std::uint64_t cycle)
      : Error(what), cycle_(cycle) {}
  std::uint64_t cycle() const { return cycle_; }

 private:
  std::uint64_t cycle_;
};

}  // namespace ringsim
