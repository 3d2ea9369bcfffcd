#pragma once

#include <stdexcept>
#include <string>

namespace isac {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario-file / configuration errors (CLI exit code 2).
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class MissingKey : public ConfigError {
 public:
  explicit MissingKey(const std::string& key)
      : ConfigError(key, "missing required key: " + key) {}
};

class InvalidValue : public ConfigError {
 public:
  InvalidValue(const std::string& key, const std::string& detail)
      : ConfigError(key, "invalid value for " + key + ": " + detail) {}
};

class InvariantViolation : public ConfigError {
 public:
  InvariantViolation(const std::string& key, const std::string& detail)
      : ConfigError(key, "invariant violated (" + key + "): " + detail) {}
};

class UnknownSweepKey : public ConfigError {
 public:
  explicit UnknownSweepKey(const std::string& key)
      : ConfigError(key, "unknown sweep key: " + key) {}
};

/// Runtime (non-configuration) errors (CLI exit code 3).
class InvalidAngle : public Error {
 public:
  using Error::Error;
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class DurationOverflow : public Error {
 public:
  using Error::Error;
};

class DegenerateBlock : public Error {
 public:
  using Error::Error;
};

class SingularInformation : public Error {
 public:
  using Error::Error;
};

}  // namespace isac
