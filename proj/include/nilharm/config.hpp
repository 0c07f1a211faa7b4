#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "nilharm/quadrature.hpp"

namespace nilharm {

/// Operational tolerances and quadrature settings as flat key = value pairs.
/// Every key has a built-in default; unknown keys are rejected.
class Config {
 public:
  static Config defaults();
  /// Defaults overlaid with the file. Lines are `key = value`; `#` starts a
  /// comment; values may be double-quoted.
  static Config load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  const std::string& text(const std::string& key) const;
  double number(const std::string& key) const;
  long long integer(const std::string& key) const;

  QuadratureSettings quadrature() const;
  QuadratureSettings inner_quadrature() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }
  nlohmann::json to_json() const;

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace nilharm
