#include "nilharm/config.hpp"

#include <charconv>
#include <fstream>

#include "nilharm/error.hpp"

namespace nilharm {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::defaults() {
  Config c;
  c.entries_ = {
      {"quadrature.rule", "gauss-hermite"},
      {"quadrature.initial_nodes", "4"},
      {"quadrature.max_nodes_per_axis", "64"},
      {"quadrature.node_budget", "1048576"},
      {"quadrature.rel_tol", "1e-8"},
      {"quadrature.truncation_sigmas", "8"},
      {"stepwise.inner_initial_nodes", "4"},
      {"stepwise.inner_max_nodes_per_axis", "64"},
      {"stepwise.inner_node_budget", "1048576"},
  };
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file: " + path);
  Config c = defaults();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    c.set(trim(line.substr(0, eq)), value);
  }
  return c;
}

void Config::set(const std::string& key, const std::string& value) {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InvalidInput("unknown config key: " + key);
  std::string old = it->second;
  it->second = value;
  try {
    if (key == "quadrature.rule") {
      parse_quadrature_rule(value);
    } else if (key == "quadrature.rel_tol" || key == "quadrature.truncation_sigmas") {
      if (!(number(key) > 0.0)) throw InvalidInput("config " + key + ": must be positive: " + value);
    } else {
      integer(key);
    }
  } catch (...) {
    it->second = old;
    throw;
  }
}

const std::string& Config::text(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InvalidInput("unknown config key: " + key);
  return it->second;
}

double Config::number(const std::string& key) const {
  const std::string& v = text(key);
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw InvalidInput("config " + key + ": not a number: " + v);
  return out;
}

long long Config::integer(const std::string& key) const {
  const std::string& v = text(key);
  long long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || out <= 0)
    throw InvalidInput("config " + key + ": not a positive integer: " + v);
  return out;
}

QuadratureSettings Config::quadrature() const {
  QuadratureSettings s;
  s.rule = parse_quadrature_rule(text("quadrature.rule"));
  s.initial_nodes = static_cast<int>(integer("quadrature.initial_nodes"));
  s.max_nodes_per_axis = static_cast<int>(integer("quadrature.max_nodes_per_axis"));
  s.node_budget = static_cast<std::size_t>(integer("quadrature.node_budget"));
  s.rel_tol = number("quadrature.rel_tol");
  s.truncation_sigmas = number("quadrature.truncation_sigmas");
  return s;
}

QuadratureSettings Config::inner_quadrature() const {
  QuadratureSettings s = quadrature();
  s.initial_nodes = static_cast<int>(integer("stepwise.inner_initial_nodes"));
  s.max_nodes_per_axis = static_cast<int>(integer("stepwise.inner_max_nodes_per_axis"));
  s.node_budget = static_cast<std::size_t>(integer("stepwise.inner_node_budget"));
  return s;
}

nlohmann::json Config::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : entries_) j[k] = v;
  return j;
}

}  // namespace nilharm
