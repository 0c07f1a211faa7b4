#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilharm/algebra.hpp"
#include "nilharm/stepwise.hpp"

namespace nilharm::cli {

enum class Status { ok, check_failed, error };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload = nlohmann::json::object();
  std::string human_text;
  bool json = false;  // --json was given
};

int exit_code(Status s);
std::string to_string(Status s);

/// Runs one command; `args` excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

/// JSON text with sorted keys, two-space indent and doubles at 17 significant digits.
std::string dump(const nlohmann::json& j);

/// heisenberg:n:F, free2step:n:F, octdouble, abelian:n, catalog:T:row[:p...], file:path.
LieAlgebraData parse_algebra(const std::string& name);
/// case1[:n], case6[:n], case3.
StepwiseDecomposition parse_case(const std::string& name);

}  // namespace nilharm::cli
