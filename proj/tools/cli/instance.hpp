#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "goint/integrals.hpp"
#include "goint/space_measure.hpp"

namespace goint::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kValidation = 1, kViolation = 2, kIo = 3 };

/// Error carrying the process exit code it maps to.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct SweepSpec {
  std::string parameter;  // overlap.p, gpg.p or gpg.beta
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

struct VerificationSpec {
  std::vector<std::string> suites;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  /// The * of the homogeneity and problem1 suites.
  std::optional<BinaryOperator> star;
};

struct Instance {
  FiniteSpace space;
  Capacity capacity;
  std::optional<FuzzyFunction> function;
  Json integral;  // raw spec, kept so sweeps can rewrite parameters
  std::optional<std::vector<Json>> compare;
  std::optional<SweepSpec> sweep;
  VerificationSpec verification;
};

Json read_json(const std::filesystem::path& path);

/// Validates the whole document before returning. Schema shape problems throw
/// CliError(kIo); violated invariants throw goint errors (exit 1).
Instance parse_instance(const Json& doc);

Instance load_instance(const std::filesystem::path& path);

BinaryOperator parse_operator_spec(const Json& spec);
GpgFunctional parse_gpg_spec(const Json& spec);
IntegralConfig parse_integral_spec(const Json& spec);

/// The function values, or a validation error if the instance has none.
const FuzzyFunction& require_function(const Instance& inst);

}  // namespace goint::cli
