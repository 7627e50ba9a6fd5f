#pragma once

#include <optional>
#include <string>
#include <vector>

namespace goint::cli {

struct Options {
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> format;  // json or csv; default depends on the command
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<int> grid;
  std::vector<std::string> suites;
  std::optional<std::string> t_overlap;
  std::optional<std::string> t_norm;
  std::optional<std::string> gpg;
  int arity = 2;
};

struct CommandResult {
  int code = 0;
  std::string text;
};

CommandResult cmd_integrate(const Options& opt);
CommandResult cmd_compare(const Options& opt);
CommandResult cmd_axioms(const Options& opt);
CommandResult cmd_properties(const Options& opt);
CommandResult cmd_sweep(const Options& opt);

}  // namespace goint::cli
