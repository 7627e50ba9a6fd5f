#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/instance.hpp"
#include "goint/errors.hpp"

using namespace goint::cli;

namespace {

void add_common(CLI::App* cmd, Options& opt, bool needs_input) {
  auto* in = cmd->add_option("--input", opt.input, "problem instance (JSON)");
  if (needs_input) in->required();
  cmd->add_option("--output", opt.output, "output path (default: standard output)");
  cmd->add_option("--format", opt.format, "json or csv");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--trials", opt.trials, "trial budget");
  cmd->add_option("--grid", opt.grid, "axiom grid size or kernel grid resolution");
}

int emit(const CommandResult& r, const Options& opt) {
  if (!opt.output) {
    std::cout << r.text << std::flush;
    return std::cout ? r.code : kIo;
  }
  std::ofstream out(*opt.output, std::ios::binary);
  if (!out || !(out << r.text) || !out.flush()) {
    std::cerr << "error: cannot write '" << *opt.output << "'\n";
    return kIo;
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity-based fuzzy integrals: evaluation, comparison and property checks"};
  app.require_subcommand(1);
  Options opt;

  auto* integrate = app.add_subcommand("integrate", "evaluate the instance's integral");
  add_common(integrate, opt, true);
  auto* compare = app.add_subcommand("compare", "evaluate several integrals on one instance");
  add_common(compare, opt, true);
  auto* axioms = app.add_subcommand("axioms", "grid-check operator axioms");
  add_common(axioms, opt, false);
  axioms->add_option("--t-overlap", opt.t_overlap, "operator descriptor, e.g. power_product:p=2");
  axioms->add_option("--t-norm", opt.t_norm, "operator descriptor");
  axioms->add_option("--gpg", opt.gpg, "discrete grouping aggregator: max_n, prob_sum, mean_n");
  axioms->add_option("--arity", opt.arity, "arity for --gpg")->check(CLI::PositiveNumber);
  auto* properties = app.add_subcommand("properties", "run property suites");
  add_common(properties, opt, true);
  properties->add_option("--suite", opt.suites, "theorem1, comonotone, homogeneity, problem1, usc")
      ->delimiter(',');
  auto* sweep = app.add_subcommand("sweep", "evaluate the integral across a parameter range");
  add_common(sweep, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    CommandResult r;
    if (*integrate) r = cmd_integrate(opt);
    else if (*compare) r = cmd_compare(opt);
    else if (*axioms) r = cmd_axioms(opt);
    else if (*properties) r = cmd_properties(opt);
    else r = cmd_sweep(opt);
    return emit(r, opt);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const goint::ConstructionError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kValidation;
  } catch (const goint::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
}
