#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pocopula/runner.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::optional<std::string> out;
  std::optional<std::string> figure;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> size;
  std::optional<std::string> grid;
  std::optional<std::string> order;
  std::optional<std::string> which;
  std::optional<std::string> theorem;
};

using pocopula::Json;
using pocopula::Task;

// Subcommand name -> task it forces; "run" keeps the file's own task.
struct Command {
  const char* name;
  std::optional<Task> task;
  const char* help;
};

const Command kCommands[] = {
    {"eval", Task::EVAL, "Tabulate system laws and hazards on a grid"},
    {"order-check", Task::ORDER_CHECK, "Compare two models in the st, hr or rhr order"},
    {"conditions", Task::CONDITIONS, "Check generator shape conditions"},
    {"theorem", Task::THEOREM, "Check one comparison theorem on a pair of models"},
    {"sample", Task::SAMPLE, "Draw component lifetimes from the copula model"},
    {"repro", Task::REPRO, "Rebuild a reference figure as CSV and SVG"},
    {"run", std::nullopt, "Run the task named in the scenario file"},
};

int execute(const std::optional<Task>& forced, const Flags& f) {
  pocopula::Scenario s;
  if (!f.scenario.empty()) {
    s = pocopula::load_scenario(f.scenario);
  } else if (forced != Task::REPRO) {
    throw CLI::RequiredError("--scenario");
  }
  if (forced) s.task = *forced;
  Json& p = s.task_params;
  if (f.figure) p["figure"] = *f.figure;
  if (f.seed) p["seed"] = *f.seed;
  if (f.size) p["size"] = *f.size;
  if (f.grid) p["grid"] = *f.grid;
  if (f.order) p["order"] = *f.order;
  if (f.which) p["which"] = *f.which;
  if (f.theorem) p["theorem"] = *f.theorem;
  pocopula::RunOptions opts;
  opts.out_dir = f.out;
  return pocopula::run_scenario(s, opts, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series and parallel systems with proportional-odds components and Archimedean copulas"};
  app.require_subcommand(1);
  Flags flags;
  std::optional<Task> forced;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--scenario", flags.scenario, "Scenario JSON file");
    sub->add_option("--out", flags.out, "Directory for CSV/SVG artifacts");
    sub->add_option("--figure", flags.figure, "Figure id (repro)");
    sub->add_option("--seed", flags.seed, "Sampler seed");
    sub->add_option("--size", flags.size, "Sample size");
    sub->add_option("--grid", flags.grid, "lo:hi:count[:log|lin]");
    sub->add_option("--order", flags.order, "ST, HR or RHR (order-check)");
    sub->add_option("--which", flags.which, "SERIES or PARALLEL (order-check)");
    sub->add_option("--theorem", flags.theorem, "Theorem id (theorem)");
    const std::optional<Task> t = c.task;
    sub->callback([&forced, t] { forced = t; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pocopula::kExitUsage;
  }
  try {
    return execute(forced, flags);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return pocopula::kExitUsage;
}
