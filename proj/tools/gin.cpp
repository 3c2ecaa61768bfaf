#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gin/cli.hpp"

int main(int argc, char** argv) {
  using gin::cli::Format;
  gin::cli::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Generic initial ideals over F_p: series, initial ideals, incremental traces, conjecture checks"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_type) {
    if (with_type) {
      sub->add_option("--type", cfg.type, "degree type n:d1,d2,...")->envname("GIN_TYPE");
    }
    sub->add_option("--prime", cfg.prime, "field characteristic")->envname("GIN_PRIME");
    sub->add_option("--seed", cfg.seed, "base seed")->envname("GIN_SEED");
    sub->add_option("--bound", cfg.bound, "truncation degree")->envname("GIN_BOUND");
    sub->add_option("--format", format, "text or json")
        ->envname("GIN_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--trace", cfg.trace, "print grade listings and per-trial series")->envname("GIN_TRACE");
    sub->add_flag("--verify", cfg.verify, "cross-check against direct Groebner bases")->envname("GIN_VERIFY");
  };

  auto* series = app.add_subcommand("series", "print the ceiling series and, for r == n, delta, sigma and the sigma condition");
  add_common(series, true);
  auto* initial = app.add_subcommand("initial", "minimal generators and standard monomial counts of a generic instance");
  add_common(initial, true);
  auto* trace = app.add_subcommand("incremental-trace", "step-by-step incremental construction of in(I,g)");
  add_common(trace, true);
  auto* check = app.add_subcommand("check", "run a conjecture predicate over a seed grid");
  add_common(check, true);
  check->add_option("conjecture", cfg.conjecture, "froberg | pardue-e | pardue-c | moreno | structure-b | structure-f")
      ->required();
  check->add_option("--trials", cfg.trials, "number of seeds (seed, seed+1, ...)")->envname("GIN_TRIALS");
  check->add_option("--jobs", cfg.jobs, "parallel trials")->envname("GIN_JOBS")->check(CLI::PositiveNumber);
  auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks on the worked examples");
  add_common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gin::cli::kExitError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::text;

  const auto outcome = gin::cli::dispatch(cfg);
  (outcome.exit_code == gin::cli::kExitError ? std::cerr : std::cout) << outcome.out;
  return outcome.exit_code;
}
