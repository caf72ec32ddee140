#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "funcadd/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"funcadd - an interpreter for a small functional language "
               "with sequential-choice failure handling"};
  app.require_subcommand(1);

  funcadd::RunConfig run_config;
  std::string run_file;
  CLI::App* run = app.add_subcommand("run", "evaluate an entry expression");
  run->add_option("file", run_file, "program file (.fnp)");
  run->add_option("--entry", run_config.entry,
                  "entry expression (default: main())");
  run->add_flag("--trace", run_config.trace,
                "stream the rule-by-rule trace to stderr");
  int depth_limit = 0;
  run->add_option("--depth-limit", depth_limit, "maximum call depth")
      ->check(CLI::PositiveNumber);
  run->add_flag("--oracle-check", run_config.oracle_check,
                "cross-check the result against the bounded search oracle");
  run->add_option("--oracle-bound", run_config.oracle_bound,
                  "oracle depth bound (default: 16)")
      ->check(CLI::PositiveNumber);

  funcadd::ReplConfig repl_config;
  std::string repl_file;
  CLI::App* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("file", repl_file, "program file to preload");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep the exit-code contract: every usage problem is 3.
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  if (run->parsed()) {
    if (!run_file.empty()) run_config.program_path = run_file;
    if (depth_limit > 0) run_config.depth_limit = depth_limit;
    return funcadd::cmd_run(run_config, std::cout, std::cerr);
  }

  if (!repl_file.empty()) repl_config.program_path = repl_file;
  repl_config.interactive = isatty(fileno(stdin));
  return funcadd::cmd_repl(repl_config, std::cin, std::cout, std::cerr);
}
