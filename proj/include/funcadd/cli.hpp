#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "funcadd/ast.hpp"
#include "funcadd/eval.hpp"

namespace funcadd {

struct RunConfig {
  std::optional<std::string> program_path;
  std::string entry = "main()";
  bool trace = false;
  std::optional<int> depth_limit;
  bool oracle_check = false;
  int oracle_bound = 16;
};

// Exit codes: 0 success, 1 soft failure, 2 hard error, 3 usage/parse error,
// 4 oracle disagreement. Results go to `out`, trace and diagnostics to `err`.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ReplConfig {
  std::optional<std::string> program_path;
  Limits limits;
  bool interactive = false;  // print prompts
};

// Line-oriented loop; never exits nonzero on evaluation failure.
int cmd_repl(const ReplConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace funcadd
