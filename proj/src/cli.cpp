#include "funcadd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "funcadd/errors.hpp"
#include "funcadd/format.hpp"
#include "funcadd/oracle.hpp"
#include "funcadd/parser.hpp"
#include "funcadd/pretty.hpp"

namespace funcadd {

namespace {

constexpr int kExitUsage = 3;
constexpr int kExitOracleDisagree = 4;

bool read_file(const std::string& path, std::string& out, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool load_program(const std::string& path, Program& program,
                  std::ostream& err) {
  std::string source;
  std::string io_error;
  if (!read_file(path, source, io_error)) {
    err << "error: " << io_error << "\n";
    return false;
  }
  try {
    Program parsed = parse_program_text(source);
    for (const Clause& c : parsed.clauses()) program.add_clause(c);
    return true;
  } catch (const SyntaxError& ex) {
    err << "error: " << path << ":" << ex.what() << "\n";
    return false;
  }
}

void print_trace(const Trace& trace, const Limits& limits, std::ostream& err) {
  for (const TraceEvent& e : trace.events) err << format_event(e) << "\n";
  if (trace.truncated) {
    err << "# trace truncated after " << limits.max_trace_events
        << " events\n";
  }
}

// Bounded-oracle cross-check. Disagreement is only claimed when the oracle
// ran to completion; a bound hit is reported as inconclusive.
int oracle_check(const Program& program, const ExprPtr& entry,
                 const Outcome& engine, int bound, std::ostream& out) {
  oracle::LeftmostResult ora =
      oracle::first_success_leftmost(program, *entry, bound);
  bool oracle_bounded = ora.outcome.is_hard_error() &&
                        ora.outcome.error_kind() == HardErrorKind::DepthExceeded;
  bool engine_bounded = engine.is_hard_error() &&
                        engine.error_kind() == HardErrorKind::DepthExceeded;
  if (oracle_bounded && !engine_bounded) {
    out << "oracle: inconclusive (depth bound " << bound << " reached)\n";
    return -1;
  }
  if (engine.same_observable(ora.outcome)) {
    out << "oracle: agree\n";
    return -1;
  }
  out << "oracle: DISAGREE engine=[" << format_outcome(engine) << "] oracle=["
      << format_outcome(ora.outcome) << "]\n";
  return kExitOracleDisagree;
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Program program;
  if (config.program_path &&
      !load_program(*config.program_path, program, err)) {
    return kExitUsage;
  }

  ExprPtr entry;
  try {
    entry = parse_entry_text(config.entry);
  } catch (const SyntaxError& ex) {
    err << "error: entry expression: " << ex.what() << "\n";
    return kExitUsage;
  }

  Limits limits;
  if (config.depth_limit) limits.max_call_depth = *config.depth_limit;

  EvalRun run = run_main(program, entry, limits);
  if (config.trace) print_trace(run.trace, limits, err);
  out << format_outcome(run.outcome) << "\n";

  int code = outcome_exit_code(run.outcome);
  if (config.oracle_check) {
    int disagree =
        oracle_check(program, entry, run.outcome, config.oracle_bound, out);
    if (disagree > 0) return disagree;
  }
  return code;
}

// ----------------------------------------------------------------------------
// REPL
// ----------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A line is a clause when a depth-0 `=` follows a head; `==` is its own token.
bool looks_like_clause(const std::vector<Token>& tokens) {
  int depth = 0;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::LParen:
      case TokenKind::LBracket: ++depth; break;
      case TokenKind::RParen:
      case TokenKind::RBracket: --depth; break;
      case TokenKind::Equals:
        if (depth == 0) return true;
        break;
      default: break;
    }
  }
  return false;
}

struct ReplSession {
  Program program;
  Limits limits;
  bool trace_on = false;

  void evaluate(const std::vector<Token>& tokens, std::ostream& out,
                std::ostream& err) {
    ExprPtr entry;
    try {
      entry = resolve_expr(parse_expr(tokens), {});
    } catch (const SyntaxError& ex) {
      err << "parse error: " << ex.what() << "\n";
      return;
    }
    EvalRun run = run_main(program, entry, limits);
    if (trace_on) print_trace(run.trace, limits, err);
    out << format_outcome(run.outcome) << "\n";
  }

  void add_clauses(const std::vector<Token>& tokens, std::ostream& err) {
    try {
      Program parsed = parse_program(tokens);
      for (const Clause& c : parsed.clauses()) program.add_clause(c);
    } catch (const SyntaxError& ex) {
      err << "parse error: " << ex.what() << "\n";
    }
  }
};

}  // namespace

int cmd_repl(const ReplConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  ReplSession session;
  session.limits = config.limits;
  if (config.program_path &&
      !load_program(*config.program_path, session.program, err)) {
    return kExitUsage;
  }

  std::string line;
  for (;;) {
    if (config.interactive) {
      out << "> " << std::flush;
    }
    if (!std::getline(in, line)) break;
    std::string text = trim(line);
    if (text.empty()) continue;

    if (text[0] == ':') {
      std::istringstream words(text);
      std::string cmd, arg;
      words >> cmd;
      std::getline(words, arg);
      arg = trim(arg);
      if (cmd == ":quit" || cmd == ":q") break;
      if (cmd == ":list") {
        out << pretty(session.program);
      } else if (cmd == ":trace") {
        if (arg == "on") session.trace_on = true;
        else if (arg == "off") session.trace_on = false;
        else err << "usage: :trace on|off\n";
      } else if (cmd == ":load") {
        if (arg.empty()) err << "usage: :load <path>\n";
        else load_program(arg, session.program, err);
      } else {
        err << "unknown command '" << cmd << "'\n";
      }
      continue;
    }

    std::vector<Token> tokens;
    try {
      tokens = tokenize(text);
    } catch (const SyntaxError& ex) {
      err << "lex error: " << ex.what() << "\n";
      continue;
    }
    if (tokens.size() == 1) continue;  // comment-only line
    if (looks_like_clause(tokens)) {
      session.add_clauses(tokens, err);
    } else {
      session.evaluate(tokens, out, err);
    }
  }
  if (config.interactive) out << "\n";
  return 0;
}

}  // namespace funcadd
