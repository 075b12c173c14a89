#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "syad/dsl/eval.hpp"
#include "syad/dsl/parser.hpp"
#include "syad/errors.hpp"
#include "syad/format.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace syad {

struct RunConfig {
  enum class Mode { Repl, Batch, EvalString };

  Mode mode = Mode::Repl;
  std::string input_path;  // Batch
  std::string eval_text;   // EvalString
  OutputFormat format = OutputFormat::Plain;
  bool trace = false;
};

namespace detail {

inline void report(const PositionedError& e, std::ostream& err) {
  err << e.pos().line << ":" << e.pos().column << ": error: " << e.what() << "\n";
}

inline void print_result(const dsl::QueryResult& result, const RunConfig& config,
                         std::ostream& out) {
  if (config.trace) {
    for (const dsl::TraceItem& item : result.trace) {
      out << format_trace_item(item, config.format) << "\n";
    }
  }
  out << format_result(result, config.format) << "\n";
}

/// Parses and evaluates one chunk of source against `env`, printing query
/// results as they arrive. Returns 0, or 1 after reporting an error.
inline int run_source(const std::string& source, dsl::Environment& env,
                      const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    dsl::Program program = dsl::parse(source);
    dsl::evaluate(program, env,
                  [&](dsl::QueryResult result) { print_result(result, config, out); });
    return 0;
  } catch (const PositionedError& e) {
    report(e, err);
    return 1;
  }
}

inline bool stdin_is_tty() {
#if defined(__unix__) || defined(__APPLE__)
  return isatty(fileno(stdin)) != 0;
#else
  return false;
#endif
}

}  // namespace detail

/// Runs the configured front-end over the given streams.
/// Exit codes: 0 success, 1 evaluation error, 2 unreadable input file.
inline int run(const RunConfig& config, std::istream& in, std::ostream& out,
               std::ostream& err) {
  dsl::Environment env;

  switch (config.mode) {
    case RunConfig::Mode::Batch: {
      std::ifstream file(config.input_path);
      if (!file) {
        err << "cannot open '" << config.input_path << "'\n";
        return 2;
      }
      std::ostringstream text;
      text << file.rdbuf();
      return detail::run_source(text.str(), env, config, out, err);
    }
    case RunConfig::Mode::EvalString:
      return detail::run_source(config.eval_text, env, config, out, err);
    case RunConfig::Mode::Repl:
      break;
  }

  // REPL: line-at-a-time against a persistent environment. Errors keep the
  // environment so a single bad line can be corrected.
  const bool interactive = detail::stdin_is_tty();
  std::string line;
  while (true) {
    if (interactive) out << "syad> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == ":quit") break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    detail::run_source(line, env, config, out, err);
  }
  return 0;
}

}  // namespace syad
