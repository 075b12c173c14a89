#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "syad/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"syad - fuzzy inference engine with seven-fold predication"};

  syad::RunConfig config;
  std::string format = "plain";

  auto* file_opt = app.add_option("--file", config.input_path, "run a DSL program file");
  auto* eval_opt =
      app.add_option("--eval", config.eval_text, "evaluate a DSL string and exit");
  file_opt->excludes(eval_opt);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();
  app.add_flag("--trace", config.trace, "print intermediate inference objects");
  app.footer("Without --file or --eval, syad reads statements from standard input.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*file_opt) {
    config.mode = syad::RunConfig::Mode::Batch;
  } else if (*eval_opt) {
    config.mode = syad::RunConfig::Mode::EvalString;
  } else {
    config.mode = syad::RunConfig::Mode::Repl;
  }
  config.format = format == "tsv" ? syad::OutputFormat::Tsv : syad::OutputFormat::Plain;

  return syad::run(config, std::cin, std::cout, std::cerr);
}
