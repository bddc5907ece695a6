#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folindex/driver.hpp"
#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Local indices and residues of singular holomorphic foliations"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Evaluate every command of a session file");
  std::string file, format = "text", oracle = "off";
  std::size_t steps = 0;
  int truncation = 20;
  run->add_option("file", file, "Session file")->required();
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--oracle", oracle, "Cross-check with the truncated-jet oracle")->check(CLI::IsMember({"on", "off"}));
  run->add_option("--steps", steps, "Reduction step budget per basis computation")->check(CLI::PositiveNumber);
  run->add_option("--truncation", truncation, "Initial series truncation for automatic branches")
      ->check(CLI::Range(2, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ifstream in(file);
  if (!in) {
    std::cerr << "folindex: cannot read " << file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    if (steps) folindex::set_step_budget(steps);
    folindex::IndexOptions opt;
    opt.oracle = oracle == "on";
    opt.truncation = truncation;
    if (opt.truncation_cap < truncation) opt.truncation_cap = truncation;
    folindex::Session session = folindex::parse_session(buf.str());
    auto reports = folindex::run_session(session, opt);
    std::cout << (format == "json" ? folindex::format_json(reports) : folindex::format_text(reports));
    return folindex::exit_code(reports);
  } catch (const folindex::Error& e) {
    std::cerr << "folindex: " << e.what() << "\n";
    return 2;
  }
}
