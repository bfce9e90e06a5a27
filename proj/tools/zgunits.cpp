// Command-line front end: load and validate group files, run the torsion-unit
// constraint solver per order or in full, and replay the worked examples.

#include <iostream>

#include "CLI11.hpp"
#include "zgu/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"torsion units of integral group rings: constraint solver and checks"};
  app.require_subcommand(1);

  zgu::RunConfig config;
  std::string characters_csv;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    auto* group = cmd->add_option("--group", config.group_path, "group data file (JSON)");
    if (needs_group) group->required();
    cmd->add_option("--characters", characters_csv,
                    "comma-separated character names (default: all)");
    cmd->add_option("--format", format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag_function(
        "-v,--verbose", [&](std::int64_t n) { config.verbosity = static_cast<int>(n); },
        "increase verbosity (-vv prints the constraint forms)");
  };

  auto* validate = app.add_subcommand("validate", "parse a group file and check consistency");
  add_common(validate, true);

  auto* check = app.add_subcommand("check", "solve the constraints per candidate order");
  add_common(check, true);
  bool all = false;
  check->add_option("--order", config.order, "candidate order (must divide the exponent)");
  check->add_flag("--all", all, "process every divisor of the exponent");

  auto* spectrum = app.add_subcommand("spectrum", "compare element orders with surviving orders");
  add_common(spectrum, true);

  auto* prime_graph = app.add_subcommand("prime-graph", "compare prime graphs");
  add_common(prime_graph, true);

  auto* examples =
      app.add_subcommand("examples", "replay a worked example: s3-lattice | s3-unit | a5-order5");
  add_common(examples, false);
  examples->add_option("name", config.example_name, "example name")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) config.mode = zgu::RunConfig::Mode::Validate;
  if (check->parsed()) {
    if (check->count("--order") && all) {
      std::cerr << "error: --order and --all are mutually exclusive\n";
      return 2;
    }
    if (!check->count("--order") && !all) {
      std::cerr << "error: check needs --order <n> or --all\n";
      return 2;
    }
    config.mode = all ? zgu::RunConfig::Mode::CheckAll : zgu::RunConfig::Mode::CheckOrder;
  }
  if (spectrum->parsed()) config.mode = zgu::RunConfig::Mode::Spectrum;
  if (prime_graph->parsed()) config.mode = zgu::RunConfig::Mode::PrimeGraph;
  if (examples->parsed()) config.mode = zgu::RunConfig::Mode::Examples;

  config.format = (format == "structured") ? zgu::RunConfig::Format::Structured
                                           : zgu::RunConfig::Format::Text;
  if (!characters_csv.empty()) {
    std::size_t pos = 0;
    while (pos <= characters_csv.size()) {
      std::size_t comma = characters_csv.find(',', pos);
      if (comma == std::string::npos) comma = characters_csv.size();
      if (comma > pos) config.characters.push_back(characters_csv.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }

  return zgu::run(config, std::cout, std::cerr);
}
