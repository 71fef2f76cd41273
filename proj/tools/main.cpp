#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "modetopo/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mode complexes: validation, evidence replay, nerves and face graphs"};
  app.require_subcommand(1);

  std::string config, evidence, out_dir, cover, relation = "hasse";

  auto* validate = app.add_subcommand("validate", "Parse a scenario config and print its census");
  validate->add_option("config", config, "Scenario config (JSON)")->required();

  auto* run = app.add_subcommand("run", "Replay an evidence stream through a scenario");
  run->add_option("config", config, "Scenario config (JSON)")->required();
  run->add_option("evidence", evidence, "Evidence stream (JSON lines)")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* nerve = app.add_subcommand("nerve", "Print the nerve of a cover as maximal faces");
  nerve->add_option("cover", cover, "Cover file (JSON)")->required();

  auto* graph = app.add_subcommand("graph", "Print the face graph of a scenario complex");
  graph->add_option("config", config, "Scenario config (JSON)")->required();
  graph->add_option("--relation", relation, "hasse or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : modetopo::cli::kExitFormat;
  }

  using namespace modetopo::cli;
  if (*validate) return cmd_validate(config, std::cout, std::cerr);
  if (*run) return cmd_run(config, evidence, out_dir, std::cout, std::cerr);
  if (*nerve) return cmd_nerve(cover, std::cout, std::cerr);
  if (*graph) return cmd_graph(config, relation, std::cout, std::cerr);
  return kExitFormat;
}
