#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grouplet/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, grouplet::RunConfig& cfg, bool needs_group_field) {
  auto* group = cmd->add_option("--group", cfg.group_spec,
                                "Group spec: C<n>, D<m>, S<m>, Q8, products like C2xC2, "
                                "or @file.json");
  auto* field = cmd->add_option("--field", cfg.field_spec, "Field spec: Q or F<p>");
  if (needs_group_field) {
    group->required();
    field->required();
  }
  std::map<std::string, grouplet::RunConfig::Format> formats{
      {"text", grouplet::RunConfig::Format::Text}, {"json", grouplet::RunConfig::Format::Json}};
  cmd->add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized checks")
      ->envname("GROUPLET_SEED");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact group-algebra computations: regular representations, G-circulant "
               "matrices, Jacobson radicals, and semisimplicity certificates"};
  app.require_subcommand(1);

  grouplet::RunConfig cfg;

  auto* check = app.add_subcommand("check", "Semisimplicity verdict with certificate");
  add_common_options(check, cfg, true);

  auto* radical = app.add_subcommand("radical", "Jacobson radical basis report");
  add_common_options(radical, cfg, true);

  auto* embed = app.add_subcommand("embed", "Group-ring element -> G-circulant matrix");
  add_common_options(embed, cfg, true);
  embed->add_option("--element", cfg.element_literal,
                    "Comma-separated coefficients in group order, rationals as p/q")
      ->required();

  auto* extract = app.add_subcommand("extract", "G-circulant matrix -> group-ring element");
  add_common_options(extract, cfg, true);
  extract->add_option("--matrix", cfg.matrix_path, "Matrix JSON file")->required();

  auto* sweep = app.add_subcommand(
      "sweep", "Verdicts for all catalog groups of order <= 12 over Q, F2, F3, F5, F7");
  add_common_options(sweep, cfg, false);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");
  add_common_options(selftest, cfg, false);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) cfg.command = grouplet::RunConfig::Command::Check;
  if (radical->parsed()) cfg.command = grouplet::RunConfig::Command::Radical;
  if (embed->parsed()) cfg.command = grouplet::RunConfig::Command::Embed;
  if (extract->parsed()) cfg.command = grouplet::RunConfig::Command::Extract;
  if (sweep->parsed()) cfg.command = grouplet::RunConfig::Command::Sweep;
  if (selftest->parsed()) cfg.command = grouplet::RunConfig::Command::Selftest;

  return grouplet::run(cfg, std::cout, std::cerr);
}
