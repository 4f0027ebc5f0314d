#include <iostream>

#include "CLI11.hpp"
#include "sipq/cli.hpp"

namespace {

const char* kGrammar = R"(Input grammar:
  --spec        preset (natural, distinct, rogers-ramanujan, gollnitz-gordon,
                schur, schur-refined, glasgow) or k=K,c=c1:...:cK,d=d1:...:dK
  --partition   comma-separated ascending parts, e.g. 2,7
                with --ncopies: value:subscript pairs, a trailing ~ overlines
                the pair, e.g. 1:1,3:1~
Exit status: 0 when every check passes, 1 on a failed check, 2 on a usage
error, 3 for an unknown identity, 4 when an identity has no oracle.)";

}  // namespace

int main(int argc, char** argv) {
  using namespace sipq::cli;
  CLI::App app{"Separable integer partition classes and q-series identity checks"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output = "text";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--trunc", cfg.trunc, "Highest q-exponent compared")->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "Check one identity coefficientwise");
  verify->add_option("--identity", cfg.identity_id, "Identity id")->required();
  common(verify);

  auto* verify_all = app.add_subcommand("verify-all", "Check every registered identity");
  common(verify_all);

  auto* oracle = app.add_subcommand("oracle", "Compare partition counts with both sides");
  oracle->add_option("--identity", cfg.identity_id, "Identity id (all with oracles when omitted)");
  oracle->add_option("--total-max", cfg.total_max, "Largest total enumerated")->check(CLI::PositiveNumber);
  common(oracle);

  auto* basis = app.add_subcommand("basis", "List basis elements with n parts");
  basis->add_option("--spec", cfg.spec, "Class spec")->required();
  basis->add_option("--n", cfg.n, "Number of parts")->check(CLI::PositiveNumber);
  basis->add_option("--h-max", cfg.h_max, "Largest part allowed");
  common(basis);

  auto* decompose = app.add_subcommand("decompose", "Split a partition into basis and padding");
  decompose->add_option("--spec", cfg.spec, "Class spec");
  decompose->add_option("--partition", cfg.partition, "Partition")->required();
  decompose->add_flag("--ncopies", cfg.ncopies, "Treat the partition as n copies of n");
  decompose->add_option("--r", cfg.r, "Weighted-difference bound for --ncopies");
  common(decompose);

  auto* table = app.add_subcommand("table", "Basis generating functions b(n, h)");
  table->add_option("--spec", cfg.spec, "Class spec")->required();
  table->add_option("--n", cfg.n, "Largest part count")->check(CLI::PositiveNumber);
  table->add_option("--h-max", cfg.h_max, "Largest part (defaults to --trunc)");
  common(table);

  CLI11_PARSE(app, argc, argv);

  cfg.command = parse_command(app.get_subcommands().front()->get_name());
  cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  return run(cfg, std::cout, std::cerr);
}
