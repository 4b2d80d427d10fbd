// evidence: evaluate belief-function models and compare them with the
// Bayesian conditioning design.
//
//   evidence eval <file> [--prop l1,l2]
//   evidence bayes [--r R] (--p P --q Q | --sweep p=0:1:0.1,q=0.5)
//   evidence compare <file> --prop l1,... [--r R] (--p P --q Q | --sweep ...)
#include <iostream>

#include <CLI11.hpp>

#include "evidence/commands.hpp"

namespace {

void add_bayes_flags(CLI::App& cmd, evidence::BayesFlags& flags) {
  cmd.add_option("--r", flags.r, "witness reliability (default 0.8)");
  cmd.add_option("--p", flags.p, "prior probability of the proposition");
  cmd.add_option("--q", flags.q, "chance a careless statement is accurate");
  cmd.add_option("--sweep", flags.sweep, "grid, e.g. p=0:1:0.5,q=0.5");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief-function evidence models"};
  app.require_subcommand(1);

  evidence::EvalOptions eval_options;
  auto* eval = app.add_subcommand("eval", "conflict, Bel and Pl for a model file");
  eval->add_option("file", eval_options.model, "model file (JSON)")->required();
  eval->add_option("--prop", eval_options.proposition, "labels of a proposition")->delimiter(',');

  evidence::BayesFlags bayes_flags;
  auto* bayes = app.add_subcommand("bayes", "posterior of the reliability conditioning design");
  add_bayes_flags(*bayes, bayes_flags);

  evidence::CompareOptions compare_options;
  auto* compare = app.add_subcommand("compare", "Bayesian posterior beside Bel and Pl, as CSV");
  compare->add_option("file", compare_options.model, "model file (JSON)")->required();
  compare->add_option("--prop", compare_options.proposition, "labels of the proposition")
      ->delimiter(',')
      ->required();
  add_bayes_flags(*compare, compare_options.flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? evidence::kExitOk : evidence::kExitValidation;
  }

  if (eval->parsed()) return evidence::cmd_eval(eval_options, std::cout, std::cerr);
  if (bayes->parsed()) return evidence::cmd_bayes(bayes_flags, std::cout, std::cerr);
  return evidence::cmd_compare(compare_options, std::cout, std::cerr);
}
