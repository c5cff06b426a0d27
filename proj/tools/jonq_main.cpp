#include <iostream>

#include "CLI11.hpp"
#include "rees/cli/run.hpp"

namespace {

void add_common(CLI::App* sub, rees::Command& cmd, std::string& field) {
  sub->add_option("instance", cmd.instance_path, "instance file")->required();
  sub->add_option("--field", field, "override the field: Q or Fp=<p>");
  sub->add_option("--seed", cmd.seed, "seed for randomized checks");
  sub->add_option("--budget", cmd.budget_pairs, "pair reductions allowed per Groebner basis");
  sub->add_flag("--json", cmd.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras of de Jonquieres maps"};
  app.require_subcommand(1);
  rees::Command cmd;
  std::string field;

  const std::pair<const char*, const char*> verbs[] = {
      {"sequence", "print the downgraded sequence h1..hL with bidegrees"},
      {"rees", "print the generators of the defining ideal J"},
      {"implicitize", "print the implicit equation, or 'dominant'"},
      {"betti", "print the Betti table of the symmetric algebra"},
      {"report", "print dimension, depth and Cohen-Macaulayness"},
      {"verify", "run the verification suite"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, cmd, field);
    if (std::string(name) == "verify") {
      sub->add_flag("--timing", cmd.timing, "report per-check wall time");
      sub->add_flag("--corrupt", cmd.corrupt)->group("");
    }
  }
  CLI::App* oracle = app.add_subcommand("oracle", "run an oracle computation on a generator set");
  oracle->add_option("op", cmd.oracle_op, "gb | saturate | eliminate | dim | colon")->required();
  oracle->add_option("set", cmd.oracle_set, "minors | L | J | K | m | J<i>")->required();
  add_common(oracle, cmd, field);
  oracle->add_option("--by", cmd.oracle_by, "second set for saturate and colon")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: Usage: " << e.what() << "\n";
    return 1;
  }
  cmd.verb = app.get_subcommands().front()->get_name();
  if (!field.empty()) cmd.field = field;

  rees::RunResult result = rees::run(cmd);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
