#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "frobstar/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Frobenius star-algebra verification tool"};
  app.require_subcommand(1);

  frobstar::report::RunConfig cfg;
  double tolerance = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "group.v1 or algebra.v1 JSON")
        ->required();
    sub->add_option("--automorphism", cfg.automorphism_path,
                    "automorphism JSON {perm, m}");
    sub->add_option("--m", cfg.m, "grading modulus override");
    sub->add_option("--tolerance", tolerance,
                    "equality tolerance (default 1e-9)");
    sub->add_option("--seed", cfg.tol.seed, "RNG seed");
    sub->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
  };
  for (const char* name : {"check-axioms", "characters", "idempotents",
                           "twisted", "full-report"})
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (tolerance > 0.0) {
    cfg.tol.eps_eq = tolerance;
    cfg.tol.eps_rank = tolerance;
  }

  frobstar::report::RunResult res = frobstar::report::run(cfg);
  if (res.exit_code == 2) {
    std::cerr << res.text;
    return 2;
  }
  const std::string& payload = cfg.format == "json" ? res.json : res.text;
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    out << payload;
  }
  return res.exit_code;
}
