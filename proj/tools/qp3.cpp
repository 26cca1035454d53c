// qp3: batch front end over model files.
//
//   qp3 master FILE [NAME...]
//   qp3 verify linf|leibniz2|lwx FILE NAME
//   qp3 derive lwx|lie2algebroid|lie-algebroid FILE NAME
//   qp3 skew FILE NAME
//   qp3 double semidirect FILE NAME
//   qp3 double bialgebroid FILE MU GAMMA
//   qp3 check-bialgebroid FILE MU GAMMA
//   qp3 run FILE...
//
// QP3_WORKERS sets the number of verification threads.

#include "qp3/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>

int main(int argc, char** argv) {
  qp3::RunConfig cfg;
  std::string format = "text";
  if (const char* w = std::getenv("QP3_WORKERS")) {
    try {
      int n = std::stoi(w);
      if (n < 1) throw std::invalid_argument("QP3_WORKERS");
      cfg.workers = unsigned(n);
    } catch (const std::exception&) {
      std::cerr << "error: QP3_WORKERS must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"Derived brackets and higher structures on graded symplectic charts"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--nmax", cfg.nmax, "highest arity checked by the L-infinity verifier")
      ->check(CLI::PositiveNumber);
  app.add_option("--qdeg-bound", cfg.qdeg_bound, "combined base-degree bound for sampled sections")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--allow-master-failure", cfg.allow_master_failure,
               "derive operations even when {Theta,Theta} != 0");
  app.add_flag("--warn-only", cfg.warn_only, "report violations but exit 0");

  std::string kind, file;
  std::vector<std::string> names, files;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* master = sub("master", "residual {Theta,Theta} and decomposition identities");
  master->add_option("file", file)->required();
  master->add_option("names", names);

  auto* verify = sub("verify", "check a named finite structure");
  verify->add_option("kind", kind)->required()->check(CLI::IsMember({"linf", "leibniz2", "lwx"}));
  verify->add_option("file", file)->required();
  verify->add_option("name", names)->required()->expected(1);

  auto* derive = sub("derive", "operator tables of derived brackets");
  derive->add_option("kind", kind)->required()->check(CLI::IsMember({"lwx", "lie2algebroid", "lie-algebroid"}));
  derive->add_option("file", file)->required();
  derive->add_option("name", names)->required()->expected(1);

  auto* skew = sub("skew", "skew-symmetrize an LWX structure and verify the Lie 3-algebra");
  skew->add_option("file", file)->required();
  skew->add_option("name", names)->required()->expected(1);

  auto* dbl = sub("double", "semidirect or bialgebroid double, then verify");
  dbl->add_option("kind", kind)->required()->check(CLI::IsMember({"semidirect", "bialgebroid"}));
  dbl->add_option("file", file)->required();
  dbl->add_option("names", names)->required();

  auto* bi = sub("check-bialgebroid", "master route and derivation route for (mu, gamma)");
  bi->add_option("file", file)->required();
  bi->add_option("names", names)->required()->expected(2);

  auto* run = sub("run", "execute the task directives of model files");
  run->add_option("files", files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  cfg.format = format == "structured" ? qp3::OutputFormat::structured : qp3::OutputFormat::text;
  cfg.command = {chosen->get_name()};
  if (!kind.empty()) cfg.command.push_back(kind);
  cfg.command.insert(cfg.command.end(), names.begin(), names.end());
  if (chosen == run) cfg.inputs = files;
  else cfg.inputs = {file};
  return qp3::run(cfg, std::cout, std::cerr);
}
