// fpdir_cli: direction censuses, solution counts, density curves and the
// acceptance suites from the command line.
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using fpdir::cli::Command;
using fpdir::cli::Format;
using fpdir::cli::MethodChoice;
using fpdir::cli::RunConfig;
using fpdir::cli::SweepQuantity;

int main(int argc, char** argv) {
  CLI::App app{"Directions determined by [n]^2 in F_p^2, and related counts"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::uint64_t p = 0, pmin = 0, pmax = 0, n = 0;
  std::string suite = "small";

  app.add_option("--p", p, "prime modulus");
  app.add_option("--pmin", pmin, "lower end of the prime range (sweep)");
  app.add_option("--pmax", pmax, "upper end of the prime range (sweep)");
  app.add_option("--n", n, "side length of the grid [n]^2");
  app.add_option("--lambdas", cfg.lambdas, "comma-separated lambda = n / sqrt(p) values in (0, 1]")
      ->delimiter(',');
  app.add_option("--method", cfg.method, "fast | brute | both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MethodChoice>{
              {"fast", MethodChoice::fast}, {"brute", MethodChoice::brute}, {"both", MethodChoice::both}},
          CLI::ignore_case));
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "write the table to this file");
  app.add_option("--format", cfg.format, "csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}, CLI::ignore_case));
  app.add_option("--seed", cfg.seed, "seed for sampled moduli (mt19937_64)")->capture_default_str();
  app.add_option("--grid", cfg.grid, "lambda step for the curve, in (0, 0.1]")->capture_default_str();
  app.add_option("--suite", suite, "small | all")->check(CLI::IsMember({"small", "all"}));
  app.add_option("--b", cfg.b, "comma-separated moduli for equidist")->delimiter(',');
  app.add_option("--samples", cfg.samples, "moduli drawn when --b is absent")->capture_default_str();
  app.add_option("--quantity", cfg.quantity, "sweep target: nsolve | directions")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SweepQuantity>{{"nsolve", SweepQuantity::nsolve},
                                               {"directions", SweepQuantity::directions}},
          CLI::ignore_case));

  const std::map<std::string, std::pair<Command, const char*>> subcommands{
      {"dircount", {Command::dircount, "count directions determined by [n]^2 in F_p^2"}},
      {"nsolve", {Command::nsolve, "count (a,b,c,d) in [n]^4 with ad + bc = p"}},
      {"curve", {Command::curve, "tabulate D(lambda) and lambda^2"}},
      {"sweep", {Command::sweep, "exact counts against main terms over primes and lambdas"}},
      {"moments", {Command::moments, "fourth moments of character sums split by parity"}},
      {"equidist", {Command::equidist, "discrepancy survey of p inv(a) / b mod 1"}},
      {"verify", {Command::verify, "run the acceptance suite"}},
  };
  for (const auto& [name, entry] : subcommands) {
    const Command cmd = entry.first;
    app.add_subcommand(name, entry.second)->callback([&cfg, cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.count("--p")) cfg.p = p;
  if (app.count("--pmin")) cfg.pmin = pmin;
  if (app.count("--pmax")) cfg.pmax = pmax;
  if (app.count("--n")) cfg.n = n;
  cfg.suite = *fpdir::verify::parse_suite(suite);
  return fpdir::cli::run(cfg, std::cout, std::cerr);
}
