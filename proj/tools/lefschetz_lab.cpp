#include "leflab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"lefschetz-lab: exact-arithmetic certificates for Lefschetz sl2 "
               "algebras, Mukai lattices, symplectic density, and abelian mirror pairs"};
  app.require_subcommand(1);

  leflab::cli::Options opt;
  std::string range;

  for (const char* name : {"signature", "ns-lie", "mukai-density", "k3-mirror",
                           "abelian-mirror", "stabilizer-lie"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input_path, "input JSON file")->required();
    sub->add_option("--out", [&](const std::vector<std::string>& v) {
      opt.out_path = v.front();
      return true;
    }, "write the report to this file");
    sub->add_option("--seed", opt.seed, "seed for the pseudorandom sampling stream");
    sub->add_option("--budget", [&](const std::vector<std::string>& v) {
      opt.budget = std::stol(v.front());
      return true;
    }, "step budget for the split search");
    sub->add_option("--range", range, "line-bundle exponent range A..B");
    sub->add_option("--cache-dir", [&](const std::vector<std::string>& v) {
      opt.cache_dir = v.front();
      return true;
    }, "closure cache directory (default: LEFLAB_CACHE)");
    sub->callback([&, name]() { opt.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  if (!range.empty()) {
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      std::cerr << "range must be of the form A..B\n";
      return 2;
    }
    try {
      opt.range = {std::stol(range.substr(0, dots)), std::stol(range.substr(dots + 2))};
    } catch (const std::exception&) {
      std::cerr << "range must be of the form A..B\n";
      return 2;
    }
  }

  const leflab::cli::Outcome outcome = leflab::cli::run(opt);
  std::cout << outcome.report.dump(2) << std::endl;
  return outcome.exit_code;
}
