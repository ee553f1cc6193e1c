#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orbitweyl/report.hpp"

using namespace orbitweyl;

namespace {

struct Options {
  std::string family = "sl";
  int n = 3;
  std::string suites = "all";
  int k_max = 8;
  int gram_max = 2;
  std::uint64_t seed = 0xC0FFEE;
  std::string pairs = "all";
  std::string out;
  std::string format = "json";
  bool timings = false;
  std::string object;
};

SuiteConfig make_config(const Options& o) {
  SuiteConfig c;
  c.family = parse_family(o.family);
  c.N = o.n;
  build_algebra(c.family, c.N);  // validates the rank
  c.suites = parse_suites(o.suites);
  if (o.k_max < 0) throw std::invalid_argument("--k-max must be >= 0");
  c.k_max = o.k_max;
  if (o.gram_max < 0) throw std::invalid_argument("--gram-max must be >= 0");
  c.gram_degree_max = o.gram_max;
  c.seed = o.seed;
  if (o.pairs != "all") {
    int count = std::stoi(o.pairs);
    if (count < 0) throw std::invalid_argument("--pairs must be 'all' or a count");
    c.pair_count = count;
  }
  return c;
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << o.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the exotic order-4 operators on the minimal nilpotent orbit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "sl or so")->default_val("sl");
    sub->add_option("--n", o.n, "matrix size N")->default_val(3);
    sub->add_option("--seed", o.seed, "seed for sampled checks and oracles")->default_val(0xC0FFEE);
    sub->add_option("--out", o.out, "write to this file instead of stdout");
  };
  CLI::App* run_cmd = app.add_subcommand("run", "run verification suites");
  common(run_cmd);
  run_cmd->add_option("--suites", o.suites, "comma list or 'all'")->default_val("all");
  run_cmd->add_option("--k-max", o.k_max, "largest power of f_psi")->default_val(8);
  run_cmd->add_option("--gram-max", o.gram_max, "largest Gram degree")->default_val(2);
  run_cmd->add_option("--pairs", o.pairs, "'all' or number of sampled commutator pairs")->default_val("all");
  run_cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  run_cmd->add_flag("--timings", o.timings, "include wall-clock times (output is then not reproducible)");
  CLI::App* dump_cmd = app.add_subcommand("dump", "print an operator, f_psi or a Gram matrix");
  common(dump_cmd);
  dump_cmd->add_option("object", o.object, "D0, A, B, C, S, f_psi or gram:p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  SuiteConfig config;
  try {
    config = make_config(o);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (dump_cmd->parsed()) {
    try {
      return emit(o, dump(config, o.object));
    } catch (const std::invalid_argument& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  VerificationReport rep = run(config);
  std::string text = o.format == "json" ? rep.to_json(o.timings) : rep.to_text(o.timings);
  if (int rc = emit(o, text)) return rc;
  return rep.overall == Status::pass ? 0 : 1;
}
