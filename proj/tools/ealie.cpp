// ealie: build an instance, decompose a window, run axiom suites, export roots.

#include "ealie/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

struct Flags {
  ealie::InstanceSpec spec;
  std::string q;
  std::string suites;
  std::string out;
  std::vector<CLI::Option*> nu;
};

void add_instance_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--construction", f.spec.construction, "instance to build (see list-constructions)");
  cmd->add_option("--ell", f.spec.ell, "matrix size parameter l of the quantum-torus algebras");
  f.nu.push_back(cmd->add_option("--nu", f.spec.nu, "rank of the grading lattice Z^nu"));
  cmd->add_option("--q", f.q, "strict upper triangle of q, row-major, entries +-1 (default all -1)")
      ->allow_extra_args(false);
  cmd->add_option("--type", f.spec.type, "classical type B, C or D");
  cmd->add_option("--rank", f.spec.rank, "rank of the classical algebra");
  cmd->add_option("--window", f.spec.window, "lattice window |sigma|_inf <= w")->capture_default_str();
  cmd->add_option("--primes", f.spec.primes, "distinct primes for the square-root field")->delimiter(',');
  cmd->add_option("--seed", f.spec.seed, "seed for the property suite")->capture_default_str();
  cmd->add_option("--out", f.out, "write the report or export here instead of stdout");
}

void finish_spec(Flags& f) {
  if (!f.q.empty()) f.spec.q = ealie::parse_q(f.q);
  const auto& c = f.spec.construction;
  bool given = std::any_of(f.nu.begin(), f.nu.end(), [](const CLI::Option* o) { return o->count() > 0; });
  if (!given && (c == "sp-classical" || c == "sqrt-extension" || c == "cocycle-extension")) f.spec.nu = 0;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return 0;
  }
  std::ofstream os(path);
  if (!os) {
    std::cerr << "ealie: cannot write " << path << '\n';
    return 2;
  }
  os << text << '\n';
  return 0;
}

int run(Flags& f, const std::vector<std::string>& fixed) {
  finish_spec(f);
  std::vector<std::string> suites;
  if (!fixed.empty()) {
    suites = fixed;
  } else if (!f.suites.empty()) {
    suites = ealie::parse_suites(f.suites);
  } else {
    suites = ealie::build_instance(f.spec)->grading_is_internal() ? std::vector<std::string>{"T", "EARS"}
                                                                   : std::vector<std::string>{"D", "EARS"};
  }
  auto res = ealie::run_verification(f.spec, suites);
  if (int rc = emit(res.json, f.out)) return rc;
  return res.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-space decompositions and axiom checks for extended affine Lie algebras"};
  app.require_subcommand(1);
  Flags f;

  auto* check = app.add_subcommand("check", "run axiom suites and print a JSON report");
  add_instance_flags(check, f);
  check->add_option("--suites", f.suites, "comma-separated subset of T,D,EARS,SERRE,TAME,PROPS");
  auto* exp = app.add_subcommand("export", "write the window root data, one JSON record per line");
  add_instance_flags(exp, f);
  auto* serre = app.add_subcommand("serre", "check the Serre relations of the simple preimages");
  add_instance_flags(serre, f);
  auto* ears = app.add_subcommand("ears", "check the extended affine root system axioms");
  add_instance_flags(ears, f);
  auto* list = app.add_subcommand("list-constructions", "print the available constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& c : ealie::constructions()) std::cout << c.name << "  " << c.summary << '\n';
      return 0;
    }
    if (check->parsed()) return run(f, {});
    if (serre->parsed()) return run(f, {"SERRE"});
    if (ears->parsed()) return run(f, {"EARS"});
    finish_spec(f);
    if (f.out.empty()) {
      ealie::export_window(f.spec, std::cout);
      return 0;
    }
    std::ofstream os(f.out);
    if (!os) {
      std::cerr << "ealie: cannot write " << f.out << '\n';
      return 2;
    }
    ealie::export_window(f.spec, os);
    return 0;
  } catch (const ealie::UsageError& e) {
    std::cerr << "ealie: " << e.what() << '\n';
    return 2;
  }
}
