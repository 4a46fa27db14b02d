// brf: bounded root functionals of polynomial systems from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brf/bezout.hpp"
#include "brf/errors.hpp"
#include "brf/functional.hpp"
#include "brf/ideal.hpp"
#include "brf/poly_io.hpp"
#include "brf/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitPrecondition = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw brf::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One polynomial per line; the system is square, so nvars = number of lines.
brf::SystemProfile read_system(const std::string& path) {
  std::string text = slurp(path);
  std::size_t count = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++count;
  }
  if (count == 0) throw brf::ParseError(path + ": empty system", 0);
  std::istringstream in(text);
  return brf::SystemProfile(brf::parse_poly_lines(in, count));
}

brf::Functional read_functional(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw brf::ParseError(path + ": " + e.what(), e.byte);
  }
  return brf::functional_from_json(j);
}

nlohmann::json system_json(const brf::SystemProfile& f) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : f.polys()) polys.push_back(brf::to_string(p));
  return {{"nvars", f.nvars()}, {"delta_f", f.delta_f()}, {"polys", polys}};
}

std::string functional_text(const brf::Functional& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (auto it = l.coeffs().rbegin(); it != l.coeffs().rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += brf::to_string(brf::Poly::monomial(it->first)) + ": " + it->second.get_str();
  }
  return out;
}

struct Common {
  bool json = false;
  bool serial = false;
  brf::Execution exec() const { return serial ? brf::Execution::Serial : brf::Execution::Parallel; }
};

int cmd_basis(const Common& c, const std::string& system_path, int degree, std::uint64_t cap) {
  brf::SystemProfile f = read_system(system_path);
  if (degree < 0) throw brf::PreconditionViolation("--degree must be >= 0");
  brf::BoundedRootBasis b = brf::root_functional_basis(f, degree, cap, c.exec());
  if (c.json) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& l : b.basis) basis.push_back(brf::to_json(l));
    nlohmann::json out = {{"system", system_json(f)},
                          {"degree", b.degree},
                          {"macaulay_rank", b.macaulay_rank},
                          {"dimension", b.basis.size()},
                          {"basis", basis}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "degree " << b.degree << ", macaulay rank " << b.macaulay_rank << ", dimension "
              << b.basis.size() << '\n';
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      std::cout << "  L" << i + 1 << " = {" << functional_text(b.basis[i]) << "}\n";
    }
  }
  return 0;
}

int cmd_extend(const Common& c, const std::string& system_path, const std::string& l1_path, int delta1,
               const std::string& l2_path, int delta2) {
  brf::SystemProfile f = read_system(system_path);
  brf::Functional l1 = read_functional(l1_path);
  brf::Functional l2 = read_functional(l2_path);
  brf::Functional l = brf::product_functional(l1, delta1, l2, delta2, f, {}, c.exec());
  auto missed = brf::first_unannihilated(l, f, l.bound());
  if (c.json) {
    nlohmann::json out = {{"system", system_json(f)},
                          {"delta1", delta1},
                          {"delta2", delta2},
                          {"functional", brf::to_json(l)},
                          {"verification", {{"annihilates_degree", l.bound()}, {"ok", !missed.has_value()}}}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "bound " << l.bound() << ": {" << functional_text(l) << "}\n";
    std::cout << "annihilation at degree " << l.bound() << ": " << (missed ? "FAILED" : "ok") << '\n';
  }
  return missed ? kExitVerifyFailed : 0;
}

int cmd_eval(const Common& c, const std::string& functional_path, const std::string& poly_text) {
  brf::Functional l = read_functional(functional_path);
  brf::Poly p = brf::parse_poly(poly_text, l.nvars());
  brf::Rational v = l.apply(p);
  if (c.json) {
    std::cout << nlohmann::json{{"poly", brf::to_string(p)}, {"value", v.get_str()}}.dump() << '\n';
  } else {
    std::cout << v.get_str() << '\n';
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, brf::VerifyOptions opts, const std::string& command) {
  std::vector<brf::Suite> suites = brf::expand_suites(suite);
  if (suites.empty()) throw brf::ParseError("unknown suite '" + suite + "'", 0);
  opts.exec = c.exec();
  brf::RunReport r = brf::run_verification(suites, opts, command);
  if (c.json) {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    for (const auto& s : r.suites) {
      std::cout << brf::suite_name(s.suite) << ": " << s.passed << "/" << s.cases << " passed\n";
      if (s.counterexample) {
        std::cout << "  case " << s.counterexample->at("case_index") << ": "
                  << s.counterexample->at("detail").get<std::string>() << "\n  replay: "
                  << s.counterexample->at("replay").get<std::string>() << '\n';
      }
    }
    std::cout << (r.ok() ? "ok" : "FAILED") << " in " << r.duration_seconds << " s\n";
  }
  return r.ok() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded root functionals of square polynomial systems"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Print machine-readable JSON");
  app.add_flag("--serial", common.serial, "Use the serial reference kernels");

  std::string system_path;
  int degree = 0;
  std::uint64_t cap = brf::kDefaultColumnCap;
  auto* basis = app.add_subcommand("basis", "Basis of functionals annihilating (f)^{<=D}");
  basis->add_option("--system", system_path, "System file, one polynomial per line")->required();
  basis->add_option("--degree", degree, "Truncation degree D")->required();
  basis->add_option("--cap", cap, "Largest truncated space dimension allowed");

  std::string l1_path, l2_path;
  int delta1 = 0, delta2 = 0;
  auto* extend = app.add_subcommand("extend", "Product functional of two bounded root functionals");
  extend->add_option("--system", system_path, "System file")->required();
  extend->add_option("--l1", l1_path, "First functional (JSON)")->required();
  extend->add_option("--delta1", delta1, "Extension degree of the first functional");
  extend->add_option("--l2", l2_path, "Second functional (JSON)")->required();
  extend->add_option("--delta2", delta2, "Extension degree of the second functional");

  std::string functional_path, poly_text;
  auto* eval = app.add_subcommand("eval", "Apply a functional to a polynomial");
  eval->add_option("--functional", functional_path, "Functional (JSON)")->required();
  eval->add_option("--poly", poly_text, "Polynomial text")->required();

  std::string suite = "all";
  brf::VerifyOptions opts;
  auto* verify = app.add_subcommand("verify", "Seeded randomized verification suites");
  verify->add_option("--suite", suite, "lemma1, lemma2, thm1, thm1-unique, thm2, thm3, thm4 or all");
  verify->add_option("--seed", opts.seed, "Random seed");
  verify->add_option("--cases", opts.cases, "Cases per suite");
  verify->add_option("--first-case", opts.first_case, "Index of the first case");
  verify->add_option("--nmax", opts.nmax, "Largest number of variables")->check(CLI::Range(1, 4));
  verify->add_option("--degmax", opts.degmax, "Largest degree of a system polynomial")->check(CLI::Range(1, 5));
  verify->add_flag("--corrupt-derivative", opts.corrupt_derivative, "Test hook: perturb one derivative");

  for (auto* sub : {basis, extend, eval, verify}) {
    sub->add_flag("--json", common.json, "Print machine-readable JSON");
    sub->add_flag("--serial", common.serial, "Use the serial reference kernels");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

  try {
    if (*basis) return cmd_basis(common, system_path, degree, cap);
    if (*extend) return cmd_extend(common, system_path, l1_path, delta1, l2_path, delta2);
    if (*eval) return cmd_eval(common, functional_path, poly_text);
    return cmd_verify(common, suite, opts, command);
  } catch (const brf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const brf::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const brf::PreconditionViolation& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const brf::DegreeOverflow& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const brf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
