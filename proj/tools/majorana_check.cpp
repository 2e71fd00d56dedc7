// majorana-check: run the verification suites or print spinor tables.
#include "majorana/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsageError = 2;

struct Common {
  double theta1 = 0, theta2 = 0, thetac = 0;
  double norm = 0;  // 0: sqrt(m)
  bool sigma_z = false;
  std::string out;

  void attach(CLI::App& app) {
    app.add_option("--theta1", theta1, "phase of the spin-up rest spinor");
    app.add_option("--theta2", theta2, "phase of the spin-down rest spinor");
    app.add_option("--thetac", thetac, "charge-conjugation phase");
    app.add_option("--norm", norm, "normalization N (default sqrt(m))")->check(CLI::PositiveNumber);
    app.add_flag("--sigma-z-basis", sigma_z, "use sigma_z rest spinors instead of helicity ones");
    app.add_option("--out", out, "write to this file instead of stdout");
  }

  majorana::PhaseConvention<double> convention() const {
    majorana::PhaseConvention<double> c;
    c.theta1 = theta1;
    c.theta2 = theta2;
    c.theta_c = thetac;
    if (norm > 0) c.normalization = norm;
    c.basis = sigma_z ? majorana::RestBasis::SigmaZ : majorana::RestBasis::Helicity;
    return c;
  }
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
    }
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return v;
}

int emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << '\n';
    return kUsageError;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the identities of self/anti-self charge-conjugate spinors"};
  app.require_subcommand(1);

  Common run_opts;
  std::vector<double> masses{1.0};
  std::string grid, format = "json";
  std::vector<std::string> directions, suites;
  double tol = 1e-12;
  bool no_rest = false;
  CLI::App* run = app.add_subcommand("run", "run check suites");
  run->add_option("--mass", masses, "masses (repeatable or comma separated)")->delimiter(',');
  run->add_option("--grid", grid, "momentum magnitudes, comma separated (default 0.5,1.5,4)");
  run->add_option("--direction", directions, "direction 'polar,azimuth' (repeatable)");
  run->add_flag("--no-rest", no_rest, "leave the rest frame out of the grid");
  run->add_option("--tol", tol, "absolute tolerance");
  run->add_option("--suite", suites, "halfspin, spin1, fock, fieldops (repeatable)")
      ->check(CLI::IsMember({"halfspin", "spin1", "fock", "fieldops"}));
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run_opts.attach(*run);

  Common table_opts;
  double table_mass = 1.0;
  std::string momentum = "0,0,0", what;
  CLI::App* table = app.add_subcommand("table", "print spinor components");
  table->add_option("what", what, "lambda, rho, dirac or mr")
      ->required()
      ->check(CLI::IsMember({"lambda", "rho", "dirac", "mr"}));
  table->add_option("--mass", table_mass, "mass")->check(CLI::PositiveNumber);
  table->add_option("--momentum", momentum, "three-momentum 'px,py,pz'");
  table_opts.attach(*table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) {
      majorana::SuiteConfig config;
      config.masses = masses;
      if (!grid.empty()) config.magnitudes = parse_list(grid, "--grid");
      if (!directions.empty()) {
        config.directions.clear();
        for (const std::string& d : directions) {
          const auto v = parse_list(d, "--direction");
          if (v.size() != 2) throw std::invalid_argument("--direction expects 'polar,azimuth'");
          config.directions.push_back({v[0], v[1]});
        }
      }
      config.include_rest = !no_rest;
      config.tolerance = tol;
      config.convention = run_opts.convention();
      if (!suites.empty()) {
        config.suites.clear();
        for (const std::string& s : suites) config.suites.push_back(*majorana::parse_suite(s));
      }
      config.format = format == "text" ? majorana::OutputFormat::Text : majorana::OutputFormat::Json;
      config.validate();

      const auto results = majorana::run_suites(config);
      std::ostringstream os;
      majorana::write_report(os, results, config.format);
      const int rc = emit(run_opts.out, os.str());
      if (rc != 0) return rc;
      return majorana::all_passed(results) ? 0 : 1;
    }

    const auto v = parse_list(momentum, "--momentum");
    if (v.size() != 3) throw std::invalid_argument("--momentum expects 'px,py,pz'");
    const auto p = majorana::FourMomentum<double>::from_cartesian(table_mass, {v[0], v[1], v[2]});
    std::ostringstream os;
    majorana::tabulate(os, p, table_opts.convention(), *majorana::parse_table_kind(what));
    return emit(table_opts.out, os.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
