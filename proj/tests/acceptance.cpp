// Acceptance gate: one PASS/FAIL line per criterion, built from the default
// suite run. Exits nonzero when any criterion is red.
#include "majorana/report.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef MAJORANA_CHECK_PATH
#error "MAJORANA_CHECK_PATH must point at the majorana-check binary"
#endif

using namespace majorana;

namespace {

using Index = std::map<std::string, const CheckResult*>;

struct Verdict {
  bool pass{true};
  std::vector<std::string> notes;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> ids;
  std::function<void(const Index&, Verdict&)> extra;
};

void require(bool ok, const std::string& note, Verdict& v) {
  if (!ok) {
    v.pass = false;
    v.notes.push_back(note);
  }
}

const nlohmann::ordered_json& measured(const Index& idx, const std::string& id) {
  static const nlohmann::ordered_json empty = nlohmann::ordered_json::object();
  const auto it = idx.find(id);
  return it == idx.end() ? empty : it->second->measured;
}

std::string cli_bytes(const std::string& args) {
  const std::string cmd = std::string(MAJORANA_CHECK_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string serialize(const std::vector<CheckResult>& r) {
  std::ostringstream os;
  write_json_lines(os, r);
  return os.str();
}

}  // namespace

int main() {
  const SuiteConfig config;
  const std::vector<CheckResult> results = run_suites(config);
  Index idx;
  for (const CheckResult& r : results) idx[r.id] = &r;

  const std::vector<Criterion> criteria{
      {1, "charge-conjugation eigenstructure of lambda and rho",
       {"halfspin.charge_conjugation.eigenstates", "halfspin.charge_conjugation.square"},
       [](const Index& i, Verdict& v) {
         const auto& m = measured(i, "halfspin.charge_conjugation.eigenstates");
         require(m.value("momenta", 0) >= 18, "fewer than 18 grid momenta", v);
         require(m.value("spinors", 0) == 8, "not all 8 spinors checked", v);
       }},
      {2, "lambda is not a helicity or parity eigenspinor; u, v are helicity eigenspinors",
       {"halfspin.helicity.lambda_not_eigen", "halfspin.parity.lambda_not_eigen",
        "halfspin.helicity.dirac_eigen"},
       nullptr},
      {3, "momentum-space dynamical equations", {"halfspin.dynamical.residuals"}, nullptr},
      {4, "connection matrix up to a frozen per-row phase",
       {"halfspin.connection.aligned"},
       [](const Index& i, Verdict& v) {
         require(measured(i, "halfspin.connection.aligned").contains("phase_diagonal"),
                 "phase diagonal missing from the report", v);
       }},
      {5, "bi-orthonormality of the lambda spinors",
       {"halfspin.biorthonormality.cross", "halfspin.biorthonormality.diagonal"}, nullptr},
      {6, "massless limit of lambda_up",
       {"halfspin.massless.vanishing"},
       [](const Index& i, Verdict& v) {
         const auto& m = measured(i, "halfspin.massless.vanishing");
         require(m.value("monotone", false), "ratio not monotone over the scan", v);
         require(m.value("ratio_at_1e-8", 1.0) <= 1e-4, "ratio above 1e-4 at m/|p| = 1e-8", v);
       }},
      {7, "gauge, Xi and SU(2) maps keep S^c eigenstates; order-8 quaternion table",
       {"halfspin.gauge.sc_preserved", "halfspin.gauge.axial_generator", "halfspin.xi.sc_preserved",
        "halfspin.xi.group_table", "fieldops.su2.orbit", "fieldops.su2.homomorphism"},
       [](const Index& i, Verdict& v) {
         const auto& m = measured(i, "halfspin.xi.group_table");
         require(m.value("central_minus_one", false), "no central -1", v);
         require(m.value("order", 0) == 8, "group order is not 8", v);
       }},
      {8, "spin-1 Majorana representation",
       {"spin1.unitary", "spin1.mr.real", "spin1.mr.gamma5", "spin1.mr.gamma5_imaginary",
        "spin1.mr.gamma00", "spin1.mr.gamma0i", "spin1.mr.gammaij"},
       nullptr},
      {9, "MR spinors: v = gamma_5 u and the component identities",
       {"spin1.mr_spinors.gamma5_relation", "spin1.mr_spinors.components"}, nullptr},
      {10, "antilinear dichotomy: (S^c)^2 = +1 for j = 1/2, -1 for j = 1",
       {"halfspin.charge_conjugation.square", "spin1.selfconjugacy"},
       [](const Index& i, Verdict& v) {
         const auto& m = measured(i, "spin1.selfconjugacy");
         require(m.value("spin1_fixed_dimension", -1) == 0, "spin-1 S^c has fixed vectors", v);
         require(m.value("gamma5_plus_dimension", 0) > 0 && m.value("gamma5_minus_dimension", 0) > 0,
                 "Gamma^5 S^c eigenvectors missing", v);
       }},
      {11, "Fock algebra of U^s, U^c and tilde U^c",
       {"fock.commute.uc_us", "fock.anticommute.utc_us", "fock.charge.eigenstates",
        "fock.joint_eigenvector.uc", "fock.joint_eigenvector.utc", "fock.operator_rules.us",
        "fock.operator_rules.uc", "fock.operator_rules.utc"},
       nullptr},
      {12, "field-operator relations: even/odd split and Dirac projection",
       {"fieldops.ziino_barut.displayed", "fieldops.ziino_barut.charge_parity",
        "fieldops.ziino_barut.reconstruction", "fieldops.dirac.eigenspace", "fieldops.dirac.partner"},
       nullptr},
      {13, "determinism of the structured report", {},
       [&config, &results](const Index&, Verdict& v) {
         require(serialize(run_suites(config)) == serialize(results),
                 "in-process reruns differ", v);
         const std::string a = cli_bytes("run");
         const std::string b = cli_bytes("run");
         require(!a.empty() && a == b, "two CLI runs differ", v);
         require(a == serialize(results), "CLI report differs from the library report", v);
       }},
  };

  int red = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    for (const std::string& id : c.ids) {
      const auto it = idx.find(id);
      if (it == idx.end()) {
        require(false, id + " missing", v);
        continue;
      }
      const CheckResult& r = *it->second;
      if (r.status != Status::Pass) {
        require(false, id + " " + to_string(r.status) + ", residual " + format_number(r.residual) +
                           " (tol " + format_number(r.tolerance) + "): " + r.anchor,
                v);
      }
    }
    if (c.extra) c.extra(idx, v);
    red += !v.pass;
    std::printf("%s %2d  %s\n", v.pass ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const std::string& n : v.notes) std::printf("         %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria met\n", int(criteria.size()) - red, criteria.size());
  return red == 0 ? 0 : 1;
}
