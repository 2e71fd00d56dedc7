#include "majorana/fieldops.hpp"
#include "majorana/fock.hpp"
#include "majorana/report.hpp"
#include "majorana/spin1.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

namespace majorana {
namespace {

using json = nlohmann::ordered_json;
using P = FourMomentum<double>;
using Conv = PhaseConvention<double>;
constexpr double kPi = pi<double>;

CheckResult upper(std::string id, std::string anchor, double residual, double tol,
                  json measured = json::object()) {
  const bool ok = std::isfinite(residual) && residual <= tol;
  return {std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, residual, tol,
          std::move(measured)};
}

/// value must strictly exceed threshold; the residual is the shortfall.
CheckResult lower(std::string id, std::string anchor, double value, double threshold,
                  json measured = json::object()) {
  measured["value"] = value;
  measured["threshold"] = threshold;
  const bool ok = value > threshold;
  return {std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail,
          ok ? 0.0 : threshold - value, 0.0, std::move(measured)};
}

CheckResult reported(std::string id, std::string anchor, double residual,
                     json measured = json::object()) {
  return {std::move(id), std::move(anchor), Status::Reported, residual, 0.0,
          std::move(measured)};
}

CheckResult failed(std::string id, std::string anchor, const std::exception& e) {
  return {std::move(id), std::move(anchor), Status::Fail,
          std::numeric_limits<double>::infinity(), 0.0, json{{"error", e.what()}}};
}

json cj(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

template <typename Derived>
json vec_json(const Eigen::MatrixBase<Derived>& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(cj(v[k]));
  return a;
}

bool on_axis(const P& p) {
  return p.magnitude == 0 || p.polar == 0 || p.polar == kPi;
}

double sc_residual(const AntilinearOp<double>& sc, const Vec4<double>& v, int sign) {
  return max_abs(Vec4<double>(act(sc, v) - double(sign) * v));
}

//---------------------------------------------------------------------------//
// j = 1/2
//---------------------------------------------------------------------------//

void charge_conjugation_checks(const SuiteConfig& c, const std::vector<P>& grid,
                               std::vector<CheckResult>& out) {
  const AntilinearOp<double> sc = charge_conjugation_op(c.convention);
  double r = 0;
  for (const P& p : grid) {
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (int k = 0; k < 2; ++k) {
      r = std::max({r, sc_residual(sc, b.lambda_s[k], 1), sc_residual(sc, b.lambda_a[k], -1),
                    sc_residual(sc, b.rho_s[k], 1), sc_residual(sc, b.rho_a[k], -1)});
    }
  }
  out.push_back(upper("halfspin.charge_conjugation.eigenstates",
                      "lambda^S, rho^S are +1 and lambda^A, rho^A are -1 eigenvectors of S^c",
                      r, c.tolerance, {{"momenta", grid.size()}, {"spinors", 8}}));

  const AntilinearOp<double> sq = square(sc);
  out.push_back(upper("halfspin.charge_conjugation.square", "(S^c)^2 = +1 as a linear map",
                      max_abs(Matrix<double>(sq.matrix() - Matrix<double>::Identity(4, 4))) +
                          (sq.conjugates_argument() ? 1.0 : 0.0),
                      c.tolerance));
}

void helicity_checks(const SuiteConfig& c, const std::vector<P>& grid,
                     std::vector<CheckResult>& out) {
  double lambda_ratio = std::numeric_limits<double>::infinity();
  double dirac = 0, eta_res = 0, parity_ratio = std::numeric_limits<double>::infinity();
  double flip = 0;
  json eta_values = json::object();
  json flip_partner = {{"same", false}, {"opposite", false}};
  for (const P& p : grid) {
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    const DiscreteOps<double> ops = discrete_ops(p.direction());
    for (Helicity h : kHelicities) {
      const int k = index(h);
      for (const Vec4<double>* l : {&b.lambda_s[k], &b.lambda_a[k]}) {
        lambda_ratio = std::min(lambda_ratio, eigen_fit(ops.helicity, *l).residual / l->norm());
        const auto eta = eigen_fit(ops.chiral_helicity, *l);
        eta_res = std::max({eta_res, eta.residual, std::abs(std::abs(eta.value) - 0.5)});
      }
      const double expected = 0.5 * twice(h);
      for (const Vec4<double>* d : {&b.u[k], &b.v[k]}) {
        const auto fit = eigen_fit(ops.helicity, *d);
        dirac = std::max({dirac, fit.residual, std::abs(fit.value - expected)});
      }
      if (!on_axis(p)) {
        const SpinorBasis<double> bi = build_spinor_basis(p.space_inverted(), c.convention);
        const Vec4<double> img = ops.parity * bi.lambda_s[k];
        double to_anti = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 2; ++j) {
          parity_ratio =
              std::min(parity_ratio, proportionality(img, b.lambda_s[j]).residual / img.norm());
          const double r = proportionality(img, b.lambda_a[j]).residual / img.norm();
          if (r < to_anti) {
            to_anti = r;
            if (r < 1e-6) flip_partner[j == k ? "same" : "opposite"] = true;
          }
        }
        flip = std::max(flip, to_anti);
      }
    }
    if (eta_values.empty() && p.magnitude > 0) {
      const auto fit = [&](const Vec4<double>& v) {
        return cj(eigen_fit(ops.chiral_helicity, v).value);
      };
      eta_values = {{"lambda_S_up", fit(b.lambda_s[0])},
                    {"lambda_S_down", fit(b.lambda_s[1])},
                    {"lambda_A_up", fit(b.lambda_a[0])},
                    {"lambda_A_down", fit(b.lambda_a[1])}};
    }
  }
  out.push_back(lower("halfspin.helicity.lambda_not_eigen",
                      "lambda spinors are not eigenspinors of the helicity operator",
                      lambda_ratio, 0.1, {{"measure", "min relative least-squares residual"}}));
  out.push_back(upper("halfspin.helicity.dirac_eigen",
                      "Dirac u, v are helicity eigenspinors with eigenvalue h", dirac,
                      c.tolerance));
  out.push_back(upper("halfspin.chiral_helicity.lambda",
                      "lambda spinors are eigenspinors of the chiral helicity -gamma^5 h",
                      eta_res, c.tolerance, {{"eigenvalues", eta_values}}));
  out.push_back(lower("halfspin.parity.lambda_not_eigen",
                      "lambda spinors are not parity eigenspinors (gamma^0, p -> -p)",
                      parity_ratio, 0.1,
                      {{"measure", "min relative residual over both lambda^S, off-axis momenta"}}));
  out.push_back(reported("halfspin.parity.duality_flip",
                         "gamma^0 lambda^S(-p) is a multiple of a lambda^A(p)", flip,
                         {{"measure", "max relative residual, off-axis momenta"},
                          {"partner_helicity", flip_partner}}));
}

void dynamics_checks(const SuiteConfig& c, const std::vector<P>& grid,
                     std::vector<CheckResult>& out) {
  double r = 0, flip = 0;
  json per_equation = json::array({0.0, 0.0, 0.0, 0.0});
  MassTermSigns flipped_c = kDisplayedMassSigns;
  flipped_c[2] = -flipped_c[2];
  for (const P& p : grid) {
    const auto d = dynamical_residuals(p, c.convention);
    for (const auto& row : d.by_helicity) {
      for (int e = 0; e < 4; ++e) {
        per_equation[e] = std::max(per_equation[e].get<double>(), row[e]);
      }
    }
    r = std::max(r, d.max());
    const auto f = dynamical_residuals(p, c.convention, FrequencyAssignment::SelfLambdaPositive,
                                       flipped_c);
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (int k = 0; k < 2; ++k) {
      const double expect = 2 * p.mass * b.rho_s[k].norm();
      flip = std::max(flip, std::abs(f.by_helicity[k][2] - expect) / expect);
    }
  }
  out.push_back(upper("halfspin.dynamical.residuals",
                      "momentum-space dynamical equations linking lambda and rho", r,
                      c.tolerance,
                      {{"frequency", "lambda^S, rho^A positive"},
                       {"mass_signs", kDisplayedMassSigns},
                       {"per_equation", per_equation}}));
  out.push_back(upper("halfspin.dynamical.flipped_sign_selftest",
                      "flipping the mass-term sign of the third equation gives 2m|rho^S|",
                      flip, c.tolerance));
}

void connection_checks(const SuiteConfig& c, const std::vector<P>& grid,
                       std::vector<CheckResult>& out) {
  double aligned = 0, spread = 0, raw = 0;
  std::array<std::complex<double>, 4> first{};
  bool have = false;
  for (const P& p : grid) {
    const auto k = connection_matrix_check(p, c.convention);
    aligned = std::max(aligned, k.aligned_residual);
    raw = std::max(raw, k.raw_residual);
    if (!have) {
      first = k.phases;
      have = true;
    }
    for (int r = 0; r < 4; ++r) spread = std::max(spread, std::abs(k.phases[r] - first[r]));
  }
  json phases = json::array();
  for (auto z : first) phases.push_back(cj(z));
  const Mat4<double> m = connection_matrix<double>();
  out.push_back(upper("halfspin.connection.aligned",
                      "lambda = M (u, v) after a momentum-independent row phase alignment",
                      std::max(aligned, spread), c.tolerance,
                      {{"phase_diagonal", phases},
                       {"phase_spread", spread},
                       {"det_M", cj(m.determinant())}}));
  out.push_back(reported("halfspin.connection.raw",
                         "lambda = M (u, v) with no phase alignment", raw));
}

void biorthonormality_checks(const SuiteConfig& c, const std::vector<P>& grid,
                             std::vector<CheckResult>& out) {
  const std::array<std::pair<double, double>, 8> pairs{{{0.0, 0.0},
                                                        {kPi / 2, 0.0},
                                                        {kPi / 4, kPi / 4},
                                                        {0.3, 0.2},
                                                        {1.0, -0.4},
                                                        {kPi / 3, 0.0},
                                                        {2.0, 1.1},
                                                        {-0.7, 0.25}}};
  double diag = 0, cross = 0, reversed = 0;
  json samples = json::array();
  for (const auto& [t1, t2] : pairs) {
    Conv conv = c.convention;
    conv.theta1 = t1;
    conv.theta2 = t2;
    for (const P& p : grid) {
      const Mat4<double> g = biorthonormality_gram(p, conv);
      const double n2 = conv.norm(p.mass) * conv.norm(p.mass);
      const std::complex<double> formula = 2.0 * I<double> * n2 * std::cos(t1 + t2);
      for (int k = 0; k < 4; ++k) diag = std::max(diag, std::abs(g(k, k)));
      cross = std::max(cross, std::abs(g(0, 1) - formula));
      reversed = std::max(reversed, std::abs(g(1, 0) - formula));
    }
    const Mat4<double> g0 = biorthonormality_gram(grid.front(), conv);
    samples.push_back({{"theta1", t1},
                       {"theta2", t2},
                       {"S_up_S_down", cj(g0(0, 1))},
                       {"S_down_S_up", cj(g0(1, 0))}});
  }
  out.push_back(upper("halfspin.biorthonormality.diagonal",
                      "self-products bar(lambda) lambda vanish", diag, c.tolerance));
  out.push_back(upper("halfspin.biorthonormality.cross",
                      "bar(lambda^S_up) lambda^S_down = 2i N^2 cos(theta1 + theta2)", cross,
                      c.tolerance, {{"samples", samples}}));
  out.push_back(reported("halfspin.biorthonormality.cross_reversed",
                         "bar(lambda^S_down) lambda^S_up against 2i N^2 cos(theta1 + theta2)",
                         reversed));
}

void massless_checks(const SuiteConfig& c, std::vector<CheckResult>& out) {
  const char* id = "halfspin.massless.vanishing";
  const char* anchor = "lambda_up vanishes in the massless limit in the helicity basis";
  try {
    double at_1e8 = 0, final_ratio = 0, min_down = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (double mag : c.magnitudes) {
      if (mag <= 0) continue;
      for (const Direction& d : c.directions) {
        std::vector<double> masses;
        for (int e = 0; e <= 12; e += 2) masses.push_back(mag * std::pow(10.0, -e));
        const auto scan = massless_scan(mag, d.polar, d.azimuth, masses, c.convention);
        monotone = monotone && scan.monotone;
        const auto& r8 = scan.rows[4];
        at_1e8 = std::max({at_1e8, r8.self_ratio, r8.anti_ratio});
        final_ratio = std::max(final_ratio, scan.final_ratio());
        for (const auto& row : scan.rows) min_down = std::min(min_down, row.down_norm);
      }
    }
    const bool ok = monotone && at_1e8 <= 1e-4 && final_ratio <= 1e-6 && min_down > 0.1;
    CheckResult r = upper(id, anchor, at_1e8, 1e-4,
                          {{"ratio_at_1e-8", at_1e8},
                           {"ratio_at_1e-12", final_ratio},
                           {"monotone", monotone},
                           {"min_down_norm_over_N", min_down}});
    if (!ok) r.status = Status::Fail;
    out.push_back(r);
  } catch (const std::exception& e) {
    out.push_back(failed(id, anchor, e));
  }
}

void gauge_checks(const SuiteConfig& c, const std::vector<P>& grid,
                  std::vector<CheckResult>& out) {
  const AntilinearOp<double> sc = charge_conjugation_op(c.convention);
  const std::array<double, 6> alphas{0.0, 0.3, 0.7, kPi / 2, 2.0, kPi};
  double status = 0, axial = 0;
  for (const P& p : grid) {
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (double a : alphas) {
      const Matrix<double> l5 = axial_rotation(a);
      for (int k = 0; k < 2; ++k) {
        for (Duality d : {Duality::Self, Duality::AntiSelf}) {
          const Vec4<double> l = gauge_transform(a, b.lambda(d, kHelicities[k]), SpinorKind::Lambda);
          const Vec4<double> r = gauge_transform(a, b.rho(d, kHelicities[k]), SpinorKind::Rho);
          status = std::max({status, sc_residual(sc, l, sign(d)), sc_residual(sc, r, sign(d))});
          Vector<double> both(8);
          both << b.lambda(d, kHelicities[k]), b.rho(d, kHelicities[k]);
          Vector<double> expect(8);
          expect << l, r;
          axial = std::max(axial, max_abs(Vector<double>(l5 * both - expect)));
        }
      }
    }
  }
  out.push_back(upper("halfspin.gauge.sc_preserved",
                      "axial gauge transformations keep self/anti-self conjugacy", status,
                      c.tolerance, {{"alphas", alphas}}));
  out.push_back(upper("halfspin.gauge.axial_generator",
                      "exp(-i alpha L^5) on (lambda, rho) equals the two gauge maps", axial,
                      c.tolerance));
}

void xi_checks(const SuiteConfig& c, const std::vector<P>& grid, std::vector<CheckResult>& out) {
  double alias = 0, sc = 0, frame = 0, boost = 0;
  json signs = json::array();
  for (const P& p : grid) {
    for (Helicity h : kHelicities) {
      const XiReport<double> x = xi_transform_quadruple(p, h, c.convention);
      for (double a : x.alias_residual) alias = std::max(alias, a);
      sc = std::max(sc, x.sc_residual);
      frame = std::max(frame, x.frame_commutator);
      if (signs.empty()) signs = x.sc_sign;
    }
    if (p.mass > 0) boost = std::max(boost, xi_boost_conjugation_residual(p));
  }
  out.push_back(upper("halfspin.xi.aliases",
                      "the four Xi images equal lambda^A*, -i lambda^S*, i g0 lambda^A*, g0 lambda^S*",
                      alias, c.tolerance));
  out.push_back(upper("halfspin.xi.sc_preserved", "the four Xi maps keep S^c eigenvector status",
                      std::max(sc, frame), c.tolerance,
                      {{"sc_signs", signs}, {"frame_commutator", frame}}));
  out.push_back(upper("halfspin.xi.boost_conjugation", "Xi Lambda Xi^-1 = Lambda*", boost,
                      c.tolerance));

  const QuaternionTable<double> t = quaternion_table(xi_units<double>());
  std::set<std::pair<int, int>> closure;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      for (int s : {1, -1}) closure.insert({t.unit[j][k], s * t.sign[j][k]});
  json squares = json::array();
  for (int k = 0; k < 4; ++k) squares.push_back(t.sign[k][k] * (t.unit[k][k] == 0 ? 1 : 0));
  CheckResult r = upper("halfspin.xi.group_table",
                        "the Xi maps, modulo diag(Xi, Xi), close as the quaternion group",
                        t.residual, c.tolerance,
                        {{"unit", t.unit},
                         {"sign", t.sign},
                         {"unit_squares", squares},
                         {"central_minus_one", t.has_central_minus_one()},
                         {"order", closure.size()}});
  if (!t.has_central_minus_one() || closure.size() != 8) r.status = Status::Fail;
  out.push_back(r);
}

void boost_and_fgm_checks(const SuiteConfig& c, const std::vector<P>& grid,
                          std::vector<CheckResult>& out) {
  double det = 0;
  for (const P& p : grid) {
    const BoostPair<double> b = boost_ops(p);
    det = std::max({det, std::abs(b.right.determinant() - 1.0),
                    std::abs(b.left.determinant() - 1.0)});
  }
  out.push_back(upper("halfspin.boost.unimodular", "det Lambda_R = det Lambda_L = 1", det,
                      c.tolerance));

  const FgmTensors<double> t = fgm_tensors<double>();
  double tens = 0;
  const int eps[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      tens = std::max(tens, max_abs(Mat2<double>(t.sigma[mu][nu] + t.sigma[nu][mu])));
      tens = std::max(tens, max_abs(Mat2<double>(t.sigma_tilde[mu][nu] + t.sigma_tilde[nu][mu])));
    }
  for (int i = 1; i <= 3; ++i) {
    tens = std::max(tens, max_abs(Mat2<double>(t.sigma[0][i] - I<double> * pauli<double>(i))));
    tens = std::max(tens, max_abs(Mat2<double>(t.sigma[0][i] + t.sigma_tilde[0][i])));
  }
  for (const auto& e : eps) {
    tens = std::max(tens, max_abs(Mat2<double>(t.sigma[e[0]][e[1]] - pauli<double>(e[2]))));
    tens = std::max(tens, max_abs(Mat2<double>(t.sigma_tilde[e[0]][e[1]] - pauli<double>(e[2]))));
  }
  out.push_back(upper("halfspin.fgm.tensors",
                      "sigma^{0i} = -tilde sigma^{0i} = i sigma^i, sigma^{ij} = eps_ijk sigma^k",
                      tens, c.tolerance));

  Eigen::Matrix4d f;
  f << 0, 0.3, -0.2, 0.5, -0.3, 0, 0.7, -0.1, 0.2, -0.7, 0, 0.4, -0.5, 0.1, -0.4, 0;
  const Eigen::Vector4d x(0.2, -1.0, 0.5, 0.3);
  double free = 0;
  for (const P& p : grid) {
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (int k = 0; k < 2; ++k) {
      const auto r = fgm_residuals(b.phi_l[k], b.phi_r[k], p.contravariant(), p.mass, f, 0.0, x);
      free = std::max({free, r.chi, r.phi});
    }
  }
  out.push_back(upper("halfspin.fgm.free_field",
                      "two-component second-order equations reduce to Klein-Gordon at g = 0",
                      free, c.tolerance));

  // A_mu = -F_{mu nu} x^nu / 2 is linear, so unit differences are exact derivatives.
  double pot = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Eigen::Vector4d eu = Eigen::Vector4d::Zero(), ev = Eigen::Vector4d::Zero();
      eu[mu] = 1;
      ev[nu] = 1;
      const Eigen::Vector4d a0 = -f * x / 2, au = -f * (x + eu) / 2, av = -f * (x + ev) / 2;
      pot = std::max(pot, std::abs((au[nu] - a0[nu]) - (av[mu] - a0[mu]) - f(mu, nu)));
    }
  out.push_back(upper("halfspin.fgm.potential",
                      "the linear potential reproduces the constant field strength", pot,
                      c.tolerance));
}

}  // namespace

std::vector<CheckResult> halfspin_suite(const SuiteConfig& c) {
  const std::vector<P> grid = c.grid();
  std::vector<CheckResult> out;
  charge_conjugation_checks(c, grid, out);
  helicity_checks(c, grid, out);
  dynamics_checks(c, grid, out);
  connection_checks(c, grid, out);
  biorthonormality_checks(c, grid, out);
  massless_checks(c, out);
  gauge_checks(c, grid, out);
  xi_checks(c, grid, out);
  boost_and_fgm_checks(c, grid, out);
  return out;
}

//---------------------------------------------------------------------------//
// j = 1
//---------------------------------------------------------------------------//

std::vector<CheckResult> spin1_suite(const SuiteConfig& c) {
  const std::vector<P> grid = c.grid();
  const double tol = c.tolerance;
  const double tight = std::min(tol, 1e-15);
  std::vector<CheckResult> out;

  const auto j = spin1_generators<double>();
  double alg = 0;
  const int eps[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& e : eps) {
    alg = std::max(alg, max_abs(Mat3<double>(j[e[0]] * j[e[1]] - j[e[1]] * j[e[0]] -
                                             I<double> * j[e[2]])));
  }
  out.push_back(upper("spin1.generators.algebra", "[J_i, J_j] = i eps_ijk J_k", alg, tol));

  const Mat3<double> th = wigner_theta<double>();
  double w = std::max(max_abs(Mat3<double>(th * th - Mat3<double>::Identity())),
                      max_abs(Mat3<double>(th - th.transpose())));
  w = std::max(w, max_abs(th.imag()));
  for (const auto& ji : j) w = std::max(w, max_abs(Mat3<double>(th * ji * th + ji.conjugate())));
  out.push_back(upper("spin1.wigner_theta", "Theta^2 = 1 and Theta J Theta^-1 = -J*", w, tol));

  const MajoranaUnitary<double> mu = majorana_unitary<double>();
  const double unit = std::max(max_abs(Mat6<double>(mu.u * mu.u_dagger - Mat6<double>::Identity())),
                               max_abs(Mat6<double>(mu.u_dagger - mu.u.adjoint())));
  out.push_back(upper("spin1.unitary", "U is unitary and the displayed U^dagger is its adjoint",
                      unit, tight,
                      {{"abs_det_U", std::abs(mu.u.determinant())}}));

  const BmwFamily<double> chiral = bmw_chiral_gammas<double>();
  double sym = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) sym = std::max(sym, max_abs(Mat6<double>(chiral.g[a][b] - chiral.g[b][a])));
  out.push_back(upper("spin1.bmw.symmetric", "gamma_{mu nu} = gamma_{nu mu}", sym, tol));

  double onshell = 0;
  for (const P& p : grid) onshell = std::max(onshell, bmw_onshell_residual(p, c.convention));
  out.push_back(upper("spin1.bmw.onshell",
                      "gamma_{mu nu} p^mu p^nu u = m^2 u for boosted Weinberg spinors",
                      onshell, tol));

  const BmwFamily<double> canon = bmw_canonical_gammas<double>();
  const BmwFamily<double> shown = displayed_mr_forms<double>();
  double imag = 0;
  double g00 = 0, g0i = 0, gij = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const Matrix<double> img = to_majorana_rep<double>(canon.g[a][b]);
      imag = std::max(imag, max_abs(img.imag()));
      const double d = max_abs(Matrix<double>(img - shown.g[a][b]));
      if (a == 0 && b == 0) g00 = d;
      else if (a == 0 || b == 0) g0i = std::max(g0i, d);
      else gij = std::max(gij, d);
    }
  }
  const Matrix<double> g5 = to_majorana_rep<double>(canon.g5);
  out.push_back(upper("spin1.mr.real", "U gamma_{mu nu} U^dagger is real for all ten pairs",
                      imag, tol));
  out.push_back(upper("spin1.mr.gamma5_imaginary", "U gamma_5 U^dagger is purely imaginary",
                      max_abs(g5.real()), tol));
  out.push_back(upper("spin1.mr.gamma5", "gamma_5^MR = offdiag(i, -i)",
                      max_abs(Matrix<double>(g5 - shown.g5)), tol));
  out.push_back(upper("spin1.mr.gamma00", "gamma_00^MR = offdiag(Theta, Theta)", g00, tol));
  out.push_back(upper("spin1.mr.gamma0i", "gamma_0i^MR as displayed", g0i, tol));
  out.push_back(upper("spin1.mr.gammaij", "gamma_ij^MR as displayed with J_ij = {J_i, J_j} - delta_ij",
                      gij, tol));

  double rel = 0, comp = 0, literal = 0;
  double longitudinal = std::numeric_limits<double>::infinity();
  for (const P& p : grid) {
    const auto up = mr_spinors(p, Spin1Helicity::Up, c.convention);
    const auto lo = mr_spinors(p, Spin1Helicity::Longitudinal, c.convention);
    const auto dn = mr_spinors(p, Spin1Helicity::Down, c.convention);
    rel = std::max({rel, up.gamma5_residual, lo.gamma5_residual, dn.gamma5_residual});
    comp = std::max({comp, max_abs(Vec6<double>(up.u_real - dn.u_real)),
                     max_abs(Vec6<double>(up.u_imag + dn.u_imag)), max_abs(lo.u_real)});
    longitudinal = std::min(longitudinal, lo.u_imag.norm());
    literal = std::max({literal, max_abs(Vec6<double>(up.u_first - dn.u_first)),
                        max_abs(Vec6<double>(up.u_second + dn.u_second)), max_abs(lo.u_first)});
  }
  out.push_back(upper("spin1.mr_spinors.gamma5_relation", "v^MR = gamma_5^MR u^MR", rel, tight));
  CheckResult r = upper("spin1.mr_spinors.components",
                        "U+_up = U+_down, V+_up = -V+_down, U+_0 = 0, V+_0 != 0 (real/imaginary parts)",
                        comp, tol, {{"min_norm_V_longitudinal", longitudinal}});
  if (!(longitudinal > 1e-6)) r.status = Status::Fail;
  out.push_back(r);
  out.push_back(reported("spin1.mr_spinors.displayed_blocks",
                         "the same identities read on the two displayed vector blocks", literal));

  double boosts = 0;
  for (const P& p : grid) {
    const auto b = spin1_boost_ops(p);
    boosts = std::max(boosts, max_abs(Mat3<double>(b.right * b.left - Mat3<double>::Identity())));
  }
  out.push_back(upper("spin1.boost.inverse_pair", "Lambda_R Lambda_L = 1 for spin 1", boosts, tol));

  const auto sc = spin1_selfconjugacy_analysis<double>();
  CheckResult s = upper("spin1.selfconjugacy",
                        "(S^c_1/2)^2 = +1, (S^c_1)^2 = -1, (Gamma^5 S^c_1)^2 = +1 with explicit eigenvectors",
                        std::max({sc.half_square_residual, sc.spin1_square_residual,
                                  sc.gamma5_square_residual, sc.eigen_residual}),
                        tol,
                        {{"spin1_fixed_dimension", sc.spin1_fixed_dimension},
                         {"gamma5_plus_dimension", sc.plus.size()},
                         {"gamma5_minus_dimension", sc.minus.size()}});
  if (sc.spin1_fixed_dimension != 0 || sc.plus.size() != 6 || sc.minus.size() != 6) {
    s.status = Status::Fail;
  }
  out.push_back(s);

  double half_minority = 0, one_minority = 0;
  bool half_pure = true;
  json half_classes = json::array(), one_classes = json::array();
  for (const P& p : grid) {
    const auto rr = lambda_reality_check(p, c.convention);
    for (const auto& x : rr.half) {
      half_minority = std::max(half_minority, x.minority);
      half_pure = half_pure && x.cls != RealityClass::Mixed;
    }
    for (const auto& x : rr.spin1) one_minority = std::max(one_minority, x.minority);
    if (half_classes.empty()) {
      for (const auto& x : rr.half) half_classes.push_back(to_string(x.cls));
      for (const auto& x : rr.spin1) one_classes.push_back(to_string(x.cls));
    }
  }
  CheckResult h = upper("spin1.reality.half",
                        "j = 1/2 lambda, rho are real or imaginary in the Majorana frame",
                        half_minority, tol,
                        {{"order", "lambda_S, lambda_A, rho_S, rho_A (up, down)"},
                         {"classes", half_classes}});
  if (!half_pure) h.status = Status::Fail;
  out.push_back(h);
  out.push_back(reported("spin1.reality.one",
                         "j = 1 analogues (+-Theta phi_L*, phi_L) under the spin-1 unitary",
                         one_minority,
                         {{"order", "S (up, 0, down), A (up, 0, down)"},
                          {"classes", one_classes}}));
  return out;
}

//---------------------------------------------------------------------------//
// Fock sector
//---------------------------------------------------------------------------//

std::vector<CheckResult> fock_suite(const SuiteConfig& c) {
  using namespace fock;
  const double tol = c.tolerance;
  const MomentumSet momenta = MomentumSet::standard(true);
  const SymmetryOp us = space_inversion(), uc = charge_conjugation_v1(),
                   ut = charge_conjugation_v2();
  std::vector<CheckResult> out;

  const auto worst = [](const std::vector<CommutatorRow>& rows, bool anti) {
    double r = 0;
    for (const auto& row : rows) r = std::max(r, anti ? row.anticommutator : row.commutator);
    return r;
  };
  const auto cu = commutator_report(uc, us, momenta);
  const auto tu = commutator_report(ut, us, momenta);
  out.push_back(upper("fock.commute.uc_us", "[U^c, U^s] = 0 on every basis state",
                      worst(cu, false), tol, {{"anticommutator", worst(cu, true)}}));
  out.push_back(upper("fock.anticommute.utc_us", "{tilde U^c, U^s} = 0 on every basis state",
                      worst(tu, true), tol, {{"commutator", worst(tu, false)}}));
  out.push_back(upper("fock.squares", "(U^s)^2 = +1, (U^c)^2 = (tilde U^c)^2 = -1",
                      std::max({square_residual(us, 1.0, momenta), square_residual(uc, -1.0, momenta),
                                square_residual(ut, -1.0, momenta)}),
                      tol));

  FockVector probe;
  double n = 0;
  for (const ModeLabel& l : momenta.labels()) {
    probe.add(l, std::complex<double>(1.0 + n, 0.5 * n));
    n += 1;
  }
  double norm = 0;
  for (const SymmetryOp* op : {&us, &uc, &ut}) norm = std::max(norm, std::abs((*op)(probe).norm() - probe.norm()));
  out.push_back(upper("fock.norm_preserving", "the three operators preserve norms", norm, tol));

  const EigencombinationReport e = eigencombination_suite(momenta);
  out.push_back(upper("fock.parity.reflection_covariance",
                      "U^s(|p up> +- i|p down>) = +-(|-p up> +- i|-p down>)",
                      e.parity_covariance_residual, tol));
  out.push_back(upper("fock.parity.rest_eigenvector",
                      "at p = 0 the combinations |up> +- i|down> have parity +-1",
                      e.parity_rest_residual, tol));
  out.push_back(upper("fock.charge.eigenstates",
                      "U^c(|p up>^+ +- i|p up>^-) = -+i (|p up>^+ +- i|p up>^-)", e.charge_residual,
                      tol));

  const auto joint = [&](const char* id, const char* anchor, const JointSearch& s) {
    json m{{"partner", s.partner}, {"nullity", s.nullity}, {"exists", s.exists}};
    if (s.witness) {
      m["witness_basis"] = "(up+, down+, up-, down-) at p = 0";
      m["witness"] = vec_json(*s.witness);
      m["witness_residual"] = s.witness_residual;
    }
    out.push_back(lower(id, anchor, s.smallest_singular, 1e-10, m));
  };
  joint("fock.joint_eigenvector.uc", "no state is simultaneously a U^s and a U^c eigenstate",
        e.with_charge);
  joint("fock.joint_eigenvector.utc",
        "no state is simultaneously a U^s and a tilde U^c eigenstate", e.with_charge_tilde);

  for (OperatorName op : {OperatorName::SpaceInversion, OperatorName::ChargeConjugation,
                          OperatorName::ChargeConjugationTilde}) {
    const StateDerivation d = derive_state_rules(op, momenta);
    static const std::map<OperatorName, std::string> ids{
        {OperatorName::SpaceInversion, "fock.operator_rules.us"},
        {OperatorName::ChargeConjugation, "fock.operator_rules.uc"},
        {OperatorName::ChargeConjugationTilde, "fock.operator_rules.utc"}};
    CheckResult r = upper(ids.at(op), "operator rules on a^+, b^+ reproduce the state rules of " + to_string(op),
                          d.mismatch, tol,
                          {{"corrected_daggers", d.corrected_daggers}, {"notes", d.notes}});
    if (!d.consistent) r.status = Status::Fail;
    out.push_back(r);
  }

  json ident = json::object();
  for (OperatorName op : {OperatorName::SpaceInversion, OperatorName::ChargeConjugation,
                          OperatorName::ChargeConjugationTilde}) {
    ident[to_string(op)] = derive_state_rules(op, momenta, true).consistent;
  }
  out.push_back(reported("fock.majorana_identified",
                         "operator rules with b identified with a (consistency per operator)", 0.0,
                         {{"consistent", ident}}));
  return out;
}

//---------------------------------------------------------------------------//
// Field operators
//---------------------------------------------------------------------------//

std::vector<CheckResult> fieldops_suite(const SuiteConfig& c) {
  const std::vector<P> grid = c.grid();
  const double tol = c.tolerance;
  std::vector<CheckResult> out;

  double terms = 0, invol = 0, image = 0, zb = 0, recon = 0, parity = 0;
  double partner = 0, eigen = 0;
  std::set<Eigen::Index> pos_ranks, neg_ranks;
  for (const P& p : grid) {
    const ModeExpansion<double> nu = majorana_mode(p, c.convention);
    terms = std::max(terms, std::abs(double(nu.size()) - 4.0));
    const ModeExpansion<double> cnu = charge_conjugate_expansion(nu, c.convention);
    invol = std::max(invol, distance(charge_conjugate_expansion(cnu, c.convention), nu));
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (Helicity h : kHelicities) {
      const int k = index(h);
      image = std::max(image, max_abs(Vec4<double>(
                                  cnu.coefficient({OperatorSymbol::A, h, Frequency::Positive}) +
                                  b.lambda_a[k])));
      image = std::max(image, max_abs(Vec4<double>(
                                  cnu.coefficient({OperatorSymbol::ADagger, h, Frequency::Negative}) -
                                  b.lambda_s[k])));
    }
    const auto z = ziino_barut_split(p, c.convention);
    zb = std::max(zb, z.displayed_residual);
    recon = std::max(recon, z.reconstruction_residual);
    parity = std::max({parity, z.even_residual, z.odd_residual});
    const auto d = dirac_from_majorana(p, c.convention);
    partner = std::max(partner, d.partner_residual);
    eigen = std::max(eigen, d.eigenspace_residual);
    pos_ranks.insert(d.positive_rank);
    neg_ranks.insert(d.negative_rank);
  }
  out.push_back(upper("fieldops.mode.terms", "the single-mode field has four terms", terms, 0.0));
  out.push_back(upper("fieldops.conjugation.involution", "C (C nu^dagger)^dagger = nu", invol, tol));
  out.push_back(upper("fieldops.conjugation.majorana_image",
                      "C nu^dagger carries lambda^S on a^+ and -lambda^A on a", image, tol,
                      {{"sign_on_a", -1}}));
  out.push_back(upper("fieldops.ziino_barut.displayed",
                      "the even and odd halves have the displayed coefficient spinors", zb, tol));
  out.push_back(upper("fieldops.ziino_barut.reconstruction", "even + odd = nu", recon, tol));
  out.push_back(upper("fieldops.ziino_barut.charge_parity",
                      "the halves are C-even and C-odd", parity, tol));
  out.push_back(upper("fieldops.dirac.partner",
                      "(1 + pslash/m) lambda^S = lambda^S + rho^A, (1 - pslash/m) lambda^A = lambda^A - rho^S",
                      partner, tol));
  out.push_back(upper("fieldops.dirac.eigenspace",
                      "the images lie in the +m / -m eigenspaces of pslash", eigen, tol));
  out.push_back(reported("fieldops.dirac.rank", "complex rank of the two positive (negative) images",
                         0.0, {{"positive", pos_ranks}, {"negative", neg_ranks},
                               {"eigenspace_dimension", 2}}));

  using Q = QuaternionPhase<double>;
  std::vector<Q> qs{Q{}, Q::rotation(kPi / 2, {1, 0, 0}), Q::rotation(kPi / 2, {0, 1, 0}),
                    Q::rotation(kPi / 2, {0, 0, 1}), Q::rotation(0.4, {1, 2, 3}),
                    Q::rotation(2.9, {-0.3, 0.8, 0.1})};
  double orbit = 0, unitary = 0;
  std::set<int> signs;
  for (const P& p : grid) {
    for (Helicity h : kHelicities) {
      for (const auto& pt : su2_phase_orbit(qs, p, h, c.convention)) {
        orbit = std::max(orbit, pt.sc_residual);
        unitary = std::max(unitary, pt.unitarity_residual);
        signs.insert(pt.sc_sign);
      }
    }
  }
  out.push_back(upper("fieldops.su2.orbit", "SU(2) phase transformations keep S^c eigenvector status",
                      std::max(orbit, unitary), tol, {{"sc_signs", signs}}));

  double hom = 0, tau = 0;
  for (const Q& a : qs) {
    for (const Q& b : qs) {
      hom = std::max(hom, max_abs(Mat4<double>(su2_operator(a) * su2_operator(b) - su2_operator(a * b))));
      tau = std::max(tau, max_abs(Mat2<double>(su2_matrix(a) * su2_matrix(b) - su2_matrix(a * b))));
    }
  }
  out.push_back(upper("fieldops.su2.homomorphism",
                      "c0 + i tau.c and its bispinor realization multiply alike", std::max(hom, tau),
                      tol));

  const auto units = xi_units<double>();
  double dp = 0;
  for (const P& p : grid) {
    const SpinorBasis<double> b = build_spinor_basis(p, c.convention);
    for (int k = 0; k < 2; ++k)
      dp = std::max(dp, max_abs(Vec4<double>(units[1] * units[1] * b.lambda_s[k] + b.lambda_s[k])));
  }
  out.push_back(upper("fieldops.su2.double_prime_square",
                      "the i gamma^5 unit applied twice gives -lambda^S", dp, tol));
  return out;
}

//---------------------------------------------------------------------------//
std::vector<Direction> SuiteConfig::default_directions() {
  return {{kPi / 2, 0.0}, {kPi / 2, kPi / 2}, {0.0, 0.0}, {kPi, 0.0}, {0.7, 1.1}, {2.1, 4.0}};
}

void SuiteConfig::validate() const {
  const auto finite = [](double x) { return std::isfinite(x); };
  if (masses.empty()) throw std::invalid_argument("at least one mass is required");
  for (double m : masses)
    if (!finite(m) || m <= 0) throw std::invalid_argument("masses must be positive");
  if (magnitudes.empty() && !include_rest) throw std::invalid_argument("momentum grid is empty");
  for (double p : magnitudes)
    if (!finite(p) || p < 0) throw std::invalid_argument("momentum magnitudes must be >= 0");
  if (directions.empty() && !magnitudes.empty())
    throw std::invalid_argument("at least one direction is required");
  for (const Direction& d : directions) {
    if (!(d.polar >= 0 && d.polar <= kPi && d.azimuth >= 0 && d.azimuth < 2 * kPi))
      throw std::invalid_argument("direction angles out of range");
  }
  if (!finite(tolerance) || tolerance < 0) throw std::invalid_argument("tolerance must be >= 0");
  if (convention.normalization && !(*convention.normalization > 0))
    throw std::invalid_argument("normalization must be positive");
  if (suites.empty()) throw std::invalid_argument("no suite selected");
}

std::vector<P> SuiteConfig::grid() const {
  std::vector<P> g;
  for (double m : masses) {
    if (include_rest) g.push_back(P::rest(m));
    for (double mag : magnitudes)
      for (const Direction& d : directions) g.push_back({m, mag, d.polar, d.azimuth});
  }
  return g;
}

std::vector<CheckResult> run_suites(const SuiteConfig& config) {
  config.validate();
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  std::set<Suite> selected(config.suites.begin(), config.suites.end());
  for (Suite s : selected) {
    auto fn = s == Suite::HalfSpin ? &halfspin_suite
              : s == Suite::Spin1  ? &spin1_suite
              : s == Suite::Fock   ? &fock_suite
                                   : &fieldops_suite;
    jobs.push_back(std::async(std::launch::async, fn, std::cref(config)));
  }
  std::vector<CheckResult> all;
  for (auto& j : jobs) {
    auto part = j.get();
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == Status::Fail; });
}

}  // namespace majorana
