#include "majorana/spin1.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace majorana;
using P = FourMomentum<double>;

namespace {

constexpr double kTol = 1e-12;

Matrix<double> dyn(const Mat3<double>& m) { return m; }

}  // namespace

TEST_CASE("spin-1 generators close on su(2) with J^2 = 2") {
  const auto j = spin1_generators<double>();
  const Complex<double> i = I<double>;
  CHECK(approx_eq(Mat3<double>(j[0] * j[1] - j[1] * j[0]), Mat3<double>(i * j[2]), kTol));
  CHECK(approx_eq(Mat3<double>(j[1] * j[2] - j[2] * j[1]), Mat3<double>(i * j[0]), kTol));
  CHECK(approx_eq(Mat3<double>(j[2] * j[0] - j[0] * j[2]), Mat3<double>(i * j[1]), kTol));
  const Mat3<double> casimir = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
  CHECK(approx_eq(casimir, Mat3<double>(2 * Mat3<double>::Identity()), kTol));
}

TEST_CASE("Theta J Theta^-1 = -J^* and Theta^2 = 1 for spin 1") {
  const Mat3<double> th = wigner_theta<double>();
  for (const Mat3<double>& j : spin1_generators<double>())
    CHECK(approx_eq(Mat3<double>(th * j * th.inverse()), Mat3<double>(-j.conjugate()), kTol));
  CHECK(approx_eq(Mat3<double>(th * th), Mat3<double>::Identity(), 0.0));
}

TEST_CASE("j_pair is the symmetrized product minus delta") {
  CHECK(approx_eq(j_pair<double>(1, 2), j_pair<double>(2, 1), 0.0));
  const auto j = spin1_generators<double>();
  CHECK(approx_eq(j_pair<double>(3, 3), Mat3<double>(2 * j[2] * j[2] - Mat3<double>::Identity()), 0.0));
}

TEST_CASE("spin-1 boosts equal exp(+-J.n phi) from a series") {
  testing::MomentumSampler s(31);
  for (int k = 0; k < 25; ++k) {
    const P p = s.next();
    const double rapidity = std::asinh(p.magnitude / p.mass);
    const Matrix<double> gen = dyn(j_dot(p.direction())) * rapidity;
    const Spin1Boosts<double> b = spin1_boost_ops(p);
    const double scale = std::pow(p.energy() / p.mass, 2);
    CHECK(max_abs(Matrix<double>(testing::series_exp<double>(gen) - dyn(b.right))) < 1e-12 * scale);
    CHECK(max_abs(Matrix<double>(testing::series_exp<double>(Matrix<double>(-gen)) - dyn(b.left))) <
          1e-12 * scale);
    CHECK(approx_eq(Mat3<double>(b.right * b.left), Mat3<double>::Identity(), 1e-12 * scale));
  }
  CHECK_THROWS_AS(spin1_boost_ops(P{0, 1, 0, 0}), std::domain_error);
}

TEST_CASE("spin-1 helicity spinors are J.n eigenvectors") {
  testing::MomentumSampler s(32);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const Real3<double> n = P{1, 1, p.polar, p.azimuth}.direction();
    for (Spin1Helicity h : kSpin1Helicities) {
      const Vec3<double> chi = spin1_helicity_spinor(p.polar, p.azimuth, h);
      CHECK(chi.norm() == doctest::Approx(1));
      CHECK(approx_eq(Vec3<double>(j_dot(n) * chi), Vec3<double>(double(projection(h)) * chi), kTol));
    }
  }
}

TEST_CASE("the Majorana unitary is unitary and its displayed inverse is its adjoint") {
  const MajoranaUnitary<double> mu = majorana_unitary<double>();
  CHECK(approx_eq(Mat6<double>(mu.u * mu.u_dagger), Mat6<double>::Identity(), 1e-15));
  CHECK(approx_eq(mu.u_dagger, Mat6<double>(mu.u.adjoint()), 0.0));
  CHECK_THROWS_AS(to_majorana_rep<double>(Matrix<double>::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("BMW matrices: symmetric, real in the Majorana frame, matching the displayed forms") {
  const BmwFamily<double> canon = bmw_canonical_gammas<double>();
  const BmwFamily<double> shown = displayed_mr_forms<double>();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      CHECK(approx_eq(canon.g[mu][nu], canon.g[nu][mu], 0.0));
      const Matrix<double> mr = to_majorana_rep<double>(canon.g[mu][nu]);
      CHECK(max_abs(mr.imag()) < kTol);
      CHECK(approx_eq(mr, Matrix<double>(shown.g[mu][nu]), kTol));
    }
  }
  const Matrix<double> g5 = to_majorana_rep<double>(canon.g5);
  CHECK(max_abs(g5.real()) < kTol);
  CHECK(approx_eq(g5, Matrix<double>(shown.g5), kTol));
  const Mat3<double> th = wigner_theta<double>();
  CHECK(approx_eq(shown.g[0][0], block_offdiag<double>(th, th), 0.0));
}

TEST_CASE("Weinberg spinors satisfy gamma_{mu nu} p^mu p^nu u = m^2 u") {
  testing::MomentumSampler s(33);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const double scale = std::pow(p.energy(), 4) / p.mass;
    CHECK(bmw_onshell_residual(p) < 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("MR spinors: v = gamma_5 u and the real/imaginary part identities") {
  testing::MomentumSampler s(34);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const double scale = std::max(1.0, p.energy() * p.energy() / p.mass);
    const MrSpinors<double> up = mr_spinors(p, Spin1Helicity::Up);
    const MrSpinors<double> lo = mr_spinors(p, Spin1Helicity::Longitudinal);
    const MrSpinors<double> dn = mr_spinors(p, Spin1Helicity::Down);
    for (const auto* m : {&up, &lo, &dn}) {
      CHECK(m->gamma5_residual < 1e-15 * scale);
      CHECK(approx_eq(m->u, Vec6<double>(m->u_real + I<double> * m->u_imag), 0.0));
    }
    CHECK(approx_eq(up.u_real, dn.u_real, kTol * scale));
    CHECK(approx_eq(up.u_imag, Vec6<double>(-dn.u_imag), kTol * scale));
    CHECK(max_abs(lo.u_real) < kTol * scale);
    CHECK(lo.u_imag.norm() > 0.1);
  }
}

TEST_CASE("no spin-1 self-conjugate spinors, but Gamma^5 S^c has real eigenvectors") {
  const SelfConjugacyReport<double> r = spin1_selfconjugacy_analysis<double>();
  CHECK(r.half_square_residual == 0.0);
  CHECK(r.spin1_square_residual == 0.0);
  CHECK(r.gamma5_square_residual == 0.0);
  CHECK(r.spin1_fixed_dimension == 0);
  CHECK(r.plus.size() == 6);
  CHECK(r.minus.size() == 6);
  CHECK(r.eigen_residual < kTol);
  CHECK_THROWS_AS(fixed_subspace(spin1_charge_conjugation<double>(), 1), std::invalid_argument);
}

TEST_CASE("the j = 1/2 unitary turns S^c into plain complex conjugation") {
  const Mat4<double> u = half_majorana_unitary<double>();
  CHECK(approx_eq(Mat4<double>(u * u.adjoint()), Mat4<double>::Identity(), 1e-15));
  const Mat4<double> sc = charge_conjugation_op<double>().matrix();
  CHECK(approx_eq(Mat4<double>(u * sc * u.transpose()), Mat4<double>::Identity(), kTol));

  const RealityReport<double> r = lambda_reality_check(P{1, 1.5, 0.7, 1.1});
  for (int k = 0; k < 4; ++k) CHECK(r.half[k].cls != RealityClass::Mixed);
  CHECK(r.half[0].cls == RealityClass::Real);
  CHECK(r.half[2].cls == RealityClass::Imaginary);
}

TEST_CASE("reality classification") {
  Vec3<double> v(1, 2, 0);
  CHECK(classify_reality(v, kTol).cls == RealityClass::Real);
  CHECK(classify_reality(Vec3<double>(I<double> * v), kTol).cls == RealityClass::Imaginary);
  CHECK(classify_reality(Vec3<double>(Vec3<double>::Zero()), kTol).cls == RealityClass::Zero);
  v[2] = I<double>;
  const auto mixed = classify_reality(v, kTol);
  CHECK(mixed.cls == RealityClass::Mixed);
  CHECK(mixed.minority == 1.0);
  CHECK(std::string(to_string(RealityClass::Mixed)) == "mixed");
}
