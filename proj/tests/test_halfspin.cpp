#include "majorana/halfspin.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace majorana;
using P = FourMomentum<double>;

namespace {

constexpr double kTol = 1e-12;

Matrix<double> dyn(const Mat2<double>& m) { return m; }

}  // namespace

TEST_CASE("pauli matrices multiply as sigma_i sigma_j = delta + i eps sigma_k") {
  const Mat2<double> one = Mat2<double>::Identity();
  CHECK(approx_eq(pauli<double>(1) * pauli<double>(2), Mat2<double>(I<double> * pauli<double>(3)), 0.0));
  CHECK(approx_eq(pauli<double>(2) * pauli<double>(3), Mat2<double>(I<double> * pauli<double>(1)), 0.0));
  CHECK(approx_eq(pauli<double>(3) * pauli<double>(1), Mat2<double>(I<double> * pauli<double>(2)), 0.0));
  for (int k = 1; k <= 3; ++k) CHECK(approx_eq(pauli<double>(k) * pauli<double>(k), one, 0.0));
  CHECK_THROWS_AS(pauli<double>(0), std::invalid_argument);
}

TEST_CASE("Theta sigma Theta^-1 = -sigma^*") {
  const Mat2<double> th = wigner_theta_half<double>();
  for (int k = 1; k <= 3; ++k) {
    const Mat2<double> s = pauli<double>(k);
    CHECK(approx_eq(Mat2<double>(th * s * th.inverse()), Mat2<double>(-s.conjugate()), kTol));
  }
  CHECK(approx_eq(Mat2<double>(th * th), Mat2<double>(-Mat2<double>::Identity()), 0.0));
}

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
  const Real4<double> metric(1, -1, -1, -1);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4<double> ac = gamma<double>(mu) * gamma<double>(nu) + gamma<double>(nu) * gamma<double>(mu);
      const Mat4<double> expect = (mu == nu ? 2 * metric[mu] : 0.0) * Mat4<double>::Identity();
      CHECK(approx_eq(ac, expect, 0.0));
    }
    const Mat4<double> g5ac = gamma5<double>() * gamma<double>(mu) + gamma<double>(mu) * gamma5<double>();
    CHECK(max_abs(g5ac) == 0.0);
  }
  const Mat4<double> prod =
      I<double> * gamma<double>(0) * gamma<double>(1) * gamma<double>(2) * gamma<double>(3);
  CHECK(approx_eq(prod, gamma5<double>(), 0.0));
}

TEST_CASE("slash squares to p^2") {
  testing::MomentumSampler s(21);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const Mat4<double> ps = slash(p);
    CHECK(approx_eq(Mat4<double>(ps * ps), Mat4<double>(p.mass * p.mass * Mat4<double>::Identity()),
                    1e-10 * (1 + p.energy() * p.energy())));
  }
}

TEST_CASE("four-momentum geometry") {
  const P p = P::from_cartesian(2.0, Real3<double>(1, -2, 2));
  CHECK(p.magnitude == doctest::Approx(3));
  CHECK(p.energy() == doctest::Approx(std::sqrt(13.0)));
  CHECK((p.three_momentum() - Real3<double>(1, -2, 2)).norm() < 1e-14);
  CHECK(p.azimuth >= 0);
  CHECK((p.space_inverted().three_momentum() + p.three_momentum()).norm() < 1e-14);

  const P rest = P::from_cartesian(1.0, Real3<double>::Zero());
  CHECK(rest.magnitude == 0);
  CHECK(rest.direction() == Real3<double>(0, 0, 1));
  P tilted = P::rest(1.0);
  tilted.polar = 2.0;
  CHECK(tilted.direction() == Real3<double>(0, 0, 1));

  CHECK_THROWS_AS((P{-1, 1, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((P{1, 1, 4, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((P{1, std::nan(""), 0, 0}.validate()), std::invalid_argument);
}

TEST_CASE("helicity eigenspinors diagonalize sigma . n") {
  testing::MomentumSampler s(22);
  for (int k = 0; k < 30; ++k) {
    const P p = s.next();
    const Real3<double> n = P{1, 1, p.polar, p.azimuth}.direction();
    for (Helicity h : kHelicities) {
      const Vec2<double> chi = helicity_eigenspinor(p.polar, p.azimuth, h);
      CHECK(chi.norm() == doctest::Approx(1));
      CHECK(approx_eq(Vec2<double>(sigma_dot(n) * chi), Vec2<double>(double(twice(h)) * chi), kTol));
      const Vec2<double> again = helicity_eigenspinor(n, h);
      CHECK(proportionality(again, chi).residual < 1e-12);
    }
  }
  CHECK_THROWS_AS(helicity_eigenspinor(Real3<double>(1, 1, 0), Helicity::Up), std::invalid_argument);
}

TEST_CASE("boost matrices equal exp(+-sigma.n phi/2) from a series") {
  testing::MomentumSampler s(23);
  for (int k = 0; k < 25; ++k) {
    const P p = s.next();
    const double rapidity = std::asinh(p.magnitude / p.mass);
    const Matrix<double> gen = dyn(sigma_dot(p.direction())) * (rapidity / 2);
    const BoostPair<double> b = boost_ops(p);
    const double scale = p.energy() / p.mass;
    CHECK(max_abs(Matrix<double>(testing::series_exp<double>(gen) - dyn(b.right))) < 1e-12 * scale);
    CHECK(max_abs(Matrix<double>(testing::series_exp<double>(Matrix<double>(-gen)) - dyn(b.left))) <
          1e-12 * scale);
    CHECK(std::abs(b.right.determinant() - 1.0) < 1e-12 * scale);
    CHECK(approx_eq(Mat2<double>(b.right * b.left), Mat2<double>::Identity(), 1e-12 * scale));
  }
  CHECK_THROWS_AS(boost_ops(P{0, 1, 0, 0}), std::domain_error);
}

TEST_CASE("boost components along z are e^{+-phi/2}") {
  // m = 1, |p| = 1: e^{asinh(1)/2} = sqrt(1 + sqrt 2) = 1.5537739740...
  const BoostPair<double> b = boost_ops(P{1, 1, 0, 0});
  CHECK(b.right(0, 0).real() == doctest::Approx(1.5537739740300374).epsilon(1e-14));
  CHECK(b.left(0, 0).real() == doctest::Approx(0.6435942529055827).epsilon(1e-14));
  CHECK(b.right(1, 1).real() == doctest::Approx(0.6435942529055827).epsilon(1e-14));
}

TEST_CASE("rest-frame lambda spinors") {
  const SpinorBasis<double> b = build_spinor_basis(P::rest(1.0));
  const Complex<double> i = I<double>;
  Vec4<double> s_up, a_up, s_dn;
  s_up << 0, i, 1, 0;
  a_up << 0, -i, 1, 0;
  s_dn << -i, 0, 0, 1;
  CHECK(approx_eq(b.lambda_s[0], s_up, kTol));
  CHECK(approx_eq(b.lambda_a[0], a_up, kTol));
  CHECK(approx_eq(b.lambda_s[1], s_dn, kTol));
  CHECK(approx_eq(b.u[0], Vec4<double>(1, 0, 1, 0), kTol));
}

TEST_CASE("spinor family along x") {
  // chi_+(x) = (1, 1)/sqrt 2 up to the azimuthal phase e^{-+i 0} = 1.
  const P p{1, 0.75, pi<double> / 2, 0};
  const SpinorBasis<double> b = build_spinor_basis(p);
  const double e = 1.25;
  const double ap = (e + 1 + 0.75) / std::sqrt(2 * (e + 1));
  const double am = (e + 1 - 0.75) / std::sqrt(2 * (e + 1));
  const double r = 1 / std::sqrt(2.0);
  CHECK(approx_eq(b.phi_r[0], Vec2<double>(ap * r, ap * r), kTol));
  CHECK(approx_eq(b.phi_l[0], Vec2<double>(am * r, am * r), kTol));
  CHECK(approx_eq(b.phi_l[1], Vec2<double>(-ap * r, ap * r), kTol));
}

TEST_CASE("spinors are charge-conjugation eigenstates with the duality sign") {
  testing::MomentumSampler s(24);
  PhaseConvention<double> conv;
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    conv.theta1 = s.uniform(0, 6);
    conv.theta2 = s.uniform(0, 6);
    const SpinorBasis<double> b = build_spinor_basis(p, conv);
    const AntilinearOp<double> sc = charge_conjugation_op(conv);
    const double scale = std::max(1.0, b.u[0].norm());
    for (Duality d : {Duality::Self, Duality::AntiSelf}) {
      for (Helicity h : kHelicities) {
        const Vec4<double>& l = b.lambda(d, h);
        const Vec4<double>& r = b.rho(d, h);
        CHECK(approx_eq(Vec4<double>(act(sc, l)), Vec4<double>(double(sign(d)) * l), kTol * scale));
        CHECK(approx_eq(Vec4<double>(act(sc, r)), Vec4<double>(double(sign(d)) * r), kTol * scale));
      }
    }
  }
  CHECK(approx_eq(square(charge_conjugation_op<double>()).matrix(), Matrix<double>::Identity(4, 4), 0.0));
}

TEST_CASE("the charge-conjugation phase breaks eigenstate status unless zero") {
  PhaseConvention<double> conv;
  conv.theta_c = 0.4;
  const SpinorBasis<double> b = build_spinor_basis(P{1, 1, 0.3, 0.2}, conv);
  const Vec4<double> img = act(charge_conjugation_op(conv), b.lambda_s[0]);
  CHECK(max_abs(Vec4<double>(img - b.lambda_s[0])) > 0.1);
}

TEST_CASE("lambda is not a helicity or parity eigenspinor; u and v are helicity eigenspinors") {
  testing::MomentumSampler s(25);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const SpinorBasis<double> b = build_spinor_basis(p);
    const DiscreteOps<double> ops = discrete_ops(p.direction());
    const SpinorBasis<double> inverted = build_spinor_basis(p.space_inverted());
    for (Helicity h : kHelicities) {
      const int i = index(h);
      const Vec4<double>& l = b.lambda_s[i];
      CHECK(eigen_fit(ops.helicity, l).residual > 0.1 * l.norm());
      const auto chiral = eigen_fit(ops.chiral_helicity, l);
      CHECK(chiral.residual < kTol * l.norm());
      CHECK(std::abs(chiral.value - 0.5 * twice(h)) < 1e-12);

      const auto uh = eigen_fit(ops.helicity, b.u[i]);
      CHECK(uh.residual < kTol * b.u[i].norm());
      CHECK(std::abs(uh.value - 0.5 * twice(h)) < 1e-12);
      CHECK(eigen_fit(ops.helicity, b.v[i]).residual < kTol * b.v[i].norm());

      // gamma^0 lambda^S(p) is never a multiple of a lambda^S at -p; it
      // lands on a lambda^A there instead.
      if (p.magnitude > 0.1 && std::sin(p.polar) > 0.1) {
        const Vec4<double> img = ops.parity * l;
        double to_anti = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 2; ++j) {
          CHECK(proportionality(img, inverted.lambda_s[j]).residual > 0.1 * img.norm());
          to_anti = std::min(to_anti, proportionality(img, inverted.lambda_a[j]).residual);
        }
        CHECK(to_anti < kTol * img.norm());
      }
    }
  }
  CHECK_THROWS_AS(discrete_ops(Real3<double>(0, 0, 2)), std::invalid_argument);
}

TEST_CASE("dynamical equations hold with the displayed mass signs") {
  testing::MomentumSampler s(26);
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const double scale = p.energy() * std::max(1.0, p.energy());
    CHECK(dynamical_residuals(p).max() < kTol * scale);
    const DynamicalResiduals<double> flipped =
        dynamical_residuals(p, {}, FrequencyAssignment::SelfLambdaPositive, {1, 1, -1, -1});
    CHECK(flipped.max() > 0.1 * p.mass);
    const DynamicalResiduals<double> swapped =
        dynamical_residuals(p, {}, FrequencyAssignment::SelfLambdaNegative);
    CHECK(swapped.max() > 0.1 * p.mass);
  }
}

TEST_CASE("connection matrix holds up to fixed row phases") {
  testing::MomentumSampler s(27);
  const Mat4<double> m = connection_matrix<double>();
  CHECK(approx_eq(Mat4<double>(m * m.adjoint()), Mat4<double>::Identity(), kTol));
  for (int k = 0; k < 20; ++k) {
    const P p = s.next();
    const ConnectionCheck<double> c = connection_matrix_check(p);
    CHECK(c.aligned_residual < kTol * std::max(1.0, p.energy()));
    for (const auto& ph : c.phases) CHECK(std::abs(ph - Complex<double>(1)) < 1e-12);
  }
}

TEST_CASE("lambda Gram matrix: vanishing self products, norm in the cross products") {
  testing::MomentumSampler s(28);
  for (int k = 0; k < 16; ++k) {
    const P p = s.next();
    PhaseConvention<double> conv;
    conv.theta1 = s.uniform(0, 2 * pi<double>);
    conv.theta2 = s.uniform(0, 2 * pi<double>);
    const Mat4<double> g = biorthonormality_gram(p, conv);
    const double n2 = p.mass;
    const double c = std::cos(conv.theta1 + conv.theta2);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(g(i, i)) < kTol);
    CHECK(std::abs(g(1, 0) - Complex<double>(0, 2 * n2 * c)) < kTol);
    CHECK(std::abs(g(0, 1) - Complex<double>(0, -2 * n2 * c)) < kTol);
  }
  PhaseConvention<double> zero;
  zero.theta1 = pi<double> / 2;
  const Mat4<double> gz = biorthonormality_gram(P{1, 2, 0.4, 1}, zero);
  CHECK(std::abs(gz(0, 1)) < kTol);
  CHECK(std::abs(gz(1, 0)) < kTol);
  CHECK_THROWS_AS(biorthonormality_gram(P{0, 1, 0, 0}), std::domain_error);
}

TEST_CASE("massless limit: lambda_up vanishes relative to lambda_down") {
  const std::vector<double> masses{1, 1e-2, 1e-4, 1e-6, 1e-8};
  const MasslessScan<double> scan = massless_scan(1.0, 0.7, 1.1, masses);
  CHECK(scan.monotone);
  CHECK(scan.final_ratio() < 1e-4);
  // |lambda_up| / |lambda_down| = (E + m - |p|) / (E + m + |p|) ~ m / (2|p|).
  CHECK(scan.rows.back().self_ratio == doctest::Approx(0.5e-8).epsilon(1e-6));

  PhaseConvention<double> sz;
  sz.basis = RestBasis::SigmaZ;
  CHECK_THROWS_AS(massless_scan(1.0, 0.7, 1.1, masses, sz), std::invalid_argument);
  CHECK_THROWS_AS(massless_scan(1.0, 0.7, 1.1, {1e-2, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(massless_scan(1.0, 0.7, 1.1, {}), std::invalid_argument);
}

TEST_CASE("axial gauge transformations keep the charge-conjugation sign") {
  const SpinorBasis<double> b = build_spinor_basis(P{1.3, 2.2, 1.0, 4.0});
  const AntilinearOp<double> sc = charge_conjugation_op<double>();
  for (double a : {0.0, 0.3, 1.2, 2.9}) {
    for (int k = 0; k < 2; ++k) {
      const Vec4<double> ls = gauge_transform(a, b.lambda_s[k], SpinorKind::Lambda);
      const Vec4<double> la = gauge_transform(a, b.lambda_a[k], SpinorKind::Lambda);
      const Vec4<double> rs = gauge_transform(a, b.rho_s[k], SpinorKind::Rho);
      CHECK(approx_eq(Vec4<double>(act(sc, ls)), ls, 1e-12));
      CHECK(approx_eq(Vec4<double>(act(sc, la)), Vec4<double>(-la), 1e-12));
      CHECK(approx_eq(Vec4<double>(act(sc, rs)), rs, 1e-12));
    }
  }
  const Matrix<double> l5 = axial_generator<double>();
  CHECK(approx_eq(Matrix<double>(l5 * l5), Matrix<double>::Identity(8, 8), 0.0));
  const Matrix<double> rot = axial_rotation(0.8);
  const Matrix<double> series = testing::series_exp<double>(Matrix<double>(-I<double> * 0.8 * l5));
  CHECK(approx_eq(rot, series, 1e-13));
}

TEST_CASE("Xi maps form a quaternion group and keep lambda^S self-conjugate") {
  const auto t = quaternion_table(xi_units<double>());
  CHECK(t.residual == 0.0);
  CHECK(t.has_central_minus_one());
  // i j = k, j i = -k in the order (1, i g5, i g0, g5 g0).
  CHECK(t.unit[1][2] == 3);
  CHECK(t.sign[1][2] * t.sign[2][1] == -1);

  testing::MomentumSampler s(29);
  for (int k = 0; k < 10; ++k) {
    const P p = s.next();
    for (Helicity h : kHelicities) {
      const XiReport<double> r = xi_transform_quadruple(p, h);
      CHECK(r.sc_residual < 1e-12 * std::max(1.0, p.energy()));
      for (int sgn : r.sc_sign) CHECK(sgn == 1);
      for (double a : r.alias_residual) CHECK(a < 1e-12 * std::max(1.0, p.energy()));
      CHECK(r.frame_commutator < 1e-15);
    }
    CHECK(xi_boost_conjugation_residual(p) < 1e-12 * p.energy() / p.mass);
  }
}

TEST_CASE("two-component equations: free plane waves and constant fields") {
  const FgmTensors<double> t = fgm_tensors<double>();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      CHECK(approx_eq(t.sigma[mu][nu], Mat2<double>(-t.sigma[nu][mu]), 0.0));

  const P p{1.5, 0.8, 0.9, 2.0};
  const SpinorBasis<double> b = build_spinor_basis(p);
  const Eigen::Matrix4d zero = Eigen::Matrix4d::Zero();
  const auto free = fgm_residuals(b.phi_r[0], b.phi_l[0], p.contravariant(), p.mass, zero, 0.5);
  CHECK(free.chi < 1e-12);
  CHECK(free.phi < 1e-12);

  Eigen::Matrix4d bad = zero;
  bad(0, 1) = 1;
  CHECK_THROWS_AS(
      fgm_residuals(b.phi_r[0], b.phi_l[0], p.contravariant(), p.mass, bad, 0.5),
      std::invalid_argument);
}

TEST_CASE("long double instantiation") {
  using L = long double;
  const FourMomentum<L> p{L(1), L(1.5), L(0.7), L(1.1)};
  const SpinorBasis<L> b = build_spinor_basis(p);
  const AntilinearOp<L> sc = charge_conjugation_op<L>();
  CHECK(max_abs(Vec4<L>(act(sc, b.lambda_s[0]) - b.lambda_s[0])) < L(1e-17));
  CHECK(dynamical_residuals(p).max() < L(1e-16));
  const L rapidity = std::asinh(p.magnitude / p.mass);
  const Matrix<L> gen = Matrix<L>(sigma_dot<L>(p.direction())) * (rapidity / 2);
  CHECK(max_abs(Matrix<L>(testing::series_exp<L>(gen) - Matrix<L>(boost_ops(p).right))) < L(1e-17));
}
