// (1,0) + (0,1) objects: spin-1 boosts and helicity spinors, the
// Barut-Muzinich-Williams matrices gamma_{mu nu}, the unitary that makes
// them real, the MR spinors, and the self-conjugacy analysis.
//
// J is taken in the J_z-diagonal basis with rows ordered m = +1, 0, -1.
#pragma once

#include "majorana/halfspin.hpp"

namespace majorana {

enum class Spin1Helicity { Up, Longitudinal, Down };
inline constexpr std::array<Spin1Helicity, 3> kSpin1Helicities{
    Spin1Helicity::Up, Spin1Helicity::Longitudinal, Spin1Helicity::Down};

inline constexpr int index(Spin1Helicity h) { return static_cast<int>(h); }
inline constexpr int projection(Spin1Helicity h) { return 1 - index(h); }

template <typename T>
std::array<Mat3<T>, 3> spin1_generators() {
  const T r = T(1) / std::sqrt(T(2));
  const Complex<T> i = I<T>;
  Mat3<T> jx, jy, jz;
  jx << 0, r, 0, r, 0, r, 0, r, 0;
  jy << 0, -i * r, 0, i * r, 0, -i * r, 0, i * r, 0;
  jz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return {jx, jy, jz};
}

template <typename T>
Mat3<T> j_dot(const Real3<T>& n) {
  const auto j = spin1_generators<T>();
  return n.x() * j[0] + n.y() * j[1] + n.z() * j[2];
}

/// Symmetrized product {J_i, J_j} - delta_ij, i, j in {1, 2, 3}.
template <typename T>
Mat3<T> j_pair(int i, int j) {
  const auto g = spin1_generators<T>();
  Mat3<T> s = g[i - 1] * g[j - 1] + g[j - 1] * g[i - 1];
  if (i == j) s -= Mat3<T>::Identity();
  return s;
}

/// Wigner operator for j = 1.
template <typename T>
Mat3<T> wigner_theta() {
  Mat3<T> t;
  t << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  return t;
}

template <typename T>
Mat6<T> block_diag(const Mat3<T>& a, const Mat3<T>& b) {
  Mat6<T> m = Mat6<T>::Zero();
  m.template topLeftCorner<3, 3>() = a;
  m.template bottomRightCorner<3, 3>() = b;
  return m;
}

template <typename T>
Mat6<T> block_offdiag(const Mat3<T>& upper, const Mat3<T>& lower) {
  Mat6<T> m = Mat6<T>::Zero();
  m.template topRightCorner<3, 3>() = upper;
  m.template bottomLeftCorner<3, 3>() = lower;
  return m;
}

template <typename T>
Mat6<T> block_matrix(const Mat3<T>& a, const Mat3<T>& b, const Mat3<T>& c,
                     const Mat3<T>& d) {
  Mat6<T> m;
  m << a, b, c, d;
  return m;
}

template <typename T>
Vec6<T> stack(const Vec3<T>& upper, const Vec3<T>& lower) {
  Vec6<T> v;
  v << upper, lower;
  return v;
}

//---------------------------------------------------------------------------//
// The unitary to the Majorana representation
//---------------------------------------------------------------------------//

template <typename T>
struct MajoranaUnitary {
  Mat6<T> u;
  Mat6<T> u_dagger;  //!< the displayed inverse, built independently of u
};

/// U = 1/(2 sqrt 2) [[a + b Th, -a + b Th], [b + a Th, -b + a Th]] with
/// a = 1 - i, b = 1 + i; U^dagger is assembled from its own displayed blocks.
template <typename T>
MajoranaUnitary<T> majorana_unitary() {
  const Complex<T> a{1, -1}, b{1, 1};
  const Mat3<T> one = Mat3<T>::Identity();
  const Mat3<T> th = wigner_theta<T>();
  const T s = T(1) / (2 * std::sqrt(T(2)));
  const Mat6<T> u = s * block_matrix<T>(a * one + b * th, -a * one + b * th,
                                        b * one + a * th, -b * one + a * th);
  const Mat6<T> ud = s * block_matrix<T>(b * one + a * th, a * one + b * th,
                                         -b * one + a * th, -a * one + b * th);
  return {u, ud};
}

template <typename T>
Matrix<T> to_majorana_rep(const Matrix<T>& m) {
  if (m.rows() != 6 || m.cols() != 6) {
    throw std::invalid_argument("to_majorana_rep: expected a 6x6 matrix");
  }
  const MajoranaUnitary<T> mu = majorana_unitary<T>();
  return mu.u * m * mu.u_dagger;
}

//---------------------------------------------------------------------------//
// Boosts and spinors
//---------------------------------------------------------------------------//

template <typename T>
struct Spin1Boosts {
  Mat3<T> right;
  Mat3<T> left;
};

/// exp(+-(J.n) phi) = 1 +- (J.n) sinh(phi) + (J.n)^2 (cosh(phi) - 1), using
/// (J.n)^3 = J.n; cosh(phi) = E/m, sinh(phi) = |p|/m.
template <typename T>
Spin1Boosts<T> spin1_boost_ops(const FourMomentum<T>& p) {
  if (!(p.mass > T(0))) throw std::domain_error("spin1_boost_ops: requires m > 0");
  const Mat3<T> jn = j_dot<T>(p.direction());
  const T sh = p.magnitude / p.mass;
  const T ch1 = (p.energy() - p.mass) / p.mass;
  const Mat3<T> one = Mat3<T>::Identity();
  const Mat3<T> even = one + ch1 * jn * jn;
  return {even + sh * jn, even - sh * jn};
}

/// e^{-i phi J_z} e^{-i theta J_y} applied to the J_z eigenvector of the
/// requested projection.
template <typename T>
Vec3<T> spin1_helicity_spinor(T polar, T azimuth, Spin1Helicity h) {
  const auto j = spin1_generators<T>();
  const Mat3<T> one = Mat3<T>::Identity();
  const Mat3<T> dy =
      one - I<T> * std::sin(polar) * j[1] + (std::cos(polar) - T(1)) * j[1] * j[1];
  Vec3<T> e = Vec3<T>::Zero();
  e[index(h)] = 1;
  Vec3<T> chi = dy * e;
  for (int k = 0; k < 3; ++k) chi[k] *= std::polar(T(1), -azimuth * T(1 - k));
  return chi;
}

template <typename T>
struct WeinbergSpinor {
  Vec3<T> phi_r;
  Vec3<T> phi_l;
  Vec6<T> chiral() const { return stack<T>(phi_r, phi_l); }
};

/// phi_{R,L} = Lambda_{R,L} N chi_h with N = conv.norm(m); the spin-1
/// spinors carry no extra helicity phase.
template <typename T>
WeinbergSpinor<T> weinberg_spinor(const FourMomentum<T>& p, Spin1Helicity h,
                                  const PhaseConvention<T>& conv = {}) {
  p.validate();
  const Spin1Boosts<T> b = spin1_boost_ops(p);
  const Vec3<T> rest =
      conv.norm(p.mass) *
      spin1_helicity_spinor<T>(p.effective_polar(), p.effective_azimuth(), h);
  return {b.right * rest, b.left * rest};
}

//---------------------------------------------------------------------------//
// Barut-Muzinich-Williams matrices
//---------------------------------------------------------------------------//

template <typename T>
struct BmwFamily {
  std::array<std::array<Mat6<T>, 4>, 4> g;  //!< gamma_{mu nu}, symmetric
  Mat6<T> g5;

  /// gamma_{mu nu} p^mu p^nu.
  Mat6<T> contract(const Real4<T>& p) const {
    Mat6<T> s = Mat6<T>::Zero();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) s += p[mu] * p[nu] * g[mu][nu];
    return s;
  }
};

/// Chiral layout (right block on top):
///   gamma_00 = offdiag(1, 1), gamma_0i = offdiag(J_i, -J_i),
///   gamma_ij = offdiag(S_ij, S_ij), S_ij = {J_i, J_j} - delta_ij,
///   gamma_5 = diag(1, -1).
template <typename T>
BmwFamily<T> bmw_chiral_gammas() {
  const auto j = spin1_generators<T>();
  const Mat3<T> one = Mat3<T>::Identity();
  BmwFamily<T> f;
  f.g[0][0] = block_offdiag<T>(one, one);
  for (int i = 1; i <= 3; ++i) {
    f.g[0][i] = block_offdiag<T>(j[i - 1], Mat3<T>(-j[i - 1]));
    f.g[i][0] = f.g[0][i];
    for (int k = 1; k <= 3; ++k) {
      const Mat3<T> s = j_pair<T>(i, k);
      f.g[i][k] = block_offdiag<T>(s, s);
    }
  }
  f.g5 = block_diag<T>(one, Mat3<T>(-one));
  return f;
}

/// The same family in the canonical layout, W M W^dagger with
/// W = [[1, 1], [1, -1]] / sqrt 2.
template <typename T>
BmwFamily<T> bmw_canonical_gammas() {
  const Mat3<T> one = Mat3<T>::Identity();
  const Mat6<T> w = block_matrix<T>(one, one, one, Mat3<T>(-one)) / std::sqrt(T(2));
  BmwFamily<T> f = bmw_chiral_gammas<T>();
  for (auto& row : f.g)
    for (auto& m : row) m = w * m * w.adjoint();
  f.g5 = w * f.g5 * w.adjoint();
  return f;
}

/// max over helicities of |gamma_{mu nu} p^mu p^nu u - m^2 u| for chiral
/// Weinberg spinors u = (phi_R, phi_L).
template <typename T>
T bmw_onshell_residual(const FourMomentum<T>& p, const PhaseConvention<T>& conv = {}) {
  const Mat6<T> g = bmw_chiral_gammas<T>().contract(p.contravariant());
  const T m2 = p.mass * p.mass;
  T r = 0;
  for (Spin1Helicity h : kSpin1Helicities) {
    const Vec6<T> u = weinberg_spinor(p, h, conv).chiral();
    r = std::max(r, T((g * u - m2 * u).norm()));
  }
  return r;
}

/// The Majorana-representation matrices as displayed, with J_ij read as
/// S_ij = {J_i, J_j} - delta_ij.
template <typename T>
BmwFamily<T> displayed_mr_forms() {
  const auto j = spin1_generators<T>();
  const Mat3<T> th = wigner_theta<T>();
  const Mat3<T> one = Mat3<T>::Identity();
  const Complex<T> i = I<T>;
  BmwFamily<T> f;
  f.g[0][0] = block_offdiag<T>(th, th);
  f.g[0][1] = block_offdiag<T>(Mat3<T>(-j[0] * th), Mat3<T>(-j[0] * th));
  f.g[0][2] = block_diag<T>(Mat3<T>(i * j[1] * th), Mat3<T>(-i * j[1] * th));
  f.g[0][3] = block_offdiag<T>(Mat3<T>(-j[2] * th), Mat3<T>(-j[2] * th));
  for (int k = 1; k <= 3; ++k) f.g[k][0] = f.g[0][k];
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Mat3<T> s = j_pair<T>(a, b);
      const Mat3<T> diff = i * (s.conjugate() - s) * th;
      const Mat3<T> sum = (s.conjugate() + s) * th;
      f.g[a][b] = block_matrix<T>(diff, sum, sum, Mat3<T>(-diff)) / T(2);
    }
  }
  f.g5 = block_offdiag<T>(Mat3<T>(i * one), Mat3<T>(-i * one));
  return f;
}

//---------------------------------------------------------------------------//
// MR spinors
//---------------------------------------------------------------------------//

template <typename T>
struct MrSpinors {
  Vec6<T> u, v;
  Vec6<T> u_real, u_imag;  //!< U^+ = Re u, V^+ = Im u
  Vec6<T> v_real, v_imag;  //!< U^- = Re v, V^- = Im v
  Vec6<T> u_first, u_second;  //!< the two displayed vector blocks of u
  T gamma5_residual;          //!< |v - gamma_5^MR u|
};

/// u = (s, s)/2 + i (d, -d)/2 and v = (d, d)/2 + i (s, -s)/2 with
/// s = phi_L + Th phi_R, d = -phi_L + Th phi_R.
template <typename T>
MrSpinors<T> mr_spinors(const FourMomentum<T>& p, Spin1Helicity h,
                        const PhaseConvention<T>& conv = {}) {
  const WeinbergSpinor<T> w = weinberg_spinor(p, h, conv);
  const Mat3<T> th = wigner_theta<T>();
  const Vec3<T> s = w.phi_l + th * w.phi_r;
  const Vec3<T> d = -w.phi_l + th * w.phi_r;
  MrSpinors<T> out;
  out.u_first = stack<T>(s, s) / T(2);
  out.u_second = stack<T>(d, Vec3<T>(-d)) / T(2);
  out.u = out.u_first + I<T> * out.u_second;
  out.v = stack<T>(d, d) / T(2) + I<T> * stack<T>(s, Vec3<T>(-s)) / T(2);
  out.u_real = out.u.real().template cast<Complex<T>>();
  out.u_imag = out.u.imag().template cast<Complex<T>>();
  out.v_real = out.v.real().template cast<Complex<T>>();
  out.v_imag = out.v.imag().template cast<Complex<T>>();
  out.gamma5_residual = max_abs(Vec6<T>(out.v - displayed_mr_forms<T>().g5 * out.u));
  return out;
}

//---------------------------------------------------------------------------//
// Self-conjugacy
//---------------------------------------------------------------------------//

/// [[0, Th], [-Th, 0]] K, the sign pattern of the j = 1/2 operator.
template <typename T>
AntilinearOp<T> spin1_charge_conjugation() {
  const Mat3<T> th = wigner_theta<T>();
  return {Matrix<T>(block_offdiag<T>(th, Mat3<T>(-th))), true};
}

/// Gamma^5 S^c = [[0, Th], [Th, 0]] K.
template <typename T>
AntilinearOp<T> spin1_gamma5_conjugation() {
  const Mat3<T> th = wigner_theta<T>();
  return {Matrix<T>(block_offdiag<T>(th, th)), true};
}

template <typename T>
struct SelfConjugacyReport {
  T half_square_residual;     //!< |(S^c_1/2)^2 - 1|
  T spin1_square_residual;    //!< |(S^c_1)^2 + 1|
  T gamma5_square_residual;   //!< |(Gamma^5 S^c_1)^2 - 1|
  Eigen::Index spin1_fixed_dimension;  //!< real dimension of S^c_1 psi = +-psi
  std::vector<Vector<T>> plus, minus;  //!< real bases of Gamma^5 S^c xi = +-xi
  T eigen_residual;
};

template <typename T>
SelfConjugacyReport<T> spin1_selfconjugacy_analysis(T tol = default_tolerance<T>) {
  SelfConjugacyReport<T> r{};
  const AntilinearOp<T> half = square(charge_conjugation_op<T>());
  const AntilinearOp<T> s1 = square(spin1_charge_conjugation<T>());
  const AntilinearOp<T> g5s1 = spin1_gamma5_conjugation<T>();
  r.half_square_residual = max_abs(Matrix<T>(half.matrix() - Matrix<T>::Identity(4, 4)));
  r.spin1_square_residual = max_abs(Matrix<T>(s1.matrix() + Matrix<T>::Identity(6, 6)));
  r.gamma5_square_residual =
      max_abs(Matrix<T>(square(g5s1).matrix() - Matrix<T>::Identity(6, 6)));
  r.spin1_fixed_dimension = fixed_space_dimension(spin1_charge_conjugation<T>(), 1, tol) +
                            fixed_space_dimension(spin1_charge_conjugation<T>(), -1, tol);
  r.plus = fixed_subspace(g5s1, 1, tol);
  r.minus = fixed_subspace(g5s1, -1, tol);
  r.eigen_residual = 0;
  for (const auto& v : r.plus)
    r.eigen_residual = std::max(r.eigen_residual, max_abs(Vector<T>(act(g5s1, v) - v)));
  for (const auto& v : r.minus)
    r.eigen_residual = std::max(r.eigen_residual, max_abs(Vector<T>(act(g5s1, v) + v)));
  return r;
}

//---------------------------------------------------------------------------//
// Reality in the Majorana representation
//---------------------------------------------------------------------------//

/// The j = 1/2 matrix with the block pattern of the spin-1 unitary (Theta =
/// -i sigma_2), times e^{-i pi/4} so that S^c becomes plain conjugation.
template <typename T>
Mat4<T> half_majorana_unitary() {
  const Complex<T> a{1, -1}, b{1, 1};
  const Mat2<T> one = Mat2<T>::Identity();
  const Mat2<T> th = wigner_theta_half<T>();
  Mat4<T> u;
  u << a * one + b * th, -a * one + b * th, b * one + a * th, -b * one + a * th;
  return std::polar(T(1), -pi<T> / 4) * u / (2 * std::sqrt(T(2)));
}

enum class RealityClass { Zero, Real, Imaginary, Mixed };

inline const char* to_string(RealityClass c) {
  switch (c) {
    case RealityClass::Zero: return "zero";
    case RealityClass::Real: return "real";
    case RealityClass::Imaginary: return "imaginary";
    case RealityClass::Mixed: return "mixed";
  }
  return "?";
}

template <typename T>
struct Reality {
  RealityClass cls;
  T minority;  //!< max |minority part|; the residual behind the verdict
};

template <typename Derived>
auto classify_reality(const Eigen::MatrixBase<Derived>& v,
                      typename Eigen::NumTraits<typename Derived::Scalar>::Real tol) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Real re = v.size() ? Real(v.real().cwiseAbs().maxCoeff()) : Real(0);
  const Real im = v.size() ? Real(v.imag().cwiseAbs().maxCoeff()) : Real(0);
  if (re <= tol && im <= tol) return Reality<Real>{RealityClass::Zero, std::max(re, im)};
  if (im <= tol) return Reality<Real>{RealityClass::Real, im};
  if (re <= tol) return Reality<Real>{RealityClass::Imaginary, re};
  return Reality<Real>{RealityClass::Mixed, std::min(re, im)};
}

template <typename T>
struct RealityReport {
  std::array<Reality<T>, 8> half;  //!< lambda^S, lambda^A, rho^S, rho^A, each up/down
  std::array<Reality<T>, 6> spin1;  //!< (+-Th phi_L*, phi_L) per helicity, S then A
};

template <typename T>
RealityReport<T> lambda_reality_check(const FourMomentum<T>& p,
                                      const PhaseConvention<T>& conv = {},
                                      T tol = default_tolerance<T>) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Mat4<T> uh = half_majorana_unitary<T>();
  RealityReport<T> r;
  for (int k = 0; k < 2; ++k) {
    r.half[0 + k] = classify_reality(Vec4<T>(uh * b.lambda_s[k]), tol);
    r.half[2 + k] = classify_reality(Vec4<T>(uh * b.lambda_a[k]), tol);
    r.half[4 + k] = classify_reality(Vec4<T>(uh * b.rho_s[k]), tol);
    r.half[6 + k] = classify_reality(Vec4<T>(uh * b.rho_a[k]), tol);
  }
  const Mat6<T> u1 = majorana_unitary<T>().u;
  const Mat3<T> th = wigner_theta<T>();
  for (Spin1Helicity h : kSpin1Helicities) {
    const Vec3<T> l = weinberg_spinor(p, h, conv).phi_l;
    r.spin1[index(h)] =
        classify_reality(Vec6<T>(u1 * stack<T>(th * l.conjugate(), l)), tol);
    r.spin1[3 + index(h)] =
        classify_reality(Vec6<T>(u1 * stack<T>(-th * l.conjugate(), l)), tol);
  }
  return r;
}

}  // namespace majorana
