// j = 1/2 momentum-space objects: Weyl spinors, Dirac spinors, the
// self/anti-self charge-conjugate (type-II) spinors lambda and rho, and the
// discrete-symmetry operators acting on them.
//
// Conventions
//   * chiral layout, right-handed block on top: psi = (phi_R, phi_L)
//   * gamma^0 = offdiag(1, 1), gamma^i = offdiag(-sigma^i, sigma^i),
//     gamma^5 = diag(1, -1), metric (+, -, -, -)
//   * Theta = -i sigma_2 = [[0, -1], [1, 0]]
//   * rest spinors are helicity eigenstates of sigma . n, scaled by
//     N e^{i theta_h}; phi_R(0) = phi_L(0)
#pragma once

#include "majorana/linalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace majorana {

enum class Helicity { Up, Down };
inline constexpr std::array<Helicity, 2> kHelicities{Helicity::Up, Helicity::Down};

inline constexpr int index(Helicity h) { return h == Helicity::Up ? 0 : 1; }
inline constexpr int twice(Helicity h) { return h == Helicity::Up ? 1 : -1; }
inline constexpr Helicity flipped(Helicity h) {
  return h == Helicity::Up ? Helicity::Down : Helicity::Up;
}

/// Self (S, eigenvalue +1) or anti-self (A, eigenvalue -1) charge conjugate.
enum class Duality { Self, AntiSelf };

inline constexpr int sign(Duality d) { return d == Duality::Self ? 1 : -1; }

enum class RestBasis { Helicity, SigmaZ };

//---------------------------------------------------------------------------//
template <typename T>
struct FourMomentum {
  T mass{1};
  T magnitude{0};
  T polar{0};    //!< in [0, pi]
  T azimuth{0};  //!< in [0, 2 pi)

  static FourMomentum rest(T m) { return {m, T(0), T(0), T(0)}; }

  static FourMomentum from_cartesian(T m, const Real3<T>& p) {
    const T mag = p.norm();
    if (mag == T(0)) return rest(m);
    T phi = std::atan2(p.y(), p.x());
    if (phi < T(0)) phi += 2 * pi<T>;
    const T theta = std::acos(std::clamp(p.z() / mag, T(-1), T(1)));
    return {m, mag, theta, phi};
  }

  T energy() const { return std::hypot(magnitude, mass); }

  // At |p| = 0 the direction is z regardless of the stored angles.
  T effective_polar() const { return magnitude == T(0) ? T(0) : polar; }
  T effective_azimuth() const { return magnitude == T(0) ? T(0) : azimuth; }

  Real3<T> direction() const {
    const T th = effective_polar(), ph = effective_azimuth();
    return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
  }
  Real3<T> three_momentum() const { return magnitude * direction(); }
  Real4<T> contravariant() const {
    const Real3<T> p = three_momentum();
    return {energy(), p.x(), p.y(), p.z()};
  }

  /// p -> -p realized on the angles: theta -> pi - theta, phi -> phi + pi.
  FourMomentum space_inverted() const {
    T phi = azimuth + pi<T>;
    if (phi >= 2 * pi<T>) phi -= 2 * pi<T>;
    return {mass, magnitude, pi<T> - polar, phi};
  }

  void validate() const {
    if (!(mass >= T(0)) || !(magnitude >= T(0)) || !std::isfinite(mass) ||
        !std::isfinite(magnitude)) {
      throw std::invalid_argument("FourMomentum: mass and |p| must be finite and >= 0");
    }
    if (polar < T(0) || polar > pi<T> || azimuth < T(0) || azimuth >= 2 * pi<T>) {
      throw std::invalid_argument("FourMomentum: angles out of range");
    }
  }
};

template <typename T>
struct PhaseConvention {
  T theta1{0};   //!< phase of the spin-up rest spinor
  T theta2{0};   //!< phase of the spin-down rest spinor
  T theta_c{0};  //!< charge-conjugation phase
  std::optional<T> normalization;  //!< N; sqrt(m) when unset
  RestBasis basis{RestBasis::Helicity};

  T norm(T mass) const { return normalization ? *normalization : std::sqrt(mass); }
  T theta(Helicity h) const { return h == Helicity::Up ? theta1 : theta2; }
};

//---------------------------------------------------------------------------//
// Fixed matrices
//---------------------------------------------------------------------------//

/// Pauli matrix sigma^k, k in {1, 2, 3}.
template <typename T>
Mat2<T> pauli(int k) {
  Mat2<T> s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I<T>, I<T>, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

template <typename T>
Mat2<T> sigma_dot(const Real3<T>& v) {
  return v.x() * pauli<T>(1) + v.y() * pauli<T>(2) + v.z() * pauli<T>(3);
}

/// Wigner operator for j = 1/2.
template <typename T>
Mat2<T> wigner_theta_half() {
  Mat2<T> t;
  t << 0, -1, 1, 0;
  return t;
}

template <typename T>
Mat4<T> block_diag(const Mat2<T>& a, const Mat2<T>& b) {
  Mat4<T> m = Mat4<T>::Zero();
  m.template topLeftCorner<2, 2>() = a;
  m.template bottomRightCorner<2, 2>() = b;
  return m;
}

template <typename T>
Mat4<T> block_offdiag(const Mat2<T>& upper, const Mat2<T>& lower) {
  Mat4<T> m = Mat4<T>::Zero();
  m.template topRightCorner<2, 2>() = upper;
  m.template bottomLeftCorner<2, 2>() = lower;
  return m;
}

template <typename T>
Vec4<T> stack(const Vec2<T>& upper, const Vec2<T>& lower) {
  Vec4<T> v;
  v << upper, lower;
  return v;
}

/// gamma^mu, mu in {0, 1, 2, 3}.
template <typename T>
Mat4<T> gamma(int mu) {
  const Mat2<T> one = Mat2<T>::Identity();
  if (mu == 0) return block_offdiag<T>(one, one);
  const Mat2<T> s = pauli<T>(mu);
  return block_offdiag<T>(-s, s);
}

template <typename T>
Mat4<T> gamma5() {
  return block_diag<T>(Mat2<T>::Identity(), -Mat2<T>::Identity());
}

/// gamma^mu p_mu for a contravariant p^mu.
template <typename T>
Mat4<T> slash(const Real4<T>& p) {
  return p[0] * gamma<T>(0) - p[1] * gamma<T>(1) - p[2] * gamma<T>(2) -
         p[3] * gamma<T>(3);
}

template <typename T>
Mat4<T> slash(const FourMomentum<T>& p) {
  return slash<T>(p.contravariant());
}

/// Dirac adjoint row vector psi^dagger gamma^0.
template <typename T>
CMatrix<T, 1, 4> bar(const Vec4<T>& psi) {
  return psi.adjoint() * gamma<T>(0);
}

//---------------------------------------------------------------------------//
// Spinors
//---------------------------------------------------------------------------//

/// Unit eigenspinor of sigma . n with eigenvalue 2h:
///   chi_+ = (cos(t/2) e^{-i p/2}, sin(t/2) e^{+i p/2})
///   chi_- = (-sin(t/2) e^{-i p/2}, cos(t/2) e^{+i p/2})
template <typename T>
Vec2<T> helicity_eigenspinor(T polar, T azimuth, Helicity h) {
  const T c = std::cos(polar / 2), s = std::sin(polar / 2);
  const Complex<T> em = std::polar(T(1), -azimuth / 2);
  const Complex<T> ep = std::polar(T(1), azimuth / 2);
  Vec2<T> chi;
  if (h == Helicity::Up) {
    chi << c * em, s * ep;
  } else {
    chi << -s * em, c * ep;
  }
  return chi;
}

template <typename T>
Vec2<T> helicity_eigenspinor(const Real3<T>& n, Helicity h,
                             T tol = default_tolerance<T>) {
  if (std::abs(n.norm() - T(1)) > tol) {
    throw std::invalid_argument("helicity_eigenspinor: direction is not a unit vector");
  }
  T phi = std::atan2(n.y(), n.x());
  if (phi < T(0)) phi += 2 * pi<T>;
  return helicity_eigenspinor<T>(std::acos(std::clamp(n.z(), T(-1), T(1))), phi, h);
}

template <typename T>
struct BoostPair {
  Mat2<T> right;
  Mat2<T> left;
};

/// Lambda_{R,L} = (E + m +- sigma.p) / sqrt(2 m (E + m)).
template <typename T>
BoostPair<T> boost_ops(const FourMomentum<T>& p) {
  if (!(p.mass > T(0))) {
    throw std::domain_error("boost_ops: requires m > 0");
  }
  const T e = p.energy(), m = p.mass;
  const T d = std::sqrt(2 * m * (e + m));
  const Mat2<T> sp = sigma_dot<T>(p.three_momentum());
  const Mat2<T> diag = (e + m) * Mat2<T>::Identity();
  return {(diag + sp) / d, (diag - sp) / d};
}

template <typename T>
Vec2<T> rest_spinor(const FourMomentum<T>& p, const PhaseConvention<T>& conv,
                    Helicity h) {
  Vec2<T> chi;
  if (conv.basis == RestBasis::Helicity) {
    chi = helicity_eigenspinor<T>(p.effective_polar(), p.effective_azimuth(), h);
  } else {
    chi = h == Helicity::Up ? Vec2<T>(1, 0) : Vec2<T>(0, 1);
  }
  return conv.norm(p.mass) * std::polar(T(1), conv.theta(h)) * chi;
}

/// The full spinor family at one momentum, indexed by helicity.
template <typename T>
struct SpinorBasis {
  std::array<Vec2<T>, 2> phi_l, phi_r;
  std::array<Vec4<T>, 2> lambda_s, lambda_a, rho_s, rho_a, u, v;

  const Vec4<T>& lambda(Duality d, Helicity h) const {
    return d == Duality::Self ? lambda_s[index(h)] : lambda_a[index(h)];
  }
  const Vec4<T>& rho(Duality d, Helicity h) const {
    return d == Duality::Self ? rho_s[index(h)] : rho_a[index(h)];
  }
};

template <typename T>
SpinorBasis<T> build_spinor_basis(const FourMomentum<T>& p,
                                  const PhaseConvention<T>& conv = {}) {
  p.validate();
  const BoostPair<T> boost = boost_ops(p);
  const Mat2<T> theta = wigner_theta_half<T>();
  const Complex<T> i = I<T>;
  SpinorBasis<T> b;
  for (Helicity h : kHelicities) {
    const int k = index(h);
    const Vec2<T> rest = rest_spinor(p, conv, h);
    const Vec2<T> l = boost.left * rest;
    const Vec2<T> r = boost.right * rest;
    b.phi_l[k] = l;
    b.phi_r[k] = r;
    b.lambda_s[k] = stack<T>(i * theta * l.conjugate(), l);
    b.lambda_a[k] = stack<T>(-i * theta * l.conjugate(), l);
    b.rho_s[k] = stack<T>(r, -i * theta * r.conjugate());
    b.rho_a[k] = stack<T>(r, i * theta * r.conjugate());
    b.u[k] = stack<T>(r, l);
    b.v[k] = gamma5<T>() * b.u[k];
  }
  return b;
}

//---------------------------------------------------------------------------//
// Discrete symmetries
//---------------------------------------------------------------------------//

/// S^c = e^{i theta_c} [[0, i Theta], [-i Theta, 0]] K.
template <typename T>
AntilinearOp<T> charge_conjugation_op(const PhaseConvention<T>& conv = {}) {
  const Mat2<T> theta = wigner_theta_half<T>();
  const Mat4<T> m = std::polar(T(1), conv.theta_c) *
                    block_offdiag<T>(I<T> * theta, -I<T> * theta);
  return {Matrix<T>(m), true};
}

template <typename T>
struct DiscreteOps {
  Mat4<T> helicity;         //!< diag(sigma.n / 2, sigma.n / 2)
  Mat4<T> chiral_helicity;  //!< -gamma^5 h
  Mat4<T> parity;           //!< gamma^0, paired with p -> -p
};

template <typename T>
DiscreteOps<T> discrete_ops(const Real3<T>& n, T tol = default_tolerance<T>) {
  if (std::abs(n.norm() - T(1)) > tol) {
    throw std::invalid_argument("discrete_ops: direction is not a unit vector");
  }
  const Mat2<T> half = sigma_dot<T>(n) / T(2);
  const Mat4<T> h = block_diag<T>(half, half);
  return {h, Mat4<T>(-gamma5<T>() * h), gamma<T>(0)};
}

//---------------------------------------------------------------------------//
// Dynamical equations in momentum space
//---------------------------------------------------------------------------//

/// Which pair of spinors rides on e^{-ip.x}. The default pairs lambda^S and
/// rho^A with positive frequency, as in the mode expansion of nu.
enum class FrequencyAssignment { SelfLambdaPositive, SelfLambdaNegative };

/// Sign of the mass term in each of
///   i dslash lambda^S + s_a m rho^A,  i dslash rho^A + s_b m lambda^S,
///   i dslash lambda^A + s_c m rho^S,  i dslash rho^S + s_d m lambda^A.
using MassTermSigns = std::array<int, 4>;
inline constexpr MassTermSigns kDisplayedMassSigns{-1, -1, +1, +1};

template <typename T>
struct DynamicalResiduals {
  std::array<std::array<T, 4>, 2> by_helicity{};  //!< [helicity][equation]

  T max() const {
    T r = 0;
    for (const auto& row : by_helicity)
      for (T x : row) r = std::max(r, x);
    return r;
  }
};

template <typename T>
DynamicalResiduals<T> dynamical_residuals(
    const FourMomentum<T>& p, const PhaseConvention<T>& conv = {},
    FrequencyAssignment freq = FrequencyAssignment::SelfLambdaPositive,
    const MassTermSigns& signs = kDisplayedMassSigns) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Mat4<T> ps = slash(p);
  const T m = p.mass;
  // i gamma.d on e^{-+ip.x} gives +-pslash.
  const T self_freq = freq == FrequencyAssignment::SelfLambdaPositive ? T(1) : T(-1);
  DynamicalResiduals<T> out;
  for (Helicity h : kHelicities) {
    const int k = index(h);
    auto& r = out.by_helicity[k];
    r[0] = (self_freq * ps * b.lambda_s[k] + T(signs[0]) * m * b.rho_a[k]).norm();
    r[1] = (self_freq * ps * b.rho_a[k] + T(signs[1]) * m * b.lambda_s[k]).norm();
    r[2] = (-self_freq * ps * b.lambda_a[k] + T(signs[2]) * m * b.rho_s[k]).norm();
    r[3] = (-self_freq * ps * b.rho_s[k] + T(signs[3]) * m * b.lambda_a[k]).norm();
  }
  return out;
}

//---------------------------------------------------------------------------//
// Connection with Dirac spinors
//---------------------------------------------------------------------------//

/// The displayed 4x4 matrix taking (u+, u-, v+, v-) to (l^S_up, l^S_dn,
/// l^A_up, l^A_dn).
template <typename T>
Mat4<T> connection_matrix() {
  const Complex<T> i = I<T>;
  Mat4<T> m;
  m << T(1), i, T(-1), i,
       -i, T(1), -i, T(-1),
       T(1), -i, T(-1), -i,
       i, T(1), i, T(-1);
  return m / T(2);
}

template <typename T>
struct ConnectionCheck {
  T raw_residual;
  T aligned_residual;
  std::array<Complex<T>, 4> phases;  //!< per-row unit phase, target = phase * M.D
};

template <typename T>
ConnectionCheck<T> connection_matrix_check(const FourMomentum<T>& p,
                                           const PhaseConvention<T>& conv = {}) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  Mat4<T> dirac;  // rows are spinors
  dirac.row(0) = b.u[0].transpose();
  dirac.row(1) = b.u[1].transpose();
  dirac.row(2) = b.v[0].transpose();
  dirac.row(3) = b.v[1].transpose();
  Mat4<T> target;
  target.row(0) = b.lambda_s[0].transpose();
  target.row(1) = b.lambda_s[1].transpose();
  target.row(2) = b.lambda_a[0].transpose();
  target.row(3) = b.lambda_a[1].transpose();

  const Mat4<T> predicted = connection_matrix<T>() * dirac;
  ConnectionCheck<T> out{max_abs(Mat4<T>(predicted - target)), T(0), {}};
  for (int r = 0; r < 4; ++r) {
    const Complex<T> overlap = predicted.row(r).dot(target.row(r));
    const Complex<T> phase =
        std::abs(overlap) > T(0) ? overlap / std::abs(overlap) : Complex<T>(1);
    out.phases[r] = phase;
    out.aligned_residual = std::max(
        out.aligned_residual, max_abs(CMatrix<T, 1, 4>(phase * predicted.row(r) - target.row(r))));
  }
  return out;
}

//---------------------------------------------------------------------------//
// Axial (gamma^5) gauge transformations
//---------------------------------------------------------------------------//

enum class SpinorKind { Lambda, Rho };

/// lambda -> (cos a - i gamma^5 sin a) lambda, rho -> (cos a + i gamma^5 sin a) rho.
template <typename T>
Mat4<T> gauge_matrix(T alpha, SpinorKind kind) {
  const T s = kind == SpinorKind::Lambda ? T(-1) : T(1);
  return std::cos(alpha) * Mat4<T>::Identity() +
         s * I<T> * std::sin(alpha) * gamma5<T>();
}

template <typename T>
Vec4<T> gauge_transform(T alpha, const Vec4<T>& spinor, SpinorKind kind) {
  return gauge_matrix(alpha, kind) * spinor;
}

/// L^5 = diag(gamma^5, -gamma^5) on the eight-component (lambda, rho).
template <typename T>
Matrix<T> axial_generator() {
  Mat2<T> z;
  z << 1, 0, 0, -1;
  return kron(z, gamma5<T>());
}

/// exp(-i alpha L^5) = cos(alpha) - i L^5 sin(alpha), since (L^5)^2 = 1.
template <typename T>
Matrix<T> axial_rotation(T alpha) {
  return std::cos(alpha) * Matrix<T>::Identity(8, 8) -
         I<T> * std::sin(alpha) * axial_generator<T>();
}

//---------------------------------------------------------------------------//
// Xi quadruple
//---------------------------------------------------------------------------//

template <typename T>
Mat2<T> xi_matrix(T azimuth) {
  Mat2<T> x = Mat2<T>::Zero();
  x(0, 0) = std::polar(T(1), azimuth);
  x(1, 1) = std::polar(T(1), -azimuth);
  return x;
}

/// The four maps diag(Xi, Xi), diag(iXi, -iXi), offdiag(iXi, iXi),
/// offdiag(Xi, -Xi).
template <typename T>
std::array<Mat4<T>, 4> xi_maps(T azimuth) {
  const Mat2<T> x = xi_matrix(azimuth);
  const Complex<T> i = I<T>;
  return {block_diag<T>(x, x), block_diag<T>(i * x, -i * x),
          block_offdiag<T>(i * x, i * x), block_offdiag<T>(x, Mat2<T>(-x))};
}

/// The maps with the common frame factor diag(Xi, Xi) stripped:
/// 1, i gamma^5, i gamma^0, gamma^5 gamma^0.
template <typename T>
std::array<Mat4<T>, 4> xi_units() {
  return xi_maps<T>(T(0));
}

template <typename T>
struct QuaternionTable {
  std::array<std::array<int, 4>, 4> unit{};  //!< E_j E_k = sign * E_unit
  std::array<std::array<int, 4>, 4> sign{};
  T residual{0};  //!< worst mismatch when matching products to +-E_l

  bool has_central_minus_one() const {
    for (int k = 1; k < 4; ++k)
      if (unit[k][k] != 0 || sign[k][k] != -1) return false;
    return true;
  }
};

/// Multiplication table of a set of four units, matching each product to
/// the closest +-unit.
template <typename T>
QuaternionTable<T> quaternion_table(const std::array<Mat4<T>, 4>& units) {
  QuaternionTable<T> t;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const Mat4<T> prod = units[j] * units[k];
      T best = std::numeric_limits<T>::infinity();
      for (int l = 0; l < 4; ++l) {
        for (int s : {1, -1}) {
          const T r = max_abs(Mat4<T>(prod - T(s) * units[l]));
          if (r < best) {
            best = r;
            t.unit[j][k] = l;
            t.sign[j][k] = s;
          }
        }
      }
      t.residual = std::max(t.residual, best);
    }
  }
  return t;
}

template <typename T>
struct XiReport {
  std::array<Vec4<T>, 4> images;
  std::array<T, 4> alias_residual{};  //!< vs lambda^A*, -i lambda^S*, i g0 lambda^A*, g0 lambda^S*
  std::array<int, 4> sc_sign{};       //!< S^c eigenvalue of each image
  T sc_residual{0};
  T frame_commutator{0};  //!< max |[diag(Xi,Xi), E_k]|
  QuaternionTable<T> table;
};

template <typename T>
XiReport<T> xi_transform_quadruple(const FourMomentum<T>& p, Helicity h,
                                   const PhaseConvention<T>& conv = {}) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Vec4<T>& ls = b.lambda_s[index(h)];
  const Vec4<T>& la = b.lambda_a[index(h)];
  const auto maps = xi_maps(p.effective_azimuth());
  const auto units = xi_units<T>();
  const AntilinearOp<T> sc = charge_conjugation_op(conv);
  const Mat4<T> g0 = gamma<T>(0);

  const std::array<Vec4<T>, 4> aliases{
      Vec4<T>(la.conjugate()), Vec4<T>(-I<T> * ls.conjugate()),
      Vec4<T>(I<T> * g0 * la.conjugate()), Vec4<T>(g0 * ls.conjugate())};

  XiReport<T> out;
  for (int k = 0; k < 4; ++k) {
    out.images[k] = maps[k] * ls;
    out.alias_residual[k] = max_abs(Vec4<T>(out.images[k] - aliases[k]));
    const Vec4<T> img = act(sc, out.images[k]);
    const T plus = max_abs(Vec4<T>(img - out.images[k]));
    const T minus = max_abs(Vec4<T>(img + out.images[k]));
    out.sc_sign[k] = plus <= minus ? 1 : -1;
    out.sc_residual = std::max(out.sc_residual, std::min(plus, minus));
    out.frame_commutator = std::max(
        out.frame_commutator, max_abs(Mat4<T>(maps[0] * units[k] - units[k] * maps[0])));
  }
  out.table = quaternion_table(units);
  return out;
}

/// max |Xi Lambda Xi^{-1} - Lambda^*| over both boosts.
template <typename T>
T xi_boost_conjugation_residual(const FourMomentum<T>& p) {
  const BoostPair<T> bp = boost_ops(p);
  const Mat2<T> x = xi_matrix(p.effective_azimuth());
  const Mat2<T> xinv = x.adjoint();
  return std::max(max_abs(Mat2<T>(x * bp.right * xinv - bp.right.conjugate())),
                  max_abs(Mat2<T>(x * bp.left * xinv - bp.left.conjugate())));
}

//---------------------------------------------------------------------------//
// Bi-orthonormality
//---------------------------------------------------------------------------//

/// G(i, j) = bar(lambda_i) lambda_j, ordered (S up, S down, A up, A down).
template <typename T>
Mat4<T> biorthonormality_gram(const FourMomentum<T>& p,
                              const PhaseConvention<T>& conv = {}) {
  if (!(p.mass > T(0))) throw std::domain_error("biorthonormality_gram: requires m > 0");
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const std::array<const Vec4<T>*, 4> l{&b.lambda_s[0], &b.lambda_s[1],
                                        &b.lambda_a[0], &b.lambda_a[1]};
  Mat4<T> g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = (bar(*l[i]) * *l[j])(0, 0);
  return g;
}

//---------------------------------------------------------------------------//
// Massless limit
//---------------------------------------------------------------------------//

template <typename T>
struct MasslessRow {
  T mass;
  T self_ratio;  //!< |lambda^S_up| / |lambda^S_down|
  T anti_ratio;  //!< |lambda^A_up| / |lambda^A_down|
  T down_norm;   //!< |lambda^S_down| / N
};

template <typename T>
struct MasslessScan {
  std::vector<MasslessRow<T>> rows;
  bool monotone{true};

  T final_ratio() const {
    return rows.empty() ? T(0) : std::max(rows.back().self_ratio, rows.back().anti_ratio);
  }
};

template <typename T>
MasslessScan<T> massless_scan(T magnitude, T polar, T azimuth,
                              const std::vector<T>& masses,
                              const PhaseConvention<T>& conv = {}) {
  if (conv.basis != RestBasis::Helicity) {
    throw std::invalid_argument(
        "massless_scan: the vanishing of lambda_up needs the helicity rest basis");
  }
  if (masses.empty()) throw std::invalid_argument("massless_scan: empty mass sequence");
  for (std::size_t k = 0; k < masses.size(); ++k) {
    if (!(masses[k] > T(0)) || (k > 0 && !(masses[k] < masses[k - 1]))) {
      throw std::invalid_argument("massless_scan: masses must be positive and strictly decreasing");
    }
  }
  MasslessScan<T> scan;
  for (T m : masses) {
    const FourMomentum<T> p{m, magnitude, polar, azimuth};
    const SpinorBasis<T> b = build_spinor_basis(p, conv);
    const T n = conv.norm(m);
    MasslessRow<T> row{m, b.lambda_s[0].norm() / b.lambda_s[1].norm(),
                       b.lambda_a[0].norm() / b.lambda_a[1].norm(),
                       b.lambda_s[1].norm() / n};
    if (!scan.rows.empty() && !(row.self_ratio < scan.rows.back().self_ratio &&
                                row.anti_ratio < scan.rows.back().anti_ratio)) {
      scan.monotone = false;
    }
    scan.rows.push_back(row);
  }
  return scan;
}

//---------------------------------------------------------------------------//
// Two-component (Feynman-Gell-Mann) form
//---------------------------------------------------------------------------//

template <typename T>
struct FgmTensors {
  std::array<std::array<Mat2<T>, 4>, 4> sigma;
  std::array<std::array<Mat2<T>, 4>, 4> sigma_tilde;
};

/// sigma^{0i} = -tilde sigma^{0i} = i sigma^i,
/// sigma^{ij} = tilde sigma^{ij} = eps_{ijk} sigma^k, both antisymmetric.
template <typename T>
FgmTensors<T> fgm_tensors() {
  FgmTensors<T> t;
  for (auto* family : {&t.sigma, &t.sigma_tilde})
    for (auto& row : *family)
      for (auto& m : row) m.setZero();
  for (int i = 1; i <= 3; ++i) {
    t.sigma[0][i] = I<T> * pauli<T>(i);
    t.sigma[i][0] = -t.sigma[0][i];
    t.sigma_tilde[0][i] = -I<T> * pauli<T>(i);
    t.sigma_tilde[i][0] = -t.sigma_tilde[0][i];
  }
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cyc) {
    const Mat2<T> s = pauli<T>(c[2]);
    t.sigma[c[0]][c[1]] = s;
    t.sigma[c[1]][c[0]] = -s;
    t.sigma_tilde[c[0]][c[1]] = s;
    t.sigma_tilde[c[1]][c[0]] = -s;
  }
  return t;
}

using FieldStrength = Eigen::Matrix4d;

template <typename T>
struct FgmResiduals {
  T chi;  //!< |[pi^- pi^- - m^2 - (g/2) sigma.F] chi|
  T phi;  //!< |[pi^+ pi^+ - m^2 + (g/2) tilde sigma.F] phi|
};

/// Momentum-space residuals of the two-component equations at the point x,
/// for plane waves e^{-ip.x} in the potential A_mu(x) = -F_{mu nu} x^nu / 2,
/// which has divergence zero and reproduces the constant field F_{mu nu}
/// (lower indices).
template <typename T>
FgmResiduals<T> fgm_residuals(const Vec2<T>& chi, const Vec2<T>& phi,
                              const Real4<T>& p_upper, T mass,
                              const Eigen::Matrix<T, 4, 4>& field, T coupling,
                              const Real4<T>& x_upper = Real4<T>::Zero()) {
  if (max_abs(Eigen::Matrix<T, 4, 4>(field + field.transpose())) > default_tolerance<T>) {
    throw std::invalid_argument("fgm_residuals: field strength must be antisymmetric");
  }
  const Real4<T> metric(1, -1, -1, -1);
  const Real4<T> p_lower = metric.cwiseProduct(p_upper);
  const Real4<T> a_lower = -field * x_upper / T(2);
  const Real4<T> pi_minus = p_lower - coupling * a_lower;
  const Real4<T> pi_plus = p_lower + coupling * a_lower;
  const T pm2 = pi_minus.dot(metric.cwiseProduct(pi_minus));
  const T pp2 = pi_plus.dot(metric.cwiseProduct(pi_plus));

  const FgmTensors<T> t = fgm_tensors<T>();
  Mat2<T> sf = Mat2<T>::Zero(), tsf = Mat2<T>::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      sf += field(mu, nu) * t.sigma[mu][nu];
      tsf += field(mu, nu) * t.sigma_tilde[mu][nu];
    }
  }
  const Mat2<T> one = Mat2<T>::Identity();
  const Mat2<T> op_chi = (pm2 - mass * mass) * one - coupling / T(2) * sf;
  const Mat2<T> op_phi = (pp2 - mass * mass) * one + coupling / T(2) * tsf;
  return {T((op_chi * chi).norm()), T((op_phi * phi).norm())};
}

}  // namespace majorana
