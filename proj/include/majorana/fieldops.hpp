// Single-mode algebra of the Majorana-like field operator: its charge
// conjugate, the even/odd (Ziino-Barut) halves, the Dirac projection, and
// the SU(2) phase transformations.
//
// Operator symbols are opaque tags. The 1/(2E) measure is a common factor
// at fixed momentum and is dropped.
#pragma once

#include "majorana/halfspin.hpp"

#include <map>
#include <tuple>

namespace majorana {

enum class OperatorSymbol { A, ADagger, B, BDagger };
enum class Frequency { Positive, Negative };  //!< e^{-ip.x}, e^{+ip.x}

inline constexpr OperatorSymbol dagger(OperatorSymbol s) {
  switch (s) {
    case OperatorSymbol::A: return OperatorSymbol::ADagger;
    case OperatorSymbol::ADagger: return OperatorSymbol::A;
    case OperatorSymbol::B: return OperatorSymbol::BDagger;
    case OperatorSymbol::BDagger: return OperatorSymbol::B;
  }
  return s;
}

inline constexpr Frequency flipped(Frequency f) {
  return f == Frequency::Positive ? Frequency::Negative : Frequency::Positive;
}

inline const char* to_string(OperatorSymbol s) {
  switch (s) {
    case OperatorSymbol::A: return "a";
    case OperatorSymbol::ADagger: return "a+";
    case OperatorSymbol::B: return "b";
    case OperatorSymbol::BDagger: return "b+";
  }
  return "?";
}

struct TermKey {
  OperatorSymbol symbol;
  Helicity eta;
  Frequency freq;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

template <typename T>
class ModeExpansion {
 public:
  using Terms = std::map<TermKey, Vec4<T>>;

  void add(const TermKey& key, const Vec4<T>& spinor) {
    if (!terms_.emplace(key, spinor).second) {
      throw std::invalid_argument("ModeExpansion: duplicate (symbol, helicity, frequency) term");
    }
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a term, zero when absent.
  Vec4<T> coefficient(const TermKey& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Vec4<T>::Zero() : it->second;
  }

  /// a x + b y, term by term.
  static ModeExpansion combine(const ModeExpansion& x, Complex<T> a,
                               const ModeExpansion& y, Complex<T> b) {
    ModeExpansion out;
    const auto accumulate = [&out](const Terms& terms, Complex<T> c) {
      for (const auto& [k, s] : terms) {
        out.terms_.try_emplace(k, Vec4<T>::Zero()).first->second += c * s;
      }
    };
    accumulate(x.terms_, a);
    accumulate(y.terms_, b);
    return out;
  }

  /// Largest coefficient difference over the union of terms.
  friend T distance(const ModeExpansion& x, const ModeExpansion& y) {
    T r = 0;
    for (const auto& [k, s] : x.terms_) r = std::max(r, max_abs(Vec4<T>(s - y.coefficient(k))));
    for (const auto& [k, s] : y.terms_) r = std::max(r, max_abs(Vec4<T>(s - x.coefficient(k))));
    return r;
  }

 private:
  Terms terms_;
};

/// nu = sum_eta [lambda^S_eta a_eta e^{-ipx} + lambda^A_eta a^dagger_eta e^{+ipx}]
/// at one momentum, with b^dagger identified with a^dagger.
template <typename T>
ModeExpansion<T> majorana_mode(const FourMomentum<T>& p,
                               const PhaseConvention<T>& conv = {}) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  ModeExpansion<T> nu;
  for (Helicity h : kHelicities) {
    nu.add({OperatorSymbol::A, h, Frequency::Positive}, b.lambda_s[index(h)]);
    nu.add({OperatorSymbol::ADagger, h, Frequency::Negative}, b.lambda_a[index(h)]);
  }
  return nu;
}

/// C nu^dagger: each (s, X, f) becomes (S^c s, X^dagger, -f).
template <typename T>
ModeExpansion<T> charge_conjugate_expansion(const ModeExpansion<T>& x,
                                            const PhaseConvention<T>& conv = {}) {
  const AntilinearOp<T> sc = charge_conjugation_op(conv);
  ModeExpansion<T> out;
  for (const auto& [k, s] : x.terms()) {
    out.add({dagger(k.symbol), k.eta, flipped(k.freq)}, act(sc, s));
  }
  return out;
}

template <typename T>
struct ZiinoBarutSplit {
  ModeExpansion<T> even;  //!< (nu + C nu^dagger) / 2
  ModeExpansion<T> odd;   //!< (nu - C nu^dagger) / 2
  T displayed_residual;       //!< vs the displayed coefficient spinors
  T reconstruction_residual;  //!< |even + odd - nu|
  T even_residual;            //!< |C even^dagger - even|
  T odd_residual;             //!< |C odd^dagger + odd|
};

template <typename T>
ZiinoBarutSplit<T> ziino_barut_split(const FourMomentum<T>& p,
                                     const PhaseConvention<T>& conv = {}) {
  const ModeExpansion<T> nu = majorana_mode(p, conv);
  const ModeExpansion<T> cnu = charge_conjugate_expansion(nu, conv);
  const Complex<T> half(T(0.5));
  ZiinoBarutSplit<T> z{ModeExpansion<T>::combine(nu, half, cnu, half),
                       ModeExpansion<T>::combine(nu, half, cnu, -half), 0, 0, 0, 0};

  // Displayed integrands: even (i Th phi_L*, 0) a e^{-ipx} + (0, phi_L) a^+ e^{ipx},
  // odd (0, phi_L) a e^{-ipx} + (-i Th phi_L*, 0) a^+ e^{ipx}.
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Mat2<T> th = wigner_theta_half<T>();
  const Vec2<T> zero = Vec2<T>::Zero();
  ModeExpansion<T> even, odd;
  for (Helicity h : kHelicities) {
    const Vec2<T>& l = b.phi_l[index(h)];
    const Vec2<T> tl = I<T> * th * l.conjugate();
    even.add({OperatorSymbol::A, h, Frequency::Positive}, stack<T>(tl, zero));
    even.add({OperatorSymbol::ADagger, h, Frequency::Negative}, stack<T>(zero, l));
    odd.add({OperatorSymbol::A, h, Frequency::Positive}, stack<T>(zero, l));
    odd.add({OperatorSymbol::ADagger, h, Frequency::Negative}, stack<T>(Vec2<T>(-tl), zero));
  }
  z.displayed_residual = std::max(distance(z.even, even), distance(z.odd, odd));
  z.reconstruction_residual =
      distance(ModeExpansion<T>::combine(z.even, T(1), z.odd, T(1)), nu);
  z.even_residual = distance(charge_conjugate_expansion(z.even, conv), z.even);
  z.odd_residual = distance(charge_conjugate_expansion(z.odd, conv),
                            ModeExpansion<T>::combine(z.odd, T(-1), {}, T(0)));
  return z;
}

template <typename T>
struct DiracProjection {
  ModeExpansion<T> images;
  T partner_residual;      //!< vs lambda^S + rho^A (positive) and lambda^A - rho^S (negative)
  T eigenspace_residual;   //!< |(pslash -+ m) image| / m
  Eigen::Index positive_rank;  //!< complex rank of the positive-frequency images
  Eigen::Index negative_rank;
};

/// (1 + pslash/m) on positive-frequency coefficients, (1 - pslash/m) on
/// negative-frequency ones.
template <typename T>
DiracProjection<T> dirac_from_majorana(const FourMomentum<T>& p,
                                       const PhaseConvention<T>& conv = {}) {
  if (!(p.mass > T(0))) throw std::domain_error("dirac_from_majorana: requires m > 0");
  const ModeExpansion<T> nu = majorana_mode(p, conv);
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Mat4<T> ps = slash(p) / p.mass;
  const Mat4<T> one = Mat4<T>::Identity();
  DiracProjection<T> out{{}, 0, 0, 0, 0};
  Matrix<T> pos(4, 2), neg(4, 2);
  for (const auto& [k, s] : nu.terms()) {
    const T sgn = k.freq == Frequency::Positive ? T(1) : T(-1);
    const Vec4<T> img = (one + sgn * ps) * s;
    out.images.add(k, img);
    const int h = index(k.eta);
    const Vec4<T> partner = k.freq == Frequency::Positive
                                ? Vec4<T>(b.lambda_s[h] + b.rho_a[h])
                                : Vec4<T>(b.lambda_a[h] - b.rho_s[h]);
    out.partner_residual = std::max(out.partner_residual, max_abs(Vec4<T>(img - partner)));
    out.eigenspace_residual =
        std::max(out.eigenspace_residual, max_abs(Vec4<T>((ps - sgn * one) * img)));
    (k.freq == Frequency::Positive ? pos : neg).col(h) = img;
  }
  out.positive_rank = rank(pos, T(1e-10));
  out.negative_rank = rank(neg, T(1e-10));
  return out;
}

//---------------------------------------------------------------------------//
// SU(2) phase transformations
//---------------------------------------------------------------------------//

/// c0 + i tau.c
template <typename T>
struct QuaternionPhase {
  T c0{1};
  Real3<T> c{Real3<T>::Zero()};

  static QuaternionPhase rotation(T angle, const Real3<T>& axis) {
    return {std::cos(angle), axis.normalized() * std::sin(angle)};
  }
  T norm2() const { return c0 * c0 + c.squaredNorm(); }
  bool is_unit(T tol = default_tolerance<T>) const { return std::abs(norm2() - T(1)) <= tol; }

  /// Product in the c0 + i tau.c form:
  /// (a0 + i tau.a)(b0 + i tau.b) = a0 b0 - a.b + i tau.(a0 b + b0 a - a x b).
  friend QuaternionPhase operator*(const QuaternionPhase& a, const QuaternionPhase& b) {
    return {a.c0 * b.c0 - a.c.dot(b.c), Real3<T>(a.c0 * b.c + b.c0 * a.c - a.c.cross(b.c))};
  }
};

/// The 2x2 matrix c0 + i tau.c.
template <typename T>
Mat2<T> su2_matrix(const QuaternionPhase<T>& q) {
  return q.c0 * Mat2<T>::Identity() + I<T> * sigma_dot<T>(q.c);
}

/// The same element on bispinors, with i tau_k realized by the stripped
/// Xi maps: c0 + c1 (i gamma^5) + c2 (i gamma^0) + c3 (gamma^5 gamma^0).
template <typename T>
Mat4<T> su2_operator(const QuaternionPhase<T>& q) {
  const auto e = xi_units<T>();
  return q.c0 * e[0] + q.c[0] * e[1] + q.c[1] * e[2] + q.c[2] * e[3];
}

template <typename T>
struct OrbitPoint {
  Vec4<T> image;  //!< diag(Xi, Xi) Q(q) lambda^S
  int sc_sign;
  T sc_residual;
  T unitarity_residual;  //!< |Q^dagger Q - 1|
};

template <typename T>
std::vector<OrbitPoint<T>> su2_phase_orbit(const std::vector<QuaternionPhase<T>>& qs,
                                           const FourMomentum<T>& p, Helicity h,
                                           const PhaseConvention<T>& conv = {},
                                           T tol = default_tolerance<T>) {
  const SpinorBasis<T> b = build_spinor_basis(p, conv);
  const Mat4<T> frame = xi_maps(p.effective_azimuth())[0];
  const AntilinearOp<T> sc = charge_conjugation_op(conv);
  std::vector<OrbitPoint<T>> out;
  for (const auto& q : qs) {
    if (!q.is_unit(tol)) throw std::invalid_argument("su2_phase_orbit: quaternion is not unit");
    const Mat4<T> qm = su2_operator(q);
    OrbitPoint<T> pt;
    pt.image = frame * qm * b.lambda_s[index(h)];
    const Vec4<T> img = act(sc, pt.image);
    const T plus = max_abs(Vec4<T>(img - pt.image));
    const T minus = max_abs(Vec4<T>(img + pt.image));
    pt.sc_sign = plus <= minus ? 1 : -1;
    pt.sc_residual = std::min(plus, minus);
    pt.unitarity_residual = max_abs(Mat4<T>(qm.adjoint() * qm - Mat4<T>::Identity()));
    out.push_back(pt);
  }
  return out;
}

}  // namespace majorana
