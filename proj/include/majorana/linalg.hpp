// Small dense complex linear algebra shared by every module.
//
// All types are templated on the real scalar `T`; entries are std::complex<T>.
// Antilinear operators (psi -> M psi*) are first-class values so that their
// squares can be computed mechanically.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace majorana {

template <typename T>
using Complex = std::complex<T>;

template <typename T, int Rows, int Cols>
using CMatrix = Eigen::Matrix<std::complex<T>, Rows, Cols>;

template <typename T>
using Matrix = CMatrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = CMatrix<T, Eigen::Dynamic, 1>;

template <typename T> using Mat2 = CMatrix<T, 2, 2>;
template <typename T> using Mat3 = CMatrix<T, 3, 3>;
template <typename T> using Mat4 = CMatrix<T, 4, 4>;
template <typename T> using Mat6 = CMatrix<T, 6, 6>;
template <typename T> using Vec2 = CMatrix<T, 2, 1>;
template <typename T> using Vec3 = CMatrix<T, 3, 1>;
template <typename T> using Vec4 = CMatrix<T, 4, 1>;
template <typename T> using Vec6 = CMatrix<T, 6, 1>;

template <typename T> using Real3 = Eigen::Matrix<T, 3, 1>;
template <typename T> using Real4 = Eigen::Matrix<T, 4, 1>;
template <typename T> using RealMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Default absolute comparison tolerance. Every identity checked by the
/// library is exact, so residuals are pure roundoff.
template <typename T>
inline constexpr T default_tolerance = T(1e-12);

template <typename T>
inline constexpr Complex<T> I{T(0), T(1)};

template <typename T>
inline constexpr T pi = T(3.141592653589793238462643383279502884L);

//---------------------------------------------------------------------------//
/// A complex matrix together with a flag saying whether the argument is
/// complex conjugated before multiplication.
template <typename T>
class AntilinearOp {
 public:
  AntilinearOp(Matrix<T> matrix, bool conjugates_argument)
      : matrix_(std::move(matrix)), conjugates_(conjugates_argument) {
    if (matrix_.rows() != matrix_.cols()) {
      throw std::invalid_argument("AntilinearOp: matrix must be square");
    }
  }

  static AntilinearOp linear(Matrix<T> m) { return {std::move(m), false}; }
  static AntilinearOp identity(Eigen::Index n) {
    return {Matrix<T>::Identity(n, n), false};
  }
  static AntilinearOp conjugation(Eigen::Index n) {
    return {Matrix<T>::Identity(n, n), true};
  }

  const Matrix<T>& matrix() const { return matrix_; }
  bool conjugates_argument() const { return conjugates_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  Matrix<T> matrix_;
  bool conjugates_;
};

/// Returns M v, or M v* when the operator conjugates its argument.
template <typename T, typename Derived>
typename Derived::PlainObject act(const AntilinearOp<T>& op,
                                    const Eigen::MatrixBase<Derived>& v) {
  if (v.rows() != op.dim() || v.cols() != 1) {
    throw std::invalid_argument("act: dimension mismatch (" +
                                std::to_string(op.dim()) + " vs " +
                                std::to_string(v.rows()) + ")");
  }
  if (op.conjugates_argument()) {
    return op.matrix() * v.conjugate();
  }
  return op.matrix() * v;
}

/// (a o b) psi = a(b(psi)): matrix A B* if a conjugates, A B otherwise.
template <typename T>
AntilinearOp<T> compose(const AntilinearOp<T>& a, const AntilinearOp<T>& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  Matrix<T> m = a.conjugates_argument()
                    ? Matrix<T>(a.matrix() * b.matrix().conjugate())
                    : Matrix<T>(a.matrix() * b.matrix());
  return {std::move(m), a.conjugates_argument() != b.conjugates_argument()};
}

template <typename T>
AntilinearOp<T> square(const AntilinearOp<T>& a) {
  return compose(a, a);
}

//---------------------------------------------------------------------------//
template <typename T>
struct Comparison {
  bool equal;
  T residual;  //!< max entrywise |a - b|

  explicit operator bool() const { return equal; }
};

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return a.size() == 0 ? Real(0) : Real(a.cwiseAbs().maxCoeff());
}

/// Entrywise comparison; the residual is always reported.
template <typename DerivedA, typename DerivedB>
auto approx_eq(const Eigen::MatrixBase<DerivedA>& a,
               const Eigen::MatrixBase<DerivedB>& b,
               typename Eigen::NumTraits<typename DerivedA::Scalar>::Real tol) {
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("approx_eq: shape mismatch");
  }
  if (tol < Real(0)) {
    throw std::invalid_argument("approx_eq: negative tolerance");
  }
  const Real r = max_abs(a - b);
  return Comparison<Real>{r <= tol, r};
}

template <typename T>
Comparison<T> approx_eq(const AntilinearOp<T>& a, const AntilinearOp<T>& b,
                        T tol) {
  if (a.conjugates_argument() != b.conjugates_argument()) {
    return {false, std::numeric_limits<T>::infinity()};
  }
  return approx_eq(a.matrix(), b.matrix(), tol);
}

template <typename DerivedA, typename DerivedB>
Matrix<typename Eigen::NumTraits<typename DerivedA::Scalar>::Real> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.eval(), b.eval()).eval();
}

/// Block matrix [[a, b], [c, d]] from equally sized square blocks.
template <typename Derived>
Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real> blocks(
    const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b,
    const Eigen::MatrixBase<Derived>& c, const Eigen::MatrixBase<Derived>& d) {
  const Eigen::Index n = a.rows();
  Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real> m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

//---------------------------------------------------------------------------//
// Realification: C^n as R^{2n} with psi = x + i y stacked as (x, y).
//---------------------------------------------------------------------------//

/// Real 2n x 2n matrix of an (anti)linear operator. With M = A + iB:
/// linear  -> [[A, -B], [B,  A]]
/// antilin -> [[A,  B], [B, -A]]
template <typename T>
RealMatrix<T> realify(const AntilinearOp<T>& op) {
  const Eigen::Index n = op.dim();
  const RealMatrix<T> a = op.matrix().real();
  const RealMatrix<T> b = op.matrix().imag();
  RealMatrix<T> r(2 * n, 2 * n);
  if (op.conjugates_argument()) {
    r << a, b, b, -a;
  } else {
    r << a, -b, b, a;
  }
  return r;
}

template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, 1> realify(const Vector<T>& v) {
  Eigen::Matrix<T, Eigen::Dynamic, 1> r(2 * v.size());
  r << v.real(), v.imag();
  return r;
}

template <typename T>
Vector<T> complexify(const Eigen::Matrix<T, Eigen::Dynamic, 1>& r) {
  const Eigen::Index n = r.size() / 2;
  Vector<T> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = {r[i], r[i + n]};
  return v;
}

/// Real basis (as complex vectors) of { psi : op(psi) = sign * psi } for an
/// antilinear involution. Throws if op is not an involution.
template <typename T>
std::vector<Vector<T>> fixed_subspace(const AntilinearOp<T>& op, int sign,
                                      T tol = default_tolerance<T>) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("fixed_subspace: sign must be +1 or -1");
  }
  const RealMatrix<T> r = realify(op);
  const Eigen::Index n2 = r.rows();
  const RealMatrix<T> id = RealMatrix<T>::Identity(n2, n2);
  if (max_abs(RealMatrix<T>(r * r - id)) > tol) {
    throw std::invalid_argument("fixed_subspace: operator is not an involution");
  }
  // Projector onto the +-1 eigenspace; its range is spanned by the left
  // singular vectors with unit singular value.
  const RealMatrix<T> proj = (id + T(sign) * r) / T(2);
  Eigen::JacobiSVD<RealMatrix<T>> svd(proj, Eigen::ComputeFullU);
  std::vector<Vector<T>> basis;
  for (Eigen::Index k = 0; k < n2; ++k) {
    if (svd.singularValues()[k] > T(0.5)) {
      basis.push_back(
          complexify<T>(Eigen::Matrix<T, Eigen::Dynamic, 1>(svd.matrixU().col(k))));
    }
  }
  return basis;
}

/// Dimension of the real fixed space of x -> R x with R = realify(op);
/// zero when R has no real eigenvalue `sign` (e.g. when R^2 = -1).
template <typename T>
Eigen::Index fixed_space_dimension(const AntilinearOp<T>& op, int sign,
                                   T tol = default_tolerance<T>) {
  const RealMatrix<T> r = realify(op);
  const RealMatrix<T> shifted =
      r - T(sign) * RealMatrix<T>::Identity(r.rows(), r.cols());
  Eigen::JacobiSVD<RealMatrix<T>> svd(shifted);
  Eigen::Index dim = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] <= tol) ++dim;
  }
  return dim;
}

//---------------------------------------------------------------------------//
template <typename T>
struct EigenFit {
  Complex<T> value;  //!< best scalar c
  T residual;        //!< min_c || A v - c v ||
};

/// Least-squares eigenvalue of `a` on `v`.
template <typename DerivedA, typename DerivedV>
auto eigen_fit(const Eigen::MatrixBase<DerivedA>& a,
               const Eigen::MatrixBase<DerivedV>& v) {
  using Real = typename Eigen::NumTraits<typename DerivedV::Scalar>::Real;
  const auto av = (a * v).eval();
  const Real norm2 = v.squaredNorm();
  const Complex<Real> c =
      norm2 > Real(0) ? Complex<Real>(v.dot(av) / norm2) : Complex<Real>(0);
  return EigenFit<Real>{c, Real((av - c * v).norm())};
}

/// min_c || x - c y ||, i.e. how far x is from being proportional to y.
template <typename DerivedX, typename DerivedY>
auto proportionality(const Eigen::MatrixBase<DerivedX>& x,
                     const Eigen::MatrixBase<DerivedY>& y) {
  using Real = typename Eigen::NumTraits<typename DerivedX::Scalar>::Real;
  const Real norm2 = y.squaredNorm();
  const Complex<Real> c =
      norm2 > Real(0) ? Complex<Real>(y.dot(x) / norm2) : Complex<Real>(0);
  return EigenFit<Real>{c, Real((x - c * y).norm())};
}

/// Numerical rank from singular values relative to the largest one.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real rel_tol) {
  using Plain = typename Derived::PlainObject;
  Eigen::JacobiSVD<Plain> svd(a.eval());
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s[k] > rel_tol * s[0]) ++r;
  }
  return r;
}

}  // namespace majorana
