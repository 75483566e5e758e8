#pragma once

// Covariance matrices of one and two bosonic modes in the convention where the
// vacuum has variance 1/2 in every quadrature, the symplectic form, and the
// symplectic spectrum / invariants of two-mode states.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "gsteer/error.hpp"

namespace gsteer {

using Mat2 = Eigen::Matrix<double, 2, 2, Eigen::RowMajor>;
using Mat4 = Eigen::Matrix<double, 4, 4, Eigen::RowMajor>;
using Vec2 = Eigen::Vector2d;

inline constexpr double kVacuumVariance = 0.5;

/// Absolute tolerance on physicality bounds (eigenvalues, symplectic eigenvalues).
inline constexpr double kDefaultTol = 1e-9;

/// Slack used by strict criterion inequalities (x < threshold) so that states
/// sitting exactly on a boundary, up to rounding, are classified as "not".
inline constexpr double kBoundaryTol = 1e-12;

namespace detail {

template <typename M>
double asymmetry(const M& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

template <typename M>
double scale_of(const M& m) {
  return std::max(1.0, m.cwiseAbs().maxCoeff());
}

/// Ascending eigenvalues of a real symmetric 2x2 matrix.
inline std::pair<double, double> symmetric_eigenvalues(const Mat2& m) {
  const double mean = 0.5 * (m(0, 0) + m(1, 1));
  const double half_diff = 0.5 * (m(0, 0) - m(1, 1));
  const double radius = std::hypot(half_diff, m(0, 1));
  const double upper = mean + radius;
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  // det / upper avoids the cancellation in mean - radius when one eigenvalue is tiny.
  const double lower = (upper > 0.0 && det > 0.0) ? det / upper : mean - radius;
  return {lower, upper};
}

/// Symplectic eigenvalues from the two-mode invariants Delta and det(sigma).
inline std::pair<double, double> eigenvalues_from_delta(double delta, double det) {
  const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
  const double plus_sq = 0.5 * (delta + disc);
  const double minus_sq = plus_sq > 0.0 ? std::max(0.0, det) / plus_sq : 0.0;
  return {std::sqrt(minus_sq), std::sqrt(std::max(0.0, plus_sq))};
}

}  // namespace detail

/// Covariance matrix of a single mode.
class CovMat2 {
 public:
  CovMat2() : m_(Mat2::Identity() * kVacuumVariance) {}

  /// Throws InvalidInput if `m` is not symmetric within `tol` (relative to its scale).
  explicit CovMat2(const Mat2& m, double tol = kDefaultTol) {
    detail::require(m.allFinite(), "covariance matrix has non-finite entries");
    detail::require(detail::asymmetry(m) <= tol * detail::scale_of(m),
                    "covariance matrix is not symmetric");
    m_ = 0.5 * (m + m.transpose());
  }

  static CovMat2 vacuum() { return CovMat2(); }

  /// Thermal state of purity mu: (1/(2 mu)) * identity.
  static CovMat2 thermal(double mu) {
    detail::require(mu > 0.0 && mu <= 1.0, "thermal purity must lie in (0, 1]");
    return CovMat2(Mat2::Identity() / (2.0 * mu));
  }

  const Mat2& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }
  double trace() const { return m_(0, 0) + m_(1, 1); }

  /// (lambda_minus, lambda_plus), ascending.
  std::pair<double, double> eigenvalues() const { return detail::symmetric_eigenvalues(m_); }

  /// Positive semidefinite and det >= 1/4, the one-mode uncertainty relation.
  bool is_physical(double tol = kDefaultTol) const {
    return eigenvalues().first >= -tol && det() >= 0.25 - tol;
  }

 private:
  Mat2 m_;
};

/// Covariance matrix of two modes, quadrature order (q_A, p_A, q_B, p_B):
/// sigma = [[A, C], [C^T, B]].
class CovMat4 {
 public:
  CovMat4() : m_(Mat4::Identity() * kVacuumVariance) {}

  explicit CovMat4(const Mat4& m, double tol = kDefaultTol) {
    detail::require(m.allFinite(), "covariance matrix has non-finite entries");
    detail::require(detail::asymmetry(m) <= tol * detail::scale_of(m),
                    "covariance matrix is not symmetric");
    m_ = 0.5 * (m + m.transpose());
  }

  static CovMat4 vacuum() { return CovMat4(); }

  static CovMat4 from_blocks(const Mat2& a, const Mat2& b, const Mat2& c) {
    Mat4 m;
    m << a, c, c.transpose(), b;
    return CovMat4(m);
  }

  const Mat4& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Mat2 A() const { return m_.block<2, 2>(0, 0); }
  Mat2 B() const { return m_.block<2, 2>(2, 2); }
  Mat2 C() const { return m_.block<2, 2>(0, 2); }

  CovMat2 marginal_A() const { return CovMat2(A()); }
  CovMat2 marginal_B() const { return CovMat2(B()); }

  /// Exchange the roles of the two modes.
  CovMat4 swapped() const { return from_blocks(B(), A(), C().transpose()); }

  double det() const { return m_.determinant(); }

 private:
  Mat4 m_;
};

/// omega = [[0, 1], [-1, 0]].
inline Mat2 omega() {
  Mat2 w;
  w << 0.0, 1.0, -1.0, 0.0;
  return w;
}

/// Omega = omega (+) omega, so that [R_j, R_k] = i Omega_jk.
inline Mat4 symplectic_form() {
  Mat4 big = Mat4::Zero();
  big.block<2, 2>(0, 0) = omega();
  big.block<2, 2>(2, 2) = omega();
  return big;
}

/// Two-mode CM in canonical form: A = a I, B = b I, C = diag(c1, c2).
struct CanonicalForm {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c1 = 0.0;
  double c2 = 0.0;

  double c_max() const { return std::max(std::abs(c1), std::abs(c2)); }
  double c_min() const { return std::min(std::abs(c1), std::abs(c2)); }

  /// Same state with the modes exchanged.
  CanonicalForm swapped() const { return {b, a, c1, c2}; }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Local symplectic invariants. From a canonical form: I1 = a^2, I2 = b^2,
/// I3 = c1 c2, I4 = (ab - c1^2)(ab - c2^2).
struct SymplecticInvariants {
  double I1 = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
  double I4 = 0.0;

  /// I' = I1 I2 - I3^2 + I4.
  double i_prime() const { return I1 * I2 - I3 * I3 + I4; }

  /// Delta = I1 + I2 + 2 I3.
  double delta() const { return I1 + I2 + 2.0 * I3; }

  SymplecticInvariants swapped() const { return {I2, I1, I3, I4}; }
};

inline SymplecticInvariants invariants_of(const CanonicalForm& cf) {
  const double ab = cf.a * cf.b;
  return {cf.a * cf.a, cf.b * cf.b, cf.c1 * cf.c2, (ab - cf.c1 * cf.c1) * (ab - cf.c2 * cf.c2)};
}

/// Invariants of an arbitrary CM: det A, det B, det C, det sigma.
inline SymplecticInvariants invariants_of(const CovMat4& cm) {
  return {cm.A().determinant(), cm.B().determinant(), cm.C().determinant(), cm.det()};
}

/// Symplectic eigenvalues (nu_minus, nu_plus), the moduli of the eigenvalues of
/// i Omega sigma, obtained from the real matrix (Omega sigma)^2 whose spectrum is
/// -nu^2 with multiplicity two.
inline std::pair<double, double> symplectic_eigenvalues(const CovMat4& cm) {
  const Mat4 m = symplectic_form() * cm.matrix();
  const Eigen::Matrix4d sq = m * m;
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(sq, /*computeEigenvectors=*/false);
  std::array<double, 4> moduli{};
  for (int i = 0; i < 4; ++i) moduli[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(moduli.begin(), moduli.end());
  return {std::sqrt(0.5 * (moduli[0] + moduli[1])), std::sqrt(0.5 * (moduli[2] + moduli[3]))};
}

/// Closed-form route for a canonical form:
/// nu^2 = [Delta -+ sqrt(Delta^2 - 4 det sigma)] / 2, Delta = a^2 + b^2 + 2 c1 c2.
inline std::pair<double, double> symplectic_eigenvalues(const CanonicalForm& cf) {
  const SymplecticInvariants inv = invariants_of(cf);
  return detail::eigenvalues_from_delta(inv.delta(), inv.I4);
}

/// Lambda sigma Lambda with Lambda = diag(1, 1, 1, -1) (partial transposition).
inline CovMat4 mirror_reflect(const CovMat4& cm) {
  const Eigen::Vector4d lambda(1.0, 1.0, 1.0, -1.0);
  return CovMat4(lambda.asDiagonal() * cm.matrix() * lambda.asDiagonal());
}

/// Smallest symplectic eigenvalue of the partially transposed CM.
inline double ppt_symplectic_eigenvalue(const CovMat4& cm) {
  return symplectic_eigenvalues(mirror_reflect(cm)).first;
}

/// Canonical-form route, Delta~ = a^2 + b^2 - 2 c1 c2.
inline double ppt_symplectic_eigenvalue(const CanonicalForm& cf) {
  const SymplecticInvariants inv = invariants_of(cf);
  return detail::eigenvalues_from_delta(inv.I1 + inv.I2 - 2.0 * inv.I3, inv.I4).first;
}

/// sigma >= 0 and sigma + (i/2) Omega >= 0, each within `tol`.
inline bool is_physical(const CovMat4& cm, double tol = kDefaultTol) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(Eigen::Matrix4d(cm.matrix()),
                                                              Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) return false;
  return symplectic_eigenvalues(cm).first >= kVacuumVariance - tol;
}

/// Raw-matrix overload; throws InvalidInput if `m` is not symmetric within `tol`.
inline bool is_physical(const Mat4& m, double tol = kDefaultTol) {
  return is_physical(CovMat4(m, tol), tol);
}

}  // namespace gsteer
