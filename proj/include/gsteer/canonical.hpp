#pragma once

// Reduction of a two-mode CM to canonical form by local symplectic maps.
//
// Step 1 brings each diagonal block to a multiple of the identity (rotate to the
// eigenbasis, then squeeze symmetrically). Step 2 uses the rotations that fix
// a I and b I to diagonalize C with a rotations-only 2x2 SVD. No reflections are
// used, so the sign of c2 is the sign of det C.

#include <cmath>
#include <utility>

#include "gsteer/phase_space.hpp"
#include "gsteer/states.hpp"

namespace gsteer {

/// S_A (+) S_B, both with unit determinant.
struct LocalSymplectic {
  Mat2 SA = Mat2::Identity();
  Mat2 SB = Mat2::Identity();

  bool is_valid(double tol = kDefaultTol) const {
    return std::abs(SA.determinant() - 1.0) <= tol && std::abs(SB.determinant() - 1.0) <= tol;
  }
};

struct CanonicalReduction {
  CanonicalForm form;
  LocalSymplectic transform;
};

inline Mat2 rotation(double theta) {
  Mat2 r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

inline Mat2 squeezer(double s) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::exp(s);
  m(1, 1) = std::exp(-s);
  return m;
}

/// A' = S_A A S_A^T, B' = S_B B S_B^T, C' = S_A C S_B^T.
inline CovMat4 transform_blocks(const CovMat4& cm, const LocalSymplectic& ls) {
  detail::require(ls.is_valid(), "local transformations must have unit determinant");
  return CovMat4::from_blocks(ls.SA * cm.A() * ls.SA.transpose(),
                              ls.SB * cm.B() * ls.SB.transpose(),
                              ls.SA * cm.C() * ls.SB.transpose());
}

namespace detail {

/// Symplectic S with S X S^T = sqrt(det X) * identity for a positive 2x2 X.
inline Mat2 normalize_block(const Mat2& x) {
  Mat2 rot = Mat2::Identity();
  if (std::abs(x(0, 1)) > 1e-15 * scale_of(x)) {
    rot = rotation(0.5 * std::atan2(2.0 * x(0, 1), x(0, 0) - x(1, 1)));
  }
  const Mat2 diag = rot.transpose() * x * rot;
  const double l1 = diag(0, 0);
  const double l2 = diag(1, 1);
  const double target = std::sqrt(l1 * l2);
  Mat2 k = Mat2::Zero();
  k(0, 0) = std::sqrt(target / l1);
  k(1, 1) = std::sqrt(target / l2);
  return k * rot.transpose();
}

/// Rotations-only SVD: m = R(beta) diag(s1, s2) R(gamma) with s1 >= |s2|, s1 >= 0.
struct RotationSvd {
  double beta;
  double gamma;
  double s1;
  double s2;
};

inline RotationSvd rotation_svd(const Mat2& m) {
  const double e = 0.5 * (m(0, 0) + m(1, 1));
  const double f = 0.5 * (m(0, 0) - m(1, 1));
  const double g = 0.5 * (m(1, 0) + m(0, 1));
  const double h = 0.5 * (m(1, 0) - m(0, 1));
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  const double a1 = std::atan2(g, f);
  const double a2 = std::atan2(h, e);
  return {0.5 * (a2 + a1), 0.5 * (a2 - a1), q + r, q - r};
}

}  // namespace detail

/// Canonical form of a physical CM together with the local maps that produce it:
/// transform_blocks(cm, result.transform) == canonical_cm(result.form).
inline CanonicalReduction canonicalize(const CovMat4& cm, double tol = kDefaultTol) {
  detail::require(is_physical(cm, tol), "canonicalize requires a physical covariance matrix");

  const Mat2 sa1 = detail::normalize_block(cm.A());
  const Mat2 sb1 = detail::normalize_block(cm.B());
  const Mat2 c_mid = sa1 * cm.C() * sb1.transpose();

  const detail::RotationSvd svd = detail::rotation_svd(c_mid);
  const Mat2 sa = rotation(-svd.beta) * sa1;
  const Mat2 sb = rotation(svd.gamma) * sb1;

  CanonicalForm form{std::sqrt(cm.A().determinant()), std::sqrt(cm.B().determinant()), svd.s1,
                     svd.s2};
  return {form, LocalSymplectic{sa, sb}};
}

}  // namespace gsteer
