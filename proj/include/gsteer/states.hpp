#pragma once

// Constructors for the two-mode state families: thermal seeds, two-mode squeezed
// thermal (TMST) states, twin beams, explicit canonical forms, the separable
// Williamson-built counterexample and the vanishing-discord sequence.

#include <cmath>
#include <numbers>
#include <optional>

#include "gsteer/phase_space.hpp"

namespace gsteer {

/// Two-mode squeezed thermal state: thermal seeds of purities muA, muB and a
/// two-mode squeezer of strength r (squeezing phase zero).
struct TmstSpec {
  double muA = 1.0;
  double muB = 1.0;
  double r = 0.0;

  /// Mean thermal photons of each seed, N = (1 - mu) / (2 mu).
  double n_a() const { return (1.0 - muA) / (2.0 * muA); }
  double n_b() const { return (1.0 - muB) / (2.0 * muB); }
  /// Mean squeezing photons per mode, sinh^2 r.
  double n_s() const { return std::sinh(r) * std::sinh(r); }

  TmstSpec swapped() const { return {muB, muA, r}; }

  static TmstSpec from_photon_numbers(double n_a, double n_b, double n_s) {
    detail::require(n_a >= 0.0 && n_b >= 0.0 && n_s >= 0.0, "photon numbers must be >= 0");
    return {1.0 / (1.0 + 2.0 * n_a), 1.0 / (1.0 + 2.0 * n_b), std::asinh(std::sqrt(n_s))};
  }
};

inline void validate(const TmstSpec& spec) {
  detail::require(spec.muA > 0.0 && spec.muA <= 1.0, "muA must lie in (0, 1]");
  detail::require(spec.muB > 0.0 && spec.muB <= 1.0, "muB must lie in (0, 1]");
  detail::require(spec.r >= 0.0 && std::isfinite(spec.r), "r must be finite and >= 0");
}

/// (a, b, c) of a TMST, with A = a I, B = b I, C = diag(c, -c).
inline CanonicalForm tmst_canonical(const TmstSpec& spec) {
  validate(spec);
  const double sum = spec.muA + spec.muB;
  const double denom = 4.0 * spec.muA * spec.muB;
  const double ch = std::cosh(2.0 * spec.r);
  const double c = sum * std::sinh(2.0 * spec.r) / denom;
  return {(-spec.muA + spec.muB + sum * ch) / denom, (spec.muA - spec.muB + sum * ch) / denom, c,
          -c};
}

inline CovMat4 canonical_cm(const CanonicalForm& cf) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = cf.a;
  m(2, 2) = m(3, 3) = cf.b;
  m(0, 2) = m(2, 0) = cf.c1;
  m(1, 3) = m(3, 1) = cf.c2;
  return CovMat4(m);
}

/// canonical_cm never rejects; this is the flag it leaves to the caller.
inline bool is_physical(const CanonicalForm& cf, double tol = kDefaultTol) {
  return is_physical(canonical_cm(cf), tol);
}

inline CovMat4 tmst_cm(const TmstSpec& spec) { return canonical_cm(tmst_canonical(spec)); }

/// Twin beam: a = b = N_s + 1/2, c1 = -c2 = sqrt(N_s (1 + N_s)).
inline CovMat4 twb_cm(double r) {
  detail::require(r >= 0.0 && std::isfinite(r), "r must be finite and >= 0");
  const double ns = std::sinh(r) * std::sinh(r);
  const double c = std::sqrt(ns * (1.0 + ns));
  return canonical_cm({ns + 0.5, ns + 0.5, c, -c});
}

/// Inverse of tmst_canonical for a canonical form with c1 = -c2 = c >= 0.
/// Returns nullopt if the parameters are not those of a TMST.
inline std::optional<TmstSpec> tmst_params_of(double a, double b, double c) {
  const double d = a * b - c * c;
  const double s = (a + b) * (a + b) - 4.0 * c * c;
  if (!(d > 0.0) || !(s > 0.0) || c < 0.0) return std::nullopt;
  const double root = std::sqrt(s);
  TmstSpec spec{(root - (a - b)) / (4.0 * d), (root + (a - b)) / (4.0 * d),
                0.5 * std::atanh(2.0 * c / (a + b))};
  constexpr double slack = 1e-12;
  if (spec.muA <= 0.0 || spec.muB <= 0.0 || spec.muA > 1.0 + slack || spec.muB > 1.0 + slack)
    return std::nullopt;
  spec.muA = std::min(spec.muA, 1.0);
  spec.muB = std::min(spec.muB, 1.0);
  return spec;
}

/// Separable but weakly nonclassically steerable state built from a Williamson
/// decomposition: two-mode squeezer (R = ln 2) * balanced mixer (phi = pi/4) *
/// equal local squeezers * (thermal(muA) (+) thermal(muB)) * transposes.
///
/// The local squeezers rescale the CM by diag(e^{2r}, e^{-2r}), i.e. the
/// symplectic matrix is diag(e^r, e^{-r}), with r = ln((muA + 16 muB)/(16 muA + muB)) / 4.
/// This choice puts the result exactly in canonical form.
inline CovMat4 swns_cm(double muA, double muB) {
  detail::require(muA > 0.0 && muA <= 1.0, "muA must lie in (0, 1]");
  detail::require(muB > 0.0 && muB <= 1.0, "muB must lie in (0, 1]");
  const double big_r = std::log(2.0);
  const double phi = std::numbers::pi / 4.0;
  const double r = 0.25 * std::log((muA + 16.0 * muB) / (16.0 * muA + muB));

  const Mat2 id = Mat2::Identity();
  Mat2 sz;
  sz << 1.0, 0.0, 0.0, -1.0;

  Mat4 two_mode;
  two_mode << std::cosh(big_r) * id, std::sinh(big_r) * sz, std::sinh(big_r) * sz,
      std::cosh(big_r) * id;
  Mat4 mixer;
  mixer << std::cos(phi) * id, std::sin(phi) * id, -std::sin(phi) * id, std::cos(phi) * id;
  const Eigen::Vector4d squeeze(std::exp(r), std::exp(-r), std::exp(r), std::exp(-r));
  const Eigen::Vector4d thermal(1.0 / (2.0 * muA), 1.0 / (2.0 * muA), 1.0 / (2.0 * muB),
                                1.0 / (2.0 * muB));

  const Mat4 s = two_mode * mixer * Mat4(squeeze.asDiagonal());
  return CovMat4(s * Mat4(thermal.asDiagonal()) * s.transpose(), 1e-8);
}

/// Canonical forms with vanishing discord but persistent weak nonclassical
/// steering: a = (n+2)/(2n+1), b = n, c1 = 1/sqrt(2n), c2 = -sqrt(2n/(2n+1)), n > 2.
inline CanonicalForm gqd_sequence(int n) {
  detail::require(n > 2, "the discord sequence is defined for n > 2");
  const double nn = n;
  return {(nn + 2.0) / (2.0 * nn + 1.0), nn, 1.0 / std::sqrt(2.0 * nn),
          -std::sqrt(2.0 * nn / (2.0 * nn + 1.0))};
}

}  // namespace gsteer
