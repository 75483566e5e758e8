#pragma once

// Single-mode Gaussian measurements and the conditional state they leave on the
// other mode. The conditional CM never depends on the measurement outcome, so
// no outcome appears anywhere in this interface.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsteer/phase_space.hpp"
#include "gsteer/states.hpp"

namespace gsteer {

enum class MeasurementLimit {
  none,          ///< finite (mu, mu_s, phi)
  heterodyne,    ///< mu = mu_s = 1, coherent-state projectors
  homodyne,      ///< mu_s -> 0 at fixed mu: projective quadrature measurement
  blue_side,     ///< mu = t x, mu_s = x, x -> 0+
  green_vertex,  ///< all effects -> identity: measuring without recording
};

/// Seed CM of a single-mode Gaussian POVM:
/// sigma_M = 1/(2 mu mu_s) [[1 + k cos phi, -k sin phi], [-k sin phi, 1 - k cos phi]],
/// k = sqrt(1 - mu_s^2). When `limit` is not `none`, mu and mu_s are ignored.
struct MeasurementSpec {
  double mu = 1.0;
  double mu_s = 1.0;
  double phi = 0.0;
  MeasurementLimit limit = MeasurementLimit::none;
  double t = 0.0;  ///< blue-side parameter

  static MeasurementSpec general(double mu, double mu_s, double phi) {
    return {mu, mu_s, phi, MeasurementLimit::none, 0.0};
  }
  static MeasurementSpec heterodyne() { return {1.0, 1.0, 0.0, MeasurementLimit::heterodyne, 0.0}; }
  static MeasurementSpec homodyne(double phi) {
    return {1.0, 0.0, phi, MeasurementLimit::homodyne, 0.0};
  }
  static MeasurementSpec blue_side(double t, double phi = 0.0) {
    return {0.0, 0.0, phi, MeasurementLimit::blue_side, t};
  }
  static MeasurementSpec green_vertex() {
    return {0.0, 1.0, 0.0, MeasurementLimit::green_vertex, 0.0};
  }
};

inline void validate(const MeasurementSpec& m) {
  detail::require(std::isfinite(m.phi), "measurement phase must be finite");
  switch (m.limit) {
    case MeasurementLimit::none:
      detail::require(m.mu > 0.0 && m.mu <= 1.0, "measurement purity mu must lie in (0, 1]");
      detail::require(m.mu_s > 0.0 && m.mu_s <= 1.0, "squeezing purity mu_s must lie in (0, 1]");
      break;
    case MeasurementLimit::blue_side:
      detail::require(m.t >= 0.0 && std::isfinite(m.t), "blue-side parameter t must be >= 0");
      break;
    default:
      break;
  }
}

/// Parameters of a single-mode CM written in the (mu, mu_s, phi) form.
struct ConditionalParams {
  double mu_c = 1.0;
  double mu_sc = 1.0;
  double phi_c = 0.0;
  double lambda_minus = kVacuumVariance;
  double lambda_plus = kVacuumVariance;
  double depth = 0.0;
};

namespace detail {

inline double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

/// sqrt(1 - x^2) without the cancellation near x = 1.
inline double kappa_of(double purity) {
  return std::sqrt(std::max(0.0, (1.0 - purity) * (1.0 + purity)));
}

/// Unit vector along which the seed variance vanishes in the homodyne limit.
inline Vec2 null_direction(double phi) { return {std::sin(0.5 * phi), std::cos(0.5 * phi)}; }

/// Fill lambda_-/+ and depth from (mu_c, mu_sc).
inline ConditionalParams finish(double mu_c, double mu_sc, double phi_c) {
  mu_sc = std::clamp(mu_sc, 0.0, 1.0);
  const double k = kappa_of(mu_sc);
  ConditionalParams p;
  p.mu_c = mu_c;
  p.mu_sc = mu_sc;
  p.phi_c = phi_c;
  p.lambda_minus = mu_sc / (2.0 * mu_c * (1.0 + k));
  p.lambda_plus = (1.0 + k) / (2.0 * mu_c * mu_sc);
  p.depth = std::max(0.0, kVacuumVariance - p.lambda_minus);
  return p;
}

}  // namespace detail

/// Finite seed CM of the POVM. Heterodyne gives (1/2) I; the other limits
/// throw LimitNotMaterializable.
inline CovMat2 povm_cm(const MeasurementSpec& m) {
  validate(m);
  switch (m.limit) {
    case MeasurementLimit::none: {
      const double k = detail::kappa_of(m.mu_s);
      const double scale = 1.0 / (2.0 * m.mu * m.mu_s);
      Mat2 s;
      s << 1.0 + k * std::cos(m.phi), -k * std::sin(m.phi), -k * std::sin(m.phi),
          1.0 - k * std::cos(m.phi);
      return CovMat2(scale * s);
    }
    case MeasurementLimit::heterodyne:
      return CovMat2::vacuum();
    default:
      throw LimitNotMaterializable("measurement limit has no finite covariance matrix");
  }
}

/// Conditional CM of mode A after measuring mode B: the Schur complement
/// A - C (B + sigma_M)^{-1} C^T. The homodyne and blue-side limits use the
/// analytic rank-one limit of (B + sigma_M)^{-1}.
inline CovMat2 condition(const CovMat4& cm, const MeasurementSpec& m) {
  validate(m);
  const Mat2 a = cm.A();
  const Mat2 b = cm.B();
  const Mat2 c = cm.C();
  switch (m.limit) {
    case MeasurementLimit::none:
    case MeasurementLimit::heterodyne: {
      const Mat2 inv = (b + povm_cm(m).matrix()).inverse();
      return CovMat2(a - c * inv * c.transpose());
    }
    case MeasurementLimit::homodyne:
    case MeasurementLimit::blue_side: {
      if (m.limit == MeasurementLimit::blue_side && m.t == 0.0) return CovMat2(a);
      const Vec2 d = detail::null_direction(m.phi);
      double denom = d.dot(b * d);
      if (m.limit == MeasurementLimit::blue_side) denom += 1.0 / (4.0 * m.t);
      const Vec2 cd = c * d;
      return CovMat2(a - cd * cd.transpose() / denom);
    }
    case MeasurementLimit::green_vertex:
      return CovMat2(a);
  }
  return CovMat2(a);
}

/// Read (mu_c, mu_sc, phi_c) off a single-mode CM via det = (2 mu_c)^-2 and
/// Tr = (mu_c mu_sc)^-1.
inline ConditionalParams conditional_params(const CovMat2& cm) {
  const double det = cm.det();
  const double tr = cm.trace();
  const double root = std::sqrt(det);
  ConditionalParams p;
  p.mu_c = 1.0 / (2.0 * root);
  p.mu_sc = std::min(1.0, 2.0 * root / tr);
  const double x = cm(0, 0) - cm(1, 1);
  const double y = -2.0 * cm(0, 1);
  p.phi_c = (x == 0.0 && y == 0.0) ? 0.0 : detail::wrap_phase(std::atan2(y, x));
  const auto [lo, hi] = cm.eigenvalues();
  p.lambda_minus = lo;
  p.lambda_plus = hi;
  p.depth = std::max(0.0, kVacuumVariance - lo);
  return p;
}

namespace detail {

/// (mu_c, mu_sc) of a TMST conditioned on a finite measurement, written in terms of
/// alpha -/+ beta with alpha = b + 1/(2 mu mu_s), beta = k_s / (2 mu mu_s).
inline std::pair<double, double> tmst_closed_form(const CanonicalForm& cf, double mu,
                                                  double mu_s) {
  const double a = cf.a;
  const double b = cf.b;
  const double c2 = cf.c1 * cf.c1;
  const double k = kappa_of(mu_s);
  const double inv = 1.0 / (2.0 * mu * mu_s);
  const double alpha = b + inv;
  const double minus = b + mu_s / (2.0 * mu * (1.0 + k));  // alpha - beta, 1 - k = mu_s^2/(1 + k)
  const double plus = b + (1.0 + k) * inv;                 // alpha + beta
  const double p = minus * plus;                            // alpha^2 - beta^2
  const double q = (a * plus - c2) * (a * minus - c2);      // (c^2 - a alpha)^2 - a^2 beta^2
  const double mu_c = 0.5 * std::sqrt(p / q);
  const double mu_sc = std::sqrt(p * q) / (a * p - alpha * c2);
  return {mu_c, mu_sc};
}

}  // namespace detail

/// Closed-form conditional parameters for a TMST. The conditional squeezing
/// phase is the mirror image of the measurement phase, phi_c = -phi (mod 2 pi),
/// because C = c diag(1, -1) reflects the p quadrature.
inline ConditionalParams conditional_params_tmst(const TmstSpec& spec, const MeasurementSpec& m) {
  validate(m);
  const CanonicalForm cf = tmst_canonical(spec);
  const double mirrored = detail::wrap_phase(-m.phi);
  switch (m.limit) {
    case MeasurementLimit::none: {
      const auto [mu_c, mu_sc] = detail::tmst_closed_form(cf, m.mu, m.mu_s);
      return detail::finish(mu_c, mu_sc, m.mu_s < 1.0 ? mirrored : 0.0);
    }
    case MeasurementLimit::heterodyne: {
      const auto [mu_c, mu_sc] = detail::tmst_closed_form(cf, 1.0, 1.0);
      return detail::finish(mu_c, mu_sc, 0.0);
    }
    case MeasurementLimit::homodyne: {
      const double lo = cf.a - cf.c1 * cf.c1 / cf.b;
      const double hi = cf.a;
      const double root = std::sqrt(lo * hi);
      return detail::finish(1.0 / (2.0 * root), 2.0 * root / (lo + hi), mirrored);
    }
    case MeasurementLimit::blue_side: {
      if (m.t == 0.0) return detail::finish(1.0 / (2.0 * cf.a), 1.0, 0.0);
      // Evaluate on the path mu = t x, mu_s = x and extrapolate x -> 0 (Richardson, one step).
      const double x = 1e-6 / std::max(1.0, m.t);
      const auto [c_x, s_x] = detail::tmst_closed_form(cf, m.t * x, x);
      const auto [c_h, s_h] = detail::tmst_closed_form(cf, 0.5 * m.t * x, 0.5 * x);
      return detail::finish(2.0 * c_h - c_x, 2.0 * s_h - s_x, mirrored);
    }
    case MeasurementLimit::green_vertex:
      return detail::finish(1.0 / (2.0 * cf.a), 1.0, 0.0);
  }
  return {};
}

/// max(0, 1/2 - least eigenvalue); positive iff the state is P-nonclassical.
inline double nonclassical_depth(const CovMat2& cm) {
  return std::max(0.0, kVacuumVariance - cm.eigenvalues().first);
}

/// mu_sc below 2 mu_c / (1 + mu_c^2) means nonclassical, at any phase.
inline double nonclassicality_boundary(double mu_c) {
  detail::require(mu_c > 0.0 && mu_c <= 1.0, "mu_c must lie in (0, 1]");
  return 2.0 * mu_c / (1.0 + mu_c * mu_c);
}

}  // namespace gsteer
