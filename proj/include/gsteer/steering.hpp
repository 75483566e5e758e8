#pragma once

// Correlation criteria for two-mode Gaussian states: nonclassical steerability
// of TMSTs, weak/strong nonclassical steering (canonical and invariant forms),
// EPR steering, entanglement, Reid conditional variances, remote Wigner
// negativity and Gaussian discord.
//
// Direction convention: B_steers_A means "measure B, look at the conditional
// state of A". A_steers_B is obtained by exchanging the modes.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string_view>
#include <tuple>
#include <utility>

#include "gsteer/canonical.hpp"
#include "gsteer/conditioning.hpp"
#include "gsteer/phase_space.hpp"
#include "gsteer/states.hpp"

namespace gsteer {

enum class Direction { B_steers_A, A_steers_B };

inline constexpr std::string_view to_string(Direction d) {
  return d == Direction::B_steers_A ? "BA" : "AB";
}

/// Outcome of a strict inequality `value < threshold`; `margin = threshold - value`.
struct Criterion {
  bool holds = false;
  double value = 0.0;
  double margin = 0.0;

  static Criterion below(double value, double threshold, double slack = kBoundaryTol) {
    const double margin = threshold - value;
    return {margin > slack, value, margin};
  }
};

enum class Directionality { two_way, one_way_BA, one_way_AB, none };

inline constexpr std::string_view to_string(Directionality d) {
  switch (d) {
    case Directionality::two_way: return "two_way";
    case Directionality::one_way_BA: return "one_way_BA";
    case Directionality::one_way_AB: return "one_way_AB";
    case Directionality::none: return "none";
  }
  return "none";
}

namespace detail {

inline CanonicalForm oriented(const CanonicalForm& cf, Direction d) {
  return d == Direction::B_steers_A ? cf : cf.swapped();
}

inline CovMat4 oriented(const CovMat4& cm, Direction d) {
  return d == Direction::B_steers_A ? cm : cm.swapped();
}

inline SymplecticInvariants oriented(const SymplecticInvariants& inv, Direction d) {
  return d == Direction::B_steers_A ? inv : inv.swapped();
}

/// Roots of y^2 - I' y + I1 I2 I4 = 0 divided by I2 sqrt(I1): the two Reid
/// variances written through the invariants. Returns (smaller, larger).
inline std::pair<double, double> invariant_variances(const SymplecticInvariants& inv) {
  const double ip = inv.i_prime();
  const double prod = inv.I1 * inv.I2 * inv.I4;
  const double disc = std::sqrt(std::max(0.0, ip * ip - 4.0 * prod));
  const double norm = 2.0 * inv.I2 * std::sqrt(inv.I1);
  const double upper = (ip + disc) / norm;
  const double lower = (ip + disc) > 0.0 ? 4.0 * prod / ((ip + disc) * norm) : (ip - disc) / norm;
  return {lower, upper};
}

/// Clamp a difference of terms of total size `scale` to zero when it is at
/// rounding level (pure states sit exactly on inner = 0 and sqrt amplifies noise).
inline double snap_noise(double value, double scale) {
  return value <= 64.0 * std::numeric_limits<double>::epsilon() * scale ? 0.0 : value;
}

/// Von Neumann entropy of a mode with symplectic eigenvalue x (vacuum = 1 units).
inline double entropy_function(double x) {
  const double p = 0.5 * (x + 1.0);
  const double m = 0.5 * (x - 1.0);
  double s = p * std::log(p);
  if (m > 0.0) s -= m * std::log(m);
  return s;
}

}  // namespace detail

/// sigma_{A|B} = (muA - muB)/2 + (muA + muB)/2 cosh 2r; the TMST is nonclassically
/// steerable from B to A iff this exceeds 1. A_steers_B exchanges the purities.
inline double sigma_steerability(const TmstSpec& spec, Direction d = Direction::B_steers_A) {
  validate(spec);
  const TmstSpec s = d == Direction::B_steers_A ? spec : spec.swapped();
  return 0.5 * (s.muA - s.muB) + 0.5 * (s.muA + s.muB) * std::cosh(2.0 * s.r);
}

/// N_s > N_A (1 + 2 N_B) / (1 + N_A + N_B), photon-number form of sigma_{A|B} > 1.
inline bool sigma_photon_form(double n_a, double n_b, double n_s) {
  detail::require(n_a >= 0.0 && n_b >= 0.0 && n_s >= 0.0, "photon numbers must be >= 0");
  return n_s > n_a * (1.0 + 2.0 * n_b) / (1.0 + n_a + n_b);
}

/// sqrt((muA+muB)^2 cosh^2 2r - 4 muA muB) > 2 - (muA+muB) cosh 2r.
inline bool tmst_entangled(const TmstSpec& spec) {
  validate(spec);
  const double sum_ch = (spec.muA + spec.muB) * std::cosh(2.0 * spec.r);
  const double lhs = std::sqrt(std::max(0.0, sum_ch * sum_ch - 4.0 * spec.muA * spec.muB));
  return lhs > 2.0 - sum_ch;
}

/// PPT test d~_- < 1/2; value is d~_-.
inline Criterion entangled(const CovMat4& cm) {
  return Criterion::below(ppt_symplectic_eigenvalue(cm), kVacuumVariance);
}

/// max(0, -ln(2 d~_-)), natural logarithm.
inline double negativity(const CovMat4& cm) {
  return std::max(0.0, -std::log(2.0 * ppt_symplectic_eigenvalue(cm)));
}

/// Reid conditional variances (a - c1^2/b, a - c2^2/b).
inline std::pair<double, double> reid_variances(const CanonicalForm& cf,
                                                Direction d = Direction::B_steers_A) {
  const CanonicalForm o = detail::oriented(cf, d);
  return {o.a - o.c1 * o.c1 / o.b, o.a - o.c2 * o.c2 / o.b};
}

/// Weak nonclassical steering: a - c^2/b < 1/2, c = max(|c1|, |c2|).
inline Criterion wns(const CanonicalForm& cf, Direction d = Direction::B_steers_A) {
  const CanonicalForm o = detail::oriented(cf, d);
  return Criterion::below(o.a - o.c_max() * o.c_max() / o.b, kVacuumVariance);
}

/// Strong nonclassical steering: a - c'^2/b < 1/2, c' = min(|c1|, |c2|).
inline Criterion sns(const CanonicalForm& cf, Direction d = Direction::B_steers_A) {
  const CanonicalForm o = detail::oriented(cf, d);
  return Criterion::below(o.a - o.c_min() * o.c_min() / o.b, kVacuumVariance);
}

/// (I' - sqrt(I'^2 - 4 I1 I2 I4)) / (2 I2 sqrt(I1)) < 1/2.
inline Criterion wns_invariant(const SymplecticInvariants& inv,
                               Direction d = Direction::B_steers_A) {
  return Criterion::below(detail::invariant_variances(detail::oriented(inv, d)).first,
                          kVacuumVariance);
}

/// (I' + sqrt(I'^2 - 4 I1 I2 I4)) / (2 I2 sqrt(I1)) < 1/2.
inline Criterion sns_invariant(const SymplecticInvariants& inv,
                               Direction d = Direction::B_steers_A) {
  return Criterion::below(detail::invariant_variances(detail::oriented(inv, d)).second,
                          kVacuumVariance);
}

/// Gaussian EPR steering: (a - c1^2/b)(a - c2^2/b) < 1/4.
inline Criterion epr_steerable(const CanonicalForm& cf, Direction d = Direction::B_steers_A) {
  const auto [vx, vp] = reid_variances(cf, d);
  return Criterion::below(vx * vp, 0.25);
}

/// Tr[A - C B^{-1} C^T] < 1 on the CM as given (this trace is not LGUT invariant).
inline Criterion wigner_remote(const CovMat4& cm, Direction d = Direction::B_steers_A) {
  const CovMat4 o = detail::oriented(cm, d);
  const Mat2 c = o.C();
  const Mat2 schur = o.A() - c * o.B().inverse() * c.transpose();
  return Criterion::below(schur.trace(), 1.0);
}

inline Directionality directionality(const TmstSpec& spec) {
  const bool ba = sigma_steerability(spec, Direction::B_steers_A) > 1.0 + kBoundaryTol;
  const bool ab = sigma_steerability(spec, Direction::A_steers_B) > 1.0 + kBoundaryTol;
  if (ba && ab) return Directionality::two_way;
  if (ba) return Directionality::one_way_BA;
  if (ab) return Directionality::one_way_AB;
  return Directionality::none;
}

/// Gaussian quantum discord with one-mode Gaussian measurements on the measured
/// mode (B for B_steers_A), natural-log units. Uses the closed form for the
/// optimal conditional determinant in terms of A = det A, B = det B, C = det C,
/// D = det sigma (vacuum-one units).
inline double gaussian_discord(const CovMat4& cm, Direction d = Direction::B_steers_A) {
  const CovMat4 o = detail::oriented(cm, d);
  const SymplecticInvariants inv = invariants_of(o);
  const double A = 4.0 * inv.I1;
  const double B = 4.0 * inv.I2;
  const double C = 4.0 * inv.I3;
  const double D = 16.0 * inv.I4;
  if (B - 1.0 <= 1e-14 || o.C().cwiseAbs().maxCoeff() == 0.0) return 0.0;

  const auto [nu_m, nu_p] = detail::eigenvalues_from_delta(A + B + 2.0 * C, D);
  double e_min;
  const double c2 = C * C;
  if ((D - A * B) * (D - A * B) <= (1.0 + B) * c2 * (A + D)) {
    const double inner =
        detail::snap_noise(c2 + (B - 1.0) * (D - A), c2 + std::abs((B - 1.0) * (D - A)));
    e_min = (2.0 * c2 + (B - 1.0) * (D - A) + 2.0 * std::abs(C) * std::sqrt(inner)) /
            ((B - 1.0) * (B - 1.0));
  } else {
    const double inner = detail::snap_noise(
        c2 * c2 + (D - A * B) * (D - A * B) - 2.0 * c2 * (A * B + D),
        c2 * c2 + (D - A * B) * (D - A * B) + 2.0 * c2 * (A * B + D));
    e_min = (A * B - c2 + D - std::sqrt(inner)) / (2.0 * B);
  }
  const double value = detail::entropy_function(std::sqrt(B)) -
                       detail::entropy_function(std::max(1.0, nu_m)) -
                       detail::entropy_function(std::max(1.0, nu_p)) +
                       detail::entropy_function(std::sqrt(std::max(1.0, e_min)));
  return std::max(0.0, value);
}

/// Every criterion for one state and one direction.
struct SteeringReport {
  Direction direction = Direction::B_steers_A;
  std::optional<double> sigma_steer;  ///< only for TMST-type canonical forms
  CanonicalForm canonical;
  SymplecticInvariants invariants;
  Criterion wns;
  Criterion sns;
  Criterion epr;
  Criterion wigner_remote;
  double ppt_eigenvalue = kVacuumVariance;
  double negativity = 0.0;
  double reid_x = 0.0;
  double reid_p = 0.0;
  double discord_BA = 0.0;
  double discord_AB = 0.0;
};

/// Requires a physical CM. `tmst` supplies the TMST parameters when they are known;
/// otherwise sigma_steer is recovered from the canonical form when c1 = -c2.
inline SteeringReport analyze(const CovMat4& cm, Direction d = Direction::B_steers_A,
                              double tol = kDefaultTol,
                              std::optional<TmstSpec> tmst = std::nullopt) {
  const CanonicalReduction red = canonicalize(cm, tol);
  SteeringReport rep;
  rep.direction = d;
  rep.canonical = red.form;
  rep.invariants = invariants_of(cm);
  rep.wns = wns(red.form, d);
  rep.sns = sns(red.form, d);
  rep.epr = epr_steerable(red.form, d);
  rep.wigner_remote = wigner_remote(cm, d);
  rep.ppt_eigenvalue = ppt_symplectic_eigenvalue(cm);
  rep.negativity = negativity(cm);
  std::tie(rep.reid_x, rep.reid_p) = reid_variances(red.form, d);
  rep.discord_BA = gaussian_discord(cm, Direction::B_steers_A);
  rep.discord_AB = gaussian_discord(cm, Direction::A_steers_B);

  if (!tmst) {
    const CanonicalForm& f = red.form;
    const double scale = std::max({1.0, f.a, f.b});
    if (std::abs(f.c1 + f.c2) <= 1e-9 * scale) tmst = tmst_params_of(f.a, f.b, f.c_max());
  }
  if (tmst) rep.sigma_steer = sigma_steerability(*tmst, d);
  return rep;
}

}  // namespace gsteer
