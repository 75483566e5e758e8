#pragma once

// The explicit counterexamples: separable yet weakly nonclassically steerable
// states, a family with vanishing discord and persistent WNS, and an
// EPR-steerable state that is not strongly nonclassically steerable.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gsteer/canonical.hpp"
#include "gsteer/format.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"

namespace gsteer {

struct AppendixCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

/// |x - quoted| within half a unit of the quoted value's last printed digit.
inline bool matches_quoted(double x, double quoted, int decimals) {
  return std::abs(x - quoted) <= 0.5 * std::pow(10.0, -decimals) + 1e-15;
}

inline bool separable(const CovMat4& cm) {
  return ppt_symplectic_eigenvalue(cm) >= kVacuumVariance - kBoundaryTol;
}

}  // namespace detail

/// (13.9, 13.9, 4.6, -13.7): physical, PPT eigenvalue 1.3638 and WNS value 0.39712.
inline AppendixCheck appendix_separable_wns() {
  const CanonicalForm cf{13.9, 13.9, 4.6, -13.7};
  const CovMat4 cm = canonical_cm(cf);
  const double ppt = ppt_symplectic_eigenvalue(cm);
  const Criterion w = wns(cf);
  const double expected = 13.9 - 13.7 * 13.7 / 13.9;
  AppendixCheck c;
  c.name = "separable WNS state (13.9, 13.9, 4.6, -13.7)";
  c.passed = is_physical(cm) && detail::separable(cm) && detail::matches_quoted(ppt, 1.3638, 4) &&
             w.holds && std::abs(w.value - expected) <= 1e-6 &&
             detail::matches_quoted(w.value, 0.39712, 5);
  c.detail = "ppt=" + format_double(ppt) + " wns_value=" + format_double(w.value);
  return c;
}

/// (1.8, 1.8, 0.4, 1.6): c1 c2 > 0 gives separability; WNS value 0.37778.
inline AppendixCheck appendix_sign_separable_wns() {
  const CanonicalForm cf{1.8, 1.8, 0.4, 1.6};
  const CovMat4 cm = canonical_cm(cf);
  const Criterion w = wns(cf);
  const double expected = 1.8 - 1.6 * 1.6 / 1.8;
  AppendixCheck c;
  c.name = "sign-separable WNS state (1.8, 1.8, 0.4, 1.6)";
  c.passed = is_physical(cm) && cf.c1 * cf.c2 > 0.0 && detail::separable(cm) && w.holds &&
             std::abs(w.value - expected) <= 1e-6 && detail::matches_quoted(w.value, 0.37778, 5);
  c.detail = "c1c2=" + format_double(cf.c1 * cf.c2) + " wns_value=" + format_double(w.value);
  return c;
}

/// Williamson-built state with purities (1/32, 1/4): physical, already in
/// canonical form to 1e-9, separable and WNS.
inline AppendixCheck appendix_williamson() {
  const CovMat4 cm = swns_cm(1.0 / 32.0, 0.25);
  const Mat2 a = cm.A();
  const Mat2 b = cm.B();
  const Mat2 cc = cm.C();
  const double off = std::max({std::abs(a(0, 1)), std::abs(a(0, 0) - a(1, 1)), std::abs(b(0, 1)),
                               std::abs(b(0, 0) - b(1, 1)), std::abs(cc(0, 1)),
                               std::abs(cc(1, 0))});
  const CanonicalForm cf{a(0, 0), b(0, 0), cc(0, 0), cc(1, 1)};
  const Criterion w = wns(cf);
  AppendixCheck c;
  c.name = "Williamson-built state (1/32, 1/4)";
  c.passed = is_physical(cm) && off <= 1e-9 && detail::separable(cm) && w.holds;
  c.detail = "a=" + format_double(cf.a) + " b=" + format_double(cf.b) + " c1=" +
             format_double(cf.c1) + " c2=" + format_double(cf.c2) + " canonical_residual=" +
             format_double(off) + " wns_value=" + format_double(w.value);
  return c;
}

/// n = 3..n_max: WNS with value n/(2n+1) and discord decreasing in n both ways.
inline AppendixCheck appendix_vanishing_discord(int n_max = 50) {
  AppendixCheck c;
  c.name = "vanishing-discord WNS sequence n = 3.." + std::to_string(n_max);
  bool ok = true;
  double prev_ba = INFINITY;
  double prev_ab = INFINITY;
  double d_ba = 0.0;
  double d_ab = 0.0;
  for (int n = 3; n <= n_max; ++n) {
    const CanonicalForm cf = gqd_sequence(n);
    const CovMat4 cm = canonical_cm(cf);
    const Criterion w = wns(cf);
    const double expected = static_cast<double>(n) / (2.0 * n + 1.0);
    d_ba = gaussian_discord(cm, Direction::B_steers_A);
    d_ab = gaussian_discord(cm, Direction::A_steers_B);
    ok = ok && is_physical(cm) && w.holds && std::abs(w.value - expected) <= 1e-9 &&
         d_ba < prev_ba && d_ab < prev_ab;
    prev_ba = d_ba;
    prev_ab = d_ab;
  }
  c.passed = ok;
  c.detail = "discord at n=" + std::to_string(n_max) + ": BA=" + format_double(d_ba) +
             " AB=" + format_double(d_ab);
  return c;
}

/// (0.9, 0.9, 0.55, -0.7): physical, EPR product 0.200494, SNS value 0.56389 > 1/2.
inline AppendixCheck appendix_epr_not_sns() {
  const CanonicalForm cf{0.9, 0.9, 0.55, -0.7};
  const CovMat4 cm = canonical_cm(cf);
  const Criterion e = epr_steerable(cf);
  const Criterion s = sns(cf);
  const Criterion w = wns(cf);
  const double vx = 0.9 - 0.55 * 0.55 / 0.9;
  const double vp = 0.9 - 0.7 * 0.7 / 0.9;
  AppendixCheck c;
  c.name = "EPR-steerable, not SNS state (0.9, 0.9, 0.55, -0.7)";
  c.passed = is_physical(cm) && e.holds && std::abs(e.value - vx * vp) <= 1e-6 &&
             detail::matches_quoted(e.value, 0.200494, 6) && !s.holds &&
             std::abs(s.value - vx) <= 1e-6 && detail::matches_quoted(s.value, 0.56389, 5) &&
             w.holds;
  c.detail = "epr=" + std::string(e.holds ? "true" : "false") + " epr_product=" +
             format_double(e.value) + " sns=" + std::string(s.holds ? "true" : "false") +
             " sns_value=" + format_double(s.value) + " wns=" + (w.holds ? "true" : "false");
  return c;
}

inline std::vector<AppendixCheck> run_appendix() {
  return {appendix_separable_wns(), appendix_sign_separable_wns(), appendix_williamson(),
          appendix_vanishing_discord(), appendix_epr_not_sns()};
}

}  // namespace gsteer
