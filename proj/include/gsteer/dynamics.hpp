#pragma once

// Damping of mode A in a thermal bath (mode B untouched):
// sigma_t = G^{1/2} sigma_0 G^{1/2} + (I - G) sigma_inf, G = e^{-Gamma t} I (+) I.

#include <cmath>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "gsteer/format.hpp"
#include "gsteer/phase_space.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"

namespace gsteer {

struct ChannelSpec {
  double Gamma = 0.0;  ///< damping rate of mode A
  double N_th = 0.0;   ///< mean photon number of the bath
};

inline void validate(const ChannelSpec& ch) {
  detail::require(ch.Gamma >= 0.0 && std::isfinite(ch.Gamma), "Gamma must be finite and >= 0");
  detail::require(ch.N_th >= 0.0 && std::isfinite(ch.N_th), "N_th must be finite and >= 0");
}

inline CovMat4 evolve(const CovMat4& cm0, const ChannelSpec& ch, double t) {
  validate(ch);
  detail::require(t >= 0.0 && std::isfinite(t), "evolution time must be finite and >= 0");
  const double g = std::exp(-ch.Gamma * t);
  const double sg = std::sqrt(g);
  const double inf = ch.N_th + 0.5;
  Mat4 m = cm0.matrix();
  m.block<2, 2>(0, 0) = g * m.block<2, 2>(0, 0) + (1.0 - g) * inf * Mat2::Identity();
  m.block<2, 2>(0, 2) *= sg;
  m.block<2, 2>(2, 0) *= sg;
  return CovMat4(m);
}

/// TMST parameters of a twin beam with N_s squeezing photons after time t.
/// Written in g = e^{-Gamma t} so that large times do not overflow.
inline TmstSpec noised_tmst_params(double n_s, const ChannelSpec& ch, double t) {
  validate(ch);
  detail::require(n_s >= 0.0 && std::isfinite(n_s), "N_s must be finite and >= 0");
  detail::require(t >= 0.0 && std::isfinite(t), "evolution time must be finite and >= 0");
  const double g = std::exp(-ch.Gamma * t);
  const double nth = ch.N_th;
  const double root = std::sqrt(std::max(
      0.0, std::pow((n_s - nth) * g + (1.0 + n_s + nth), 2) - 4.0 * g * n_s * (1.0 + n_s)));
  TmstSpec out;
  out.muA = std::min(1.0, 1.0 / ((n_s - nth) * (g - 1.0) + root));
  out.muB = std::min(1.0, 1.0 / ((nth - n_s) * (g - 1.0) + root));
  // cosh 2r' = X / Q with X = a' + b' and Q = sqrt((a' + b')^2 - 4 c'^2) in vacuum-one units
  const double x = 1.0 + n_s + nth + (n_s - nth) * g;
  const double q = root;
  out.r = q > 0.0 ? 0.5 * std::acosh(std::max(1.0, x / q)) : 0.0;
  return out;
}

/// Time after which the damped twin beam is no longer nonclassically steerable.
/// nullopt when that never happens (Gamma = 0 or N_th = 0).
inline std::optional<double> t_ns(double n_s, const ChannelSpec& ch) {
  validate(ch);
  detail::require(n_s >= 0.0, "N_s must be >= 0");
  if (ch.Gamma == 0.0 || ch.N_th == 0.0) return std::nullopt;
  return std::log1p(n_s / (ch.N_th * (1.0 + 2.0 * n_s))) / ch.Gamma;
}

/// Entanglement survival time; independent of N_s.
inline std::optional<double> t_ent(const ChannelSpec& ch) {
  validate(ch);
  if (ch.Gamma == 0.0 || ch.N_th == 0.0) return std::nullopt;
  return std::log1p(1.0 / ch.N_th) / ch.Gamma;
}

struct TimelinePoint {
  double t = 0.0;
  TmstSpec spec;
  double sigma_steer = 0.0;
  double negativity = 0.0;
  bool overlap = false;
};

inline std::vector<TimelinePoint> timeline(double n_s, const ChannelSpec& ch,
                                           const std::vector<double>& times) {
  for (std::size_t i = 1; i < times.size(); ++i)
    detail::require(times[i] >= times[i - 1], "times must be sorted ascending");
  const CovMat4 start = twb_cm(std::asinh(std::sqrt(n_s)));
  std::vector<TimelinePoint> out;
  out.reserve(times.size());
  for (double t : times) {
    TimelinePoint p;
    p.t = t;
    p.spec = noised_tmst_params(n_s, ch, t);
    p.sigma_steer = sigma_steerability(p.spec);
    p.negativity = negativity(evolve(start, ch, t));
    p.overlap = p.sigma_steer > 1.0 + kBoundaryTol;
    out.push_back(p);
  }
  return out;
}

/// n points linear in [0, t_max].
inline std::vector<double> linear_times(double t_max, int n) {
  std::vector<double> ts;
  if (n <= 0) return ts;
  if (n == 1) return {0.0};
  for (int i = 0; i < n; ++i) ts.push_back(t_max * i / (n - 1));
  return ts;
}

inline constexpr std::string_view kTimelineCsvHeader =
    "t,muA,muB,r,sigma_steer,negativity,overlap";

inline void write_csv(std::ostream& os, const std::vector<TimelinePoint>& points) {
  os << kTimelineCsvHeader << '\n';
  for (const auto& p : points) {
    os << format_double(p.t) << ',' << format_double(p.spec.muA) << ','
       << format_double(p.spec.muB) << ',' << format_double(p.spec.r) << ','
       << format_double(p.sigma_steer) << ',' << format_double(p.negativity) << ','
       << (p.overlap ? "true" : "false") << '\n';
  }
}

}  // namespace gsteer
