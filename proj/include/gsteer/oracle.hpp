#pragma once

// Brute-force cross-checks for the closed forms: measurement grids for the
// optimal conditional nonclassicality, the blue-side limit taken numerically,
// and a direct minimization of the discord's conditional entropy.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gsteer/canonical.hpp"
#include "gsteer/conditioning.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"
#include "gsteer/triangoloid.hpp"

namespace gsteer {

struct SweepGrid {
  int n_mu = 20;
  int n_mus = 40;
  int n_phi = 8;
  double floor = 1e-3;
};

struct SweepResult {
  double best_depth = 0.0;
  double best_lambda = 0.0;  ///< least conditional eigenvalue found; depth before clamping at 0
  MeasurementSpec best_params;
  SweepGrid grid;
  double closed_form_depth = 0.0;
  double closed_form_lambda = 0.0;
  bool best_on_floor = false;  ///< argmin sits on the mu_s = floor line
  bool agreement = false;
};

inline std::vector<double> uniform_phases(int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = 2.0 * std::numbers::pi * i / n;
  return v;
}

/// Grid search over finite measurements of B on a canonical form, taken as is.
/// The reference is the homodyne limit along the larger correlation,
/// a - max(c1^2, c2^2)/b.
inline SweepResult sweep_canonical(const CanonicalForm& cf, const SweepGrid& grid,
                                   double tolerance = 1e-3) {
  detail::require(grid.n_mu >= 2 && grid.n_mus >= 2, "sweep grid needs >= 2 points per axis");
  detail::require(grid.n_phi >= 1, "sweep grid needs at least one phase");
  detail::require(grid.floor > 0.0 && grid.floor < 1.0, "sweep floor must lie in (0, 1)");
  const CovMat4 cm = canonical_cm(cf);

  SweepResult res;
  res.grid = grid;
  res.best_lambda = std::numeric_limits<double>::infinity();
  const auto mus = log_grid(grid.floor, 1.0, grid.n_mu);
  const auto mu_ss = log_grid(grid.floor, 1.0, grid.n_mus);
  for (double mu : mus)
    for (double mu_s : mu_ss)
      for (double phi : uniform_phases(grid.n_phi)) {
        const auto m = MeasurementSpec::general(mu, mu_s, phi);
        const double lam = condition(cm, m).eigenvalues().first;
        if (lam < res.best_lambda) {
          res.best_lambda = lam;
          res.best_params = m;
        }
      }
  res.best_depth = std::max(0.0, kVacuumVariance - res.best_lambda);
  res.best_on_floor = res.best_params.mu_s == grid.floor;
  res.closed_form_lambda = cf.a - cf.c_max() * cf.c_max() / cf.b;
  res.closed_form_depth = std::max(0.0, kVacuumVariance - res.closed_form_lambda);
  res.agreement = res.best_depth <= res.closed_form_depth + 1e-12 &&
                  res.closed_form_depth - res.best_depth <= tolerance;
  return res;
}

/// Same sweep on the canonical form of a physical CM.
inline SweepResult sweep_measurements(const CovMat4& cm, const SweepGrid& grid = {},
                                      double tolerance = 1e-3) {
  return sweep_canonical(canonicalize(cm).form, grid, tolerance);
}

struct BlueSidePoint {
  double t = 0.0;
  double mu_c = 0.0;   ///< analytic limit
  double mu_sc = 0.0;
  double extrapolated_mu_c = 0.0;  ///< conditional_params_tmst blue-side value
  double extrapolated_mu_sc = 0.0;
  std::vector<double> x;
  std::vector<double> error;  ///< max(|d mu_c|, |d mu_sc|) of the finite-x value at each x
  double order = 0.0;         ///< smallest observed log10 error ratio per decade of x
  bool converged = false;
};

/// Analytic limit of the blue side: lambda_- = a - c^2/(b + 1/(4t)), lambda_+ = a.
inline ConditionalParams blue_side_limit(const TmstSpec& spec, double t) {
  return conditional_params(condition(tmst_cm(spec), MeasurementSpec::blue_side(t)));
}

inline std::vector<BlueSidePoint> verify_blue_side(const TmstSpec& spec,
                                                   const std::vector<double>& t_values) {
  const CanonicalForm cf = tmst_canonical(spec);
  const std::vector<double> xs{1e-4, 1e-5, 1e-6};
  std::vector<BlueSidePoint> out;
  for (double t : t_values) {
    detail::require(t >= 0.0, "blue-side t must be >= 0");
    BlueSidePoint p;
    p.t = t;
    p.x = xs;
    const ConditionalParams lim = blue_side_limit(spec, t);
    p.mu_c = lim.mu_c;
    p.mu_sc = lim.mu_sc;
    const ConditionalParams ext = conditional_params_tmst(spec, MeasurementSpec::blue_side(t));
    p.extrapolated_mu_c = ext.mu_c;
    p.extrapolated_mu_sc = ext.mu_sc;
    for (double x : xs) {
      // t = 0 is the green vertex: mu -> 0 at any fixed mu_s
      const auto [mc, msc] = t == 0.0 ? detail::tmst_closed_form(cf, x, 1.0)
                                      : detail::tmst_closed_form(cf, t * x, x);
      p.error.push_back(std::max(std::abs(mc - lim.mu_c), std::abs(msc - lim.mu_sc)));
    }
    p.order = std::numeric_limits<double>::infinity();
    constexpr double noise = 1e-12;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (p.error[i + 1] <= noise) continue;  // already at rounding level
      p.order = std::min(p.order, std::log10(p.error[i] / p.error[i + 1]));
    }
    p.converged = p.order >= 1.0 - 1e-2 && p.error.back() < 1e-4;
    out.push_back(p);
  }
  return out;
}

struct DiscordGrid {
  int n_mus = 60;
  int n_phi = 64;
  int refinements = 40;
  int starts = 8;
  double mus_floor = 1e-8;
};

namespace detail {

inline double entropy_of_cm2(const CovMat2& m) {
  return entropy_function(std::max(1.0, 2.0 * std::sqrt(std::max(0.0, m.det()))));
}

}  // namespace detail

/// Discord with a direct search for the best pure Gaussian measurement (mu = 1).
/// Grid in (log mu_s, phi) plus the homodyne limit, then repeated zoom around the
/// best few grid cells.
inline double numeric_discord_min(const CovMat4& cm, Direction d = Direction::B_steers_A,
                                  const DiscordGrid& grid = {}) {
  detail::require(grid.n_mus >= 2 && grid.n_phi >= 1, "discord grid too small");
  detail::require(grid.mus_floor > 0.0 && grid.mus_floor < 1.0, "mus_floor must lie in (0, 1)");
  const CovMat4 o = detail::oriented(cm, d);
  const auto [nu_m, nu_p] = symplectic_eigenvalues(o);
  const double s_b = detail::entropy_of_cm2(o.marginal_B());
  const double s_ab = detail::entropy_function(std::max(1.0, 2.0 * nu_m)) +
                      detail::entropy_function(std::max(1.0, 2.0 * nu_p));

  auto cond_entropy = [&](double log_mus, double phi) {
    return detail::entropy_of_cm2(
        condition(o, MeasurementSpec::general(1.0, std::exp(log_mus), phi)));
  };

  const double lo = std::log(grid.mus_floor);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  struct Cell {
    double v, l, phi;
  };
  // mu_s = 1 is heterodyne and phase-blind; scoring it once keeps its ties out of the starts
  double best = cond_entropy(0.0, 0.0);
  std::vector<Cell> cells;
  for (int i = 0; i + 1 < grid.n_mus; ++i) {
    const double l = lo * (1.0 - static_cast<double>(i) / (grid.n_mus - 1));
    for (int j = 0; j < grid.n_phi; ++j) {
      const double phi = two_pi * j / grid.n_phi;
      cells.push_back({cond_entropy(l, phi), l, phi});
    }
  }
  // several starts, the landscape can have more than one basin
  const std::size_t n_starts = std::min<std::size_t>(std::max(1, grid.starts), cells.size());
  std::partial_sort(cells.begin(), cells.begin() + n_starts, cells.end(),
                    [](const Cell& x, const Cell& y) { return x.v < y.v; });

  for (std::size_t s = 0; s < n_starts; ++s) {
    Cell c = cells[s];
    double span_l = -lo / (grid.n_mus - 1);
    double span_phi = two_pi / grid.n_phi;
    for (int it = 0; it < grid.refinements; ++it) {
      const Cell centre = c;
      for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
          const double l = std::clamp(centre.l + span_l * i / 4.0, lo, 0.0);
          const double phi = centre.phi + span_phi * j / 4.0;
          const double v = cond_entropy(l, phi);
          if (v < c.v) c = {v, l, phi};
        }
      span_l *= 0.5;
      span_phi *= 0.5;
    }
    best = std::min(best, c.v);
  }

  auto hom_entropy = [&](double phi) {
    return detail::entropy_of_cm2(condition(o, MeasurementSpec::homodyne(phi)));
  };
  double best_hom = std::numeric_limits<double>::infinity();
  double hom_phi = 0.0;
  for (int j = 0; j < grid.n_phi; ++j) {
    const double phi = two_pi * j / grid.n_phi;
    const double v = hom_entropy(phi);
    if (v < best_hom) best_hom = v, hom_phi = phi;
  }
  for (double span = two_pi / grid.n_phi; span > 1e-12; span *= 0.5) {
    const double c = hom_phi;
    for (int j = -4; j <= 4; ++j) {
      const double v = hom_entropy(c + span * j / 4.0);
      if (v < best_hom) best_hom = v, hom_phi = c + span * j / 4.0;
    }
  }
  return std::max(0.0, s_b - s_ab + std::min(best, best_hom));
}

}  // namespace gsteer
