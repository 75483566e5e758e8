#pragma once

// The set of conditional (mu_c, mu_sc) pairs a TMST can leave on mode A, over
// all Gaussian measurements of mode B. Sides: red (mu = 1), green (mu_s = 1) and
// the blue closure curve (mu = t x, mu_s = x, x -> 0). Vertices: heterodyne (red),
// no readout (green), homodyne (blue).

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gsteer/conditioning.hpp"
#include "gsteer/format.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"

namespace gsteer {

inline constexpr double kGridFloor = 1e-4;
inline constexpr int kBlueSamples = 64;
inline constexpr double kBlueTMin = 1e-3;
inline constexpr double kBlueTMax = 1e3;

struct TriangoloidPoint {
  std::optional<double> mu;
  std::optional<double> mu_s;
  std::optional<double> t;
  ConditionalParams params;
  std::string_view tag;
};

struct TriangoloidVertices {
  ConditionalParams red;
  ConditionalParams green;
  ConditionalParams blue;
};

struct TriangoloidDataset {
  TmstSpec spec;
  std::vector<TriangoloidPoint> interior;
  std::vector<TriangoloidPoint> red_side;    ///< mu = 1, mu_s from 1 down to the floor
  std::vector<TriangoloidPoint> green_side;  ///< mu_s = 1, mu from 1 down to the floor
  std::vector<TriangoloidPoint> blue_side;   ///< t ascending, green vertex towards blue
  TriangoloidVertices vertices;
  double sigma_steer = 0.0;
  bool nonclassical_overlap = false;
  double max_depth = 0.0;
};

/// n points log-spaced in [lo, hi], both ends included, ascending.
inline std::vector<double> log_grid(double lo, double hi, int n) {
  detail::require(n >= 2, "a log grid needs at least two points");
  detail::require(lo > 0.0 && hi > lo, "log grid bounds must satisfy 0 < lo < hi");
  std::vector<double> v(n);
  const double l0 = std::log(lo);
  const double l1 = std::log(hi);
  for (int i = 0; i < n; ++i) v[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

inline TriangoloidVertices vertex_check(const TmstSpec& spec) {
  return {conditional_params_tmst(spec, MeasurementSpec::heterodyne()),
          conditional_params_tmst(spec, MeasurementSpec::green_vertex()),
          conditional_params_tmst(spec, MeasurementSpec::homodyne(0.0))};
}

inline TriangoloidDataset generate(const TmstSpec& spec, int grid_n) {
  detail::require(grid_n >= 2, "grid_n must be >= 2");
  validate(spec);
  TriangoloidDataset ds;
  ds.spec = spec;
  const std::vector<double> grid = log_grid(kGridFloor, 1.0, grid_n);

  ds.interior.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  for (double mu : grid)
    for (double mu_s : grid)
      ds.interior.push_back({mu, mu_s, std::nullopt,
                             conditional_params_tmst(spec, MeasurementSpec::general(mu, mu_s, 0.0)),
                             "interior"});

  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    ds.red_side.push_back({1.0, *it, std::nullopt,
                           conditional_params_tmst(spec, MeasurementSpec::general(1.0, *it, 0.0)),
                           "red"});
    ds.green_side.push_back({*it, 1.0, std::nullopt,
                             conditional_params_tmst(spec, MeasurementSpec::general(*it, 1.0, 0.0)),
                             "green"});
  }
  for (double t : log_grid(kBlueTMin, kBlueTMax, kBlueSamples))
    ds.blue_side.push_back({std::nullopt, std::nullopt, t,
                            conditional_params_tmst(spec, MeasurementSpec::blue_side(t)), "blue"});

  ds.vertices = vertex_check(spec);
  ds.sigma_steer = sigma_steerability(spec);
  ds.nonclassical_overlap = ds.sigma_steer > 1.0 + kBoundaryTol;
  ds.max_depth = ds.vertices.blue.depth;
  return ds;
}

inline constexpr std::string_view kTriangoloidCsvHeader =
    "mu,mu_s,t,mu_c,mu_sc,lambda_minus,depth,tag";

/// Every row of the dataset in CSV order: interior, red, green, blue, vertices.
inline std::vector<TriangoloidPoint> rows(const TriangoloidDataset& ds) {
  std::vector<TriangoloidPoint> all;
  all.reserve(ds.interior.size() + ds.red_side.size() + ds.green_side.size() +
              ds.blue_side.size() + 3);
  for (const auto* side : {&ds.interior, &ds.red_side, &ds.green_side, &ds.blue_side})
    all.insert(all.end(), side->begin(), side->end());
  all.push_back({1.0, 1.0, std::nullopt, ds.vertices.red, "vertex_red"});
  all.push_back({std::nullopt, 1.0, 0.0, ds.vertices.green, "vertex_green"});
  all.push_back({std::nullopt, std::nullopt, std::nullopt, ds.vertices.blue, "vertex_blue"});
  return all;
}

inline void write_csv(std::ostream& os, const TriangoloidDataset& ds) {
  os << kTriangoloidCsvHeader << '\n';
  for (const auto& p : rows(ds)) {
    os << format_optional(p.mu) << ',' << format_optional(p.mu_s) << ',' << format_optional(p.t)
       << ',' << format_double(p.params.mu_c) << ',' << format_double(p.params.mu_sc) << ','
       << format_double(p.params.lambda_minus) << ',' << format_double(p.params.depth) << ','
       << p.tag << '\n';
  }
}

}  // namespace gsteer
