#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage or parse error, 2 unphysical state.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsteer/appendix.hpp"
#include "gsteer/dynamics.hpp"
#include "gsteer/io.hpp"
#include "gsteer/oracle.hpp"
#include "gsteer/steering.hpp"
#include "gsteer/triangoloid.hpp"
#include "gsteer/version.hpp"

namespace gsteer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnphysical = 2;

struct CliConfig {
  std::string state;
  std::string state_file;
  std::string dir = "BA";
  double tol = kDefaultTol;
  std::string format;  // empty: csv for grid data, json for reports
  std::string out;
  int grid = 100;
  double n_s = 1.0;
  double gamma = 0.1;
  double n_th = 0.2;
  int n_times = 200;
  std::optional<double> t_max;
  int n_mu = 20;
  int n_mus = 40;
  int n_phi = 8;
  double floor = 1e-3;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnphysicalState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ParsedState load_state(const CliConfig& cfg) {
  if (!cfg.state.empty() && !cfg.state_file.empty())
    throw UsageError("give either --state or --state-file, not both");
  if (!cfg.state.empty()) return parse_state_text(cfg.state);
  if (!cfg.state_file.empty()) return parse_state_file(cfg.state_file);
  throw UsageError("a state spec is required (--state or --state-file)");
}

inline void require_physical(const ParsedState& ps, double tol) {
  if (!is_physical(ps.cm, tol)) throw UnphysicalState("state is not physical");
}

inline Direction parse_direction(const std::string& d) {
  if (d == "BA") return Direction::B_steers_A;
  if (d == "AB") return Direction::A_steers_B;
  throw UsageError("--dir must be BA or AB");
}

/// Data goes to --out when given (summary then on `out`), otherwise data on
/// `out` and summary on `err`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out, std::ostream& err)
      : data_(&out), summary_(&err) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
      data_ = &file_;
      summary_ = &out;
    }
  }
  std::ostream& data() { return *data_; }
  std::ostream& summary() { return *summary_; }

 private:
  std::ofstream file_;
  std::ostream* data_;
  std::ostream* summary_;
};

inline std::string format_or(const std::string& f, const std::string& fallback) {
  const std::string v = f.empty() ? fallback : f;
  if (v != "csv" && v != "json") throw UsageError("--format must be csv or json");
  return v;
}

inline void csv_banner(std::ostream& os) { os << "# gsteer " << kVersion << '\n'; }

}  // namespace detail

inline int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParsedState ps = detail::load_state(cfg);
  detail::require_physical(ps, cfg.tol);
  const SteeringReport rep = analyze(ps.cm, detail::parse_direction(cfg.dir), cfg.tol, ps.tmst);
  const json j = to_json(rep);
  detail::Sink sink(cfg.out, out, err);
  if (detail::format_or(cfg.format, "json") == "json") {
    sink.data() << j.dump(2) << '\n';
  } else {
    detail::csv_banner(sink.data());
    sink.data() << "field,value\n";
    for (const auto& [k, v] : j.items())
      if (!v.is_object()) sink.data() << k << ',' << v.dump() << '\n';
  }
  return kExitOk;
}

inline int cmd_triangoloid(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParsedState ps = detail::load_state(cfg);
  if (!ps.tmst) throw UsageError("triangoloid requires tmst/twb");
  if (cfg.grid < 2) throw UsageError("--grid must be >= 2");
  const TriangoloidDataset ds = generate(*ps.tmst, cfg.grid);
  detail::Sink sink(cfg.out, out, err);
  if (detail::format_or(cfg.format, "csv") == "csv") {
    detail::csv_banner(sink.data());
    write_csv(sink.data(), ds);
  } else {
    sink.data() << to_json(ds).dump(2) << '\n';
  }
  sink.summary() << "overlap=" << (ds.nonclassical_overlap ? "true" : "false")
                 << " max_depth=" << format_double(ds.max_depth)
                 << " sigma_steer=" << format_double(ds.sigma_steer) << '\n';
  return kExitOk;
}

inline int cmd_noisy(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.gamma > 0.0)) throw UsageError("--Gamma must be > 0");
  if (!(cfg.n_th >= 0.0)) throw UsageError("--Nth must be >= 0");
  if (!(cfg.n_s >= 0.0)) throw UsageError("--Ns must be >= 0");
  if (cfg.n_times < 0) throw UsageError("--n-times must be >= 0");
  const ChannelSpec ch{cfg.gamma, cfg.n_th};
  const auto tns = t_ns(cfg.n_s, ch);
  const auto tent = t_ent(ch);
  double t_max = tent ? 1.2 * *tent : 10.0 / cfg.gamma;
  if (cfg.t_max) t_max = *cfg.t_max;
  if (!(t_max >= 0.0)) throw UsageError("--t-max must be >= 0");
  const auto tl = timeline(cfg.n_s, ch, linear_times(t_max, cfg.n_times));

  detail::Sink sink(cfg.out, out, err);
  if (detail::format_or(cfg.format, "csv") == "csv") {
    detail::csv_banner(sink.data());
    write_csv(sink.data(), tl);
  } else {
    json j{{"t_ns", gsteer::detail::number_or_null(tns)},
           {"t_ent", gsteer::detail::number_or_null(tent)},
           {"timeline", to_json(tl)}};
    sink.data() << j.dump(2) << '\n';
  }
  sink.summary() << "t_ns=" << (tns ? format_double(*tns) : "never")
                 << " t_ent=" << (tent ? format_double(*tent) : "never") << '\n';
  return kExitOk;
}

inline int cmd_appendix(const CliConfig&, std::ostream& out, std::ostream&) {
  const auto checks = run_appendix();
  const auto passed = std::count_if(checks.begin(), checks.end(),
                                    [](const AppendixCheck& c) { return c.passed; });
  for (const auto& c : checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << passed << '/' << checks.size() << " checks passed\n";
  return passed == static_cast<long>(checks.size()) ? kExitOk : kExitUsage;
}

inline int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParsedState ps = detail::load_state(cfg);
  detail::require_physical(ps, cfg.tol);
  SweepGrid grid{cfg.n_mu, cfg.n_mus, cfg.n_phi, cfg.floor};
  const SweepResult s = sweep_measurements(ps.cm, grid);
  detail::Sink sink(cfg.out, out, err);
  sink.data() << to_json(s).dump(2) << '\n';
  return kExitOk;
}

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Gaussian steering and conditional nonclassicality toolkit", "gsteer"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.tol, "physicality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "csv or json");
  app.add_option("--out", cfg.out, "output path (default stdout)");

  auto state_opts = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state, "JSON state spec");
    sub->add_option("--state-file", cfg.state_file, "file holding a JSON state spec");
  };

  CLI::App* check = app.add_subcommand("check", "steering report for a state");
  state_opts(check);
  check->add_option("--dir", cfg.dir, "BA (measure B) or AB (measure A)");

  CLI::App* tri = app.add_subcommand("triangoloid", "triangoloid dataset of a TMST/TWB");
  state_opts(tri);
  tri->add_option("--grid", cfg.grid, "grid points per axis");

  CLI::App* noisy = app.add_subcommand("noisy", "damped twin-beam timeline");
  noisy->add_option("--Ns", cfg.n_s, "squeezing photons of the initial twin beam");
  noisy->add_option("--Gamma", cfg.gamma, "damping rate of mode A");
  noisy->add_option("--Nth", cfg.n_th, "bath photon number");
  noisy->add_option("--n-times", cfg.n_times, "number of time points");
  noisy->add_option("--t-max", cfg.t_max, "last time point (default 1.2 t_ent)");

  CLI::App* appendix = app.add_subcommand("appendix", "reproduce the counterexample checks");

  CLI::App* sweep = app.add_subcommand("sweep", "brute-force measurement sweep");
  state_opts(sweep);
  sweep->add_option("--n-mu", cfg.n_mu);
  sweep->add_option("--n-mus", cfg.n_mus);
  sweep->add_option("--n-phi", cfg.n_phi);
  sweep->add_option("--floor", cfg.floor);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out, err);
    if (tri->parsed()) return cmd_triangoloid(cfg, out, err);
    if (noisy->parsed()) return cmd_noisy(cfg, out, err);
    if (appendix->parsed()) return cmd_appendix(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
  } catch (const UnphysicalState& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnphysical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gsteer::cli
