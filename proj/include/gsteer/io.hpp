#pragma once

// JSON state specs and JSON serialization of reports and datasets.
// nlohmann::json writes doubles in shortest round-trip form.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gsteer/dynamics.hpp"
#include "gsteer/oracle.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"
#include "gsteer/triangoloid.hpp"

namespace gsteer {

using json = nlohmann::json;

struct ParsedState {
  std::string kind;
  CovMat4 cm;
  std::optional<TmstSpec> tmst;  ///< set for kinds tmst and twb
};

namespace detail {

inline double number_field(const json& j, const char* key) {
  require(j.contains(key), std::string("state spec is missing \"") + key + "\"");
  require(j.at(key).is_number(), std::string("state spec field \"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json number_or_null(const std::optional<double>& x) {
  return x ? number_or_null(*x) : json(nullptr);
}

}  // namespace detail

/// Throws InvalidInput for unknown kinds, missing fields or out-of-range parameters.
/// An explicit CM is returned even when it is not physical.
inline ParsedState parse_state(const json& j) {
  detail::require(j.is_object(), "state spec must be a JSON object");
  detail::require(j.contains("kind") && j.at("kind").is_string(),
                  "state spec needs a string field \"kind\"");
  ParsedState ps;
  ps.kind = j.at("kind").get<std::string>();
  if (ps.kind == "tmst") {
    TmstSpec s{detail::number_field(j, "muA"), detail::number_field(j, "muB"),
               detail::number_field(j, "r")};
    validate(s);
    ps.tmst = s;
    ps.cm = tmst_cm(s);
  } else if (ps.kind == "twb") {
    TmstSpec s{1.0, 1.0, detail::number_field(j, "r")};
    validate(s);
    ps.tmst = s;
    ps.cm = twb_cm(s.r);
  } else if (ps.kind == "canonical") {
    ps.cm = canonical_cm({detail::number_field(j, "a"), detail::number_field(j, "b"),
                          detail::number_field(j, "c1"), detail::number_field(j, "c2")});
  } else if (ps.kind == "cm") {
    detail::require(j.contains("matrix") && j.at("matrix").is_array() && j.at("matrix").size() == 4,
                    "\"matrix\" must be a 4x4 array");
    Mat4 m;
    for (int r = 0; r < 4; ++r) {
      const json& row = j.at("matrix").at(r);
      detail::require(row.is_array() && row.size() == 4, "\"matrix\" must be a 4x4 array");
      for (int c = 0; c < 4; ++c) {
        detail::require(row.at(c).is_number(), "\"matrix\" entries must be numbers");
        m(r, c) = row.at(c).get<double>();
      }
    }
    ps.cm = CovMat4(m);
  } else if (ps.kind == "swns") {
    ps.cm = swns_cm(detail::number_field(j, "muA"), detail::number_field(j, "muB"));
  } else if (ps.kind == "gqd_seq") {
    detail::require(j.contains("n") && j.at("n").is_number_integer(),
                    "gqd_seq needs an integer \"n\"");
    ps.cm = canonical_cm(gqd_sequence(j.at("n").get<int>()));
  } else {
    throw InvalidInput("unknown state kind \"" + ps.kind + "\"");
  }
  return ps;
}

inline ParsedState parse_state_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON state spec: ") + e.what());
  }
  return parse_state(j);
}

inline ParsedState parse_state_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "cannot open state file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state_text(ss.str());
}

inline json to_json(const CanonicalForm& cf) {
  return {{"a", cf.a}, {"b", cf.b}, {"c1", cf.c1}, {"c2", cf.c2}};
}

inline json to_json(const SymplecticInvariants& inv) {
  return {{"I1", inv.I1}, {"I2", inv.I2}, {"I3", inv.I3}, {"I4", inv.I4}};
}

inline json to_json(const SteeringReport& r) {
  json j;
  j["direction"] = std::string(to_string(r.direction));
  j["sigma_steer"] = detail::number_or_null(r.sigma_steer);
  j["wns"] = r.wns.holds;
  j["wns_margin"] = r.wns.margin;
  j["sns"] = r.sns.holds;
  j["sns_margin"] = r.sns.margin;
  j["epr"] = r.epr.holds;
  j["epr_product"] = r.epr.value;
  j["entangled"] = r.ppt_eigenvalue < kVacuumVariance - kBoundaryTol;
  j["ppt_eigenvalue"] = r.ppt_eigenvalue;
  j["negativity"] = r.negativity;
  j["reid_x"] = r.reid_x;
  j["reid_p"] = r.reid_p;
  j["wigner_remote"] = r.wigner_remote.holds;
  j["wigner_remote_trace"] = r.wigner_remote.value;
  j["discord_BA"] = r.discord_BA;
  j["discord_AB"] = r.discord_AB;
  j["invariants"] = to_json(r.invariants);
  j["canonical"] = to_json(r.canonical);
  return j;
}

inline json to_json(const TriangoloidPoint& p) {
  return {{"mu", detail::number_or_null(p.mu)},
          {"mu_s", detail::number_or_null(p.mu_s)},
          {"t", detail::number_or_null(p.t)},
          {"mu_c", p.params.mu_c},
          {"mu_sc", p.params.mu_sc},
          {"lambda_minus", p.params.lambda_minus},
          {"depth", p.params.depth},
          {"tag", std::string(p.tag)}};
}

inline json to_json(const TriangoloidDataset& ds) {
  json pts = json::array();
  for (const auto& p : rows(ds)) pts.push_back(to_json(p));
  return {{"spec", {{"muA", ds.spec.muA}, {"muB", ds.spec.muB}, {"r", ds.spec.r}}},
          {"sigma_steer", ds.sigma_steer},
          {"nonclassical_overlap", ds.nonclassical_overlap},
          {"max_depth", ds.max_depth},
          {"points", pts}};
}

inline json to_json(const std::vector<TimelinePoint>& tl) {
  json arr = json::array();
  for (const auto& p : tl)
    arr.push_back({{"t", p.t},
                   {"muA", p.spec.muA},
                   {"muB", p.spec.muB},
                   {"r", p.spec.r},
                   {"sigma_steer", p.sigma_steer},
                   {"negativity", p.negativity},
                   {"overlap", p.overlap}});
  return arr;
}

inline json to_json(const SweepResult& s) {
  return {{"best_depth", s.best_depth},
          {"best_lambda", s.best_lambda},
          {"best_params",
           {{"mu", s.best_params.mu}, {"mu_s", s.best_params.mu_s}, {"phi", s.best_params.phi}}},
          {"grid",
           {{"n_mu", s.grid.n_mu},
            {"n_mus", s.grid.n_mus},
            {"n_phi", s.grid.n_phi},
            {"floor", s.grid.floor}}},
          {"closed_form_depth", s.closed_form_depth},
          {"best_on_floor", s.best_on_floor},
          {"agreement", s.agreement}};
}

}  // namespace gsteer
