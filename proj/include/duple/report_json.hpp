#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "duple/milnor.hpp"
#include "duple/picard.hpp"
#include "duple/polynomial.hpp"
#include "duple/quadext.hpp"
#include "duple/seshadri.hpp"

namespace duple {

using ordered_json = nlohmann::ordered_json;

// Display float rounded to 12 significant digits.  The exact fields are
// authoritative; these exist for human eyes only.
inline double display_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline ordered_json quadext_to_json(const QuadExt& q) {
  return ordered_json{{"a", q.a().str()}, {"b", q.b().str()}, {"rad", q.radicand()}};
}

template <class Json>
QuadExt quadext_from_json(const Json& j) {
  return QuadExt(Rational::parse(j.at("a").template get<std::string>()),
                 Rational::parse(j.at("b").template get<std::string>()),
                 j.at("rad").template get<std::int64_t>());
}

inline ordered_json trace_to_json(const std::vector<TraceStep>& trace) {
  ordered_json arr = ordered_json::array();
  for (const auto& step : trace) {
    ordered_json inputs;
    for (const auto& [k, v] : step.inputs) inputs[k] = v;
    arr.push_back(ordered_json{{"step", step.step},
                               {"rule", step.rule},
                               {"inputs", inputs},
                               {"conclusion", step.conclusion}});
  }
  return arr;
}

// Reading back requires an order-preserving json type; plain nlohmann::json
// would silently re-sort the trace inputs.
template <class Json>
std::vector<TraceStep> trace_from_json(const Json& arr) {
  static_assert(std::is_same_v<Json, nlohmann::ordered_json>,
                "parse trace documents with nlohmann::ordered_json");
  std::vector<TraceStep> trace;
  for (const auto& sj : arr) {
    TraceStep step;
    step.step = sj.at("step").template get<int>();
    step.rule = sj.at("rule").template get<std::string>();
    for (const auto& [k, v] : sj.at("inputs").items()) {
      step.inputs.emplace_back(k, v.template get<std::string>());
    }
    step.conclusion = sj.at("conclusion").template get<std::string>();
    trace.push_back(std::move(step));
  }
  return trace;
}

inline ordered_json seshadri_report_to_json(const SeshadriReport& rep) {
  ordered_json j;
  j["d"] = rep.d;
  j["m"] = rep.m;
  j["lower"] = quadext_to_json(rep.lower);
  j["upper"] = quadext_to_json(rep.upper);
  j["clamped"] = rep.clamped;
  j["trace"] = trace_to_json(rep.trace);
  j["lower_float"] = display_float(rep.lower.to_double());
  j["upper_float"] = display_float(rep.upper.to_double());
  return j;
}

template <class Json>
SeshadriReport seshadri_report_from_json(const Json& j) {
  SeshadriReport rep;
  rep.d = j.at("d").template get<std::int64_t>();
  rep.m = j.at("m").template get<std::int64_t>();
  rep.lower = quadext_from_json(j.at("lower"));
  rep.upper = quadext_from_json(j.at("upper"));
  rep.clamped = j.at("clamped").template get<bool>();
  rep.trace = trace_from_json(j.at("trace"));
  return rep;
}

inline ordered_json certificate_to_json(const SurjectivityCertificate& cert) {
  ordered_json j;
  j["map"] = cert.map_label;
  j["source_dim"] = cert.source_dim;
  j["target_dim"] = cert.target_dim;
  j["rank"] = cert.rank;
  j["prime"] = cert.prime;
  if (cert.seed) j["seed"] = *cert.seed;
  j["verdict"] = SurjectivityCertificate::verdict_name(cert.verdict);
  return j;
}

inline ordered_json smoothness_to_json(const SmoothnessReport& rep) {
  ordered_json j;
  j["verdict"] = rep.verdict;
  ordered_json counts = ordered_json::array();
  for (const auto& [p, n] : rep.fp_singular_counts) {
    counts.push_back(ordered_json{{"p", p}, {"singular_points", n}});
  }
  j["fp_scan"] = counts;
  j["line_probes"] = rep.line_probes;
  j["line_failures"] = rep.line_failures;
  return j;
}

inline ordered_json witness_to_json(const PicardWitness& w) {
  ordered_json j;
  j["d"] = w.cover.d;
  j["m"] = w.cover.m;
  j["seed"] = w.seed;
  j["prime"] = w.prime;
  j["smoothness"] = w.smoothness.verdict;
  j["summand"] = w.summand.holds;
  j["summand_sides"] = ordered_json{{"lhs", w.summand.lhs}, {"rhs", w.summand.rhs}};
  j["t_level"] = certificate_to_json(w.t_level);
  j["r_level"] = certificate_to_json(w.r_level);
  j["verdict"] = w.verdict_text;
  j["verified"] = w.verified;
  j["smoothness_detail"] = smoothness_to_json(w.smoothness);
  return j;
}

inline ordered_json hodge_report_to_json(const HodgeReport& rep) {
  ordered_json j;
  j["d"] = rep.cover.d;
  j["m"] = rep.cover.m;
  j["h20"] = rep.values.h20;
  j["h11_prim"] = rep.values.h11_prim;
  j["h11_full"] = rep.h11_full;
  j["h1_theta0"] = rep.values.h1_theta0;
  j["degrees"] = rep.degrees;
  j["oracles"] = ordered_json{{"series", ordered_json{{"h20", rep.series_oracle.h20},
                                                      {"h11_prim", rep.series_oracle.h11_prim},
                                                      {"h1_theta0", rep.series_oracle.h1_theta0}}},
                              {"pushforward_pg", rep.pushforward_pg}};
  j["used_f"] = rep.used_f;
  j["consistent"] = rep.consistent;
  j["negative_degree"] = rep.negative_degree;
  return j;
}

}  // namespace duple
