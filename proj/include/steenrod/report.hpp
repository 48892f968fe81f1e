#pragma once

// Human-readable and JSON renderings of gap scans, verdicts and Adams checks.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "steenrod/obstruct.hpp"

namespace steenrod {

inline constexpr const char* kReportSchema = "steenrod-report/1";

/// Consecutive runs [first, first+length) of a sorted degree list.
inline std::vector<std::pair<long, long>> run_length(const std::vector<long>& sorted) {
  std::vector<std::pair<long, long>> out;
  for (long n : sorted) {
    if (!out.empty() && out.back().first + out.back().second == n) ++out.back().second;
    else out.emplace_back(n, 1);
  }
  return out;
}

inline std::vector<long> expand_runs(const std::vector<std::pair<long, long>>& runs) {
  std::vector<long> out;
  for (const auto& [first, length] : runs)
    for (long i = 0; i < length; ++i) out.push_back(first + i);
  return out;
}

inline const char* to_string(Outcome o) { return o == Outcome::NotRealizable ? "NotRealizable" : "Inconclusive"; }

inline nlohmann::json to_json(const GapReport& r) {
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& g : r.gaps) gaps.push_back({{"start", g.start}, {"length", g.length}});
  return {{"occupied", run_length(r.occupied)}, {"gaps", gaps}, {"bound_truncated", r.bound_truncated}};
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : c.layers) layers.push_back({{"m", l.m}, {"infinite", l.infinite}, {"n", l.n}});
  nlohmann::json j = {{"prime", c.prime},
                      {"d", c.d},
                      {"suspension", c.suspension},
                      {"degree_bound", c.degree_bound},
                      {"t", c.layer_count},
                      {"delta", c.delta},
                      {"J", c.j_max},
                      {"base_threshold", c.base_threshold},
                      {"threshold", c.threshold},
                      {"start_floor", c.start_floor},
                      {"gap", {{"start", c.gap.start}, {"length", c.gap.length}}},
                      {"layers", layers},
                      {"occupied", run_length(c.occupied)}};
  if (c.condition)
    j["condition"] = {{"forbidden", c.condition->forbidden}, {"violations", c.condition->violations}};
  return j;
}

/// Inverse of to_json(Certificate), for standalone re-validation.
inline Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.prime = j.at("prime").get<std::uint32_t>();
  c.d = j.at("d").get<long>();
  c.suspension = j.at("suspension").get<long>();
  c.degree_bound = j.at("degree_bound").get<long>();
  c.layer_count = j.at("t").get<long>();
  c.delta = j.at("delta").get<int>();
  c.j_max = j.at("J").get<long>();
  c.base_threshold = j.at("base_threshold").get<long>();
  c.threshold = j.at("threshold").get<long>();
  c.start_floor = j.at("start_floor").get<long>();
  c.gap = {j.at("gap").at("start").get<long>(), j.at("gap").at("length").get<long>()};
  for (const auto& l : j.at("layers"))
    c.layers.push_back({l.at("m").get<long>(), l.at("infinite").get<bool>(), l.at("n").get<std::vector<long>>()});
  c.occupied = expand_runs(j.at("occupied").get<std::vector<std::pair<long, long>>>());
  if (j.contains("condition"))
    c.condition = ConditionTable{j["condition"].at("forbidden").get<std::vector<long>>(),
                                 j["condition"].at("violations").get<std::vector<std::pair<long, long>>>()};
  return c;
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"outcome", to_string(v.outcome)}};
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  else j["reason"] = v.reason;
  return j;
}

inline nlohmann::json to_json(const std::vector<AdamsViolation>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vs)
    out.push_back({{"k", v.k}, {"degree", v.degree}, {"witness", v.witness}, {"image", v.image}});
  return out;
}

inline std::string describe(const GapReport& r) {
  std::ostringstream os;
  os << "occupied:";
  for (const auto& [first, length] : run_length(r.occupied)) {
    os << " " << first;
    if (length > 1) os << ".." << first + length - 1;
  }
  os << "\ngaps:";
  if (r.gaps.empty()) os << " none";
  for (const auto& g : r.gaps) os << " (" << g.start << "," << g.start + g.length << "]";
  if (r.bound_truncated) os << "\nbound truncated: the degrees above the last occupied one are unexplored";
  os << "\n";
  return os.str();
}

inline std::string describe(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << to_string(v.outcome) << "\n";
  if (!v.certificate) {
    os << "reason: " << v.reason << "\n";
    return os.str();
  }
  const auto& c = *v.certificate;
  os << "threshold: " << c.threshold << " (base " << c.base_threshold << ", t=" << c.layer_count
     << ", delta=" << c.delta << ", J=" << c.j_max << ")\n";
  os << "gap: (" << c.gap.start + c.suspension << "," << c.gap.start + c.suspension + c.gap.length
     << "], length " << c.gap.length << "\n";
  for (const auto& l : c.layers) {
    os << "layer m=" << l.m << (l.infinite ? " infinite" : " finite");
    if (!l.n.empty()) {
      os << ", n =";
      for (long n : l.n) os << " " << n;
    }
    os << "\n";
  }
  if (c.condition) os << "condition: no forbidden difference among the layers\n";
  return os.str();
}

inline std::string describe(const std::vector<AdamsViolation>& vs) {
  std::ostringstream os;
  if (vs.empty()) os << "no violations\n";
  for (const auto& v : vs) {
    os << "violation at k=" << v.k << ", degree " << v.degree << ": x =";
    for (const auto& [label, c] : v.witness) os << " " << (c == 1 ? "" : std::to_string(c) + "*") << label;
    os << ", image =";
    for (const auto& [label, c] : v.image) os << " " << (c == 1 ? "" : std::to_string(c) + "*") << label;
    os << "\n";
  }
  return os.str();
}

}  // namespace steenrod
