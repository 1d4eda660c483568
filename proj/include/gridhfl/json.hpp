#pragma once

// JSON forms of the result types (nlohmann::json).
//
// homology: {"k", "components", "buckets": [{"maslov", "alexander": ["p/2"...], "rank"}], "total", "hat_total"}
// chains and witnesses: sorted arrays of state ids.

#include <string>
#include <vector>

#include <json.hpp>

#include "gridhfl/acceptance.hpp"
#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/pentagon.hpp"
#include "gridhfl/transverse.hpp"

namespace gridhfl {

using nlohmann::json;

/// Inverse of format_half: "3/2" -> 3, "-1" -> -2.
inline int parse_half(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * std::stoi(s);
    if (s.substr(slash + 1) != "2") throw InputError("bad half-integer '" + s + "'");
    return std::stoi(s.substr(0, slash));
  } catch (const std::logic_error&) {
    throw InputError("bad half-integer '" + s + "'");
  }
}

inline void to_json(json& j, const BraidWord& w) {
  j = json{{"strands", w.strands()}, {"letters", w.letters()}, {"text", format_braid(w)}};
}

inline void from_json(const json& j, BraidWord& w) {
  w = BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

inline void to_json(json& j, const GridDiagram& g) {
  j = json{{"k", g.size}, {"x_rows", g.x_rows}, {"o_rows", g.o_rows}};
}

inline void from_json(const json& j, GridDiagram& g) {
  g = GridDiagram{j.at("k").get<int>(), j.at("x_rows").get<std::vector<int>>(),
                  j.at("o_rows").get<std::vector<int>>()};
  validate(g);
}

inline void to_json(json& j, const Bigrading& b) {
  std::vector<std::string> alex;
  for (int a : b.alexander2) alex.push_back(format_half(a));
  j = json{{"maslov", b.maslov}, {"alexander", alex}};
}

inline void from_json(const json& j, Bigrading& b) {
  b.maslov = j.at("maslov").get<int>();
  b.alexander2.clear();
  for (const auto& s : j.at("alexander")) b.alexander2.push_back(parse_half(s.get<std::string>()));
}

inline void to_json(json& j, const BucketRank& b) {
  to_json(j, b.grading);
  j["rank"] = b.rank;
}

inline void from_json(const json& j, BucketRank& b) {
  from_json(j, b.grading);
  b.rank = j.at("rank").get<std::uint64_t>();
}

inline void to_json(json& j, const HomologyResult& h) {
  j = json{{"k", h.k},           {"components", h.components}, {"buckets", h.buckets},
           {"total", h.total},   {"hat_total", h.hat_total},   {"hat_buckets", h.hat_buckets}};
}

inline void from_json(const json& j, HomologyResult& h) {
  h.k = j.at("k").get<int>();
  h.components = j.at("components").get<int>();
  h.buckets = j.at("buckets").get<std::vector<BucketRank>>();
  h.total = j.at("total").get<std::uint64_t>();
  h.hat_total = j.at("hat_total").get<std::uint64_t>();
  h.hat_buckets = j.contains("hat_buckets") ? j.at("hat_buckets").get<std::vector<BucketRank>>()
                                            : std::vector<BucketRank>{};
}

inline void to_json(json& j, const ThetaCertificate& c) {
  j = json{{"word", c.word},         {"grid", c.grid},         {"state", c.state.rows},
           {"state_id", c.state_id}, {"is_cycle", c.is_cycle}, {"vanishes", c.vanishes},
           {"witness", c.witness},   {"gradings", c.gradings}};
}

inline void from_json(const json& j, ThetaCertificate& c) {
  c.word = j.at("word").get<BraidWord>();
  c.grid = j.at("grid").get<GridDiagram>();
  c.state = GridState{j.at("state").get<std::vector<int>>()};
  c.state_id = j.at("state_id").get<StateId>();
  c.is_cycle = j.at("is_cycle").get<bool>();
  c.vanishes = j.at("vanishes").get<bool>();
  c.witness = j.at("witness").get<SparseVector>();
  c.gradings = j.at("gradings").get<Bigrading>();
}

inline void to_json(json& j, const SelfLinkingData& d) {
  j = json::array();
  for (const auto& [labels, sl] : d.entries) j.push_back(json{{"components", labels}, {"sl", sl}});
}

inline void to_json(json& j, const ResolutionBand& b) {
  j = json{{"letter_index", b.letter_index}, {"lower_row", b.lower_row}, {"mover_from", b.mover_from},
           {"mover_to", b.mover_to},         {"shift_from", b.shift_from}, {"shift_to", b.shift_to}};
}

inline void to_json(json& j, const ResolutionPair& p) {
  j = json{{"word_beta", p.word_beta}, {"word_gamma", p.word_gamma},         {"g_beta", p.g_beta},
           {"g_gamma", p.g_gamma},     {"band", p.band},                     {"special_circle", p.special_circle},
           {"a_quarter", p.a},         {"b_quarter", p.b}};
}

inline void to_json(json& j, const PentagonReport& r) {
  j = json{{"k", r.k},
           {"pentagons_to_z_plus", r.pentagons_to_z_plus},
           {"other_targets", r.other_targets},
           {"chain_map", r.chain_map},
           {"theta_maps_to_theta", r.theta_maps_to_theta},
           {"passed", r.passed()}};
}

inline void to_json(json& j, const CriterionResult& r) {
  j = json{{"id", r.id},           {"title", r.title},     {"status", status_label(r.status)},
           {"detail", r.detail},   {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}};
}

}  // namespace gridhfl
