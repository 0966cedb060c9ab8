#pragma once

#include <json.hpp>

#include "hypvol/approx.hpp"
#include "hypvol/pipeline.hpp"
#include "hypvol/representations.hpp"

namespace hypvol {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json to_json(cplx z) { return {z.real(), z.imag()}; }

inline ordered_json to_json(const BoundaryPoint &p) {
  return {{"z0", to_json(p.z0())}, {"z1", to_json(p.z1())}};
}

inline ordered_json to_json(const H3Point &x) {
  return {{"z", to_json(x.z)}, {"t", x.t}};
}

inline ordered_json to_json(const Inequality &iq) {
  return {{"label", iq.label},
          {"lhs", iq.lhs},
          {"rhs", iq.rhs},
          {"margin", iq.margin()}};
}

inline ordered_json to_json(const std::vector<Inequality> &v) {
  ordered_json arr = ordered_json::array();
  for (const auto &iq : v)
    arr.push_back(to_json(iq));
  return arr;
}

inline ordered_json to_json(const DensityCertificate &c) {
  return {{"type", "density"},
          {"parameters",
           {{"basepoint", to_json(c.basepoint)},
            {"margulis_bound", c.margulis_bound}}},
          {"witnesses",
           {{"g", c.witness_g.str()},
            {"h", c.witness_h.str()},
            {"displacements", {c.disp_g, c.disp_h}},
            {"elementarity", to_string(c.elementarity)}}},
          {"inequalities", to_json(c.inequalities)},
          {"assumptions", c.assumptions}};
}

inline ordered_json to_json(const ChordalDisc &d) {
  return {{"center", to_json(d.center)}, {"radius", d.radius}};
}

inline ordered_json to_json(const SchottkyCertificate &c) {
  ordered_json rep = ordered_json::array(), att = ordered_json::array();
  for (const auto &d : c.repelling)
    rep.push_back(to_json(d));
  for (const auto &d : c.attracting)
    att.push_back(to_json(d));
  return {{"type", "schottky"},
          {"parameters", {{"generators", c.repelling.size()}}},
          {"witnesses",
           {{"repelling_discs", rep},
            {"attracting_discs", att},
            {"margin", c.margin}}},
          {"inequalities", to_json(c.inequalities)},
          {"assumptions", ordered_json::array()}};
}

inline ordered_json to_json(const ApproxResult &r) {
  return {{"word", r.word.str()},
          {"distance", r.distance},
          {"within_epsilon", r.within_epsilon},
          {"nodes", r.nodes}};
}

inline ordered_json to_json(const TransferReport &r) {
  ordered_json words = ordered_json::array();
  for (const auto &w : r.substitution)
    words.push_back(w.str());
  return {{"type", "transfer"},
          {"input", {{"norm", r.input_norm},
                     {"boundary_norm", r.input_boundary_norm},
                     {"evaluation", r.input_eval}}},
          {"substitution", words},
          {"output", {{"norm", r.output_norm},
                      {"boundary_norm", r.output_boundary_norm},
                      {"evaluation", r.output_eval}}},
          {"deviation", r.deviation},
          {"epsilon", r.epsilon},
          {"element_tolerance", r.element_tolerance},
          {"rounds", r.rounds},
          {"success", r.success}};
}

inline ordered_json to_json(const SeminormLowerBound &b) {
  ordered_json items = ordered_json::array();
  for (const auto &r : b.items)
    items.push_back({{"label", r.label},
                     {"parameter", r.parameter},
                     {"value", r.value},
                     {"norm", r.norm},
                     {"boundary_norm", r.boundary_norm},
                     {"deviation", r.deviation},
                     {"ratio", r.ratio},
                     {"status", r.ok ? "machine-checked" : "failed"},
                     {"note", r.note}});
  return {{"type", "seminorm_lower_bound"},
          {"cocycle", b.cocycle_id},
          {"representation", b.representation_id},
          {"items", items},
          {"headline", b.headline},
          {"boundary_ratios", b.boundary_ratios},
          {"certified_statement", b.certified_statement},
          {"limit_note", b.limit_note}};
}

} // namespace hypvol
