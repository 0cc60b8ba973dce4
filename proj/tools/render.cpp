#include "render.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

namespace kuc::render {

namespace {

std::string detail_string(const Model& m, const std::vector<NamedSet>& sets) {
  std::string out;
  for (const auto& ns : sets) {
    if (!out.empty()) out += "; ";
    out += ns.name + "=" + format_event(m, ns.set);
  }
  return out;
}

Json sets_json(const Model& m, const std::vector<NamedSet>& sets) {
  Json arr = Json::array();
  for (const auto& ns : sets) arr.push_back({{"name", ns.name}, {"set", event_json(m, ns.set)}});
  return arr;
}

}  // namespace

Json event_json(const Model& m, const Event& e) {
  Json arr = Json::array();
  for (int s = 0; s < m.size(); ++s)
    if (e.contains(s)) arr.push_back(m.label(s));
  return arr;
}

Json model_json(const Model& m) {
  Json p = Json::object();
  for (int s = 0; s < m.size(); ++s)
    p[m.label(s)] = event_json(m, m.possibility(s));
  return {{"states", m.labels()}, {"P", p}};
}

Json model_record(const Model& m) {
  Json rec = {{"kind", "model"}};
  rec.update(model_json(m));
  return rec;
}

Json match_record(const Match& match) {
  return {{"kind", "match"}, {"index", match.index}, {"model", model_json(match.model)}};
}

Json violation_record(const Violation& v) {
  return {{"kind", "match"},
          {"index", v.index},
          {"check", v.check},
          {"model", model_json(v.model)}};
}

Json property_record(const Model& m, const PropertyReport& r) {
  Json rec = {{"kind", "property"},
              {"property", property_id_string(r.property)},
              {"operator", operator_id(r.op)},
              {"holds", r.holds}};
  if (r.witness)
    rec["witness"] = event_json(m, *r.witness);
  else
    rec["witness"] = nullptr;
  rec["detail"] = sets_json(m, r.detail);
  return rec;
}

Json claim_record(const Model& m, const ClaimReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"status", step_status_string(s.status)},
                     {"description", s.description},
                     {"sets", sets_json(m, s.sets)}});
  return {{"kind", "claim"},
          {"claim", claim_id_string(r.claim)},
          {"verdict", verdict_string(r.verdict)},
          {"premise", r.premise_status},
          {"steps", steps}};
}

Json error_record(const std::string& message) {
  return {{"kind", "error"}, {"message", message}};
}

void print_property_table(std::ostream& out, const Model& m,
                          const std::vector<PropertyReport>& reports) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"property", "operator", "holds", "witness", "detail"});
  for (const auto& r : reports)
    rows.push_back({property_id_string(r.property), operator_name(r.op),
                    r.holds ? "yes" : "no", r.witness ? format_event(m, *r.witness) : "-",
                    r.detail.empty() ? "-" : detail_string(m, r.detail)});
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) {
      line += row[c];
      if (c + 1 < 5) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_claim_table(std::ostream& out, const Model& m, const ClaimReport& r) {
  out << "claim: " << claim_id_string(r.claim) << '\n';
  out << "verdict: " << verdict_string(r.verdict) << '\n';
  out << "steps:\n";
  for (const auto& s : r.steps) {
    std::string status = step_status_string(s.status);
    out << "  [" << status << "]" << std::string(15 - status.size(), ' ') << s.description;
    std::string detail = detail_string(m, s.sets);
    if (!detail.empty()) out << "   " << detail;
    out << '\n';
  }
}

}  // namespace kuc::render
