#include "kucheck/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace kuc {

namespace {

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_labels(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Model model_from_parts(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::string>>& rhs_by_state,
                       const Caps& caps) {
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) index.emplace(labels[static_cast<std::size_t>(i)], i);

  std::vector<Event> p;
  p.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    Event e = Event::empty_set(n);
    for (const auto& ref : rhs_by_state[static_cast<std::size_t>(s)]) {
      auto it = index.find(ref);
      if (it == index.end())
        throw UsageError("P(" + labels[static_cast<std::size_t>(s)] +
                         ") references unknown state '" + ref + "'");
      e = e | Event::singleton(it->second, n);
    }
    p.push_back(e);
  }
  return Model(labels, std::move(p), caps);
}

Model parse_model_text(std::string_view text, const Caps& caps) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::string>> rhs;
  std::vector<bool> seen_p;
  bool have_states = false;

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_states) {
      if (!line.starts_with("states:"))
        throw UsageError("line " + std::to_string(lineno) + ": missing 'states:' header");
      for (auto& lab : split_labels(line.substr(7))) {
        if (!valid_label(lab))
          throw UsageError("line " + std::to_string(lineno) + ": invalid state label '" + lab + "'");
        if (!index.emplace(lab, static_cast<int>(labels.size())).second)
          throw UsageError("line " + std::to_string(lineno) + ": duplicate state label '" + lab + "'");
        labels.push_back(lab);
      }
      if (labels.empty())
        throw UsageError("line " + std::to_string(lineno) + ": 'states:' declares no states");
      rhs.resize(labels.size());
      seen_p.resize(labels.size(), false);
      have_states = true;
      continue;
    }

    if (!line.starts_with("P("))
      throw UsageError("line " + std::to_string(lineno) + ": expected a 'P(<state>):' line");
    std::size_t close = line.find(')');
    if (close == std::string_view::npos || close + 1 >= line.size() || line[close + 1] != ':')
      throw UsageError("line " + std::to_string(lineno) + ": malformed P line");
    std::string lhs(trim(line.substr(2, close - 2)));
    auto it = index.find(lhs);
    if (it == index.end())
      throw UsageError("line " + std::to_string(lineno) + ": P line references unknown state '" +
                       lhs + "'");
    if (seen_p[static_cast<std::size_t>(it->second)])
      throw UsageError("line " + std::to_string(lineno) + ": duplicate P line for state '" + lhs +
                       "'");
    seen_p[static_cast<std::size_t>(it->second)] = true;
    rhs[static_cast<std::size_t>(it->second)] = split_labels(line.substr(close + 2));
  }

  if (!have_states) throw UsageError("missing 'states:' header");
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (!seen_p[s]) throw UsageError("missing P line for state '" + labels[s] + "'");
  return model_from_parts(labels, rhs, caps);
}

Model parse_model_json(std::string_view text, const Caps& caps) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("model JSON: top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "states" && key != "P") throw UsageError("model JSON: unknown key '" + key + "'");
  if (!doc.contains("states") || !doc["states"].is_array())
    throw UsageError("model JSON: missing 'states' array");
  if (!doc.contains("P") || !doc["P"].is_object())
    throw UsageError("model JSON: missing 'P' object");

  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (const auto& v : doc["states"]) {
    if (!v.is_string()) throw UsageError("model JSON: state labels must be strings");
    std::string lab = v.get<std::string>();
    if (!valid_label(lab)) throw UsageError("model JSON: invalid state label '" + lab + "'");
    if (!seen.insert(lab).second) throw UsageError("model JSON: duplicate state label '" + lab + "'");
    labels.push_back(std::move(lab));
  }
  if (labels.empty()) throw UsageError("model JSON: 'states' declares no states");

  std::vector<std::vector<std::string>> rhs(labels.size());
  std::vector<bool> seen_p(labels.size(), false);
  for (const auto& [key, value] : doc["P"].items()) {
    auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end())
      throw UsageError("model JSON: P references unknown state '" + key + "'");
    std::size_t s = static_cast<std::size_t>(it - labels.begin());
    seen_p[s] = true;
    if (!value.is_array()) throw UsageError("model JSON: P entries must be arrays");
    for (const auto& v : value) {
      if (!v.is_string()) throw UsageError("model JSON: P entries must contain strings");
      rhs[s].push_back(v.get<std::string>());
    }
  }
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (!seen_p[s]) throw UsageError("model JSON: missing P entry for state '" + labels[s] + "'");
  return model_from_parts(labels, rhs, caps);
}

}  // namespace

Model::Model(std::vector<std::string> labels, std::vector<Event> p, const Caps& caps)
    : labels_(std::move(labels)), p_(std::move(p)) {
  if (labels_.empty()) throw UsageError("a model needs at least one state");
  if (static_cast<int>(labels_.size()) > caps.max_states)
    throw CapError("model has " + std::to_string(labels_.size()) +
                   " states; cap is " + std::to_string(caps.max_states));
  if (static_cast<int>(labels_.size()) > kMaxUniverse)
    throw CapError("model exceeds the " + std::to_string(kMaxUniverse) + "-state ceiling");
  if (p_.size() != labels_.size())
    throw UsageError("possibility correspondence must have one entry per state");
  std::unordered_set<std::string_view> seen;
  for (const auto& lab : labels_) {
    if (!valid_label(lab)) throw UsageError("invalid state label '" + lab + "'");
    if (!seen.insert(lab).second) throw UsageError("duplicate state label '" + lab + "'");
  }
  for (const auto& e : p_)
    if (e.universe_size() != size())
      throw UsageError("possibility correspondence entry over the wrong universe");
}

std::optional<int> Model::find_state(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

int Model::state(std::string_view label) const {
  if (auto s = find_state(label)) return *s;
  throw UsageError("unknown state label '" + std::string(label) + "'");
}

bool valid_label(std::string_view label) {
  if (label.empty() || !is_label_start(label.front())) return false;
  return std::all_of(label.begin(), label.end(), is_label_char);
}

ModelClass classify(const Model& m) {
  const int n = m.size();
  ModelClass c;
  c.serial = true;
  c.reflexive = true;
  c.transitive = true;
  c.euclidean = true;
  for (int s = 0; s < n; ++s) {
    const Event& ps = m.possibility(s);
    if (ps.empty()) c.serial = false;
    if (!ps.contains(s)) c.reflexive = false;
    for (int t = 0; t < n; ++t) {
      if (!ps.contains(t)) continue;
      if (!m.possibility(t).subset_of(ps)) c.transitive = false;
      if (!ps.subset_of(m.possibility(t))) c.euclidean = false;
    }
  }
  c.partitional = c.reflexive;
  for (int s = 0; c.partitional && s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const Event& a = m.possibility(s);
      const Event& b = m.possibility(t);
      if (!a.equals(b) && !a.intersect(b).empty()) {
        c.partitional = false;
        break;
      }
    }
  return c;
}

Model parse_model(std::string_view text, const Caps& caps) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_model_json(text, caps);
    break;
  }
  return parse_model_text(text, caps);
}

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  out << "states:";
  for (const auto& lab : m.labels()) out << ' ' << lab;
  out << '\n';
  for (int s = 0; s < m.size(); ++s) {
    out << "P(" << m.label(s) << "):";
    for (int t = 0; t < m.size(); ++t)
      if (m.possibility(s).contains(t)) out << ' ' << m.label(t);
    out << '\n';
  }
  return out.str();
}

std::string format_event(const Model& m, const Event& e) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < m.size(); ++s) {
    if (!e.contains(s)) continue;
    if (!first) out += ", ";
    out += m.label(s);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace kuc
