#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kucheck/caps.hpp"
#include "kucheck/event.hpp"

namespace kuc {

// Finite state space with a possibility correspondence P : states -> events.
// Immutable after construction; P(s) may be empty (non-serial models are legal).
class Model {
 public:
  Model(std::vector<std::string> labels, std::vector<Event> p, const Caps& caps = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int s) const { return labels_[static_cast<std::size_t>(s)]; }
  const Event& possibility(int s) const { return p_[static_cast<std::size_t>(s)]; }
  Event universe() const { return Event::full_set(size()); }

  std::optional<int> find_state(std::string_view label) const;
  int state(std::string_view label) const;  // throws UsageError if unknown

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Event> p_;
};

struct ModelClass {
  bool serial = false;      // every P(s) nonempty
  bool reflexive = false;   // s in P(s) for every s
  bool transitive = false;  // t in P(s) implies P(t) subset of P(s)
  bool euclidean = false;   // t in P(s) implies P(s) subset of P(t)
  bool partitional = false; // reflexive and the P-images partition the space
};

ModelClass classify(const Model& m);

bool valid_label(std::string_view label);

// Accepts the line-oriented text format or JSON; sniffs by first non-blank
// byte ('{' selects JSON).
Model parse_model(std::string_view text, const Caps& caps = {});

// Canonical text form; parse(serialize(m)) reproduces m exactly.
std::string serialize_model(const Model& m);

// Event rendered with the model's labels in declaration order, e.g. "{a, b}".
std::string format_event(const Model& m, const Event& e);

}  // namespace kuc
