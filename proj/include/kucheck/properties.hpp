#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kucheck/operators.hpp"

namespace kuc {

enum class PropertyId {
  Necessitation,          // K(omega) = omega
  RNecessitation,         // K'(omega) = omega \ U(omega)
  NonDelusion,            // K(E) subset of E
  Conjunction,            // K(E1 & E2) = K(E1) & K(E2)
  Monotonicity,           // E1 subset of E2 implies K(E1) subset of K(E2)
  PositiveIntrospection,  // K(E) subset of K(K(E))
  NegativeIntrospection,  // ~K(E) subset of K(~K(E))
  Plausibility,           // U(E) subset of ~K(E) & ~K(~K(E))
  KuIntrospection,        // K(U(E)) = empty
  AuIntrospection,        // U(E) subset of U(U(E))
  Symmetry,               // U(E) = U(~E)
  NontrivialUnawareness,  // some E has U(E) != empty (existential, informational)
};

inline constexpr int kPropertyCount = 12;

const std::array<PropertyId, kPropertyCount>& all_properties();
const char* property_id_string(PropertyId p);  // kebab-case, e.g. "ku-introspection"
std::optional<PropertyId> property_from_string(std::string_view s);

struct NamedSet {
  std::string name;
  Event set;
};

// Witness is the lexicographically first failing event by bit pattern
// (state 0 = least significant); for the existential property it is the first
// satisfying event instead. detail carries the computed sets at the witness.
struct PropertyReport {
  PropertyId property;
  OperatorKind op;
  bool holds = false;
  std::optional<Event> witness;
  std::vector<NamedSet> detail;
};

PropertyReport check_property(const Model& m, OperatorKind kind, PropertyId p,
                              const Caps& caps = {});
PropertyReport check_property(const OperatorTable& table, OperatorKind kind, PropertyId p);

// All properties in declaration order, StandardK row before GeneralisedKPrime.
std::vector<PropertyReport> property_matrix(const Model& m, const Caps& caps = {});

}  // namespace kuc
