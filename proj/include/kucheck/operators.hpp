#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kucheck/caps.hpp"
#include "kucheck/model.hpp"

namespace kuc {

enum class OperatorKind {
  StandardK,          // K(E) = { s | P(s) subset of E }
  GeneralisedKPrime,  // K'(E) = K(E) \ U(E); K'(omega) = omega \ U(omega)
};

const char* operator_name(OperatorKind kind);     // "K" / "K'"
const char* operator_id(OperatorKind kind);       // "k" / "kprime"
std::optional<OperatorKind> operator_from_id(std::string_view id);

// Iterates X1 = ~K(E), X2 = ~K(X1), ... recorded until the first repeat.
// iterates[iterates.size()-1] equals iterates[cycle_start]; result is the
// intersection of all listed iterates.
struct FixpointTrace {
  std::vector<Event> iterates;
  std::size_t cycle_start = 0;
  Event result;
};

Event knowledge(const Model& m, OperatorKind kind, const Event& e, const Caps& caps = {});

// Intersection of all iterates of ~K starting from E, with early exit once the
// running intersection reaches the empty set.
Event unawareness(const Model& m, const Event& e);

// Same fixed point without early exit, carrying the full iterate list.
FixpointTrace unawareness_trace(const Model& m, const Event& e);

// Intersection of the first `depth` iterates only (depth >= 1).
Event unawareness_prefix(const Model& m, const Event& e, int depth);

// A(E) = omega \ U(E).
Event awareness(const Model& m, const Event& e);

// U(omega) = union of U(E) over all 2^n events. Requires n <= all_events_cap.
Event global_unawareness(const Model& m, const Caps& caps = {});

// Fixed point of iterating the complement of knowledge(kind). With StandardK
// this equals unawareness; with GeneralisedKPrime it is U'.
Event induced_unawareness(const Model& m, OperatorKind kind, const Event& e,
                          const Caps& caps = {});

// Memoizing evaluator for workloads that touch many events of one model.
// Precomputes K over all 2^n events and caches U/U'/U(omega) lazily. Not
// shareable across threads; build one per worker.
class OperatorTable {
 public:
  explicit OperatorTable(const Model& m, const Caps& caps = {});

  const Model& model() const { return *model_; }
  Event event_of(std::uint64_t bits) const;

  Event knowledge(OperatorKind kind, const Event& e) const;
  Event not_k(const Event& e) const;
  Event unawareness(const Event& e) const;
  Event induced_unawareness(OperatorKind kind, const Event& e) const;
  Event global_unawareness() const;

 private:
  Event kprime(const Event& e) const;

  const Model* model_;
  Caps caps_;
  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> k_table_;
  mutable std::vector<std::uint64_t> u_table_;
  mutable std::vector<std::uint8_t> u_known_;
  mutable std::vector<std::uint64_t> uprime_table_;
  mutable std::vector<std::uint8_t> uprime_known_;
  mutable std::optional<std::uint64_t> uomega_;
};

}  // namespace kuc
