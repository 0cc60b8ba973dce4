#include "kucheck/operators.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace kuc {

namespace {

Event standard_k(const Model& m, const Event& e) {
  Event out = Event::empty_set(m.size());
  for (int s = 0; s < m.size(); ++s)
    if (m.possibility(s).subset_of(e)) out = out | Event::singleton(s, m.size());
  return out;
}

void check_universe(const Model& m, const Event& e) {
  if (e.universe_size() != m.size())
    throw UsageError("event universe does not match the model");
}

void check_all_events_cap(const Model& m, const Caps& caps, const char* what) {
  if (m.size() > caps.all_events_cap)
    throw CapError(std::string(what) + " quantifies over all 2^n events; n=" +
                   std::to_string(m.size()) + " exceeds the cap of " +
                   std::to_string(caps.all_events_cap));
}

}  // namespace

const char* operator_name(OperatorKind kind) {
  return kind == OperatorKind::StandardK ? "K" : "K'";
}

const char* operator_id(OperatorKind kind) {
  return kind == OperatorKind::StandardK ? "k" : "kprime";
}

std::optional<OperatorKind> operator_from_id(std::string_view id) {
  if (id == "k") return OperatorKind::StandardK;
  if (id == "kprime") return OperatorKind::GeneralisedKPrime;
  return std::nullopt;
}

Event knowledge(const Model& m, OperatorKind kind, const Event& e, const Caps& caps) {
  check_universe(m, e);
  if (kind == OperatorKind::StandardK) return standard_k(m, e);
  if (e.full()) return m.universe() - global_unawareness(m, caps);
  return standard_k(m, e) - unawareness(m, e);
}

Event unawareness(const Model& m, const Event& e) {
  check_universe(m, e);
  Event acc = m.universe();
  Event x = e;
  std::unordered_set<std::uint64_t> seen;
  while (true) {
    x = ~standard_k(m, x);
    acc = acc & x;
    if (acc.empty()) return acc;
    if (!seen.insert(x.bits()).second) return acc;
  }
}

FixpointTrace unawareness_trace(const Model& m, const Event& e) {
  check_universe(m, e);
  FixpointTrace trace;
  Event acc = m.universe();
  Event x = e;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  while (true) {
    x = ~standard_k(m, x);
    trace.iterates.push_back(x);
    acc = acc & x;
    auto it = seen.find(x.bits());
    if (it != seen.end()) {
      trace.cycle_start = it->second;
      break;
    }
    seen.emplace(x.bits(), trace.iterates.size() - 1);
  }
  trace.result = acc;
  return trace;
}

Event unawareness_prefix(const Model& m, const Event& e, int depth) {
  check_universe(m, e);
  if (depth < 1) throw UsageError("unawareness prefix depth must be at least 1");
  Event acc = m.universe();
  Event x = e;
  for (int i = 0; i < depth; ++i) {
    x = ~standard_k(m, x);
    acc = acc & x;
    if (acc.empty()) break;
  }
  return acc;
}

Event awareness(const Model& m, const Event& e) {
  return m.universe() - unawareness(m, e);
}

Event global_unawareness(const Model& m, const Caps& caps) {
  check_all_events_cap(m, caps, "U(omega)");
  OperatorTable table(m, caps);
  return table.global_unawareness();
}

Event induced_unawareness(const Model& m, OperatorKind kind, const Event& e, const Caps& caps) {
  check_universe(m, e);
  if (kind == OperatorKind::StandardK) return unawareness(m, e);
  // K' is recomputed per iterate, including its omega special case.
  std::optional<Event> uomega;
  auto kprime = [&](const Event& x) {
    if (x.full()) {
      if (!uomega) uomega = global_unawareness(m, caps);
      return m.universe() - *uomega;
    }
    return standard_k(m, x) - unawareness(m, x);
  };
  Event acc = m.universe();
  Event x = e;
  std::unordered_set<std::uint64_t> seen;
  while (true) {
    x = ~kprime(x);
    acc = acc & x;
    if (acc.empty()) return acc;
    if (!seen.insert(x.bits()).second) return acc;
  }
}

OperatorTable::OperatorTable(const Model& m, const Caps& caps)
    : model_(&m), caps_(caps), n_(m.size()) {
  if (n_ > 24)
    throw CapError("all-events table infeasible for n=" + std::to_string(n_));
  full_ = Event::full_set(n_).bits();
  const std::size_t count = std::size_t{1} << n_;
  k_table_.resize(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::uint64_t k = 0;
    for (int s = 0; s < n_; ++s)
      if ((m.possibility(s).bits() & ~bits) == 0) k |= std::uint64_t{1} << s;
    k_table_[bits] = k;
  }
  u_table_.resize(count, 0);
  u_known_.assign(count, 0);
  uprime_table_.resize(count, 0);
  uprime_known_.assign(count, 0);
}

Event OperatorTable::event_of(std::uint64_t bits) const { return Event::from_bits(bits, n_); }

Event OperatorTable::not_k(const Event& e) const {
  return event_of(~k_table_[e.bits()] & full_);
}

Event OperatorTable::kprime(const Event& e) const {
  if (e.bits() == full_) return event_of(full_ & ~global_unawareness().bits());
  return event_of(k_table_[e.bits()] & ~unawareness(e).bits());
}

Event OperatorTable::knowledge(OperatorKind kind, const Event& e) const {
  if (e.universe_size() != n_) throw UsageError("event universe does not match the model");
  if (kind == OperatorKind::StandardK) return event_of(k_table_[e.bits()]);
  return kprime(e);
}

Event OperatorTable::unawareness(const Event& e) const {
  if (e.universe_size() != n_) throw UsageError("event universe does not match the model");
  const std::uint64_t start = e.bits();
  if (u_known_[start]) return event_of(u_table_[start]);
  std::uint64_t acc = full_;
  std::uint64_t x = start;
  std::unordered_set<std::uint64_t> seen;
  while (true) {
    x = ~k_table_[x] & full_;
    acc &= x;
    if (acc == 0) break;
    if (!seen.insert(x).second) break;
  }
  u_table_[start] = acc;
  u_known_[start] = 1;
  return event_of(acc);
}

Event OperatorTable::induced_unawareness(OperatorKind kind, const Event& e) const {
  if (kind == OperatorKind::StandardK) return unawareness(e);
  if (e.universe_size() != n_) throw UsageError("event universe does not match the model");
  const std::uint64_t start = e.bits();
  if (uprime_known_[start]) return event_of(uprime_table_[start]);
  Event acc = event_of(full_);
  Event x = e;
  std::unordered_set<std::uint64_t> seen;
  while (true) {
    x = event_of(full_ & ~kprime(x).bits());
    acc = acc & x;
    if (acc.empty()) break;
    if (!seen.insert(x.bits()).second) break;
  }
  uprime_table_[start] = acc.bits();
  uprime_known_[start] = 1;
  return acc;
}

Event OperatorTable::global_unawareness() const {
  if (!uomega_) {
    check_all_events_cap(*model_, caps_, "U(omega)");
    std::uint64_t acc = 0;
    const std::uint64_t count = std::uint64_t{1} << n_;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      acc |= unawareness(event_of(bits)).bits();
      if (acc == full_) break;
    }
    uomega_ = acc;
  }
  return event_of(*uomega_);
}

}  // namespace kuc
