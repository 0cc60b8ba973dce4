#pragma once

namespace kuc {

// Events are single 64-bit words.
inline constexpr int kMaxUniverse = 64;

// Resource limits. max_states bounds model size; all_events_cap bounds
// operations that quantify over all 2^n events (U(omega), K' at omega,
// property/claim scans); enum_cap bounds exhaustive model enumeration.
struct Caps {
  int max_states = 16;
  int all_events_cap = 10;
  int enum_cap = 5;
};

}  // namespace kuc
