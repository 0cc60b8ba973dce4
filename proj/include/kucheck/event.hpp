#pragma once

#include <bit>
#include <cstdint>

#include "kucheck/caps.hpp"
#include "kucheck/errors.hpp"

namespace kuc {

// Subset of a finite state space, one bit per state, state 0 at the least
// significant position. Two events combine only over the same universe.
class Event {
 public:
  Event() = default;

  static Event empty_set(int n) { return Event(0, checked(n)); }
  static Event full_set(int n) {
    n = checked(n);
    return Event(mask_for(n), n);
  }
  static Event singleton(int state, int n) {
    n = checked(n);
    if (state < 0 || state >= n) throw UsageError("state index out of range");
    return Event(std::uint64_t{1} << state, n);
  }
  static Event from_bits(std::uint64_t bits, int n) {
    n = checked(n);
    if ((bits & ~mask_for(n)) != 0) throw UsageError("event bits outside the universe");
    return Event(bits, n);
  }

  int universe_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  bool full() const { return bits_ == mask_for(n_); }
  int count() const { return std::popcount(bits_); }
  bool contains(int state) const {
    return state >= 0 && state < n_ && ((bits_ >> state) & 1) != 0;
  }

  Event complement() const { return Event(~bits_ & mask_for(n_), n_); }
  Event intersect(const Event& o) const { return Event(bits_ & same(o).bits_, n_); }
  Event unite(const Event& o) const { return Event(bits_ | same(o).bits_, n_); }
  Event difference(const Event& o) const { return Event(bits_ & ~same(o).bits_, n_); }
  bool subset_of(const Event& o) const { return (bits_ & ~same(o).bits_) == 0; }
  bool proper_subset_of(const Event& o) const { return subset_of(o) && bits_ != o.bits_; }
  bool equals(const Event& o) const { return same(o).bits_ == bits_; }

  Event operator~() const { return complement(); }
  Event operator&(const Event& o) const { return intersect(o); }
  Event operator|(const Event& o) const { return unite(o); }
  Event operator-(const Event& o) const { return difference(o); }

  // Structural comparison (bits and universe); never throws, usable in containers.
  friend bool operator==(const Event&, const Event&) = default;

 private:
  Event(std::uint64_t bits, int n) : bits_(bits), n_(n) {}

  static std::uint64_t mask_for(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  static int checked(int n) {
    if (n < 0 || n > kMaxUniverse) throw UsageError("universe size out of range");
    return n;
  }
  const Event& same(const Event& o) const {
    if (o.n_ != n_) throw UsageError("events over different universes");
    return o;
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

}  // namespace kuc
