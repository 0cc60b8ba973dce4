#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "kucheck/claims.hpp"
#include "kucheck/formula.hpp"
#include "kucheck/properties.hpp"

namespace kuc {

// Enumeration of every possibility correspondence on n states. The index of a
// model is its rank in the unconstrained mixed-radix order (one base-2^n digit
// per state, state 0 least significant); constraint filters skip indices
// without renumbering, so indices are stable across constraint sets.
struct EnumSpec {
  int n = 2;
  bool serial = false;
  bool reflexive = false;
  bool transitive = false;
  bool euclidean = false;
  bool partitional = false;
  bool non_partitional = false;
  int worker_count = 1;

  void validate(const Caps& caps = {}) const;  // UsageError / CapError
  std::uint64_t unconstrained_total() const;   // (2^n)^n

  friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

struct PropertyTarget {
  PropertyId property;
  OperatorKind op = OperatorKind::StandardK;
  bool expect_holds = true;
};
struct ClaimTarget {
  ClaimId claim;
  Verdict verdict = Verdict::Verified;
};
struct FormulaTarget {
  formula::AstPtr predicate;  // must be Predicate-rooted
};
using SearchTarget = std::variant<PropertyTarget, ClaimTarget, FormulaTarget>;

enum class SearchMode { First, All, Count };

struct Match {
  std::uint64_t index = 0;
  Model model;

  friend bool operator==(const Match&, const Match&) = default;
};

struct SearchResult {
  std::uint64_t models_scanned = 0;  // models admitted by the constraints
  std::uint64_t match_count = 0;
  std::vector<Match> matches;  // First: at most one; All: every match; Count: empty

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct Violation {
  std::uint64_t index = 0;
  Model model;
  std::string check;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepReport {
  EnumSpec spec;
  std::uint64_t models_scanned = 0;
  std::vector<Violation> violations;  // ordered by model index
  std::array<std::uint64_t, kPropertyCount> counts{};  // StandardK satisfaction tallies

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// Streams admitted models in index order; stop by returning false.
void enumerate_models(const EnumSpec& spec,
                      const std::function<bool(std::uint64_t, const Model&)>& fn,
                      const Caps& caps = {});

// Serial reference implementations, kept as the determinism oracle for the
// parallel kernels.
SearchResult search_serial(const EnumSpec& spec, const SearchTarget& target, SearchMode mode,
                           const Caps& caps = {});
SweepReport invariant_sweep_serial(const EnumSpec& spec, const Caps& caps = {});

// Parallel entry points; contiguous index ranges per worker, merged in range
// order. Output is identical to the serial reference for every worker_count.
SearchResult search(const EnumSpec& spec, const SearchTarget& target, SearchMode mode,
                    const Caps& caps = {});
SweepReport invariant_sweep(const EnumSpec& spec, const Caps& caps = {});

// First failed check of the unconditional invariant suite, empty if all hold.
// Exposed for tests and the sweep kernel.
std::optional<std::string> invariant_violation(const OperatorTable& table);

}  // namespace kuc
