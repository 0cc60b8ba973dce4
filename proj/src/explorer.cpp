#include "kucheck/explorer.hpp"

#include <algorithm>
#include <array>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kuc {

namespace {

constexpr int kEnumHardCap = 7;  // (2^8)^8 overflows the 64-bit index space

using Masks = std::array<std::uint64_t, kEnumHardCap>;

void decode(std::uint64_t index, int n, Masks& masks) {
  const std::uint64_t digit = (std::uint64_t{1} << n) - 1;
  for (int s = 0; s < n; ++s) {
    masks[static_cast<std::size_t>(s)] = index & digit;
    index >>= n;
  }
}

bool admits(const EnumSpec& spec, const Masks& masks) {
  const int n = spec.n;
  if (spec.serial)
    for (int s = 0; s < n; ++s)
      if (masks[static_cast<std::size_t>(s)] == 0) return false;
  if (spec.reflexive)
    for (int s = 0; s < n; ++s)
      if ((masks[static_cast<std::size_t>(s)] >> s & 1) == 0) return false;
  if (spec.transitive || spec.euclidean) {
    for (int s = 0; s < n; ++s) {
      const std::uint64_t ps = masks[static_cast<std::size_t>(s)];
      for (int t = 0; t < n; ++t) {
        if ((ps >> t & 1) == 0) continue;
        const std::uint64_t pt = masks[static_cast<std::size_t>(t)];
        if (spec.transitive && (pt & ~ps) != 0) return false;
        if (spec.euclidean && (ps & ~pt) != 0) return false;
      }
    }
  }
  if (spec.partitional || spec.non_partitional) {
    bool partitional = true;
    for (int s = 0; partitional && s < n; ++s)
      if ((masks[static_cast<std::size_t>(s)] >> s & 1) == 0) partitional = false;
    for (int s = 0; partitional && s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        const std::uint64_t a = masks[static_cast<std::size_t>(s)];
        const std::uint64_t b = masks[static_cast<std::size_t>(t)];
        if (a != b && (a & b) != 0) {
          partitional = false;
          break;
        }
      }
    if (spec.partitional && !partitional) return false;
    if (spec.non_partitional && partitional) return false;
  }
  return true;
}

std::vector<std::string> canonical_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) out.push_back("s" + std::to_string(s));
  return out;
}

Model build_model(const std::vector<std::string>& labels, const Masks& masks, int n) {
  std::vector<Event> p;
  p.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s)
    p.push_back(Event::from_bits(masks[static_cast<std::size_t>(s)], n));
  return Model(labels, std::move(p));
}

bool target_matches(const SearchTarget& target, const Model& m, const Caps& caps) {
  if (const auto* pt = std::get_if<PropertyTarget>(&target))
    return check_property(m, pt->op, pt->property, caps).holds == pt->expect_holds;
  if (const auto* ct = std::get_if<ClaimTarget>(&target))
    return verify_claim(m, ct->claim, std::nullopt, caps).verdict == ct->verdict;
  const auto& ft = std::get<FormulaTarget>(target);
  return std::get<bool>(formula::eval_formula(m, *ft.predicate, caps));
}

void validate_target(const SearchTarget& target) {
  if (const auto* ft = std::get_if<FormulaTarget>(&target)) {
    if (!ft->predicate || !formula::is_predicate(*ft->predicate))
      throw UsageError("formula target must be a predicate (=, <= or <)");
  }
}

struct ChunkOut {
  std::uint64_t scanned = 0;
  std::uint64_t match_count = 0;
  std::vector<Match> matches;
  std::vector<Violation> violations;
  std::array<std::uint64_t, kPropertyCount> counts{};
};

ChunkOut search_range(const EnumSpec& spec, const SearchTarget& target, SearchMode mode,
                      std::uint64_t lo, std::uint64_t hi, const Caps& caps) {
  ChunkOut out;
  const auto labels = canonical_labels(spec.n);
  Masks masks{};
  for (std::uint64_t index = lo; index < hi; ++index) {
    decode(index, spec.n, masks);
    if (!admits(spec, masks)) continue;
    ++out.scanned;
    Model m = build_model(labels, masks, spec.n);
    if (!target_matches(target, m, caps)) continue;
    ++out.match_count;
    if (mode == SearchMode::All) out.matches.push_back({index, std::move(m)});
  }
  return out;
}

ChunkOut sweep_range(const EnumSpec& spec, std::uint64_t lo, std::uint64_t hi, const Caps& caps) {
  ChunkOut out;
  const auto labels = canonical_labels(spec.n);
  Masks masks{};
  for (std::uint64_t index = lo; index < hi; ++index) {
    decode(index, spec.n, masks);
    if (!admits(spec, masks)) continue;
    ++out.scanned;
    Model m = build_model(labels, masks, spec.n);
    OperatorTable table(m, caps);
    if (auto bad = invariant_violation(table))
      out.violations.push_back({index, m, *bad});
    for (PropertyId p : all_properties())
      if (check_property(table, OperatorKind::StandardK, p).holds)
        ++out.counts[static_cast<std::size_t>(p)];
  }
  return out;
}

// Contiguous ranges, one per worker; the merge below restores global order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges(std::uint64_t total, int workers) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(workers));
  for (int r = 0; r < workers; ++r) {
    const std::uint64_t lo = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(r) +
                             std::min<std::uint64_t>(static_cast<std::uint64_t>(r), total % static_cast<std::uint64_t>(workers));
    const std::uint64_t len = total / static_cast<std::uint64_t>(workers) +
                              (static_cast<std::uint64_t>(r) < total % static_cast<std::uint64_t>(workers) ? 1 : 0);
    out.emplace_back(lo, lo + len);
  }
  return out;
}

}  // namespace

void EnumSpec::validate(const Caps& caps) const {
  if (n < 1) throw UsageError("enumeration needs at least one state");
  if (worker_count < 1) throw UsageError("worker count must be at least 1");
  if (partitional && non_partitional)
    throw UsageError("constraints 'partitional' and 'non-partitional' contradict each other");
  if (n > caps.enum_cap)
    throw CapError("enumeration at n=" + std::to_string(n) + " exceeds the cap of " +
                   std::to_string(caps.enum_cap));
  if (n > kEnumHardCap)
    throw CapError("enumeration index space overflows 64 bits beyond n=" +
                   std::to_string(kEnumHardCap));
}

std::uint64_t EnumSpec::unconstrained_total() const {
  if (n < 1 || n > kEnumHardCap)
    throw CapError("enumeration index space overflows 64 bits beyond n=" +
                   std::to_string(kEnumHardCap));
  return std::uint64_t{1} << (n * n);  // (2^n)^n
}

void enumerate_models(const EnumSpec& spec,
                      const std::function<bool(std::uint64_t, const Model&)>& fn,
                      const Caps& caps) {
  spec.validate(caps);
  const auto labels = canonical_labels(spec.n);
  const std::uint64_t total = spec.unconstrained_total();
  Masks masks{};
  for (std::uint64_t index = 0; index < total; ++index) {
    decode(index, spec.n, masks);
    if (!admits(spec, masks)) continue;
    if (!fn(index, build_model(labels, masks, spec.n))) return;
  }
}

std::optional<std::string> invariant_violation(const OperatorTable& t) {
  const Model& m = t.model();
  const int n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  const Event omega = m.universe();
  auto k = [&](const Event& e) { return t.knowledge(OperatorKind::StandardK, e); };
  auto kp = [&](const Event& e) { return t.knowledge(OperatorKind::GeneralisedKPrime, e); };

  if (!k(omega).full()) return "necessitation";
  for (std::uint64_t b1 = 0; b1 < total; ++b1) {
    const Event e1 = t.event_of(b1);
    const Event k1 = k(e1);
    for (std::uint64_t b2 = 0; b2 < total; ++b2) {
      const Event e2 = t.event_of(b2);
      if (e1.subset_of(e2) && !k1.subset_of(k(e2))) return "monotonicity";
      if (!k(e1 & e2).equals(k1 & k(e2))) return "conjunction";
    }
  }

  const Event uo = t.global_unawareness();
  bool nontrivial = false;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Event e = t.event_of(bits);
    const Event ue = t.unawareness(e);
    if (!ue.empty()) nontrivial = true;
    if (!ue.subset_of(~k(e) & ~k(~k(e)))) return "plausibility";
    if (!(k(e) & ue).empty()) return "k-u-disjoint";
    if (bits + 1 != total && !kp(e).equals(k(e))) return "theorem2-proper";
    if (!ue.subset_of(uo)) return "remark2";
  }
  if (!kp(omega).equals(omega - uo)) return "theorem2-omega";

  if (nontrivial) {
    bool negative_introspection = true;
    for (std::uint64_t bits = 0; bits < total && negative_introspection; ++bits) {
      const Event nk = ~k(t.event_of(bits));
      if (!nk.subset_of(k(nk))) negative_introspection = false;
    }
    if (negative_introspection) return "remark1";
    if (kp(omega).full()) return "theorem1";
    bool ku = true, au = true;
    for (std::uint64_t bits = 0; bits < total && (ku || au); ++bits) {
      const Event ue = t.unawareness(t.event_of(bits));
      if (!k(ue).empty()) ku = false;
      if (!ue.subset_of(t.unawareness(ue))) au = false;
    }
    if (ku && au) return "dlr-incompatibility";
  }
  return std::nullopt;
}

SearchResult search_serial(const EnumSpec& spec, const SearchTarget& target, SearchMode mode,
                           const Caps& caps) {
  spec.validate(caps);
  validate_target(target);
  SearchResult result;
  enumerate_models(
      spec,
      [&](std::uint64_t index, const Model& m) {
        ++result.models_scanned;
        if (target_matches(target, m, caps)) {
          ++result.match_count;
          if (mode != SearchMode::Count) result.matches.push_back({index, m});
          if (mode == SearchMode::First) return false;
        }
        return true;
      },
      caps);
  return result;
}

SweepReport invariant_sweep_serial(const EnumSpec& spec, const Caps& caps) {
  spec.validate(caps);
  SweepReport report;
  report.spec = spec;
  enumerate_models(
      spec,
      [&](std::uint64_t index, const Model& m) {
        ++report.models_scanned;
        OperatorTable table(m, caps);
        if (auto bad = invariant_violation(table))
          report.violations.push_back({index, m, *bad});
        for (PropertyId p : all_properties())
          if (check_property(table, OperatorKind::StandardK, p).holds)
            ++report.counts[static_cast<std::size_t>(p)];
        return true;
      },
      caps);
  return report;
}

SearchResult search(const EnumSpec& spec, const SearchTarget& target, SearchMode mode,
                    const Caps& caps) {
  spec.validate(caps);
  validate_target(target);
  // First-match scans stop at the minimal index; they stay serial so that
  // models_scanned is well defined.
  if (mode == SearchMode::First || spec.worker_count == 1)
    return search_serial(spec, target, mode, caps);

  const std::uint64_t total = spec.unconstrained_total();
  const auto parts = ranges(total, spec.worker_count);
  std::vector<ChunkOut> chunks(parts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.worker_count)
#endif
  for (int r = 0; r < static_cast<int>(parts.size()); ++r)
    chunks[static_cast<std::size_t>(r)] =
        search_range(spec, target, mode, parts[static_cast<std::size_t>(r)].first,
                     parts[static_cast<std::size_t>(r)].second, caps);

  SearchResult result;
  for (auto& c : chunks) {
    result.models_scanned += c.scanned;
    result.match_count += c.match_count;
    for (auto& match : c.matches) result.matches.push_back(std::move(match));
  }
  return result;
}

SweepReport invariant_sweep(const EnumSpec& spec, const Caps& caps) {
  spec.validate(caps);
  if (spec.worker_count == 1) return invariant_sweep_serial(spec, caps);

  const std::uint64_t total = spec.unconstrained_total();
  const auto parts = ranges(total, spec.worker_count);
  std::vector<ChunkOut> chunks(parts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.worker_count)
#endif
  for (int r = 0; r < static_cast<int>(parts.size()); ++r)
    chunks[static_cast<std::size_t>(r)] =
        sweep_range(spec, parts[static_cast<std::size_t>(r)].first,
                    parts[static_cast<std::size_t>(r)].second, caps);

  SweepReport report;
  report.spec = spec;
  for (auto& c : chunks) {
    report.models_scanned += c.scanned;
    for (auto& v : c.violations) report.violations.push_back(std::move(v));
    for (std::size_t i = 0; i < kPropertyCount; ++i) report.counts[i] += c.counts[i];
  }
  return report;
}

}  // namespace kuc
