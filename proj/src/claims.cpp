#include "kucheck/claims.hpp"

#include <string>

namespace kuc {

namespace {

constexpr const char* kClaimIds[kClaimCount] = {
    "remark1",
    "theorem1",
    "theorem2",
    "remark2",
    "remark3-consistency",
    "eq-u02",
    "eq-u03",
    "dlr-chain",
    "dlrr-chain",
    "footnote8-symmetry",
    "discussion-collapse",
};

ClaimStep step(std::string desc, std::vector<NamedSet> sets, bool holds) {
  return {std::move(desc), std::move(sets), holds ? StepStatus::Holds : StepStatus::Fails};
}

ClaimStep info(std::string desc, std::vector<NamedSet> sets) {
  return {std::move(desc), std::move(sets), StepStatus::NotApplicable};
}

std::optional<Event> first_nontrivial(const OperatorTable& t) {
  const std::uint64_t total = std::uint64_t{1} << t.model().size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Event e = t.event_of(bits);
    if (!t.unawareness(e).empty()) return e;
  }
  return std::nullopt;
}

struct Builder {
  const Model& m;
  const OperatorTable& t;
  ClaimReport report;

  Event omega() const { return m.universe(); }
  Event empty() const { return Event::empty_set(m.size()); }
  Event k(const Event& e) const { return t.knowledge(OperatorKind::StandardK, e); }
  Event kp(const Event& e) const { return t.knowledge(OperatorKind::GeneralisedKPrime, e); }
  Event u(const Event& e) const { return t.unawareness(e); }
  Event up(const Event& e) const {
    return t.induced_unawareness(OperatorKind::GeneralisedKPrime, e);
  }

  // Returns the chosen event when the premise holds; records the premise step.
  std::optional<Event> premise(const std::optional<Event>& override_event) {
    std::optional<Event> chosen = override_event ? override_event : first_nontrivial(t);
    if (chosen && !u(*chosen).empty()) {
      report.steps.push_back(
          step("premise: some E has U(E) != empty", {{"E", *chosen}, {"U(E)", u(*chosen)}}, true));
      return chosen;
    }
    std::vector<NamedSet> sets;
    if (chosen) sets = {{"E", *chosen}, {"U(E)", u(*chosen)}};
    report.steps.push_back(step("premise: some E has U(E) != empty", std::move(sets), false));
    report.premise_status = false;
    report.verdict = Verdict::Vacuous;
    return std::nullopt;
  }
};

ClaimReport remark1(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Remark1, {}, true, Verdict::Verified}};
  if (!b.premise(std::nullopt)) return b.report;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Event e = t.event_of(bits);
    Event nk = ~b.k(e);
    Event knk = b.k(nk);
    if (!nk.subset_of(knk)) {
      b.report.steps.push_back(step("some E has ~K(E) not <= K(~K(E))",
                                    {{"E", e}, {"~K(E)", nk}, {"K(~K(E))", knk}}, true));
      return b.report;
    }
  }
  b.report.steps.push_back(step("some E has ~K(E) not <= K(~K(E))", {}, false));
  b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

ClaimReport theorem1(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Theorem1, {}, true, Verdict::Verified}};
  if (!b.premise(std::nullopt)) return b.report;
  Event uo = t.global_unawareness();
  b.report.steps.push_back(step("U(omega) != empty", {{"U(omega)", uo}}, !uo.empty()));
  Event kpo = b.kp(b.omega());
  bool concl = !kpo.full();
  b.report.steps.push_back(step("K'(omega) != omega", {{"K'(omega)", kpo}}, concl));
  if (uo.empty() || !concl) b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

ClaimReport theorem2(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Theorem2, {}, true, Verdict::Verified}};
  const std::uint64_t total = std::uint64_t{1} << m.size();
  bool proper_ok = true;
  for (std::uint64_t bits = 0; bits + 1 < total && proper_ok; ++bits) {
    Event e = t.event_of(bits);
    Event lhs = b.kp(e);
    Event rhs = b.k(e);
    if (!lhs.equals(rhs)) {
      proper_ok = false;
      b.report.steps.push_back(step("K'(E) = K(E) for every E proper subset of omega",
                                    {{"E", e}, {"K'(E)", lhs}, {"K(E)", rhs}}, false));
    }
  }
  if (proper_ok)
    b.report.steps.push_back(step("K'(E) = K(E) for every E proper subset of omega", {}, true));
  Event kpo = b.kp(b.omega());
  Event rhs = b.omega() - t.global_unawareness();
  bool omega_ok = kpo.equals(rhs);
  b.report.steps.push_back(step("K'(omega) = omega \\ U(omega)",
                                {{"K'(omega)", kpo}, {"omega \\ U(omega)", rhs}}, omega_ok));
  if (!proper_ok || !omega_ok) b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

ClaimReport remark2(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Remark2, {}, true, Verdict::Verified}};
  Event uo = t.global_unawareness();
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Event e = t.event_of(bits);
    Event ue = b.u(e);
    if (!ue.subset_of(uo)) {
      b.report.steps.push_back(step("U(E) <= U(omega) for every E",
                                    {{"E", e}, {"U(E)", ue}, {"U(omega)", uo}}, false));
      b.report.verdict = Verdict::RefutedStep;
      return b.report;
    }
  }
  b.report.steps.push_back(step("U(E) <= U(omega) for every E", {{"U(omega)", uo}}, true));
  return b.report;
}

ClaimReport remark3_consistency(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Remark3Consistency, {}, true, Verdict::Verified}};
  Event memoized = t.global_unawareness();
  Event fresh = Event::empty_set(m.size());
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits)
    fresh = fresh | unawareness(m, t.event_of(bits));
  bool ok = memoized.equals(fresh);
  b.report.steps.push_back(step("union of U(E) over all events matches a fresh recomputation",
                                {{"U(omega) [memoized]", memoized}, {"U(omega) [recomputed]", fresh}},
                                ok));
  b.report.steps.push_back(
      info("Uiter(omega): iterated definition applied at omega",
           {{"Uiter(omega)", unawareness(m, m.universe())}}));
  if (!ok) b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

ClaimReport eq_u02(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::EqU02, {}, true, Verdict::Verified}};
  Event uo = t.global_unawareness();
  Event kpu = b.kp(uo);
  bool s1 = kpu.empty();
  b.report.steps.push_back(
      step("K'(U(omega)) = empty", {{"U(omega)", uo}, {"K'(U(omega))", kpu}}, s1));
  Event nkpu = ~kpu;
  bool s2 = nkpu.full();
  b.report.steps.push_back(step("~K'(U(omega)) = omega", {{"~K'(U(omega))", nkpu}}, s2));
  Event upu = b.up(uo);
  bool concl = upu.equals(uo);
  b.report.steps.push_back(
      step("U'(U(omega)) = U(omega)", {{"U'(U(omega))", upu}, {"U(omega)", uo}}, concl));
  if (!concl)
    b.report.verdict = Verdict::RefutedStep;
  else if (!s1 || !s2)
    b.report.verdict = Verdict::VerifiedConclusion;
  return b.report;
}

ClaimReport eq_u03(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::EqU03, {}, true, Verdict::Verified}};
  Event uo = t.global_unawareness();
  Event kpe = b.kp(b.empty());
  bool s1 = kpe.empty();
  b.report.steps.push_back(step("K'(empty) = empty", {{"K'(empty)", kpe}}, s1));
  Event nkpe = ~kpe;
  bool s2 = nkpe.full();
  b.report.steps.push_back(step("~K'(empty) = omega", {{"~K'(empty)", nkpe}}, s2));
  Event kpn = b.kp(nkpe);
  Event rhs = b.omega() - uo;
  bool s3 = kpn.equals(rhs);
  b.report.steps.push_back(step("K'(~K'(empty)) = omega \\ U(omega)",
                                {{"K'(~K'(empty))", kpn}, {"omega \\ U(omega)", rhs}}, s3));
  Event nkpn = ~kpn;
  bool s4 = nkpn.equals(uo);
  b.report.steps.push_back(
      step("~K'(~K'(empty)) = U(omega)", {{"~K'(~K'(empty))", nkpn}, {"U(omega)", uo}}, s4));
  Event upe = b.up(b.empty());
  bool concl = upe.equals(uo);
  b.report.steps.push_back(
      step("U'(empty) = U(omega)", {{"U'(empty)", upe}, {"U(omega)", uo}}, concl));
  if (!concl)
    b.report.verdict = Verdict::RefutedStep;
  else if (!(s1 && s2 && s3 && s4))
    b.report.verdict = Verdict::VerifiedConclusion;
  return b.report;
}

ClaimReport dlr_chain(const Model& m, const OperatorTable& t, std::optional<Event> chosen) {
  Builder b{m, t, {ClaimId::DlrChain, {}, true, Verdict::Verified}};
  auto e = b.premise(chosen);
  if (!e) return b.report;
  Event ue = b.u(*e);
  Event uue = b.u(ue);
  bool s1 = ue.subset_of(uue);
  b.report.steps.push_back(step("U(E) <= U(U(E))", {{"U(E)", ue}, {"U(U(E))", uue}}, s1));
  Event nknk = ~b.k(~b.k(ue));
  bool s2 = uue.subset_of(nknk);
  b.report.steps.push_back(
      step("U(U(E)) <= ~K(~K(U(E)))", {{"U(U(E))", uue}, {"~K(~K(U(E)))", nknk}}, s2));
  Event nko = ~b.k(b.omega());
  bool s3 = nknk.equals(nko);
  b.report.steps.push_back(step("~K(~K(U(E))) = ~K(omega)",
                                {{"~K(~K(U(E)))", nknk}, {"~K(omega)", nko}, {"K(U(E))", b.k(ue)}},
                                s3));
  bool s4 = nko.empty();
  b.report.steps.push_back(step("~K(omega) = empty", {{"~K(omega)", nko}}, s4));
  bool concl = ue.empty();
  b.report.steps.push_back(step("U(E) <= empty", {{"U(E)", ue}}, concl));
  if (!concl)
    b.report.verdict = Verdict::RefutedStep;
  else if (!(s1 && s2 && s3 && s4))
    b.report.verdict = Verdict::VerifiedConclusion;
  return b.report;
}

ClaimReport dlrr_chain(const Model& m, const OperatorTable& t, std::optional<Event> chosen) {
  Builder b{m, t, {ClaimId::DlrrChain, {}, true, Verdict::Verified}};
  auto e = b.premise(chosen);
  if (!e) return b.report;
  Event ue = b.u(*e);
  // U(U(E)) is ambiguous between the two induced operators; both readings are
  // reported.
  Event uue = b.u(ue);
  Event upue = b.up(ue);
  bool s1 = ue.subset_of(uue);
  b.report.steps.push_back(step("U(E) <= U(U(E))", {{"U(E)", ue}, {"U(U(E))", uue}}, s1));
  bool s2 = ue.subset_of(upue);
  b.report.steps.push_back(step("U(E) <= U'(U(E))", {{"U(E)", ue}, {"U'(U(E))", upue}}, s2));
  Event nkpnkp = ~b.kp(~b.kp(ue));
  bool s3 = uue.subset_of(nkpnkp);
  b.report.steps.push_back(
      step("U(U(E)) <= ~K'(~K'(U(E)))", {{"U(U(E))", uue}, {"~K'(~K'(U(E)))", nkpnkp}}, s3));
  bool s4 = upue.subset_of(nkpnkp);
  b.report.steps.push_back(
      step("U'(U(E)) <= ~K'(~K'(U(E)))", {{"U'(U(E))", upue}, {"~K'(~K'(U(E)))", nkpnkp}}, s4));
  Event nkpo = ~b.kp(b.omega());
  bool s5 = nkpnkp.equals(nkpo);
  b.report.steps.push_back(
      step("~K'(~K'(U(E))) = ~K'(omega)",
           {{"~K'(~K'(U(E)))", nkpnkp}, {"~K'(omega)", nkpo}, {"K'(U(E))", b.kp(ue)}}, s5));
  Event uo = t.global_unawareness();
  bool s6 = nkpo.equals(uo);
  b.report.steps.push_back(
      step("~K'(omega) = U(omega)", {{"~K'(omega)", nkpo}, {"U(omega)", uo}}, s6));
  bool concl = ue.subset_of(uo);
  b.report.steps.push_back(
      step("U(E) <= U(omega)", {{"U(E)", ue}, {"U(omega)", uo}}, concl));
  if (!concl)
    b.report.verdict = Verdict::RefutedStep;
  else if (!(s1 && s2 && s3 && s4 && s5 && s6))
    b.report.verdict = Verdict::VerifiedConclusion;
  return b.report;
}

ClaimReport footnote8_symmetry(const Model& m, const OperatorTable& t) {
  Builder b{m, t, {ClaimId::Footnote8Symmetry, {}, true, Verdict::Verified}};
  if (!b.premise(std::nullopt)) return b.report;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Event e = t.event_of(bits);
    Event ue = b.u(e);
    Event uc = b.u(~e);
    if (!ue.equals(uc)) {
      b.report.steps.push_back(step("some E has U(E) != U(~E)",
                                    {{"E", e}, {"U(E)", ue}, {"U(~E)", uc}}, true));
      return b.report;
    }
  }
  b.report.steps.push_back(step("some E has U(E) != U(~E)", {}, false));
  b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

ClaimReport discussion_collapse(const Model& m, const OperatorTable& t,
                                std::optional<Event> chosen) {
  Builder b{m, t, {ClaimId::DiscussionCollapse, {}, true, Verdict::Verified}};
  Event start = chosen ? *chosen : Event::empty_set(m.size());
  ModelClass cls = classify(m);
  std::vector<NamedSet> serial_sets;
  if (!cls.serial)
    for (int s = 0; s < m.size(); ++s)
      if (m.possibility(s).empty()) {
        serial_sets.push_back({"P(" + m.label(s) + ")", m.possibility(s)});
        break;
      }
  b.report.steps.push_back(step("model is serial", std::move(serial_sets), cls.serial));

  FixpointTrace trace = unawareness_trace(m, start);
  bool touches = false;
  std::vector<NamedSet> iterate_sets = {{"E", start}};
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    iterate_sets.push_back({"X" + std::to_string(i + 1), trace.iterates[i]});
    if (trace.iterates[i].full()) touches = true;
  }
  b.report.steps.push_back(
      step("some iterate of ~K from E reaches omega", std::move(iterate_sets), touches));

  if (!cls.serial || !touches) {
    b.report.premise_status = false;
    b.report.verdict = Verdict::PremiseNotMet;
    return b.report;
  }
  bool concl = trace.result.empty();
  b.report.steps.push_back(
      step("intersection of all iterates = empty", {{"intersection", trace.result}}, concl));
  if (!concl) b.report.verdict = Verdict::RefutedStep;
  return b.report;
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = {
      ClaimId::Remark1,        ClaimId::Theorem1,    ClaimId::Theorem2,
      ClaimId::Remark2,        ClaimId::Remark3Consistency,
      ClaimId::EqU02,          ClaimId::EqU03,       ClaimId::DlrChain,
      ClaimId::DlrrChain,      ClaimId::Footnote8Symmetry,
      ClaimId::DiscussionCollapse,
  };
  return ids;
}

const char* claim_id_string(ClaimId c) { return kClaimIds[static_cast<int>(c)]; }

std::optional<ClaimId> claim_from_string(std::string_view s) {
  for (int i = 0; i < kClaimCount; ++i)
    if (s == kClaimIds[i]) return static_cast<ClaimId>(i);
  return std::nullopt;
}

const char* step_status_string(StepStatus s) {
  switch (s) {
    case StepStatus::Holds: return "holds";
    case StepStatus::Fails: return "fails";
    case StepStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::VerifiedConclusion: return "verified-conclusion";
    case Verdict::PremiseNotMet: return "premise-not-met";
    case Verdict::RefutedStep: return "refuted-step";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::Verified, Verdict::VerifiedConclusion, Verdict::PremiseNotMet,
                    Verdict::RefutedStep, Verdict::Vacuous})
    if (s == verdict_string(v)) return v;
  return std::nullopt;
}

bool verdict_is_success(Verdict v) {
  return v == Verdict::Verified || v == Verdict::VerifiedConclusion || v == Verdict::Vacuous;
}

ClaimReport verify_claim(const Model& m, ClaimId c, std::optional<Event> chosen_event,
                         const Caps& caps) {
  if (chosen_event) {
    if (chosen_event->universe_size() != m.size())
      throw UsageError("event universe does not match the model");
    if (c != ClaimId::DlrChain && c != ClaimId::DlrrChain && c != ClaimId::DiscussionCollapse)
      throw UsageError(std::string("claim '") + claim_id_string(c) + "' does not take an event");
  }
  OperatorTable t(m, caps);
  switch (c) {
    case ClaimId::Remark1: return remark1(m, t);
    case ClaimId::Theorem1: return theorem1(m, t);
    case ClaimId::Theorem2: return theorem2(m, t);
    case ClaimId::Remark2: return remark2(m, t);
    case ClaimId::Remark3Consistency: return remark3_consistency(m, t);
    case ClaimId::EqU02: return eq_u02(m, t);
    case ClaimId::EqU03: return eq_u03(m, t);
    case ClaimId::DlrChain: return dlr_chain(m, t, chosen_event);
    case ClaimId::DlrrChain: return dlrr_chain(m, t, chosen_event);
    case ClaimId::Footnote8Symmetry: return footnote8_symmetry(m, t);
    case ClaimId::DiscussionCollapse: return discussion_collapse(m, t, chosen_event);
  }
  throw UsageError("unknown claim");
}

}  // namespace kuc
