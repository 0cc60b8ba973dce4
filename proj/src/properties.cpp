#include "kucheck/properties.hpp"

#include <string>

namespace kuc {

namespace {

constexpr const char* kPropertyIds[kPropertyCount] = {
    "necessitation",
    "r-necessitation",
    "non-delusion",
    "conjunction",
    "monotonicity",
    "positive-introspection",
    "negative-introspection",
    "plausibility",
    "ku-introspection",
    "au-introspection",
    "symmetry",
    "nontrivial-unawareness",
};

struct Checker {
  const OperatorTable& t;
  OperatorKind kind;
  int n;
  std::uint64_t total;
  std::string kname;  // "K" or "K'"
  std::string uname;  // "U" or "U'"

  Checker(const OperatorTable& table, OperatorKind k)
      : t(table),
        kind(k),
        n(table.model().size()),
        total(std::uint64_t{1} << table.model().size()),
        kname(operator_name(k)),
        uname(k == OperatorKind::StandardK ? "U" : "U'") {}

  Event ev(std::uint64_t bits) const { return t.event_of(bits); }
  Event kn(const Event& e) const { return t.knowledge(kind, e); }
  Event un(const Event& e) const { return t.induced_unawareness(kind, e); }
  Event omega() const { return t.model().universe(); }

  PropertyReport pass(PropertyId p) const { return {p, kind, true, std::nullopt, {}}; }
  PropertyReport fail(PropertyId p, Event witness, std::vector<NamedSet> detail) const {
    return {p, kind, false, witness, std::move(detail)};
  }

  PropertyReport necessitation() const {
    Event k_omega = kn(omega());
    if (k_omega.full()) return pass(PropertyId::Necessitation);
    return fail(PropertyId::Necessitation, omega(), {{kname + "(omega)", k_omega}});
  }

  // Always evaluated for K' whatever kind was requested.
  PropertyReport r_necessitation() const {
    Event lhs = t.knowledge(OperatorKind::GeneralisedKPrime, omega());
    Event rhs = omega() - t.global_unawareness();
    if (lhs.equals(rhs)) return pass(PropertyId::RNecessitation);
    return fail(PropertyId::RNecessitation, omega(),
                {{"K'(omega)", lhs}, {"omega \\ U(omega)", rhs}});
  }

  PropertyReport non_delusion() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event k = kn(e);
      if (!k.subset_of(e))
        return fail(PropertyId::NonDelusion, e, {{kname + "(E)", k}});
    }
    return pass(PropertyId::NonDelusion);
  }

  PropertyReport conjunction() const {
    for (std::uint64_t b1 = 0; b1 < total; ++b1)
      for (std::uint64_t b2 = 0; b2 < total; ++b2) {
        Event e1 = ev(b1), e2 = ev(b2);
        Event lhs = kn(e1 & e2);
        Event rhs = kn(e1) & kn(e2);
        if (!lhs.equals(rhs))
          return fail(PropertyId::Conjunction, e1,
                      {{"E1", e1},
                       {"E2", e2},
                       {kname + "(E1 & E2)", lhs},
                       {kname + "(E1) & " + kname + "(E2)", rhs}});
      }
    return pass(PropertyId::Conjunction);
  }

  PropertyReport monotonicity() const {
    for (std::uint64_t b1 = 0; b1 < total; ++b1)
      for (std::uint64_t b2 = 0; b2 < total; ++b2) {
        Event e1 = ev(b1), e2 = ev(b2);
        if (!e1.subset_of(e2)) continue;
        Event k1 = kn(e1), k2 = kn(e2);
        if (!k1.subset_of(k2))
          return fail(PropertyId::Monotonicity, e1,
                      {{"E1", e1}, {"E2", e2}, {kname + "(E1)", k1}, {kname + "(E2)", k2}});
      }
    return pass(PropertyId::Monotonicity);
  }

  PropertyReport positive_introspection() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event k = kn(e);
      Event kk = kn(k);
      if (!k.subset_of(kk))
        return fail(PropertyId::PositiveIntrospection, e,
                    {{kname + "(E)", k}, {kname + "(" + kname + "(E))", kk}});
    }
    return pass(PropertyId::PositiveIntrospection);
  }

  PropertyReport negative_introspection() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event nk = ~kn(e);
      Event knk = kn(nk);
      if (!nk.subset_of(knk))
        return fail(PropertyId::NegativeIntrospection, e,
                    {{"~" + kname + "(E)", nk}, {kname + "(~" + kname + "(E))", knk}});
    }
    return pass(PropertyId::NegativeIntrospection);
  }

  PropertyReport plausibility() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event u = un(e);
      Event bound = ~kn(e) & ~kn(~kn(e));
      if (!u.subset_of(bound))
        return fail(PropertyId::Plausibility, e,
                    {{uname + "(E)", u},
                     {"~" + kname + "(E) & ~" + kname + "(~" + kname + "(E))", bound}});
    }
    return pass(PropertyId::Plausibility);
  }

  PropertyReport ku_introspection() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event u = un(e);
      Event ku = kn(u);
      if (!ku.empty())
        return fail(PropertyId::KuIntrospection, e,
                    {{uname + "(E)", u}, {kname + "(" + uname + "(E))", ku}});
    }
    return pass(PropertyId::KuIntrospection);
  }

  PropertyReport au_introspection() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event u = un(e);
      Event uu = un(u);
      if (!u.subset_of(uu))
        return fail(PropertyId::AuIntrospection, e,
                    {{uname + "(E)", u}, {uname + "(" + uname + "(E))", uu}});
    }
    return pass(PropertyId::AuIntrospection);
  }

  PropertyReport symmetry() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event u = un(e);
      Event uc = un(~e);
      if (!u.equals(uc))
        return fail(PropertyId::Symmetry, e, {{uname + "(E)", u}, {uname + "(~E)", uc}});
    }
    return pass(PropertyId::Symmetry);
  }

  // Existential: the witness is the first satisfying event.
  PropertyReport nontrivial_unawareness() const {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Event e = ev(bits);
      Event u = un(e);
      if (!u.empty())
        return {PropertyId::NontrivialUnawareness, kind, true, e, {{uname + "(E)", u}}};
    }
    return {PropertyId::NontrivialUnawareness, kind, false, std::nullopt, {}};
  }
};

}  // namespace

const std::array<PropertyId, kPropertyCount>& all_properties() {
  static const std::array<PropertyId, kPropertyCount> ids = {
      PropertyId::Necessitation,        PropertyId::RNecessitation,
      PropertyId::NonDelusion,          PropertyId::Conjunction,
      PropertyId::Monotonicity,         PropertyId::PositiveIntrospection,
      PropertyId::NegativeIntrospection, PropertyId::Plausibility,
      PropertyId::KuIntrospection,      PropertyId::AuIntrospection,
      PropertyId::Symmetry,             PropertyId::NontrivialUnawareness,
  };
  return ids;
}

const char* property_id_string(PropertyId p) { return kPropertyIds[static_cast<int>(p)]; }

std::optional<PropertyId> property_from_string(std::string_view s) {
  for (int i = 0; i < kPropertyCount; ++i)
    if (s == kPropertyIds[i]) return static_cast<PropertyId>(i);
  return std::nullopt;
}

PropertyReport check_property(const OperatorTable& table, OperatorKind kind, PropertyId p) {
  Checker c(table, kind);
  switch (p) {
    case PropertyId::Necessitation: return c.necessitation();
    case PropertyId::RNecessitation: return c.r_necessitation();
    case PropertyId::NonDelusion: return c.non_delusion();
    case PropertyId::Conjunction: return c.conjunction();
    case PropertyId::Monotonicity: return c.monotonicity();
    case PropertyId::PositiveIntrospection: return c.positive_introspection();
    case PropertyId::NegativeIntrospection: return c.negative_introspection();
    case PropertyId::Plausibility: return c.plausibility();
    case PropertyId::KuIntrospection: return c.ku_introspection();
    case PropertyId::AuIntrospection: return c.au_introspection();
    case PropertyId::Symmetry: return c.symmetry();
    case PropertyId::NontrivialUnawareness: return c.nontrivial_unawareness();
  }
  throw UsageError("unknown property");
}

PropertyReport check_property(const Model& m, OperatorKind kind, PropertyId p, const Caps& caps) {
  OperatorTable table(m, caps);
  return check_property(table, kind, p);
}

std::vector<PropertyReport> property_matrix(const Model& m, const Caps& caps) {
  OperatorTable table(m, caps);
  std::vector<PropertyReport> out;
  out.reserve(2 * kPropertyCount);
  for (PropertyId p : all_properties()) {
    out.push_back(check_property(table, OperatorKind::StandardK, p));
    out.push_back(check_property(table, OperatorKind::GeneralisedKPrime, p));
  }
  return out;
}

}  // namespace kuc
