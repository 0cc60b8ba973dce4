#include <doctest.h>

#include "kucheck/properties.hpp"
#include "test_helpers.hpp"

using namespace kuc;

namespace {

Event ev(std::uint64_t bits, int n) { return Event::from_bits(bits, n); }

const PropertyReport& row(const std::vector<PropertyReport>& matrix, PropertyId p,
                          OperatorKind kind) {
  for (const auto& r : matrix)
    if (r.property == p && r.op == kind) return r;
  REQUIRE(false);
  return matrix.front();
}

}  // namespace

TEST_CASE("property id strings round trip") {
  for (PropertyId p : all_properties()) {
    auto back = property_from_string(property_id_string(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK(!property_from_string("negative_introspection").has_value());
  CHECK(property_from_string("negative-introspection") == PropertyId::NegativeIntrospection);
}

TEST_CASE("mirror model matrix, standard K rows") {
  Model m = testing::w2();
  auto matrix = property_matrix(m);
  REQUIRE(matrix.size() == 24);

  auto k = OperatorKind::StandardK;
  CHECK(row(matrix, PropertyId::Necessitation, k).holds);
  CHECK(row(matrix, PropertyId::RNecessitation, k).holds);
  CHECK(row(matrix, PropertyId::Conjunction, k).holds);
  CHECK(row(matrix, PropertyId::Monotonicity, k).holds);
  CHECK(row(matrix, PropertyId::Plausibility, k).holds);
  CHECK(row(matrix, PropertyId::AuIntrospection, k).holds);

  const auto& neg = row(matrix, PropertyId::NegativeIntrospection, k);
  CHECK(!neg.holds);
  CHECK(neg.witness == ev(0b01, 2));
  REQUIRE(neg.detail.size() == 2);
  CHECK(neg.detail[0].name == "~K(E)");
  CHECK(neg.detail[0].set == ev(0b01, 2));
  CHECK(neg.detail[1].name == "K(~K(E))");
  CHECK(neg.detail[1].set == ev(0b10, 2));

  const auto& ku = row(matrix, PropertyId::KuIntrospection, k);
  CHECK(!ku.holds);
  CHECK(ku.witness == ev(0b01, 2));
  CHECK(ku.detail[1].set == ev(0b10, 2));  // K(U(E)) = {b}

  const auto& sym = row(matrix, PropertyId::Symmetry, k);
  CHECK(!sym.holds);
  CHECK(sym.witness == ev(0b01, 2));

  const auto& nontrivial = row(matrix, PropertyId::NontrivialUnawareness, k);
  CHECK(nontrivial.holds);
  CHECK(nontrivial.witness == ev(0b01, 2));
  CHECK(nontrivial.detail[0].set == ev(0b01, 2));

  CHECK(!row(matrix, PropertyId::NonDelusion, k).holds);
  CHECK(!row(matrix, PropertyId::PositiveIntrospection, k).holds);
}

TEST_CASE("mirror model matrix, K' rows") {
  Model m = testing::w2();
  auto matrix = property_matrix(m);
  auto kp = OperatorKind::GeneralisedKPrime;

  const auto& nec = row(matrix, PropertyId::Necessitation, kp);
  CHECK(!nec.holds);  // K'(omega) = empty on the mirror model
  CHECK(nec.witness == m.universe());

  CHECK(row(matrix, PropertyId::RNecessitation, kp).holds);
  CHECK(row(matrix, PropertyId::Plausibility, kp).holds);
  CHECK(row(matrix, PropertyId::AuIntrospection, kp).holds);

  // Conjunction and monotonicity break at the pair ({a}, omega) once
  // K'(omega) loses states.
  const auto& conj = row(matrix, PropertyId::Conjunction, kp);
  CHECK(!conj.holds);
  CHECK(conj.witness == ev(0b01, 2));
  REQUIRE(conj.detail.size() == 4);
  CHECK(conj.detail[1].set == m.universe());

  const auto& mono = row(matrix, PropertyId::Monotonicity, kp);
  CHECK(!mono.holds);
  CHECK(mono.witness == ev(0b01, 2));

  // U'(empty) = omega, so the first failing/witness events move to empty.
  const auto& neg = row(matrix, PropertyId::NegativeIntrospection, kp);
  CHECK(!neg.holds);
  CHECK(neg.witness == Event::empty_set(2));

  const auto& nontrivial = row(matrix, PropertyId::NontrivialUnawareness, kp);
  CHECK(nontrivial.holds);
  CHECK(nontrivial.witness == Event::empty_set(2));
  CHECK(nontrivial.detail[0].set == m.universe());
}

TEST_CASE("matrix order is property-major, standard K first") {
  auto matrix = property_matrix(testing::partition2());
  REQUIRE(matrix.size() == 24);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    CHECK(matrix[i].property == all_properties()[i / 2]);
    CHECK(matrix[i].op ==
          (i % 2 == 0 ? OperatorKind::StandardK : OperatorKind::GeneralisedKPrime));
  }
}

TEST_CASE("partition model satisfies everything except nontrivial unawareness") {
  auto matrix = property_matrix(testing::partition2());
  for (const auto& r : matrix) {
    if (r.property == PropertyId::NontrivialUnawareness)
      CHECK(!r.holds);
    else
      CHECK(r.holds);
  }
}

TEST_CASE("nested model: negative introspection fails yet unawareness is trivial") {
  Model m = testing::nested();
  auto neg = check_property(m, OperatorKind::StandardK, PropertyId::NegativeIntrospection);
  CHECK(!neg.holds);
  CHECK(neg.witness == ev(0b01, 2));
  auto nontrivial = check_property(m, OperatorKind::StandardK, PropertyId::NontrivialUnawareness);
  CHECK(!nontrivial.holds);
  CHECK(!nontrivial.witness.has_value());
}

TEST_CASE("witness determinism") {
  Model m = testing::w2();
  auto a = property_matrix(m);
  auto b = property_matrix(m);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].holds == b[i].holds);
    CHECK(a[i].witness == b[i].witness);
    REQUIRE(a[i].detail.size() == b[i].detail.size());
    for (std::size_t j = 0; j < a[i].detail.size(); ++j) {
      CHECK(a[i].detail[j].name == b[i].detail[j].name);
      CHECK(a[i].detail[j].set == b[i].detail[j].set);
    }
  }
}

TEST_CASE("remark-1 contrapositive and structural facts, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n)
    testing::for_each_model(n, [](const Model& m) {
      OperatorTable t(m);
      auto k = OperatorKind::StandardK;
      CHECK(check_property(t, k, PropertyId::Necessitation).holds);
      CHECK(check_property(t, k, PropertyId::Monotonicity).holds);
      CHECK(check_property(t, k, PropertyId::Conjunction).holds);
      CHECK(check_property(t, k, PropertyId::Plausibility).holds);
      bool nontrivial = check_property(t, k, PropertyId::NontrivialUnawareness).holds;
      bool neg = check_property(t, k, PropertyId::NegativeIntrospection).holds;
      if (neg) CHECK(!nontrivial);
      if (nontrivial) CHECK(!neg);
      // DLR incompatibility: nontrivial unawareness excludes KU+AU together.
      if (nontrivial) {
        bool ku = check_property(t, k, PropertyId::KuIntrospection).holds;
        bool au = check_property(t, k, PropertyId::AuIntrospection).holds;
        CHECK(!(ku && au));
      }
    });
}

TEST_CASE("partitional models satisfy the full standard catalog, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n)
    testing::for_each_model(n, [](const Model& m) {
      if (!classify(m).partitional) return;
      OperatorTable t(m);
      for (PropertyId p : all_properties()) {
        auto r = check_property(t, OperatorKind::StandardK, p);
        if (p == PropertyId::NontrivialUnawareness)
          CHECK(!r.holds);
        else
          CHECK(r.holds);
      }
    });
}

TEST_CASE("K' property checks need the all-events cap") {
  std::vector<std::uint64_t> masks(11, 1);
  Model big = testing::make_model(11, masks);
  CHECK(check_property(big, OperatorKind::StandardK, PropertyId::Necessitation).holds);
  CHECK_THROWS_AS(
      (void)check_property(big, OperatorKind::GeneralisedKPrime, PropertyId::Necessitation),
      CapError);
}
