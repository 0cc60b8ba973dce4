#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "formula_corpus.hpp"
#include "kucheck/formula.hpp"
#include "test_helpers.hpp"

using namespace kuc;
using namespace kuc::formula;

namespace {

Event ev(std::uint64_t bits, int n) { return Event::from_bits(bits, n); }

// Deterministic AST generator over a two-state label pool.
AstPtr gen_ast(std::mt19937& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth == 0) {
    switch (pick(4)) {
      case 0: return std::make_shared<const Ast>(Ast{OmegaLit{}});
      case 1: return std::make_shared<const Ast>(Ast{EmptyLit{}});
      case 2: return std::make_shared<const Ast>(Ast{SetLit{{"a"}}});
      default: return std::make_shared<const Ast>(Ast{SetLit{{"a", "b"}}});
    }
  }
  switch (pick(6)) {
    case 0:
      return std::make_shared<const Ast>(
          Ast{Apply{static_cast<AppOp>(pick(6)), gen_ast(rng, depth - 1)}});
    case 1: return std::make_shared<const Ast>(Ast{Complement{gen_ast(rng, depth - 1)}});
    case 2:
    case 3:
      return std::make_shared<const Ast>(Ast{Binary{static_cast<SetOp>(pick(3)),
                                                    gen_ast(rng, depth - 1),
                                                    gen_ast(rng, depth - 1)}});
    default: return gen_ast(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("spec parse examples") {
  auto u = parse_formula("U({a})");
  REQUIRE(std::holds_alternative<Apply>(u->node));
  const auto& app = std::get<Apply>(u->node);
  CHECK(app.op == AppOp::U);
  CHECK(std::get<SetLit>(app.child->node).labels == std::vector<std::string>{"a"});

  auto rnec = parse_formula("K'(omega) = omega \\ U(omega)");
  REQUIRE(std::holds_alternative<Predicate>(rnec->node));
  const auto& pred = std::get<Predicate>(rnec->node);
  CHECK(pred.op == PredOp::Equal);
  CHECK(std::get<Apply>(pred.lhs->node).op == AppOp::KPrime);
  const auto& diff = std::get<Binary>(pred.rhs->node);
  CHECK(diff.op == SetOp::Difference);
  CHECK(std::holds_alternative<OmegaLit>(diff.lhs->node));

  auto plaus = parse_formula("~K({a}) & ~K(~K({a}))");
  const auto& conj = std::get<Binary>(plaus->node);
  CHECK(conj.op == SetOp::Intersect);
  CHECK(std::holds_alternative<Complement>(conj.lhs->node));
  CHECK(std::holds_alternative<Complement>(conj.rhs->node));
}

TEST_CASE("corpus: canonical print and round trip") {
  for (const auto& entry : corpus::kValid) {
    CAPTURE(entry.input);
    auto ast = parse_formula(entry.input);
    std::string printed = print_formula(*ast);
    CHECK(printed == entry.canonical);
    auto again = parse_formula(printed);
    CHECK(ast_equal(*ast, *again));
    CHECK(print_formula(*again) == printed);
  }
}

TEST_CASE("corpus: malformed inputs report pinned positions") {
  for (const auto& entry : corpus::kInvalid) {
    CAPTURE(entry.input);
    try {
      (void)parse_formula(entry.input);
      FAIL("expected a parse error for: ", entry.input);
    } catch (const ParseError& e) {
      CHECK(e.line() == entry.line);
      CHECK(e.column() == entry.col);
      // Position stays within the input (column may point one past the end).
      CHECK(e.column() <= static_cast<int>(std::string(entry.input).size()) + 1);
    }
  }
}

TEST_CASE("round trip holds for generated ASTs up to depth 5") {
  std::mt19937 rng(20240817);
  for (int depth = 1; depth <= 5; ++depth)
    for (int i = 0; i < 200; ++i) {
      auto ast = gen_ast(rng, depth);
      auto printed = print_formula(*ast);
      CAPTURE(printed);
      auto again = parse_formula(printed);
      CHECK(ast_equal(*ast, *again));
    }
}

TEST_CASE("spec eval examples on the mirror model") {
  Model m = testing::w2();
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("U({a})"))) == ev(0b01, 2));
  CHECK(std::get<bool>(eval_formula(m, *parse_formula("K'(omega) = omega \\ U(omega)"))));
  CHECK(std::get<bool>(eval_formula(m, *parse_formula("K(omega) = omega"))));
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("K'(omega)"))).empty());
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("U(omega)"))) == m.universe());
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("Uiter(omega)"))).empty());
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("U'(empty)"))) == m.universe());
}

TEST_CASE("U of a full-valued expression resolves to the union form") {
  Model m = testing::w2();
  // {a, b} evaluates to the full set without being the omega literal.
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("U({a, b})"))) == m.universe());
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("U({a} | {b})"))) == m.universe());
  CHECK(std::get<Event>(eval_formula(m, *parse_formula("Uiter({a, b})"))).empty());
}

TEST_CASE("eval errors") {
  Model m = testing::w2();
  CHECK_THROWS_AS((void)eval_formula(m, *parse_formula("U({zzz})")), UsageError);
  CHECK_THROWS_AS((void)eval_formula(m, *parse_formula("U(oops)")), UsageError);
  std::vector<std::uint64_t> masks(11, 1);
  Model big = testing::make_model(11, masks);
  CHECK_THROWS_AS((void)eval_formula(big, *parse_formula("U(omega)")), CapError);
  CHECK(std::get<Event>(eval_formula(big, *parse_formula("K(omega)"))) == big.universe());
}

TEST_CASE("evaluation agrees with direct operator calls, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n)
    testing::for_each_model(n, [n](const Model& m) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Event e = ev(bits, n);
        std::string lit = "{";
        bool first = true;
        for (int s = 0; s < n; ++s) {
          if (!e.contains(s)) continue;
          if (!first) lit += ", ";
          lit += m.label(s);
          first = false;
        }
        lit += "}";
        auto run = [&](const std::string& text) {
          return std::get<Event>(eval_formula(m, *parse_formula(text)));
        };
        CHECK(run("K(" + lit + ")") == knowledge(m, OperatorKind::StandardK, e));
        CHECK(run("K'(" + lit + ")") == knowledge(m, OperatorKind::GeneralisedKPrime, e));
        CHECK(run("A(" + lit + ")") == awareness(m, e));
        CHECK(run("Uiter(" + lit + ")") == unawareness(m, e));
        CHECK(run("U'(" + lit + ")") ==
              induced_unawareness(m, OperatorKind::GeneralisedKPrime, e));
        Event u = run("U(" + lit + ")");
        CHECK(u == (e.full() ? global_unawareness(m) : unawareness(m, e)));
      }
    });
}
