#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boalch/rewrite.hpp"

using namespace boalch;

namespace {

AlgElem sym(const GenSymbol& g) { return AlgElem::from_sym(g); }

}  // namespace

TEST_CASE("length-1 expansion substitutes a defined symbol") {
  GenSymbol g2 = GenSymbol::gamma(2);
  AlgElem def = AlgElem::unit(2) + sym(GenSymbol::v(2, 1)) * sym(GenSymbol::v(1, 2));
  RuleSet rules;
  rules.add_expansion(g2, def);

  auto res = normalize(sym(g2), rules);
  CHECK(res.fixpoint);
  CHECK(res.value == def);
}

TEST_CASE("length-2 cancellation fires inside longer words") {
  GenSymbol g = GenSymbol::gamma(1), gi = GenSymbol::gamma_inv(1);
  RuleSet rules;
  rules.add({g, gi}, AlgElem::unit(1), "g1 g1inv = e1");
  rules.add({gi, g}, AlgElem::unit(1), "g1inv g1 = e1");

  AlgElem v12 = sym(GenSymbol::v(1, 2));
  AlgElem v21 = sym(GenSymbol::v(2, 1));
  AlgElem word = v12 * v21 * sym(g) * sym(gi) * v12;
  auto res = normalize(word, rules);
  CHECK(res.fixpoint);
  CHECK(res.value == v12 * v21 * v12);

  // pure cancellation down to the idempotent
  auto res2 = normalize(sym(g) * sym(gi), rules);
  CHECK(res2.value == AlgElem::unit(1));
}

TEST_CASE("step cap reports a missed fixpoint") {
  // x -> 2x never terminates
  GenSymbol g = GenSymbol::gamma(1);
  RuleSet rules;
  rules.add({g}, Rational(2) * sym(g), "doubling");
  auto res = normalize(sym(g), rules, /*step_cap=*/5);
  CHECK_FALSE(res.fixpoint);
}

TEST_CASE("rewrite_equal verdicts") {
  GenSymbol g2 = GenSymbol::gamma(2);
  AlgElem def = AlgElem::unit(2) + sym(GenSymbol::v(2, 1)) * sym(GenSymbol::v(1, 2));
  RuleSet rules;
  rules.add_expansion(g2, def);

  SUBCASE("equal after expansion") {
    CHECK(rewrite_equal(sym(g2), def, rules) == Verdict::Equal);
  }
  SUBCASE("distinct free words differ") {
    CHECK(rewrite_equal(sym(GenSymbol::v(1, 2)), sym(GenSymbol::v(2, 1)), RuleSet{}) ==
          Verdict::NotEqual);
  }
  SUBCASE("cap exhaustion is undecided") {
    RuleSet bad;
    bad.add({g2}, Rational(2) * sym(g2), "doubling");
    CHECK(rewrite_equal(sym(g2), def, bad, /*step_cap=*/3) == Verdict::Undecided);
  }
}

TEST_CASE("tensor normalization works slot-wise") {
  GenSymbol g2 = GenSymbol::gamma(2);
  AlgElem def = AlgElem::unit(2) + sym(GenSymbol::v(2, 1)) * sym(GenSymbol::v(1, 2));
  RuleSet rules;
  rules.add_expansion(g2, def);

  TensorElem2 t = TensorElem2::tensor(sym(g2), sym(g2));
  auto res = normalize(t, rules);
  CHECK(res.fixpoint);
  CHECK(res.value == TensorElem2::tensor(def, def));

  TensorElem3 t3 = TensorElem3::tensor(sym(g2), AlgElem::unit(1), sym(g2));
  auto res3 = normalize(t3, rules);
  CHECK(res3.value == TensorElem3::tensor(def, AlgElem::unit(1), def));
}

TEST_CASE("rule concatenation preserves order") {
  RuleSet a, b;
  GenSymbol g = GenSymbol::gamma(1);
  a.add({g}, AlgElem::unit(1), "first");
  b.add({g}, Rational(2) * AlgElem::unit(1), "second");
  RuleSet both = a.then(b);
  REQUIRE(both.rules.size() == 2);
  CHECK(both.rules[0].name == "first");
  // leftmost rule wins at a position
  CHECK(normalize(AlgElem::from_sym(g), both).value == AlgElem::unit(1));
}
