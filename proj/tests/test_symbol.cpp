#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boalch/symbol.hpp"

using namespace boalch;

TEST_CASE("symbol factories carry source and target") {
  GenSymbol e = GenSymbol::idem(2);
  CHECK(e.is_idem());
  CHECK(e.target == 2);
  CHECK(e.source == 2);

  GenSymbol v = GenSymbol::v(1, 3);
  CHECK(v.kind == SymKind::V);
  CHECK(v.target == 1);
  CHECK(v.source == 3);

  GenSymbol g = GenSymbol::gamma(2);
  GenSymbol gi = GenSymbol::gamma_inv(2);
  CHECK(g.target == g.source);
  CHECK(gi.target == 2);
  CHECK_FALSE(g == gi);
}

TEST_CASE("symbol token rendering") {
  CHECK(GenSymbol::idem(1).str() == "e1");
  CHECK(GenSymbol::v(1, 2).str() == "v12");
  CHECK(GenSymbol::w(2, 1).str() == "w21");
  CHECK(GenSymbol::gamma(3).str() == "g3");
  CHECK(GenSymbol::gamma_inv(3).str() == "g3inv");
}

TEST_CASE("word composition respects endpoints") {
  Word v12 = Word::sym(GenSymbol::v(1, 2));
  Word v21 = Word::sym(GenSymbol::v(2, 1));
  Word out;

  SUBCASE("composable pair") {
    REQUIRE(compose(v12, v21, out));
    CHECK(out.length() == 2);
    CHECK(out.target() == 1);
    CHECK(out.source() == 1);
  }
  SUBCASE("mismatched endpoints rejected") {
    CHECK_FALSE(compose(v12, v12, out));
  }
  SUBCASE("idempotents act as local units") {
    REQUIRE(compose(Word::idem(1), v12, out));
    CHECK(out == v12);
    REQUIRE(compose(v12, Word::idem(2), out));
    CHECK(out == v12);
    CHECK_FALSE(compose(Word::idem(2), v12, out));
    CHECK_FALSE(compose(v12, Word::idem(1), out));
  }
}

TEST_CASE("word order is graded: length before lexicographic") {
  Word e1 = Word::idem(1);
  Word e2 = Word::idem(2);
  Word v12 = Word::sym(GenSymbol::v(1, 2));
  Word vv;
  REQUIRE(compose(v12, Word::sym(GenSymbol::v(2, 1)), vv));

  CHECK(e1 < e2);
  CHECK(e2 < v12);   // idempotents sort below length-1 words
  CHECK(v12 < vv);   // shorter words first
  CHECK_FALSE(vv < v12);
  CHECK(v12 == v12);
}
