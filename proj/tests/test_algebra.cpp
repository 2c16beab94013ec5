#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boalch/algebra.hpp"

using namespace boalch;

namespace {

// Random composable word on the 3-vertex complete double quiver: a walk
// through distinct-adjacent vertices, rendered right-to-left.
Word random_walk_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> vtx(1, 3);
  int cur = vtx(rng);
  if (len == 0) return Word::idem(cur);
  std::vector<GenSymbol> syms;
  for (int t = 0; t < len; ++t) {
    int nxt = vtx(rng);
    while (nxt == cur) nxt = vtx(rng);
    syms.push_back(GenSymbol::v(nxt, cur));
    cur = nxt;
  }
  std::reverse(syms.begin(), syms.end());
  Word w;
  w.syms = std::move(syms);
  return w;
}

AlgElem random_elem(std::mt19937_64& rng, int terms, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgElem out;
  for (int t = 0; t < terms; ++t)
    out.add_term(random_walk_word(rng, len(rng)), Rational(coeff(rng)));
  return out;
}

}  // namespace

TEST_CASE("idempotents multiply as orthogonal local units") {
  AlgElem e1 = AlgElem::unit(1), e2 = AlgElem::unit(2);
  CHECK(e1 * e1 == e1);
  CHECK((e1 * e2).is_zero());

  AlgElem v12 = AlgElem::from_sym(GenSymbol::v(1, 2));
  CHECK(e1 * v12 == v12);
  CHECK(v12 * e2 == v12);
  CHECK((e2 * v12).is_zero());
  CHECK((v12 * e1).is_zero());
}

TEST_CASE("product is associative and bilinear on random elements") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    AlgElem a = random_elem(rng, 3, 3), b = random_elem(rng, 3, 3),
            c = random_elem(rng, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("zero coefficients are never stored") {
  AlgElem a = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem d = a - a;
  CHECK(d.is_zero());
  CHECK(d.terms().empty());

  a.add_term(Word::sym(GenSymbol::v(1, 2)), Rational(-1));
  CHECK(a.is_zero());
}

TEST_CASE("tau12 is an involution and tensor respects bilinearity") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    TensorElem2 t = TensorElem2::tensor(random_elem(rng, 3, 2), random_elem(rng, 3, 2));
    CHECK(t.tau12().tau12() == t);
  }
  AlgElem x = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem y = AlgElem::from_sym(GenSymbol::v(2, 1));
  CHECK(TensorElem2::tensor(x + y, x) ==
        TensorElem2::tensor(x, x) + TensorElem2::tensor(y, x));
}

TEST_CASE("outer and inner actions hit the documented slots") {
  AlgElem e1 = AlgElem::unit(1), e2 = AlgElem::unit(2);
  AlgElem v12 = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem v21 = AlgElem::from_sym(GenSymbol::v(2, 1));
  TensorElem2 t = TensorElem2::tensor(v12, v21);

  // outer: b . (u (x) w) . c = bu (x) wc
  CHECK(t.outer(e1, e1) == t);
  CHECK(t.outer(v21, v12) == TensorElem2::tensor(v21 * v12, v21 * v12));
  CHECK(t.outer(e2, e2).is_zero());

  // inner: a * (u (x) w) * c = uc (x) aw
  CHECK(t.inner(e2, e2) == t);
  CHECK(t.inner(v12, v21) == TensorElem2::tensor(v12 * v21, v12 * v21));
  CHECK(t.inner(e1, e1).is_zero());
}

TEST_CASE("multiply_out composes slots and drops non-composable terms") {
  AlgElem v12 = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem v21 = AlgElem::from_sym(GenSymbol::v(2, 1));
  CHECK(TensorElem2::tensor(v12, v21).multiply_out() == v12 * v21);
  CHECK(TensorElem2::tensor(v12, v12).multiply_out().is_zero());
}

TEST_CASE("triple-tensor cyclic permutations compose to the identity") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 30; ++it) {
    TensorElem3 t = TensorElem3::tensor(random_elem(rng, 2, 2), random_elem(rng, 2, 2),
                                        random_elem(rng, 2, 2));
    CHECK(t.tau123().tau132() == t);
    CHECK(t.tau123().tau123().tau123() == t);
  }
  AlgElem x = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem y = AlgElem::from_sym(GenSymbol::v(2, 3));
  AlgElem z = AlgElem::from_sym(GenSymbol::v(3, 1));
  // slot k moves to slot s(k) for s = (123): x1 (x) x2 (x) x3 -> x3 (x) x1 (x) x2
  CHECK(TensorElem3::tensor(x, y, z).tau123() == TensorElem3::tensor(z, x, y));
}

TEST_CASE("extend_right and extend_left append tensor slots") {
  AlgElem v12 = AlgElem::from_sym(GenSymbol::v(1, 2));
  AlgElem v21 = AlgElem::from_sym(GenSymbol::v(2, 1));
  TensorElem2 t = half() * TensorElem2::tensor(v12, v21);
  Word z = Word::sym(GenSymbol::v(3, 1));
  CHECK(TensorElem3::extend_right(t, z) ==
        half() * TensorElem3::tensor(v12, v21, AlgElem::from_word(z)));
  CHECK(TensorElem3::extend_left(z, t) ==
        half() * TensorElem3::tensor(AlgElem::from_word(z), v12, v21));
}

TEST_CASE("idempotent window keeps exactly the admissible slot pairs") {
  AlgElem e1 = AlgElem::unit(1), e2 = AlgElem::unit(2);
  AlgElem v12 = AlgElem::from_sym(GenSymbol::v(1, 2));
  // For a = v12 (source 2, target 1) and b = v21 (source 1, target 2):
  // first slot must lie in e2 A e2, second in e1 A e1.
  TensorElem2 good = TensorElem2::tensor(e2, e1);
  TensorElem2 bad = TensorElem2::tensor(e1, v12);
  CHECK(idempotent_window(good, 2, 1, 1, 2) == good);
  CHECK(idempotent_window(bad, 2, 1, 1, 2).is_zero());
  CHECK(idempotent_window(good + bad, 2, 1, 1, 2) == good);
}
