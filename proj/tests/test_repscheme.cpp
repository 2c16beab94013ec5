#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "boalch/families.hpp"
#include "boalch/repscheme.hpp"

using namespace boalch;

namespace {

std::vector<Rational> small_range() {
  std::vector<Rational> r;
  for (int k = -3; k <= 3; ++k) r.push_back(k);
  return r;
}

AlgElem sym(const GenSymbol& g) { return AlgElem::from_sym(g); }

Word random_walk_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> vtx(1, n);
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

}  // namespace

TEST_CASE("trivial representation exists and sums projectors to the identity") {
  for (int n = 2; n <= 4; ++n) {
    ColoredQuiver q = ColoredQuiver::complete(n);
    DimVector d(n);
    for (int s = 0; s < n; ++s) d[s] = s % 2 + 1;
    MatrixRep r = trivial_rep(q, d);
    AlgElem unit_sum;
    for (int s = 1; s <= n; ++s) unit_sum += AlgElem::unit(s);
    RatMatrix id = RatMatrix::Identity(r.N, r.N);
    CHECK(mats_equal(eval(unit_sum, r), id));
    // every v block is zero, every gamma is the block identity
    for (const auto& g : double_quiver(q))
      CHECK(mats_equal(r.block(g), RatMatrix::Zero(r.N, r.N)));
  }
}

TEST_CASE("random representation satisfies every defining relation exactly") {
  ColoredQuiver q = ColoredQuiver::complete(3);
  MatrixRep r = random_rep(q, {2, 2, 2}, 1, small_range());
  for (const auto& rel : boalch_relations(q).relations)
    CHECK(mats_equal(eval(rel.lhs, r), eval(rel.rhs, r)));
  for (int s = 1; s <= 3; ++s) {
    AlgElem prod = sym(GenSymbol::gamma(s)) * sym(GenSymbol::gamma_inv(s));
    CHECK(mats_equal(eval(prod, r), r.projector(s)));
  }
}

TEST_CASE("evaluation is a ring homomorphism on random elements") {
  ColoredQuiver q = ColoredQuiver::complete(3);
  MatrixRep r = random_rep(q, {1, 2, 3}, 5, small_range());
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(0, 3), coeff(-2, 2);
  for (int it = 0; it < 20; ++it) {
    AlgElem x, y;
    for (int t = 0; t < 3; ++t) {
      x.add_term(random_walk_word(rng, 3, len(rng)), Rational(coeff(rng)));
      y.add_term(random_walk_word(rng, 3, len(rng)), Rational(coeff(rng)));
    }
    RatMatrix ex = eval(x, r), ey = eval(y, r);
    RatMatrix prod = RatMatrix::Zero(r.N, r.N);
    for (int i = 0; i < r.N; ++i)
      for (int k = 0; k < r.N; ++k)
        for (int j = 0; j < r.N; ++j) prod(i, j) += ex(i, k) * ey(k, j);
    CHECK(mats_equal(eval(x * y, r), prod));
    CHECK(mats_equal(eval(x + y, r), ex + ey));
  }
}

TEST_CASE("zero entry range reproduces the trivial representation") {
  ColoredQuiver q = ColoredQuiver::complete(2);
  MatrixRep z = random_rep(q, {2, 1}, 9, {Rational(0)});
  MatrixRep t = trivial_rep(q, {2, 1});
  for (const auto& [g, m] : t.blocks) CHECK(mats_equal(z.block(g), m));
}

TEST_CASE("oracle equality verdicts") {
  ColoredQuiver q = ColoredQuiver::complete(2);
  std::vector<MatrixRep> reps = {random_rep(q, {1, 1}, 1, small_range()),
                                 random_rep(q, {2, 2}, 2, small_range())};
  AlgElem x = sym(GenSymbol::v(1, 2)) * sym(GenSymbol::v(2, 1));
  AlgElem y = sym(GenSymbol::v(2, 1)) * sym(GenSymbol::v(1, 2));
  CHECK(oracle_equal(x, x, reps) == Verdict::Equal);
  CHECK(oracle_equal(x, y, reps) == Verdict::NotEqual);  // different blocks
  CHECK(oracle_equal(x, y, std::vector<MatrixRep>{}) == Verdict::Undecided);
}

TEST_CASE("dimension count doubles the arrow-weighted products") {
  ColoredQuiver tri = ColoredQuiver::complete(3);
  CHECK(dimension_count(tri, {1, 1, 1}) == 6);
  CHECK(dimension_count(tri, {2, 2, 2}) == 24);
  CHECK(dimension_count(ColoredQuiver::complete(2), {1, 3}) == 6);
}

TEST_CASE("sampled free parameters equal the dimension count") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nv(2, 4), dim(1, 3);
  for (int it = 0; it < 10; ++it) {
    int n = nv(rng);
    ColoredQuiver q = ColoredQuiver::complete(n);
    DimVector d(n);
    for (int s = 0; s < n; ++s) d[s] = dim(rng);
    MatrixRep r = random_rep(q, d, 100 + it, small_range());
    CHECK(static_cast<long long>(r.sampled_params) == dimension_count(q, d));
  }
}

TEST_CASE("induced bracket is skew under the index swap (ij) <-> (uv)") {
  Fixture fx = interval_fixture();
  BracketContext ctx = BracketContext::for_quiver(fx.quiver, fx.table);
  MatrixRep r = random_rep(fx.quiver, {2, 2}, 3, small_range());
  const int N = r.N;
  AlgElem a = sym(GenSymbol::v(1, 2)), b = sym(GenSymbol::v(2, 1));
  auto ab = induced_bracket(a, b, ctx, r);
  auto ba = induced_bracket(b, a, ctx, r);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
          CHECK(ab[((static_cast<size_t>(i) * N + j) * N + u) * N + v] ==
                -ba[((static_cast<size_t>(u) * N + v) * N + i) * N + j]);
}

TEST_CASE("trace bracket identity on random word pairs") {
  Fixture fx = triangle_fixture();
  BracketContext ctx = BracketContext::for_quiver(fx.quiver, fx.table);
  MatrixRep r = random_rep(fx.quiver, {2, 2, 2}, 7, small_range());
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(1, 3);
  for (int it = 0; it < 10; ++it) {
    AlgElem a = AlgElem::from_word(random_walk_word(rng, 3, len(rng)));
    AlgElem b = AlgElem::from_word(random_walk_word(rng, 3, len(rng)));
    CHECK(trace_bracket_check(a, b, ctx, r) == Verdict::Equal);
  }
}

TEST_CASE("default suite covers three dimension vectors with three seeds each") {
  auto reps = default_rep_suite(ColoredQuiver::complete(3));
  CHECK(reps.size() == 9);
  std::set<int> sizes;
  for (const auto& r : reps) sizes.insert(r.N);
  CHECK(sizes == std::set<int>({3, 6}));  // (1,1,1), (2,2,2), (1,2,3)
}
