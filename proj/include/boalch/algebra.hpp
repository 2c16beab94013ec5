#pragma once

#include <map>
#include <utility>

#include "boalch/rational.hpp"
#include "boalch/symbol.hpp"

namespace boalch {

// Finite rational linear combination of basis words. Zero coefficients are
// never stored.
class AlgElem {
 public:
  using Terms = std::map<Word, Rational>;

  AlgElem() = default;
  static AlgElem zero() { return {}; }
  static AlgElem unit(int vertex) { return from_word(Word::idem(vertex)); }
  static AlgElem from_word(const Word& w, Rational c = Rational(1));
  static AlgElem from_sym(const GenSymbol& g, Rational c = Rational(1)) {
    return from_word(Word::sym(g), std::move(c));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rational& c);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rational& c, AlgElem a) { return a *= c; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);  // path product
  friend AlgElem operator-(const AlgElem& a) { return Rational(-1) * a; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

// Element of A (x) A.
class TensorElem2 {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Rational>;

  TensorElem2() = default;
  static TensorElem2 zero() { return {}; }
  static TensorElem2 tensor(const AlgElem& x, const AlgElem& y);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& u, const Word& w, const Rational& c);

  TensorElem2& operator+=(const TensorElem2& o);
  TensorElem2& operator-=(const TensorElem2& o);
  TensorElem2& operator*=(const Rational& c);
  friend TensorElem2 operator+(TensorElem2 a, const TensorElem2& b) { return a += b; }
  friend TensorElem2 operator-(TensorElem2 a, const TensorElem2& b) { return a -= b; }
  friend TensorElem2 operator*(const Rational& c, TensorElem2 a) { return a *= c; }
  friend TensorElem2 operator-(const TensorElem2& a) { return Rational(-1) * a; }
  friend bool operator==(const TensorElem2& a, const TensorElem2& b) {
    return a.terms_ == b.terms_;
  }

  // Outer A-bimodule action: b . (u (x) w) . c = bu (x) wc.
  TensorElem2 outer(const AlgElem& left, const AlgElem& right) const;
  // Inner action: a * (u (x) w) * c = uc (x) aw.
  TensorElem2 inner(const AlgElem& left, const AlgElem& right) const;

  TensorElem2 tau12() const;  // swap factors
  AlgElem multiply_out() const;  // m(u (x) w) = uw; drops non-composable terms

  std::string str() const;

 private:
  Terms terms_;
};

// Element of A (x) A (x) A.
class TensorElem3 {
 public:
  struct Key {
    Word a, b, c;
    friend auto operator<=>(const Key& x, const Key& y) {
      if (auto r = (x.a < y.a ? -1 : (y.a < x.a ? 1 : 0)); r != 0) return r <=> 0;
      if (auto r = (x.b < y.b ? -1 : (y.b < x.b ? 1 : 0)); r != 0) return r <=> 0;
      return (x.c < y.c ? -1 : (y.c < x.c ? 1 : 0)) <=> 0;
    }
    friend bool operator==(const Key& x, const Key& y) {
      return x.a == y.a && x.b == y.b && x.c == y.c;
    }
  };
  using Terms = std::map<Key, Rational>;

  TensorElem3() = default;
  static TensorElem3 zero() { return {}; }
  static TensorElem3 tensor(const AlgElem& x, const AlgElem& y, const AlgElem& z);
  // t (x) z with t in A (x) A appended on the right, or prepended on the left.
  static TensorElem3 extend_right(const TensorElem2& t, const Word& z);
  static TensorElem3 extend_left(const Word& x, const TensorElem2& t);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& a, const Word& b, const Word& c, const Rational& coeff);

  TensorElem3& operator+=(const TensorElem3& o);
  TensorElem3& operator-=(const TensorElem3& o);
  TensorElem3& operator*=(const Rational& c);
  friend TensorElem3 operator+(TensorElem3 a, const TensorElem3& b) { return a += b; }
  friend TensorElem3 operator-(TensorElem3 a, const TensorElem3& b) { return a -= b; }
  friend TensorElem3 operator*(const Rational& c, TensorElem3 a) { return a *= c; }
  friend bool operator==(const TensorElem3& a, const TensorElem3& b) {
    return a.terms_ == b.terms_;
  }

  // Cyclic permutations acting on tensor factors: tau123 sends
  // x1 (x) x2 (x) x3 to x3 (x) x1 (x) x2 (the factor formerly in slot k moves
  // to slot s(k) for s = (123)); tau132 is its inverse.
  TensorElem3 tau123() const;
  TensorElem3 tau132() const;

  std::string str() const;

 private:
  Terms terms_;
};

// Projection onto the idempotent window: for a = e_{a_tgt} a e_{a_src} and
// b = e_{b_tgt} b e_{b_src}, keeps only terms of u (x) w with
// u in e_{b_tgt} A e_{a_src} and w in e_{a_tgt} A e_{b_src}.
TensorElem2 idempotent_window(const TensorElem2& x, int a_src, int a_tgt, int b_src,
                              int b_tgt);

}  // namespace boalch
