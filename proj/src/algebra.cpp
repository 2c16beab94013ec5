#include "boalch/algebra.hpp"

namespace boalch {

AlgElem AlgElem::from_word(const Word& w, Rational c) {
  AlgElem e;
  if (c != 0) e.terms_.emplace(w, std::move(c));
  return e;
}

void AlgElem::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  AlgElem out;
  Word prod;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_)
      if (compose(wa, wb, prod)) out.add_term(prod, ca * cb);
  return out;
}

std::string AlgElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "- ";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += rational_str(a) + " ";
    out += w.str();
    first = false;
  }
  return out;
}

TensorElem2 TensorElem2::tensor(const AlgElem& x, const AlgElem& y) {
  TensorElem2 out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [w, cw] : y.terms()) out.add_term(u, w, cu * cw);
  return out;
}

void TensorElem2::add_term(const Word& u, const Word& w, const Rational& c) {
  if (c == 0) return;
  Key k{u, w};
  auto [it, fresh] = terms_.emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElem2& TensorElem2::operator+=(const TensorElem2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElem2& TensorElem2::operator-=(const TensorElem2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElem2& TensorElem2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TensorElem2 TensorElem2::outer(const AlgElem& left, const AlgElem& right) const {
  TensorElem2 out;
  Word u2, w2;
  for (const auto& [k, c] : terms_)
    for (const auto& [lw, lc] : left.terms())
      for (const auto& [rw, rc] : right.terms()) {
        if (!compose(lw, k.first, u2)) continue;
        if (!compose(k.second, rw, w2)) continue;
        out.add_term(u2, w2, c * lc * rc);
      }
  return out;
}

TensorElem2 TensorElem2::inner(const AlgElem& left, const AlgElem& right) const {
  TensorElem2 out;
  Word u2, w2;
  for (const auto& [k, c] : terms_)
    for (const auto& [lw, lc] : left.terms())
      for (const auto& [rw, rc] : right.terms()) {
        if (!compose(k.first, rw, u2)) continue;
        if (!compose(lw, k.second, w2)) continue;
        out.add_term(u2, w2, c * lc * rc);
      }
  return out;
}

TensorElem2 TensorElem2::tau12() const {
  TensorElem2 out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

AlgElem TensorElem2::multiply_out() const {
  AlgElem out;
  Word prod;
  for (const auto& [k, c] : terms_)
    if (compose(k.first, k.second, prod)) out.add_term(prod, c);
  return out;
}

std::string TensorElem2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "- ";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += rational_str(a) + " ";
    out += k.first.str() + " (x) " + k.second.str();
    first = false;
  }
  return out;
}

TensorElem3 TensorElem3::tensor(const AlgElem& x, const AlgElem& y, const AlgElem& z) {
  TensorElem3 out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      for (const auto& [c, cc] : z.terms()) out.add_term(a, b, c, ca * cb * cc);
  return out;
}

TensorElem3 TensorElem3::extend_right(const TensorElem2& t, const Word& z) {
  TensorElem3 out;
  for (const auto& [k, c] : t.terms()) out.add_term(k.first, k.second, z, c);
  return out;
}

TensorElem3 TensorElem3::extend_left(const Word& x, const TensorElem2& t) {
  TensorElem3 out;
  for (const auto& [k, c] : t.terms()) out.add_term(x, k.first, k.second, c);
  return out;
}

void TensorElem3::add_term(const Word& a, const Word& b, const Word& c,
                           const Rational& coeff) {
  if (coeff == 0) return;
  Key k{a, b, c};
  auto [it, fresh] = terms_.emplace(std::move(k), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElem3& TensorElem3::operator+=(const TensorElem3& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, k.c, c);
  return *this;
}

TensorElem3& TensorElem3::operator-=(const TensorElem3& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, k.c, -c);
  return *this;
}

TensorElem3& TensorElem3::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TensorElem3 TensorElem3::tau123() const {
  TensorElem3 out;
  for (const auto& [k, c] : terms_) out.add_term(k.c, k.a, k.b, c);
  return out;
}

TensorElem3 TensorElem3::tau132() const {
  TensorElem3 out;
  for (const auto& [k, c] : terms_) out.add_term(k.b, k.c, k.a, c);
  return out;
}

std::string TensorElem3::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "- ";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += rational_str(a) + " ";
    out += k.a.str() + " (x) " + k.b.str() + " (x) " + k.c.str();
    first = false;
  }
  return out;
}

TensorElem2 idempotent_window(const TensorElem2& x, int a_src, int a_tgt, int b_src,
                              int b_tgt) {
  TensorElem2 out;
  for (const auto& [k, c] : x.terms()) {
    if (k.first.target() != b_tgt || k.first.source() != a_src) continue;
    if (k.second.target() != a_tgt || k.second.source() != b_src) continue;
    out.add_term(k.first, k.second, c);
  }
  return out;
}

}  // namespace boalch
