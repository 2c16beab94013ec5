#include "boalch/bracket.hpp"

#include <algorithm>

namespace boalch {

std::string BracketTable::set(const GenSymbol& a, const GenSymbol& b,
                              const TensorElem2& value) {
  TensorElem2 projected =
      idempotent_window(value, a.source, a.target, b.source, b.target);
  std::string warning;
  if (!(projected == value)) {
    TensorElem2 dropped = value - projected;
    warning = "window correction for (" + a.str() + "," + b.str() +
              "): dropped " + dropped.str();
  }
  entries_[{a, b}] = projected;
  return warning;
}

const TensorElem2* BracketTable::find(const GenSymbol& a, const GenSymbol& b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? nullptr : &it->second;
}

BracketContext BracketContext::for_quiver(const ColoredQuiver& q, BracketTable table) {
  BracketContext ctx;
  ctx.table = std::move(table);
  for (int s = 1; s <= q.n; ++s) ctx.vertices.push_back(s);

  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    const int cidx = static_cast<int>(ci);
    for (int s : c.vertices) {
      GenSymbol g = GenSymbol::gamma(s, cidx), gi = GenSymbol::gamma_inv(s, cidx);
      ctx.cancel.add({g, gi}, AlgElem::unit(s), "cancel " + g.str() + "*" + gi.str());
      ctx.cancel.add({gi, g}, AlgElem::unit(s), "cancel " + gi.str() + "*" + g.str());
    }
  }

  RuleSet relations, expansions;
  for (const auto& def : derived_generators(q)) {
    ctx.expansions[def.sym] = def.expr;
    if (def.sym.kind == SymKind::Gamma) {
      const int s = def.sym.target;
      GenSymbol gi = GenSymbol::gamma_inv(s, def.sym.color);
      AlgElem p = def.expr - AlgElem::unit(s);  // gamma-hat = e_s + P
      if (p.is_zero()) {
        // gamma = e_s forced; its inverse likewise.
        expansions.add_expansion(gi, AlgElem::unit(s));
        continue;
      }
      // Orient on the deglex-leading word of P: both one-sided relations
      // gamma^{-1} P = e - gamma^{-1} and P gamma^{-1} = e - gamma^{-1}.
      auto lead = std::prev(p.terms().end());
      Word wl = lead->first;
      Rational cl = lead->second;
      AlgElem rest = p;
      rest.add_term(wl, -cl);
      AlgElem ginv = AlgElem::from_sym(gi);
      Rational inv_cl = Rational(1) / cl;
      std::vector<GenSymbol> left_pat, right_pat;
      left_pat.push_back(gi);
      left_pat.insert(left_pat.end(), wl.syms.begin(), wl.syms.end());
      right_pat = wl.syms;
      right_pat.push_back(gi);
      AlgElem left_rhs = inv_cl * (AlgElem::unit(s) - ginv - ginv * rest);
      AlgElem right_rhs = inv_cl * (AlgElem::unit(s) - ginv - rest * ginv);
      relations.add(left_pat, left_rhs, "relation " + gi.str() + " left");
      relations.add(right_pat, right_rhs, "relation " + gi.str() + " right");
    }
  }
  for (const auto& [sym, expr] : ctx.expansions)
    if (!(sym.kind == SymKind::Gamma && expr == AlgElem::unit(sym.target)))
      expansions.add_expansion(sym, expr);

  ctx.expanded = ctx.cancel.then(relations).then(expansions);
  return ctx;
}

namespace {

AlgElem slice(const Word& w, size_t b, size_t e, int fallback_vertex) {
  if (b >= e) return AlgElem::unit(fallback_vertex);
  Word out;
  out.syms.assign(w.syms.begin() + b, w.syms.begin() + e);
  return AlgElem::from_word(out);
}

TensorElem2 dbl_words(const Word& wa, const Word& wb, const BracketContext& ctx);

TensorElem2 dbl_syms(const GenSymbol& x, const GenSymbol& y, const BracketContext& ctx) {
  if (x.is_idem() || y.is_idem()) return TensorElem2::zero();
  auto key = std::make_pair(x, y);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
  TensorElem2 out;
  if (const TensorElem2* t = ctx.table.find(x, y)) {
    out = *t;
  } else if (const TensorElem2* t2 = ctx.table.find(y, x)) {
    out = -(t2->tau12());
  } else if (x.kind == SymKind::GammaInv) {
    // From 0 = <<gamma gamma^{-1}, y>>: <<g^{-1},y>> = -g^{-1} * <<g,y>> * g^{-1}.
    GenSymbol g = GenSymbol::gamma(x.target, x.color);
    AlgElem gi = AlgElem::from_sym(x);
    out = -dbl_words(Word::sym(g), Word::sym(y), ctx).inner(gi, gi);
  } else if (y.kind == SymKind::GammaInv) {
    out = -dbl_syms(y, x, ctx).tau12();
  } else if (auto ex = ctx.expansions.find(x); ex != ctx.expansions.end()) {
    for (const auto& [w, c] : ex->second.terms())
      out += c * dbl_words(w, Word::sym(y), ctx);
  } else if (auto ey = ctx.expansions.find(y); ey != ctx.expansions.end()) {
    for (const auto& [w, c] : ey->second.terms())
      out += c * dbl_words(Word::sym(x), w, ctx);
  } else {
    throw MissingBracketEntry("no bracket table entry or expansion for (" + x.str() +
                              ", " + y.str() + ")");
  }
  ctx.memo.emplace(key, out);
  return out;
}

TensorElem2 dbl_words(const Word& wa, const Word& wb, const BracketContext& ctx) {
  if (wa.is_idem() || wb.is_idem()) return TensorElem2::zero();
  TensorElem2 out;
  for (size_t j = 0; j < wa.syms.size(); ++j) {
    const GenSymbol& x = wa.syms[j];
    AlgElem apre = slice(wa, 0, j, x.target);
    AlgElem apost = slice(wa, j + 1, wa.syms.size(), x.source);
    for (size_t k = 0; k < wb.syms.size(); ++k) {
      const GenSymbol& y = wb.syms[k];
      TensorElem2 base = dbl_syms(x, y, ctx);
      if (base.is_zero()) continue;
      AlgElem bpre = slice(wb, 0, k, y.target);
      AlgElem bpost = slice(wb, k + 1, wb.syms.size(), y.source);
      out += base.inner(apre, apost).outer(bpre, bpost);
    }
  }
  return out;
}

}  // namespace

TensorElem2 dbl(const AlgElem& a, const AlgElem& b, const BracketContext& ctx) {
  TensorElem2 out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out += (ca * cb) * dbl_words(wa, wb, ctx);
  return out;
}

TensorElem3 triple(const AlgElem& a, const AlgElem& b, const AlgElem& c,
                   const BracketContext& ctx) {
  auto nest = [&ctx](const AlgElem& x, const AlgElem& y, const AlgElem& z) {
    // <<x, <<y,z>> >>_L
    TensorElem3 out;
    TensorElem2 yz = dbl(y, z, ctx);
    for (const auto& [k, coeff] : yz.terms()) {
      TensorElem2 inner = dbl(x, AlgElem::from_word(k.first), ctx);
      if (inner.is_zero()) continue;
      out += coeff * TensorElem3::extend_right(inner, k.second);
    }
    return out;
  };
  return nest(a, b, c) + nest(b, c, a).tau123() + nest(c, a, b).tau132();
}

TensorElem3 qp_rhs(const AlgElem& a, const AlgElem& b, const AlgElem& c,
                   const std::vector<int>& vertices) {
  TensorElem3 out;
  for (int s : vertices) {
    AlgElem e = AlgElem::unit(s);
    AlgElem ea = e * a, ae = a * e, eb = e * b, be = b * e, ce = c * e, ec = e * c;
    AlgElem cea = ce * a, aeb = a * eb, bec = b * ec;
    out += TensorElem3::tensor(cea, eb, e);
    out -= TensorElem3::tensor(cea, e, be);
    out -= TensorElem3::tensor(ce, aeb, e);
    out += TensorElem3::tensor(ce, ae, be);
    out -= TensorElem3::tensor(ea, eb, ec);
    out += TensorElem3::tensor(ea, e, bec);
    out += TensorElem3::tensor(e, aeb, ec);
    out -= TensorElem3::tensor(e, ae, bec);
  }
  out *= Rational(1, 4);
  return out;
}

AlgElem associated_bracket(const AlgElem& a, const AlgElem& b, const BracketContext& ctx) {
  return dbl(a, b, ctx).multiply_out();
}

Verdict CheckReport::overall() const {
  Verdict v = Verdict::Equal;
  for (const auto& it : items) {
    if (it.verdict == Verdict::NotEqual) return Verdict::NotEqual;
    if (it.verdict == Verdict::Undecided) v = Verdict::Undecided;
  }
  return v;
}

size_t CheckReport::count(Verdict v) const {
  size_t n = 0;
  for (const auto& it : items)
    if (it.verdict == v) ++n;
  return n;
}

CheckReport check_quasi_poisson(const BracketContext& ctx,
                                const std::vector<GenSymbol>& gens, int step_cap,
                                bool fail_fast) {
  CheckReport rep;
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        AlgElem ea = AlgElem::from_sym(a), eb = AlgElem::from_sym(b),
                ec = AlgElem::from_sym(c);
        TensorElem3 lhs = triple(ea, eb, ec, ctx);
        TensorElem3 rhs = qp_rhs(ea, eb, ec, ctx.vertices);
        CheckItem item;
        item.label = "<<" + a.str() + "," + b.str() + "," + c.str() + ">>";
        item.verdict = rewrite_equal(lhs, rhs, ctx.expanded, step_cap);
        item.strategy = "EXPANDED";
        if (item.verdict == Verdict::NotEqual && !fail_fast) {
          auto d = normalize(lhs - rhs, ctx.expanded, step_cap);
          item.witness = d.value.str();
        }
        bool stop = fail_fast && item.verdict != Verdict::Equal;
        rep.items.push_back(std::move(item));
        if (stop) return rep;
      }
  return rep;
}

CheckItem layered_item(const std::string& label, const TensorElem2& lhs,
                       const TensorElem2& rhs, const BracketContext& ctx,
                       const TensorOracle& oracle, int step_cap) {
  CheckItem item;
  item.label = label;
  item.verdict = rewrite_equal(lhs, rhs, ctx.cancel, step_cap);
  item.strategy = "STRUCTURAL";
  if (item.verdict != Verdict::Equal) {
    item.verdict = rewrite_equal(lhs, rhs, ctx.expanded, step_cap);
    item.strategy = "EXPANDED";
    // With localization rules present the rewrite system is not complete:
    // a nonzero normal form is not a proof of inequality, so it is reported
    // as UNDECIDED and the representation oracle is consulted instead.
    if (item.verdict == Verdict::NotEqual && !ctx.expanded.rules.empty())
      item.verdict = Verdict::Undecided;
  }
  if (item.verdict == Verdict::Undecided && oracle) {
    item.verdict = oracle(lhs, rhs);
    item.strategy = "ORACLE";
  }
  if (item.verdict == Verdict::NotEqual) {
    auto d = normalize(lhs - rhs, ctx.expanded, step_cap);
    item.witness = d.value.str();
  }
  return item;
}

CheckReport check_moment_map(const std::vector<GenSymbol>& phi_components,
                             const BracketContext& ctx,
                             const std::vector<GenSymbol>& gens,
                             const TensorOracle& oracle, int step_cap) {
  CheckReport rep;
  for (const auto& phi : phi_components) {
    const int s = phi.target;
    AlgElem phie = AlgElem::from_sym(phi);
    AlgElem es = AlgElem::unit(s);
    for (const auto& g : gens) {
      AlgElem a = AlgElem::from_sym(g);
      TensorElem2 lhs = dbl(phie, a, ctx);
      TensorElem2 rhs = half() * (TensorElem2::tensor(a * es, phie) -
                                  TensorElem2::tensor(es, phie * a) +
                                  TensorElem2::tensor(a * phie, es) -
                                  TensorElem2::tensor(phie, es * a));
      rep.items.push_back(layered_item("Phim(" + phi.str() + "; " + g.str() + ")", lhs,
                                      rhs, ctx, oracle, step_cap));
      if (phi.kind == SymKind::Gamma) {
        AlgElem phin = AlgElem::from_sym(GenSymbol::gamma_inv(phi.target, phi.color));
        TensorElem2 ilhs = dbl(phin, a, ctx);
        TensorElem2 irhs = Rational(-1) * half() *
                           (TensorElem2::tensor(a * phin, es) -
                            TensorElem2::tensor(phin, es * a) +
                            TensorElem2::tensor(a * es, phin) -
                            TensorElem2::tensor(es, phin * a));
        rep.items.push_back(layered_item("PhimInv(" + phi.str() + "; " + g.str() + ")",
                                        ilhs, irhs, ctx, oracle, step_cap));
      }
    }
  }
  return rep;
}

}  // namespace boalch
