#include "boalch/rewrite.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace boalch {

void RuleSet::add(std::vector<GenSymbol> pattern, AlgElem replacement, std::string name) {
  if (pattern.empty()) throw std::invalid_argument("rule pattern must be non-empty");
  rules.push_back({std::move(pattern), std::move(replacement), std::move(name)});
}

void RuleSet::add_expansion(const GenSymbol& sym, AlgElem replacement, std::string name) {
  if (name.empty()) name = "expand " + sym.str();
  add({sym}, std::move(replacement), std::move(name));
}

RuleSet RuleSet::then(const RuleSet& more) const {
  RuleSet out = *this;
  out.rules.insert(out.rules.end(), more.rules.begin(), more.rules.end());
  return out;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Equal:
      return "EQUAL";
    case Verdict::NotEqual:
      return "NOT_EQUAL";
    case Verdict::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

namespace {

// Leftmost position where any rule matches; rules tried in order at each
// position. Returns rule index or -1.
int find_redex(const Word& w, const RuleSet& rules, size_t& pos) {
  const auto& syms = w.syms;
  for (size_t p = 0; p < syms.size(); ++p)
    for (size_t r = 0; r < rules.rules.size(); ++r) {
      const auto& pat = rules.rules[r].pattern;
      if (p + pat.size() > syms.size()) continue;
      bool hit = true;
      for (size_t k = 0; k < pat.size(); ++k)
        if (!(syms[p + k] == pat[k])) {
          hit = false;
          break;
        }
      if (hit) {
        pos = p;
        return static_cast<int>(r);
      }
    }
  return -1;
}

AlgElem word_slice(const Word& w, size_t b, size_t e, int fallback_vertex) {
  if (b >= e) return AlgElem::unit(fallback_vertex);
  Word out;
  out.syms.assign(w.syms.begin() + b, w.syms.begin() + e);
  return AlgElem::from_word(out);
}

}  // namespace

NormalizeResult normalize(const AlgElem& x, const RuleSet& rules, int step_cap) {
  NormalizeResult res;
  std::deque<std::pair<Word, Rational>> todo(x.terms().begin(), x.terms().end());
  int steps = 0;
  while (!todo.empty()) {
    auto [w, c] = todo.front();
    todo.pop_front();
    size_t pos = 0;
    int r = w.is_idem() ? -1 : find_redex(w, rules, pos);
    if (r < 0) {
      res.value.add_term(w, c);
      continue;
    }
    if (++steps > step_cap) {
      res.fixpoint = false;
      res.value.add_term(w, c);
      for (const auto& [w2, c2] : todo) res.value.add_term(w2, c2);
      break;
    }
    const auto& rule = rules.rules[r];
    AlgElem pre = word_slice(w, 0, pos, rule.pattern.front().target);
    AlgElem post =
        word_slice(w, pos + rule.pattern.size(), w.syms.size(), rule.pattern.back().source);
    AlgElem repl = pre * rule.replacement * post;
    repl *= c;
    for (const auto& [w2, c2] : repl.terms()) todo.emplace_back(w2, c2);
  }
  return res;
}

NormalizeResult2 normalize(const TensorElem2& x, const RuleSet& rules, int step_cap) {
  NormalizeResult2 res;
  for (const auto& [k, c] : x.terms()) {
    auto nu = normalize(AlgElem::from_word(k.first), rules, step_cap);
    auto nw = normalize(AlgElem::from_word(k.second), rules, step_cap);
    res.fixpoint = res.fixpoint && nu.fixpoint && nw.fixpoint;
    res.value += c * TensorElem2::tensor(nu.value, nw.value);
  }
  return res;
}

NormalizeResult3 normalize(const TensorElem3& x, const RuleSet& rules, int step_cap) {
  NormalizeResult3 res;
  for (const auto& [k, c] : x.terms()) {
    auto na = normalize(AlgElem::from_word(k.a), rules, step_cap);
    auto nb = normalize(AlgElem::from_word(k.b), rules, step_cap);
    auto nc = normalize(AlgElem::from_word(k.c), rules, step_cap);
    res.fixpoint = res.fixpoint && na.fixpoint && nb.fixpoint && nc.fixpoint;
    res.value += c * TensorElem3::tensor(na.value, nb.value, nc.value);
  }
  return res;
}

}  // namespace boalch
