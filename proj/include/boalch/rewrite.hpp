#pragma once

#include <string>
#include <vector>

#include "boalch/algebra.hpp"

namespace boalch {

// A contiguous-subword rewrite: pattern (non-empty symbol sequence) replaced
// by an AlgElem with matching source/target. Defined-symbol expansions are
// length-1 patterns.
struct Rule {
  std::vector<GenSymbol> pattern;
  AlgElem replacement;
  std::string name;
};

struct RuleSet {
  std::vector<Rule> rules;

  void add(std::vector<GenSymbol> pattern, AlgElem replacement, std::string name);
  void add_expansion(const GenSymbol& sym, AlgElem replacement, std::string name = "");
  RuleSet then(const RuleSet& more) const;  // concatenation, this first
};

inline constexpr int kDefaultStepCap = 10000;

struct NormalizeResult {
  AlgElem value;
  bool fixpoint = true;
};
struct NormalizeResult2 {
  TensorElem2 value;
  bool fixpoint = true;
};
struct NormalizeResult3 {
  TensorElem3 value;
  bool fixpoint = true;
};

// Applies rules leftmost-innermost per word until no rule fires or the cap is
// hit (per word). Deterministic given rule order.
NormalizeResult normalize(const AlgElem& x, const RuleSet& rules,
                          int step_cap = kDefaultStepCap);
NormalizeResult2 normalize(const TensorElem2& x, const RuleSet& rules,
                           int step_cap = kDefaultStepCap);
NormalizeResult3 normalize(const TensorElem3& x, const RuleSet& rules,
                           int step_cap = kDefaultStepCap);

enum class Verdict { Equal, NotEqual, Undecided };

const char* verdict_str(Verdict v);

// Structural comparison after normalization with the given rules; Undecided
// when either side failed to reach a fixpoint.
template <class T>
Verdict rewrite_equal(const T& x, const T& y, const RuleSet& rules,
                      int step_cap = kDefaultStepCap) {
  auto nx = normalize(x, rules, step_cap);
  auto ny = normalize(y, rules, step_cap);
  if (nx.value == ny.value) return (nx.fixpoint && ny.fixpoint) ? Verdict::Equal
                                                                : Verdict::Undecided;
  if (!nx.fixpoint || !ny.fixpoint) return Verdict::Undecided;
  return Verdict::NotEqual;
}

}  // namespace boalch
