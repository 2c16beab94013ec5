#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boalch/quiver.hpp"
#include "boalch/rewrite.hpp"

namespace boalch {

struct MissingBracketEntry : std::runtime_error {
  explicit MissingBracketEntry(const std::string& what) : std::runtime_error(what) {}
};

// Generator-pair assignment defining a double bracket. Entries are projected
// through the idempotent window at registration; pairs with an idempotent
// argument are implicitly zero.
class BracketTable {
 public:
  using Key = std::pair<GenSymbol, GenSymbol>;

  // Registers table(a,b) = value after idempotent_window projection; returns
  // a warning string when the window dropped terms, empty otherwise.
  std::string set(const GenSymbol& a, const GenSymbol& b, const TensorElem2& value);

  const TensorElem2* find(const GenSymbol& a, const GenSymbol& b) const;
  const std::map<Key, TensorElem2>& entries() const { return entries_; }

 private:
  std::map<Key, TensorElem2> entries_;
};

// Everything dbl needs: the generator table, expansions for defined symbols
// (w's and gammas as elements over v's and gamma-inverses), and the rewrite
// systems for the STRUCTURAL / EXPANDED equality strategies.
struct BracketContext {
  BracketTable table;
  std::map<GenSymbol, AlgElem> expansions;
  RuleSet cancel;    // gamma gamma^{-1} cancellations only
  RuleSet expanded;  // cancel + localization relation rules + expansions
  std::vector<int> vertices;  // idempotent index set I

  mutable std::map<std::pair<GenSymbol, GenSymbol>, TensorElem2> memo;

  // Builds expansions and rule sets for a quiver from derived_generators.
  // The table must already hold the v-generator entries.
  static BracketContext for_quiver(const ColoredQuiver& q, BracketTable table);
};

TensorElem2 dbl(const AlgElem& a, const AlgElem& b, const BracketContext& ctx);
TensorElem3 triple(const AlgElem& a, const AlgElem& b, const AlgElem& c,
                   const BracketContext& ctx);
TensorElem3 qp_rhs(const AlgElem& a, const AlgElem& b, const AlgElem& c,
                   const std::vector<int>& vertices);
AlgElem associated_bracket(const AlgElem& a, const AlgElem& b, const BracketContext& ctx);

struct CheckItem {
  std::string label;
  Verdict verdict = Verdict::Undecided;
  std::string strategy;  // which strategy produced the verdict
  std::string witness;   // rendered difference on NOT_EQUAL
};

struct CheckReport {
  std::vector<CheckItem> items;
  Verdict overall() const;
  size_t count(Verdict v) const;
};

// Equality fallback used when the symbolic strategies stay undecided
// (typically the representation oracle).
using TensorOracle = std::function<Verdict(const TensorElem2&, const TensorElem2&)>;

// Layered equality STRUCTURAL -> EXPANDED -> ORACLE for one labelled pair.
CheckItem layered_item(const std::string& label, const TensorElem2& lhs,
                       const TensorElem2& rhs, const BracketContext& ctx,
                       const TensorOracle& oracle = nullptr,
                       int step_cap = kDefaultStepCap);

// qPabc on all ordered generator triples. With fail_fast the sweep stops at
// the first non-equal triple and skips witness rendering.
CheckReport check_quasi_poisson(const BracketContext& ctx,
                                const std::vector<GenSymbol>& gens,
                                int step_cap = kDefaultStepCap,
                                bool fail_fast = false);

// (Phim) for each phi component against each generator, plus the (PhimInv)
// consistency identity when the component is a single gamma symbol.
CheckReport check_moment_map(const std::vector<GenSymbol>& phi_components,
                             const BracketContext& ctx,
                             const std::vector<GenSymbol>& gens,
                             const TensorOracle& oracle = nullptr,
                             int step_cap = kDefaultStepCap);

}  // namespace boalch
