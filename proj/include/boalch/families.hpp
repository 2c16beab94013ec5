#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "boalch/bracket.hpp"
#include "boalch/quiver.hpp"

namespace boalch {

// Coefficients of the parametric double bracket on the double of the complete
// monochromatic quiver on n vertices: per-vertex matrices alpha/beta (skew,
// zero superscript row/column), mu/nu (zero diagonal and superscript
// row/column), and kappa values kappa_j^{(i,k)} stored only for i > j > k.
struct CoefficientFamily {
  using Matrix = std::vector<std::vector<Rational>>;

  int n = 0;
  std::vector<Matrix> alpha, beta, mu, nu;  // [s-1][i-1][j-1] = x^{(s)}_{ij}
  std::map<std::tuple<int, int, int>, Rational> kappa;  // (i,j,k) -> kappa_j^{(i,k)}

  static CoefficientFamily zero(int n);

  const Rational& a(int s, int i, int j) const { return alpha[s - 1][i - 1][j - 1]; }
  const Rational& b(int s, int i, int j) const { return beta[s - 1][i - 1][j - 1]; }
  const Rational& m(int s, int i, int j) const { return mu[s - 1][i - 1][j - 1]; }
  const Rational& u(int s, int i, int j) const { return nu[s - 1][i - 1][j - 1]; }
  // kappa_j^{(i,k)}; zero unless i > j > k.
  Rational k(int i, int j, int k_) const;

  void set_alpha(int s, int i, int j, const Rational& v);  // also sets (j,i) = -v
  void set_beta(int s, int i, int j, const Rational& v);
  void set_mu(int s, int i, int j, const Rational& v) { mu[s - 1][i - 1][j - 1] = v; }
  void set_nu(int s, int i, int j, const Rational& v) { nu[s - 1][i - 1][j - 1] = v; }
  void set_kappa(int i, int j, int k_, const Rational& v);

  static CoefficientFamily from_json(const std::string& text);
  std::string to_json() const;
};

// Empty = valid. Checks skewness, forced-zero rows/columns/diagonals, kappa
// index ranges, and matrix shapes.
std::vector<std::string> validate(const CoefficientFamily& cf);

// The n=3 family whose double bracket descends to the triangle Boalch algebra.
CoefficientFamily table1_family();

// Populates all ordered pairs (v_{ij}, v_{kl}) per the eight family rules
// (zero / disjoint / alpha / beta / mu-nu and its opposite / merged
// sign-function rule for <<v_{ij}, v_{ji}>>). Throws std::invalid_argument on
// invariant violations, std::logic_error if any entry fails its idempotent
// window.
BracketTable family_bracket_table(int n, const CoefficientFamily& cf);

struct ConditionEntry {
  std::string lemma;      // case identifier, e.g. "3.2.a(iii)"
  std::string indices;    // index tuple, e.g. "i=3 j=1 k=2"
  std::string condition;  // rendered equation with the evaluated left side
  Rational lhs, rhs;
  bool satisfied = false;
};

struct ConditionReport {
  std::vector<ConditionEntry> entries;
  bool all_satisfied() const;
  size_t failed() const;
};

// Evaluates every case condition over its full index range for cf.n. The
// conjunction of the entries is equivalent to the double bracket being
// quasi-Poisson; "always holds" cases contribute one vacuous entry each.
// With fail_fast the report stops at the first unsatisfied entry.
ConditionReport check_conditions(const CoefficientFamily& cf, bool fail_fast = false);

// Builds the family table and checks <<a,b,c>> == <<a,b,c>>_qP on all ordered
// generator triples of the double quiver (definitive: no localization
// involved). With fail_fast the sweep stops at the first non-equal triple.
CheckReport brute_force_qp(const CoefficientFamily& cf, int n, bool fail_fast = false);

// An expected bracket value for a generator pair, with provenance notes when
// the stored form differs from the literal source text (idempotent-window
// corrections).
struct FixtureEntry {
  GenSymbol x, y;
  TensorElem2 expected;
  bool window_corrected = false;
  TensorElem2 literal;       // the uncorrected source value, when corrected
  std::string literal_note;  // the replaced literal term, when corrected
};

struct Fixture {
  std::string name;
  ColoredQuiver quiver;
  BracketTable table;                 // generator (v,v) entries
  std::vector<FixtureEntry> derived;  // expected brackets over all generators
  std::vector<GenSymbol> phi;         // moment map components (gamma_s)
  RelationSet relations;
};

// n=2: the one-arrow algebra. Four v-table entries, the ten derived brackets,
// the four gamma moment brackets, Phi = gamma_1 + gamma_2.
Fixture interval_fixture();

// n=3: the full triangle tables: 36 (v,v), 36 (w,v), 36 (v,w), 36 (w,w)
// expected entries and Phi = gamma_1 + gamma_2 + gamma_3.
Fixture triangle_fixture();

// Recomputes every derived bracket from the v-table via dbl and compares
// layered (STRUCTURAL -> EXPANDED -> ORACLE).
CheckReport verify_fixture(const Fixture& fx, const TensorOracle& oracle = nullptr,
                           int step_cap = kDefaultStepCap);

// Value grids per parameter class for enumeration.
struct ValueGrid {
  std::vector<Rational> alpha, beta, mu, nu, kappa;
};

// Exhaustive odometer enumeration over the free parameters (alpha/beta upper
// triangles, mu/nu off-diagonal entries, kappa triples), returning up to
// `limit` families that pass check_conditions; each returned family is
// double-checked with brute_force_qp.
std::vector<CoefficientFamily> search_admissible(int n, const ValueGrid& grid,
                                                 size_t limit);

}  // namespace boalch
