#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace boalch {

// Generator alphabet of the (extended) double of a colored quiver plus the
// localized inverses. Vertices are 1-based. For V symbols, v(i,j) has target i
// and source j (paths compose right-to-left). Idem/Gamma/GammaInv sit at a
// single vertex (target == source).
enum class SymKind : uint8_t { Idem = 0, V = 1, W = 2, Gamma = 3, GammaInv = 4 };

struct GenSymbol {
  SymKind kind = SymKind::Idem;
  int color = 0;  // color index; ignored for Idem
  int target = 0;
  int source = 0;

  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;

  static GenSymbol idem(int s) { return {SymKind::Idem, 0, s, s}; }
  static GenSymbol v(int i, int j, int c = 0) { return {SymKind::V, c, i, j}; }
  static GenSymbol w(int i, int j, int c = 0) { return {SymKind::W, c, i, j}; }
  static GenSymbol gamma(int s, int c = 0) { return {SymKind::Gamma, c, s, s}; }
  static GenSymbol gamma_inv(int s, int c = 0) { return {SymKind::GammaInv, c, s, s}; }

  bool is_idem() const { return kind == SymKind::Idem; }
  std::string str() const;  // token form: e1, v12, w21, g3, g3inv (color prefix elsewhere)
};

// A basis word of the path algebra: either the idempotent e_{vertex}
// (syms empty) or a composable sequence of non-idempotent symbols.
struct Word {
  int vertex = 0;               // only meaningful when syms is empty
  std::vector<GenSymbol> syms;  // leftmost symbol is applied last (paths right-to-left)

  static Word idem(int s) { return Word{s, {}}; }
  static Word sym(const GenSymbol& g) {
    if (g.is_idem()) return idem(g.target);
    return Word{0, {g}};
  }

  bool is_idem() const { return syms.empty(); }
  int target() const { return syms.empty() ? vertex : syms.front().target; }
  int source() const { return syms.empty() ? vertex : syms.back().source; }
  size_t length() const { return syms.size(); }

  // Canonical order: length first, then lexicographic on symbols; empty words
  // ordered by vertex.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.syms.size() != b.syms.size()) return a.syms.size() < b.syms.size();
    if (a.syms.empty()) return a.vertex < b.vertex;
    return a.syms < b.syms;
  }
  friend bool operator==(const Word& a, const Word& b) {
    if (a.syms.empty() != b.syms.empty()) return false;
    if (a.syms.empty()) return a.vertex == b.vertex;
    return a.syms == b.syms;
  }

  std::string str() const;
};

// Word concatenation; false if sources/targets do not match.
bool compose(const Word& a, const Word& b, Word& out);

}  // namespace boalch
