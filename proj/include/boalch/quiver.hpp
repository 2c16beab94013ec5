#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boalch/algebra.hpp"
#include "boalch/symbol.hpp"

namespace boalch {

// One monochromatic layer: a complete k-partite quiver on the vertex subset
// I_c, with a total order induced by the part order and the within-part
// listing order. Arrows v_{c,ij}: j -> i exist for i,j in different parts with
// i above j in the color order.
struct ColorClass {
  std::string id;
  std::vector<int> vertices;                // I_c
  std::vector<std::vector<int>> partition;  // parts, within-part order as listed
  std::vector<int> part_order;              // permutation of part indices (0- or 1-based)

  // Derived (filled by ColoredQuiver::finalize): vertices in ascending color
  // order, and rank lookup.
  std::vector<int> ordered;

  int rank(int vertex) const;     // position in `ordered`, -1 if absent
  int part_of(int vertex) const;  // part index, -1 if absent
  bool above(int i, int j) const { return rank(i) > rank(j); }
};

struct ColoredQuiver {
  int n = 0;
  std::vector<ColorClass> colors;

  const ColorClass* color_by_id(const std::string& id) const;
  int color_index(const std::string& id) const;

  static ColoredQuiver from_json(const std::string& text);
  std::string to_json() const;

  // Complete monochromatic quiver on n vertices with singleton parts and the
  // integer order: one arrow v_{ij} per pair i > j. This is the section-5
  // setting (interval for n=2, triangle for n=3).
  static ColoredQuiver complete(int n, const std::string& color_id = "c");
};

// Empty = valid.
std::vector<std::string> validate(const ColoredQuiver& q);

// All v_{c,ij} of the double: original arrows (i above j in the color order,
// different parts) plus their opposites.
std::vector<GenSymbol> double_quiver(const ColoredQuiver& q);
// Original arrows only (i above j).
std::vector<GenSymbol> original_arrows(const ColoredQuiver& q);

// Adds w_{c,ij} for all ordered distinct pairs in I_c and the loops
// gamma_{c,i} and their inverses.
std::vector<GenSymbol> extended_double(const ColoredQuiver& q);

struct Relation {
  std::string label;
  AlgElem lhs, rhs;  // relation is lhs = rhs
};

struct RelationSet {
  std::vector<Relation> relations;
};

// Per color, the full relation v_{c-} v_{c+} = w_{c+} gamma_c w_{c-} plus its
// idempotent decomposition (one identity per ordered vertex pair / diagonal).
RelationSet boalch_relations(const ColoredQuiver& q);

// Per vertex s: ordered product of gamma_{c,s} over the colors at s (in the
// given order) minus q_s e_s. vertex_orders[s-1] lists color indices at s in
// product order; empty means "colors in declaration order".
RelationSet fission_relations(const ColoredQuiver& q, const std::vector<Rational>& params,
                              const std::vector<std::vector<int>>& vertex_orders = {});

// A definition sym := expr over v's and previously introduced gamma-inverses.
struct Definition {
  GenSymbol sym;
  AlgElem expr;
};

// For each color, by descending color order: gamma_k, then w_{ik}, w_{ki} for
// all i below k. Expressions use only v's and gamma_l^{-1} with l above k.
std::vector<Definition> derived_generators(const ColoredQuiver& q);

}  // namespace boalch
