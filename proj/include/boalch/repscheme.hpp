#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <vector>

#include "boalch/bracket.hpp"
#include "boalch/quiver.hpp"

namespace boalch {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

using DimVector = std::vector<int>;  // d_s per vertex, 1-based vertices

// Exact rational matrix representation: every generator of the extended
// double (v, w, gamma, gamma^{-1}) carries an N x N matrix supported on its
// block; idempotents evaluate to block projectors.
struct MatrixRep {
  ColoredQuiver quiver;
  DimVector dims;
  int N = 0;
  std::vector<int> offset;  // block offset per vertex (1-based)
  std::map<GenSymbol, RatMatrix> blocks;
  uint64_t seed = 0;
  size_t sampled_params = 0;  // free rational entries drawn by random_rep

  RatMatrix projector(int vertex) const;
  const RatMatrix& block(const GenSymbol& g) const;
};

MatrixRep trivial_rep(const ColoredQuiver& q, const DimVector& d);

// Samples v blocks from entry_range, then builds gamma/w blocks bottom-up via
// derived_generators; retries (perturbing the seed) until all gamma blocks
// are invertible. Throws after `retries` failures naming the singular gamma.
MatrixRep random_rep(const ColoredQuiver& q, const DimVector& d, uint64_t seed,
                     const std::vector<Rational>& entry_range, int retries = 32);

RatMatrix eval(const AlgElem& x, const MatrixRep& r);
// Tensor slots evaluated as Kronecker factors: N^2 x N^2 / N^3 x N^3.
RatMatrix eval(const TensorElem2& x, const MatrixRep& r);
RatMatrix eval(const TensorElem3& x, const MatrixRep& r);

// Entry-wise exact comparison. (Eigen's operator overloads are avoided for
// this scalar type; see repscheme.cpp.)
bool mats_equal(const RatMatrix& a, const RatMatrix& b);

template <class T>
Verdict oracle_equal(const T& x, const T& y, const std::vector<MatrixRep>& reps) {
  if (reps.empty()) return Verdict::Undecided;
  for (const auto& r : reps)
    if (!mats_equal(eval(x, r), eval(y, r))) return Verdict::NotEqual;
  return Verdict::Equal;
}

// The induced bracket on matrix entries: {a_ij, b_uv} = sum over Sweedler
// terms of (first)_{uj} (second)_{iv}. Index order of the returned array is
// value[((i*N + j)*N + u)*N + v], all 0-based.
std::vector<Rational> induced_bracket(const AlgElem& a, const AlgElem& b,
                                      const BracketContext& ctx, const MatrixRep& r);

// Checks {tr a, tr b} == tr m(<<a,b>>) exactly.
Verdict trace_bracket_check(const AlgElem& a, const AlgElem& b, const BracketContext& ctx,
                            const MatrixRep& r);

// 2 * sum over original arrows of d_tail * d_head.
long long dimension_count(const ColoredQuiver& q, const DimVector& d);

// Default oracle suite for layered equality: dims (1,..,1), (2,..,2),
// (1,2,3,...) with entries in [-3,3], 3 seeds each.
std::vector<MatrixRep> default_rep_suite(const ColoredQuiver& q);

// Bridges oracle_equal into the bracket-module fallback hook.
TensorOracle make_tensor_oracle(const std::vector<MatrixRep>& reps);

}  // namespace boalch
