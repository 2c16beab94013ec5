#include "boalch/repscheme.hpp"

#include <random>
#include <stdexcept>

namespace boalch {

namespace {

RatMatrix zero_matrix(int n, int m) { return RatMatrix::Zero(n, m); }

// Eigen's scalar-times-matrix operators trip non-SFINAE-friendly implicit
// conversion traits of the multiprecision scalar, so scale entry-wise.
RatMatrix scaled(const RatMatrix& m, const Rational& c) {
  RatMatrix out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= c;
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = zero_matrix(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// Gauss-Jordan over the exact rationals; returns false when singular.
bool rational_inverse(RatMatrix& m) {
  const int d = static_cast<int>(m.rows());
  RatMatrix inv = RatMatrix::Identity(d, d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Rational p = m(col, col);
    for (int j = 0; j < d; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int j = 0; j < d; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  m = inv;
  return true;
}

bool block_invertible(const RatMatrix& full, int off, int d) {
  if (d == 0) return true;
  RatMatrix blk = full.block(off, off, d, d);
  return rational_inverse(blk);
}

RatMatrix block_inverse_embedded(const RatMatrix& full, int off, int d, int N) {
  RatMatrix out = zero_matrix(N, N);
  if (d == 0) return out;
  RatMatrix blk = full.block(off, off, d, d);
  if (!rational_inverse(blk)) throw std::logic_error("singular block in inversion");
  out.block(off, off, d, d) = blk;
  return out;
}

}  // namespace

RatMatrix MatrixRep::projector(int vertex) const {
  RatMatrix p = zero_matrix(N, N);
  for (int k = 0; k < dims[vertex - 1]; ++k) p(offset[vertex - 1] + k, offset[vertex - 1] + k) = 1;
  return p;
}

const RatMatrix& MatrixRep::block(const GenSymbol& g) const {
  auto it = blocks.find(g);
  if (it == blocks.end())
    throw std::invalid_argument("representation has no block for symbol " + g.str());
  return it->second;
}

namespace {

void init_shape(MatrixRep& r, const ColoredQuiver& q, const DimVector& d) {
  auto bad = validate(q);
  if (!bad.empty()) throw std::invalid_argument("invalid quiver: " + bad.front());
  if (static_cast<int>(d.size()) != q.n)
    throw std::invalid_argument("dimension vector length mismatch");
  int total = 0;
  for (int ds : d) {
    if (ds < 0) throw std::invalid_argument("negative dimension");
    total += ds;
  }
  if (total == 0) throw std::invalid_argument("empty representation (all d_s = 0)");
  r.quiver = q;
  r.dims = d;
  r.N = total;
  r.offset.resize(q.n);
  int off = 0;
  for (int s = 0; s < q.n; ++s) {
    r.offset[s] = off;
    off += d[s];
  }
}

// Evaluates definitions from derived_generators on the partially built rep,
// inserting gamma inverses as soon as each gamma block is known. Returns the
// first non-invertible gamma symbol, if any.
const GenSymbol* build_derived(MatrixRep& r) {
  static GenSymbol bad;
  for (const auto& def : derived_generators(r.quiver)) {
    RatMatrix m = eval(def.expr, r);
    if (def.sym.kind == SymKind::Gamma) {
      int v = def.sym.target;
      if (!block_invertible(m, r.offset[v - 1], r.dims[v - 1])) {
        bad = def.sym;
        return &bad;
      }
      r.blocks[def.sym] = m;
      r.blocks[GenSymbol::gamma_inv(v, def.sym.color)] =
          block_inverse_embedded(m, r.offset[v - 1], r.dims[v - 1], r.N);
    } else {
      r.blocks[def.sym] = m;
    }
  }
  return nullptr;
}

}  // namespace

MatrixRep trivial_rep(const ColoredQuiver& q, const DimVector& d) {
  MatrixRep r;
  init_shape(r, q, d);
  for (const auto& g : double_quiver(q)) r.blocks[g] = zero_matrix(r.N, r.N);
  if (const GenSymbol* bad = build_derived(r))
    throw std::logic_error("trivial rep has singular gamma " + bad->str());
  return r;
}

MatrixRep random_rep(const ColoredQuiver& q, const DimVector& d, uint64_t seed,
                     const std::vector<Rational>& entry_range, int retries) {
  if (entry_range.empty()) throw std::invalid_argument("empty entry range");
  std::string last_bad;
  for (int attempt = 0; attempt < retries; ++attempt) {
    MatrixRep r;
    init_shape(r, q, d);
    r.seed = seed;
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::uniform_int_distribution<size_t> pick(0, entry_range.size() - 1);
    r.sampled_params = 0;
    for (const auto& g : double_quiver(q)) {
      RatMatrix m = zero_matrix(r.N, r.N);
      int di = d[g.target - 1], dj = d[g.source - 1];
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b) {
          m(r.offset[g.target - 1] + a, r.offset[g.source - 1] + b) = entry_range[pick(rng)];
          ++r.sampled_params;
        }
      r.blocks[g] = m;
    }
    if (const GenSymbol* bad = build_derived(r)) {
      last_bad = bad->str();
      continue;
    }
    return r;
  }
  throw std::runtime_error("random_rep: retries exhausted, singular gamma " + last_bad);
}

RatMatrix eval(const AlgElem& x, const MatrixRep& r) {
  RatMatrix out = zero_matrix(r.N, r.N);
  for (const auto& [w, c] : x.terms()) {
    RatMatrix m;
    if (w.is_idem()) {
      m = r.projector(w.vertex);
    } else {
      m = r.block(w.syms[0]);
      for (size_t k = 1; k < w.syms.size(); ++k) m = mat_mul(m, r.block(w.syms[k]));
    }
    out += scaled(m, c);
  }
  return out;
}

namespace {

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = zero_matrix(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = scaled(b, a(i, j));
    }
  return out;
}

RatMatrix eval_word(const Word& w, const MatrixRep& r) {
  if (w.is_idem()) return r.projector(w.vertex);
  RatMatrix m = r.block(w.syms[0]);
  for (size_t k = 1; k < w.syms.size(); ++k) m = mat_mul(m, r.block(w.syms[k]));
  return m;
}

}  // namespace

bool mats_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

RatMatrix eval(const TensorElem2& x, const MatrixRep& r) {
  RatMatrix out = zero_matrix(r.N * r.N, r.N * r.N);
  for (const auto& [k, c] : x.terms())
    out += scaled(kron(eval_word(k.first, r), eval_word(k.second, r)), c);
  return out;
}

RatMatrix eval(const TensorElem3& x, const MatrixRep& r) {
  const int n3 = r.N * r.N * r.N;
  RatMatrix out = zero_matrix(n3, n3);
  for (const auto& [k, c] : x.terms())
    out += scaled(kron(kron(eval_word(k.a, r), eval_word(k.b, r)), eval_word(k.c, r)), c);
  return out;
}

std::vector<Rational> induced_bracket(const AlgElem& a, const AlgElem& b,
                                      const BracketContext& ctx, const MatrixRep& r) {
  const int N = r.N;
  std::vector<Rational> out(static_cast<size_t>(N) * N * N * N, Rational(0));
  const TensorElem2 ab = dbl(a, b, ctx);
  for (const auto& [k, c] : ab.terms()) {
    RatMatrix m1 = eval_word(k.first, r), m2 = eval_word(k.second, r);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int u = 0; u < N; ++u)
          for (int v = 0; v < N; ++v)
            out[((static_cast<size_t>(i) * N + j) * N + u) * N + v] +=
                c * m1(u, j) * m2(i, v);
  }
  return out;
}

Verdict trace_bracket_check(const AlgElem& a, const AlgElem& b, const BracketContext& ctx,
                            const MatrixRep& r) {
  const int N = r.N;
  auto arr = induced_bracket(a, b, ctx, r);
  Rational lhs(0);
  for (int i = 0; i < N; ++i)
    for (int v = 0; v < N; ++v)
      lhs += arr[((static_cast<size_t>(i) * N + i) * N + v) * N + v];
  Rational rhs = eval(associated_bracket(a, b, ctx), r).trace();
  return lhs == rhs ? Verdict::Equal : Verdict::NotEqual;
}

long long dimension_count(const ColoredQuiver& q, const DimVector& d) {
  long long total = 0;
  for (const auto& g : original_arrows(q))
    total += static_cast<long long>(d[g.target - 1]) * d[g.source - 1];
  return 2 * total;
}

std::vector<MatrixRep> default_rep_suite(const ColoredQuiver& q) {
  std::vector<Rational> range;
  for (int k = -3; k <= 3; ++k) range.push_back(k);
  std::vector<DimVector> dims;
  dims.push_back(DimVector(q.n, 1));
  dims.push_back(DimVector(q.n, 2));
  DimVector ramp(q.n);
  for (int s = 0; s < q.n; ++s) ramp[s] = s + 1;
  dims.push_back(ramp);
  std::vector<MatrixRep> reps;
  for (const auto& d : dims)
    for (uint64_t seed = 1; seed <= 3; ++seed) reps.push_back(random_rep(q, d, seed, range));
  return reps;
}

TensorOracle make_tensor_oracle(const std::vector<MatrixRep>& reps) {
  return [reps](const TensorElem2& x, const TensorElem2& y) {
    return oracle_equal(x, y, reps);
  };
}

}  // namespace boalch
