#include "boalch/families.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace boalch {

namespace {

using Matrix = CoefficientFamily::Matrix;

Matrix zero_matrix(int n) {
  return Matrix(n, std::vector<Rational>(n, Rational(0)));
}

std::string pos(const char* name, int s, int i, int j) {
  std::ostringstream os;
  os << name << "[" << s << "](" << i << "," << j << ")";
  return os.str();
}

}  // namespace

CoefficientFamily CoefficientFamily::zero(int n) {
  CoefficientFamily cf;
  cf.n = n;
  cf.alpha.assign(n, zero_matrix(n));
  cf.beta.assign(n, zero_matrix(n));
  cf.mu.assign(n, zero_matrix(n));
  cf.nu.assign(n, zero_matrix(n));
  return cf;
}

Rational CoefficientFamily::k(int i, int j, int k_) const {
  if (!(i > j && j > k_)) return Rational(0);
  auto it = kappa.find({i, j, k_});
  return it == kappa.end() ? Rational(0) : it->second;
}

void CoefficientFamily::set_alpha(int s, int i, int j, const Rational& v) {
  alpha[s - 1][i - 1][j - 1] = v;
  alpha[s - 1][j - 1][i - 1] = -v;
}

void CoefficientFamily::set_beta(int s, int i, int j, const Rational& v) {
  beta[s - 1][i - 1][j - 1] = v;
  beta[s - 1][j - 1][i - 1] = -v;
}

void CoefficientFamily::set_kappa(int i, int j, int k_, const Rational& v) {
  if (!(i > j && j > k_))
    throw std::invalid_argument("kappa index must satisfy i > j > k, got (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k_) + ")");
  if (v == 0)
    kappa.erase({i, j, k_});
  else
    kappa[{i, j, k_}] = v;
}

std::vector<std::string> validate(const CoefficientFamily& cf) {
  std::vector<std::string> out;
  const int n = cf.n;
  if (n < 2) out.push_back("vertex count must be at least 2");
  auto shape = [&](const char* name, const std::vector<Matrix>& m) {
    if (static_cast<int>(m.size()) != n) {
      out.push_back(std::string(name) + ": expected " + std::to_string(n) + " matrices");
      return false;
    }
    for (const auto& mat : m) {
      if (static_cast<int>(mat.size()) != n) {
        out.push_back(std::string(name) + ": matrix is not " + std::to_string(n) + "x" +
                      std::to_string(n));
        return false;
      }
      for (const auto& row : mat)
        if (static_cast<int>(row.size()) != n) {
          out.push_back(std::string(name) + ": matrix is not " + std::to_string(n) + "x" +
                        std::to_string(n));
          return false;
        }
    }
    return true;
  };
  if (!shape("alpha", cf.alpha) || !shape("beta", cf.beta) || !shape("mu", cf.mu) ||
      !shape("nu", cf.nu))
    return out;
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (cf.a(s, i, j) != -cf.a(s, j, i))
          out.push_back(pos("alpha", s, i, j) + " is not skewsymmetric");
        if (cf.b(s, i, j) != -cf.b(s, j, i))
          out.push_back(pos("beta", s, i, j) + " is not skewsymmetric");
        if ((i == s || j == s) && cf.a(s, i, j) != 0)
          out.push_back(pos("alpha", s, i, j) + " must be zero (superscript row/column)");
        if ((i == s || j == s) && cf.b(s, i, j) != 0)
          out.push_back(pos("beta", s, i, j) + " must be zero (superscript row/column)");
        if ((i == s || j == s || i == j) && cf.m(s, i, j) != 0)
          out.push_back(pos("mu", s, i, j) + " must be zero");
        if ((i == s || j == s || i == j) && cf.u(s, i, j) != 0)
          out.push_back(pos("nu", s, i, j) + " must be zero");
      }
  for (const auto& [key, val] : cf.kappa) {
    auto [i, j, k_] = key;
    if (!(i > j && j > k_) || i > n || k_ < 1)
      out.push_back("kappa[" + std::to_string(j) + "](" + std::to_string(i) + "," +
                    std::to_string(k_) + ") violates i > j > k within 1.." +
                    std::to_string(n));
    (void)val;
  }
  return out;
}

CoefficientFamily table1_family() {
  CoefficientFamily cf = CoefficientFamily::zero(3);
  const Rational h(1, 2);
  cf.set_alpha(2, 1, 3, h);
  cf.set_alpha(3, 1, 2, h);
  cf.set_alpha(1, 2, 3, -h);
  cf.set_beta(2, 1, 3, -h);
  cf.set_beta(3, 1, 2, -h);
  cf.set_beta(1, 2, 3, h);
  cf.set_mu(2, 1, 3, -h);
  cf.set_mu(3, 1, 2, -h);
  cf.set_mu(1, 2, 3, h);
  cf.set_mu(2, 3, 1, -h);
  cf.set_mu(3, 2, 1, -h);
  cf.set_mu(1, 3, 2, h);
  cf.set_nu(2, 1, 3, Rational(1));
  cf.set_nu(1, 2, 3, Rational(1));
  cf.set_nu(2, 3, 1, Rational(1));
  cf.set_nu(1, 3, 2, Rational(1));
  cf.set_kappa(3, 2, 1, Rational(1));
  return cf;
}

CoefficientFamily CoefficientFamily::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  CoefficientFamily cf = zero(n);
  auto load = [&](const char* key, std::vector<Matrix>& dst) {
    if (!j.contains(key)) return;
    const auto& arr = j.at(key);
    if (static_cast<int>(arr.size()) != n)
      throw std::invalid_argument(std::string(key) + ": expected " + std::to_string(n) +
                                  " matrices");
    for (int s = 0; s < n; ++s) {
      const auto& flat = arr[s];
      if (static_cast<int>(flat.size()) != n * n)
        throw std::invalid_argument(std::string(key) + "[" + std::to_string(s) +
                                    "]: expected " + std::to_string(n * n) + " entries");
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          dst[s][r][c] = parse_rational(flat[r * n + c].get<std::string>());
    }
  };
  load("alpha", cf.alpha);
  load("beta", cf.beta);
  load("mu", cf.mu);
  load("nu", cf.nu);
  if (j.contains("kappa"))
    for (const auto& e : j.at("kappa"))
      cf.set_kappa(e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                   parse_rational(e.at("value").get<std::string>()));
  return cf;
}

std::string CoefficientFamily::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto dump = [&](const char* key, const std::vector<Matrix>& src) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& mat : src) {
      nlohmann::json flat = nlohmann::json::array();
      for (const auto& row : mat)
        for (const auto& v : row) flat.push_back(rational_str(v));
      arr.push_back(std::move(flat));
    }
    j[key] = std::move(arr);
  };
  dump("alpha", alpha);
  dump("beta", beta);
  dump("mu", mu);
  dump("nu", nu);
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& [key, val] : kappa) {
    auto [i, jj, kk] = key;
    ks.push_back({{"i", i}, {"j", jj}, {"k", kk}, {"value", rational_str(val)}});
  }
  j["kappa"] = std::move(ks);
  return j.dump(2);
}

namespace {

AlgElem E(int s) { return AlgElem::unit(s); }
AlgElem V(int i, int j) { return AlgElem::from_sym(GenSymbol::v(i, j)); }
TensorElem2 T(const AlgElem& x, const AlgElem& y) { return TensorElem2::tensor(x, y); }

// The family value for the ordered pair (v_{ij}, v_{kl}).
TensorElem2 family_pair(const CoefficientFamily& cf, int i, int j, int k, int l) {
  const Rational h(1, 2);
  if (i == k && j == l) return TensorElem2::zero();
  if (i != k && i != l && j != k && j != l) return TensorElem2::zero();
  if (k == j && l == i) {  // merged <<v_{ij}, v_{ji}>> rule
    Rational sgn = (i > j) ? Rational(1) : Rational(-1);
    TensorElem2 out = sgn * (T(E(j), E(i)) + h * T(V(j, i) * V(i, j), E(i)) +
                             h * T(E(j), V(i, j) * V(j, i)));
    for (int a = j + 1; a < i; ++a)
      out += cf.k(i, a, j) * T(E(j), V(i, a) * V(a, i));
    for (int b = i + 1; b < j; ++b)
      out -= cf.k(j, b, i) * T(V(j, b) * V(b, j), E(i));
    return out;
  }
  if (j == l) return cf.a(j, i, k) * T(V(k, j), V(i, j));
  if (i == k) return cf.b(i, j, l) * T(V(i, j), V(i, l));
  if (j == k)  // i != l here
    return cf.m(j, i, l) * T(E(j), V(i, j) * V(j, l)) + cf.u(j, i, l) * T(E(j), V(i, l));
  // i == l, k != j
  return -cf.m(i, k, j) * T(V(k, i) * V(i, j), E(i)) - cf.u(i, k, j) * T(V(k, j), E(i));
}

}  // namespace

BracketTable family_bracket_table(int n, const CoefficientFamily& cf) {
  if (n != cf.n) throw std::invalid_argument("vertex count does not match the family");
  if (auto bad = validate(cf); !bad.empty())
    throw std::invalid_argument("invalid coefficient family: " + bad.front());
  BracketTable table;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (k == l) continue;
          std::string warn =
              table.set(GenSymbol::v(i, j), GenSymbol::v(k, l), family_pair(cf, i, j, k, l));
          if (!warn.empty()) throw std::logic_error(warn);
        }
    }
  return table;
}

bool ConditionReport::all_satisfied() const {
  for (const auto& e : entries)
    if (!e.satisfied) return false;
  return true;
}

size_t ConditionReport::failed() const {
  size_t c = 0;
  for (const auto& e : entries)
    if (!e.satisfied) ++c;
  return c;
}

namespace {

std::string idx2(int i, int j) {
  return "i=" + std::to_string(i) + " j=" + std::to_string(j);
}
std::string idx3(int i, int j, int k) {
  return idx2(i, j) + " k=" + std::to_string(k);
}

struct AbortCheck {};

}  // namespace

ConditionReport check_conditions(const CoefficientFamily& cf, bool fail_fast) {
  if (auto bad = validate(cf); !bad.empty())
    throw std::invalid_argument("invalid coefficient family: " + bad.front());
  const int n = cf.n;
  const Rational h(1, 2), q(1, 4);
  ConditionReport rep;
  auto add = [&](const std::string& lemma, const std::string& idx, const std::string& f,
                 const Rational& lhs, const Rational& rhs) {
    rep.entries.push_back({lemma, idx, f, lhs, rhs, lhs == rhs});
    if (fail_fast && lhs != rhs) throw AbortCheck{};
  };
  try {
  auto others = [&](std::initializer_list<int> excl) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
      bool skip = false;
      for (int e : excl)
        if (v == e) skip = true;
      if (!skip) out.push_back(v);
    }
    return out;
  };

  // Case 1: S empty. Only tuples where all first or all second indices agree
  // impose a condition; the remaining tuples have both sides zero.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int l : others({i}))
        for (int qq : others({i})) {
          if (j == l && l == qq) continue;
          add("1(i)",
              "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                  " l=" + std::to_string(l) + " q=" + std::to_string(qq),
              "beta[i](j,l) beta[i](l,q) + beta[i](l,q) beta[i](q,j) + beta[i](q,j) "
              "beta[i](j,l) = -1/4",
              cf.b(i, j, l) * cf.b(i, l, qq) + cf.b(i, l, qq) * cf.b(i, qq, j) +
                  cf.b(i, qq, j) * cf.b(i, j, l),
              -q);
        }
  for (int j = 1; j <= n; ++j)
    for (int i : others({j}))
      for (int k : others({j}))
        for (int p : others({j})) {
          if (i == k && k == p) continue;
          add("1(ii)",
              "j=" + std::to_string(j) + " i=" + std::to_string(i) +
                  " k=" + std::to_string(k) + " p=" + std::to_string(p),
              "alpha[j](i,k) alpha[j](k,p) + alpha[j](k,p) alpha[j](p,i) + alpha[j](p,i) "
              "alpha[j](i,k) = -1/4",
              cf.a(j, i, k) * cf.a(j, k, p) + cf.a(j, k, p) * cf.a(j, p, i) +
                  cf.a(j, p, i) * cf.a(j, i, k),
              -q);
        }

  add("2.1.a", "", "always holds", Rational(0), Rational(0));

  // Case 2.1.b: <<v_ip, v_kl, v_pq>>.
  for (int p = 1; p <= n; ++p)
    for (int i : others({p}))
      for (int k : others({p}))
        for (int l : others({i, k, p}))
          for (int qq : others({i, k, p})) {
            Rational inner(0);
            if (l == qq) inner += cf.a(l, k, p) + cf.a(l, k, i);
            if (i == k) inner += cf.b(i, qq, l) + cf.b(i, l, p);
            add("2.1.b",
                "p=" + std::to_string(p) + " i=" + std::to_string(i) +
                    " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                    " q=" + std::to_string(qq),
                "nu[p](i,q) (d_lq (alpha[l](k,p) + alpha[l](k,i)) + d_ik (beta[i](q,l) + "
                "beta[i](l,p))) = 0",
                cf.u(p, i, qq) * inner, Rational(0));
          }

  // Case 2.2: <<v_ij, v_ki, v_pi>>.
  for (int i = 1; i <= n; ++i)
    for (int k : others({i}))
      for (int p : others({i}))
        for (int j : others({i, k, p})) {
          std::string idx = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " k=" + std::to_string(k) + " p=" + std::to_string(p);
          Rational inner = cf.a(i, k, p) + cf.m(i, k, j);
          if (k == p) inner += cf.b(k, i, j);
          add("2.2(i)", idx,
              "nu[i](p,j) (alpha[i](k,p) + mu[i](k,j) + d_kp beta[k](i,j)) = 0",
              cf.u(i, p, j) * inner, Rational(0));
          add("2.2(ii)", idx,
              "alpha[i](k,p) mu[i](k,j) - alpha[i](k,p) mu[i](p,j) - mu[i](p,j) mu[i](k,j) "
              "= -1/4",
              cf.a(i, k, p) * cf.m(i, k, j) - cf.a(i, k, p) * cf.m(i, p, j) -
                  cf.m(i, p, j) * cf.m(i, k, j),
              -q);
        }

  // Case 2.3: <<v_ij, v_jl, v_jq>>.
  for (int j = 1; j <= n; ++j)
    for (int l : others({j}))
      for (int qq : others({j}))
        for (int i : others({j, l, qq})) {
          std::string idx = "j=" + std::to_string(j) + " i=" + std::to_string(i) +
                            " l=" + std::to_string(l) + " q=" + std::to_string(qq);
          Rational inner = cf.b(j, l, qq) + cf.m(j, i, qq);
          if (l == qq) inner += cf.a(l, i, j);
          add("2.3(i)", idx,
              "nu[j](i,l) (beta[j](l,q) + mu[j](i,q) + d_lq alpha[l](i,j)) = 0",
              cf.u(j, i, l) * inner, Rational(0));
          add("2.3(ii)", idx,
              "beta[j](l,q) mu[j](i,l) - beta[j](l,q) mu[j](i,q) + mu[j](i,q) mu[j](i,l) = "
              "1/4",
              cf.b(j, l, qq) * cf.m(j, i, l) - cf.b(j, l, qq) * cf.m(j, i, qq) +
                  cf.m(j, i, qq) * cf.m(j, i, l),
              q);
        }

  // Case 3.1.a: <<v_ij, v_ji, v_pq>> with p, q outside {i,j}. kappa accessors
  // enforce the delta_(i<b<j) factors.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int p : others({i, j}))
        for (int qq : others({i, j, p})) {
          std::string idx = idx2(i, j) + " p=" + std::to_string(p) +
                            " q=" + std::to_string(qq);
          add("3.1.a", idx, "kappa[p](j,i) (mu[p](j,q) - beta[p](q,j)) = 0",
              cf.k(j, p, i) * (cf.m(p, j, qq) - cf.b(p, qq, j)), Rational(0));
          add("3.1.a", idx, "kappa[q](j,i) (mu[q](p,j) + alpha[q](p,j)) = 0",
              cf.k(j, qq, i) * (cf.m(qq, p, j) + cf.a(qq, p, j)), Rational(0));
          add("3.1.a", idx, "kappa[p](j,i) nu[p](j,q) - kappa[q](j,i) nu[q](p,j) = 0",
              cf.k(j, p, i) * cf.u(p, j, qq) - cf.k(j, qq, i) * cf.u(qq, p, j),
              Rational(0));
        }

  // Case 3.1.b: <<v_ij, v_ki, v_jq>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int k : others({i, j}))
        for (int qq : others({i, j, k})) {
          std::string idx = idx3(i, j, k) + " q=" + std::to_string(qq);
          add("3.1.b(i)", idx, "nu[j](i,q) (mu[i](k,j) - mu[i](k,q)) = 0",
              cf.u(j, i, qq) * (cf.m(i, k, j) - cf.m(i, k, qq)), Rational(0));
          add("3.1.b(ii)", idx, "nu[i](k,j) (mu[j](k,q) - mu[j](i,q)) = 0",
              cf.u(i, k, j) * (cf.m(j, k, qq) - cf.m(j, i, qq)), Rational(0));
          add("3.1.b(iii)", idx, "nu[i](k,j) nu[j](k,q) - nu[i](k,q) nu[j](i,q) = 0",
              cf.u(i, k, j) * cf.u(j, k, qq) - cf.u(i, k, qq) * cf.u(j, i, qq),
              Rational(0));
        }

  add("3.1.c", "", "always holds", Rational(0), Rational(0));

  // Case 3.2.a: <<v_ij, v_ik, v_ji>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int k : others({i, j})) {
        std::string idx = idx3(i, j, k);
        const Rational mu_ = cf.m(i, j, k), be = cf.b(i, j, k);
        if (i < j) {
          for (int b = i + 1; b < j; ++b)
            add("3.2.a(i)", idx + " b=" + std::to_string(b),
                "kappa[b](j,i) (mu[i](j,k) + beta[i](j,k)) = 0",
                cf.k(j, b, i) * (mu_ + be), Rational(0));
          add("3.2.a(i)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) - mu[i](j,k) beta[i](j,k) = 1/4",
              h * (mu_ + be) - mu_ * be, q);
          add("3.2.a(i)", idx, "nu[i](j,k) (mu[j](i,k) + 1/2) = 0",
              cf.u(i, j, k) * (cf.m(j, i, k) + h), Rational(0));
          add("3.2.a(i)", idx, "mu[i](j,k) + beta[i](j,k) - nu[i](j,k) nu[j](i,k) = 0",
              mu_ + be - cf.u(i, j, k) * cf.u(j, i, k), Rational(0));
        } else if (k < j || k > i) {
          for (int a = j + 1; a < i; ++a) {
            std::string ai = idx + " a=" + std::to_string(a);
            add("3.2.a(ii)", ai, "kappa[a](i,j) (mu[i](j,k) + mu[i](a,k)) = 0",
                cf.k(i, a, j) * (mu_ + cf.m(i, a, k)), Rational(0));
            add("3.2.a(ii)", ai, "kappa[a](i,j) (beta[i](j,k) + beta[i](k,a)) = 0",
                cf.k(i, a, j) * (be + cf.b(i, k, a)), Rational(0));
            add("3.2.a(ii)", ai, "kappa[a](i,j) nu[i](a,k) = 0",
                cf.k(i, a, j) * cf.u(i, a, k), Rational(0));
          }
          add("3.2.a(ii)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) + mu[i](j,k) beta[i](j,k) = -1/4",
              h * (mu_ + be) + mu_ * be, -q);
          add("3.2.a(ii)", idx, "nu[i](j,k) (mu[j](i,k) - 1/2) = 0",
              cf.u(i, j, k) * (cf.m(j, i, k) - h), Rational(0));
          add("3.2.a(ii)", idx, "mu[i](j,k) + beta[i](j,k) + nu[i](j,k) nu[j](i,k) = 0",
              mu_ + be + cf.u(i, j, k) * cf.u(j, i, k), Rational(0));
        } else {  // j < k < i
          for (int a = j + 1; a < i; ++a) {
            std::string ai = idx + " a=" + std::to_string(a);
            add("3.2.a(iii)", ai,
                "kappa[a](i,j) (mu[i](j,k) + mu[i](a,k) + 1/2 d_ak) = 0",
                cf.k(i, a, j) * (mu_ + cf.m(i, a, k) + (a == k ? h : Rational(0))),
                Rational(0));
            if (a <= k)
              add("3.2.a(iii)", ai,
                  "kappa[a](i,j) (beta[i](j,k) + beta[i](k,a) + 1/2 d_ak) = 0",
                  cf.k(i, a, j) * (be + cf.b(i, k, a) + (a == k ? h : Rational(0))),
                  Rational(0));
            else
              add("3.2.a(iii)", ai,
                  "kappa[a](i,j) (beta[i](j,k) + beta[i](k,a)) + kappa[a](i,k) "
                  "kappa[k](i,j) = 0",
                  cf.k(i, a, j) * (be + cf.b(i, k, a)) + cf.k(i, a, k) * cf.k(i, k, j),
                  Rational(0));
            add("3.2.a(iii)", ai, "kappa[a](i,j) nu[i](a,k) = 0",
                cf.k(i, a, j) * cf.u(i, a, k), Rational(0));
          }
          add("3.2.a(iii)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) + mu[i](j,k) beta[i](j,k) = -1/4",
              h * (mu_ + be) + mu_ * be, -q);
          add("3.2.a(iii)", idx, "nu[i](j,k) (mu[j](i,k) - 1/2) = 0",
              cf.u(i, j, k) * (cf.m(j, i, k) - h), Rational(0));
          add("3.2.a(iii)", idx,
              "mu[i](j,k) + beta[i](j,k) + nu[i](j,k) nu[j](i,k) + kappa[k](i,j) = 0",
              mu_ + be + cf.u(i, j, k) * cf.u(j, i, k) + cf.k(i, k, j), Rational(0));
        }
      }

  // Case 3.2.b: <<v_ij, v_ji, v_ik>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int k : others({i, j})) {
        std::string idx = idx3(i, j, k);
        const Rational mu_ = cf.m(i, j, k), be = cf.b(i, j, k);
        if (i > j) {
          add("3.2.b(i)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) + mu[i](j,k) beta[i](j,k) = -1/4",
              h * (mu_ + be) + mu_ * be, -q);
          add("3.2.b(i)", idx, "nu[i](j,k) (beta[i](j,k) + 1/2) = 0",
              cf.u(i, j, k) * (be + h), Rational(0));
        } else if (k < i || k > j) {
          add("3.2.b(ii)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) - mu[i](j,k) beta[i](j,k) = 1/4",
              h * (mu_ + be) - mu_ * be, q);
          add("3.2.b(ii)", idx, "nu[i](j,k) (beta[i](j,k) - 1/2) = 0",
              cf.u(i, j, k) * (be - h), Rational(0));
        } else {  // i < k < j
          add("3.2.b(iii)", idx,
              "1/2 (mu[i](j,k) + beta[i](j,k)) - mu[i](j,k) beta[i](j,k) = 1/4",
              h * (mu_ + be) - mu_ * be, q);
          add("3.2.b(iii)", idx,
              "nu[i](j,k) (beta[i](j,k) - 1/2) + kappa[k](j,i) nu[k](i,j) = 0",
              cf.u(i, j, k) * (be - h) + cf.k(j, k, i) * cf.u(k, i, j), Rational(0));
          add("3.2.b(iii)", idx, "kappa[k](j,i) (alpha[k](i,j) + mu[k](i,j)) = 0",
              cf.k(j, k, i) * (cf.a(k, i, j) + cf.m(k, i, j)), Rational(0));
        }
      }

  // Case 3.3.a: <<v_ij, v_kj, v_ji>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int k : others({i, j})) {
        std::string idx = idx3(i, j, k);
        const Rational mu_ = cf.m(j, k, i), al = cf.a(j, k, i);
        if (j > i) {
          add("3.3.a(i)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) + mu[j](k,i) alpha[j](k,i) = -1/4",
              h * (mu_ + al) + mu_ * al, -q);
          add("3.3.a(i)", idx, "nu[j](k,i) (alpha[j](k,i) + 1/2) = 0",
              cf.u(j, k, i) * (al + h), Rational(0));
        } else if (k < j || k > i) {
          add("3.3.a(ii)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) - mu[j](k,i) alpha[j](k,i) = 1/4",
              h * (mu_ + al) - mu_ * al, q);
          add("3.3.a(ii)", idx, "nu[j](k,i) (alpha[j](k,i) - 1/2) = 0",
              cf.u(j, k, i) * (al - h), Rational(0));
        } else {  // j < k < i
          add("3.3.a(iii)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) - mu[j](k,i) alpha[j](k,i) = 1/4",
              h * (mu_ + al) - mu_ * al, q);
          add("3.3.a(iii)", idx,
              "nu[j](k,i) (alpha[j](k,i) - 1/2) + kappa[k](i,j) nu[k](i,j) = 0",
              cf.u(j, k, i) * (al - h) + cf.k(i, k, j) * cf.u(k, i, j), Rational(0));
          add("3.3.a(iii)", idx, "kappa[k](i,j) (beta[k](i,j) + mu[k](i,j)) = 0",
              cf.k(i, k, j) * (cf.b(k, i, j) + cf.m(k, i, j)), Rational(0));
        }
      }

  // Case 3.3.b: <<v_ij, v_ji, v_kj>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i}))
      for (int k : others({i, j})) {
        std::string idx = idx3(i, j, k);
        const Rational mu_ = cf.m(j, k, i), al = cf.a(j, k, i);
        if (i > j) {
          for (int a = j + 1; a < i; ++a)
            add("3.3.b(i)", idx + " a=" + std::to_string(a),
                "kappa[a](i,j) (mu[j](k,i) + alpha[j](k,i)) = 0",
                cf.k(i, a, j) * (mu_ + al), Rational(0));
          add("3.3.b(i)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) - mu[j](k,i) alpha[j](k,i) = 1/4",
              h * (mu_ + al) - mu_ * al, q);
          add("3.3.b(i)", idx, "nu[j](k,i) (mu[i](k,j) + 1/2) = 0",
              cf.u(j, k, i) * (cf.m(i, k, j) + h), Rational(0));
          add("3.3.b(i)", idx, "mu[j](k,i) + alpha[j](k,i) - nu[j](k,i) nu[i](k,j) = 0",
              mu_ + al - cf.u(j, k, i) * cf.u(i, k, j), Rational(0));
        } else if (k < i || k > j) {
          for (int b = i + 1; b < j; ++b) {
            std::string bi = idx + " b=" + std::to_string(b);
            add("3.3.b(ii)", bi, "kappa[b](j,i) (mu[j](k,i) - mu[j](k,b)) = 0",
                cf.k(j, b, i) * (mu_ - cf.m(j, k, b)), Rational(0));
            add("3.3.b(ii)", bi, "kappa[b](j,i) (alpha[j](k,i) - alpha[j](k,b)) = 0",
                cf.k(j, b, i) * (al - cf.a(j, k, b)), Rational(0));
            add("3.3.b(ii)", bi, "kappa[b](j,i) nu[j](k,b) = 0",
                cf.k(j, b, i) * cf.u(j, k, b), Rational(0));
          }
          add("3.3.b(ii)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) + mu[j](k,i) alpha[j](k,i) = -1/4",
              h * (mu_ + al) + mu_ * al, -q);
          add("3.3.b(ii)", idx, "nu[j](k,i) (mu[i](k,j) - 1/2) = 0",
              cf.u(j, k, i) * (cf.m(i, k, j) - h), Rational(0));
          add("3.3.b(ii)", idx, "mu[j](k,i) + alpha[j](k,i) + nu[j](k,i) nu[i](k,j) = 0",
              mu_ + al + cf.u(j, k, i) * cf.u(i, k, j), Rational(0));
        } else {  // i < k < j
          for (int b = i + 1; b < j; ++b) {
            std::string bi = idx + " b=" + std::to_string(b);
            add("3.3.b(iii)", bi,
                "kappa[b](j,i) (mu[j](k,i) - mu[j](k,b) + 1/2 d_kb) = 0",
                cf.k(j, b, i) * (mu_ - cf.m(j, k, b) + (b == k ? h : Rational(0))),
                Rational(0));
            if (b <= k)
              add("3.3.b(iii)", bi,
                  "kappa[b](j,i) (alpha[j](k,i) - alpha[j](k,b) + 1/2 d_kb) = 0",
                  cf.k(j, b, i) * (al - cf.a(j, k, b) + (b == k ? h : Rational(0))),
                  Rational(0));
            else
              add("3.3.b(iii)", bi,
                  "kappa[b](j,i) (alpha[j](k,i) - alpha[j](k,b)) + kappa[b](j,k) "
                  "kappa[k](j,i) = 0",
                  cf.k(j, b, i) * (al - cf.a(j, k, b)) + cf.k(j, b, k) * cf.k(j, k, i),
                  Rational(0));
            add("3.3.b(iii)", bi, "kappa[b](j,i) nu[j](k,b) = 0",
                cf.k(j, b, i) * cf.u(j, k, b), Rational(0));
          }
          add("3.3.b(iii)", idx,
              "1/2 (mu[j](k,i) + alpha[j](k,i)) + mu[j](k,i) alpha[j](k,i) = -1/4",
              h * (mu_ + al) + mu_ * al, -q);
          add("3.3.b(iii)", idx, "nu[j](k,i) (mu[i](k,j) - 1/2) = 0",
              cf.u(j, k, i) * (cf.m(i, k, j) - h), Rational(0));
          add("3.3.b(iii)", idx,
              "mu[j](k,i) + alpha[j](k,i) + nu[j](k,i) nu[i](k,j) + kappa[k](j,i) = 0",
              mu_ + al + cf.u(j, k, i) * cf.u(i, k, j) + cf.k(j, k, i), Rational(0));
        }
      }

  // Case 3.4: <<v_ij, v_ij, v_ji>>.
  for (int i = 1; i <= n; ++i)
    for (int j : others({i})) {
      if (i < j) {
        for (int b = i + 1; b < j; ++b) {
          std::string bi = idx2(i, j) + " b=" + std::to_string(b);
          add("3.4(i)", bi, "kappa[b](j,i) (alpha[j](i,b) - 1/2) = 0",
              cf.k(j, b, i) * (cf.a(j, i, b) - h), Rational(0));
          add("3.4(i)", bi, "kappa[b](j,i) (mu[j](i,b) + 1/2) = 0",
              cf.k(j, b, i) * (cf.m(j, i, b) + h), Rational(0));
          add("3.4(i)", bi, "kappa[b](j,i) nu[j](i,b) = 0", cf.k(j, b, i) * cf.u(j, i, b),
              Rational(0));
        }
      } else {
        for (int a = j + 1; a < i; ++a) {
          std::string ai = idx2(i, j) + " a=" + std::to_string(a);
          add("3.4(ii)", ai, "kappa[a](i,j) (beta[i](a,j) - 1/2) = 0",
              cf.k(i, a, j) * (cf.b(i, a, j) - h), Rational(0));
          add("3.4(ii)", ai, "kappa[a](i,j) (mu[i](a,j) + 1/2) = 0",
              cf.k(i, a, j) * (cf.m(i, a, j) + h), Rational(0));
          add("3.4(ii)", ai, "kappa[a](i,j) nu[i](a,j) = 0", cf.k(i, a, j) * cf.u(i, a, j),
              Rational(0));
        }
      }
    }

  add("4.1", "", "always holds", Rational(0), Rational(0));

  // Case 4.2: <<v_ip, v_ki, v_pk>> with i the smallest index.
  for (int i = 1; i <= n; ++i)
    for (int k : others({i}))
      for (int p : others({i, k})) {
        if (i > k || i > p) continue;
        std::string idx = "i=" + std::to_string(i) + " k=" + std::to_string(k) +
                          " p=" + std::to_string(p);
        const Rational nik = cf.u(p, i, k), nkp = cf.u(i, k, p), npi = cf.u(k, p, i);
        const Rational mik = cf.m(p, i, k), mkp = cf.m(i, k, p), mpi = cf.m(k, p, i);
        if (i < k && k < p) {
          add("4.2(i)", idx, "nu[p](i,k) + nu[i](k,p) - nu[k](p,i) = 0", nik + nkp - npi,
              Rational(0));
          add("4.2(i)", idx, "nu[p](i,k) (mu[k](p,i) + 1/2) = 0", nik * (mpi + h),
              Rational(0));
          add("4.2(i)", idx, "nu[k](p,i) (mu[i](k,p) - 1/2) = 0", npi * (mkp - h),
              Rational(0));
          add("4.2(i)", idx, "nu[p](i,k) (mu[i](k,p) - 1/2) = 0", nik * (mkp - h),
              Rational(0));
          add("4.2(i)", idx, "nu[k](p,i) (mu[p](i,k) + 1/2) = 0", npi * (mik + h),
              Rational(0));
          add("4.2(i)", idx, "nu[i](k,p) (mu[p](i,k) + 1/2) = 0", nkp * (mik + h),
              Rational(0));
          add("4.2(i)", idx,
              "nu[i](k,p) (mu[k](p,i) - 1/2) + nu[k](p,i) kappa[k](p,i) = 0",
              nkp * (mpi - h) + npi * cf.k(p, k, i), Rational(0));
          for (int a = i + 1; a < k; ++a) {
            std::string ai = idx + " a=" + std::to_string(a);
            add("4.2(i)", ai, "nu[k](p,i) kappa[a](p,i) = 0", npi * cf.k(p, a, i),
                Rational(0));
            add("4.2(i)", ai, "nu[p](i,k) kappa[a](k,i) = 0", nik * cf.k(k, a, i),
                Rational(0));
          }
          for (int c = k + 1; c < p; ++c)
            add("4.2(i)", idx + " c=" + std::to_string(c),
                "nu[k](p,i) kappa[c](p,i) - nu[i](k,p) kappa[c](p,k) = 0",
                npi * cf.k(p, c, i) - nkp * cf.k(p, c, k), Rational(0));
        } else {  // i < p < k
          add("4.2(ii)", idx, "nu[p](i,k) - nu[i](k,p) - nu[k](p,i) = 0", nik - nkp - npi,
              Rational(0));
          add("4.2(ii)", idx, "nu[k](p,i) (mu[p](i,k) + 1/2) = 0", npi * (mik + h),
              Rational(0));
          add("4.2(ii)", idx, "nu[k](p,i) (mu[i](k,p) - 1/2) = 0", npi * (mkp - h),
              Rational(0));
          add("4.2(ii)", idx, "nu[p](i,k) (mu[i](k,p) - 1/2) = 0", nik * (mkp - h),
              Rational(0));
          add("4.2(ii)", idx, "nu[p](i,k) (mu[k](p,i) + 1/2) = 0", nik * (mpi + h),
              Rational(0));
          add("4.2(ii)", idx, "nu[i](k,p) (mu[k](p,i) + 1/2) = 0", nkp * (mpi + h),
              Rational(0));
          add("4.2(ii)", idx,
              "nu[i](k,p) (mu[p](i,k) - 1/2) + nu[p](i,k) kappa[p](k,i) = 0",
              nkp * (mik - h) + nik * cf.k(k, p, i), Rational(0));
          for (int b = i + 1; b < p; ++b) {
            std::string bi = idx + " b=" + std::to_string(b);
            add("4.2(ii)", bi, "nu[k](p,i) kappa[b](p,i) = 0", npi * cf.k(p, b, i),
                Rational(0));
            add("4.2(ii)", bi, "nu[p](i,k) kappa[b](k,i) = 0", nik * cf.k(k, b, i),
                Rational(0));
          }
          for (int d = p + 1; d < k; ++d)
            add("4.2(ii)", idx + " d=" + std::to_string(d),
                "nu[p](i,k) kappa[d](k,i) - nu[i](k,p) kappa[d](k,p) = 0",
                nik * cf.k(k, d, i) - nkp * cf.k(k, d, p), Rational(0));
        }
      }
  } catch (const AbortCheck&) {
    // fail-fast: report ends at the first unsatisfied entry
  }

  return rep;
}

CheckReport brute_force_qp(const CoefficientFamily& cf, int n, bool fail_fast) {
  BracketContext ctx;
  ctx.table = family_bracket_table(n, cf);
  for (int s = 1; s <= n; ++s) ctx.vertices.push_back(s);
  std::vector<GenSymbol> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(GenSymbol::v(i, j));
  return check_quasi_poisson(ctx, gens, kDefaultStepCap, fail_fast);
}

namespace {

AlgElem W(int i, int j) { return AlgElem::from_sym(GenSymbol::w(i, j)); }
AlgElem G(int s) { return AlgElem::from_sym(GenSymbol::gamma(s)); }
AlgElem Gi(int s) { return AlgElem::from_sym(GenSymbol::gamma_inv(s)); }

void put(Fixture& fx, const GenSymbol& x, const GenSymbol& y, TensorElem2 v) {
  FixtureEntry e;
  e.x = x;
  e.y = y;
  e.expected = std::move(v);
  fx.derived.push_back(std::move(e));
}

void put_corrected(Fixture& fx, const GenSymbol& x, const GenSymbol& y, TensorElem2 v,
                   TensorElem2 literal, std::string note) {
  FixtureEntry e;
  e.x = x;
  e.y = y;
  e.expected = std::move(v);
  e.window_corrected = true;
  e.literal = std::move(literal);
  e.literal_note = std::move(note);
  fx.derived.push_back(std::move(e));
}

// Appends the cyclic-antisymmetry completions (y,x) = -tau12 (x,y) of the
// entries in [from, to).
void append_flips(Fixture& fx, size_t from, size_t to) {
  for (size_t k = from; k < to; ++k) {
    FixtureEntry e;
    e.x = fx.derived[k].y;
    e.y = fx.derived[k].x;
    e.expected = -(fx.derived[k].expected.tau12());
    fx.derived.push_back(std::move(e));
  }
}

// Registers the first `count` derived entries (the generator v-pairs) as the
// defining table of the fixture.
void register_v_table(Fixture& fx, size_t count) {
  for (size_t k = 0; k < count; ++k) {
    const auto& e = fx.derived[k];
    std::string warn = fx.table.set(e.x, e.y, e.expected);
    if (!warn.empty()) throw std::logic_error(fx.name + ": " + warn);
  }
}

}  // namespace

Fixture interval_fixture() {
  Fixture fx;
  fx.name = "interval";
  fx.quiver = ColoredQuiver::complete(2);
  const Rational h(1, 2);
  const GenSymbol v12 = GenSymbol::v(1, 2), v21 = GenSymbol::v(2, 1);
  const GenSymbol w12 = GenSymbol::w(1, 2), w21 = GenSymbol::w(2, 1);
  const GenSymbol g1 = GenSymbol::gamma(1), g2 = GenSymbol::gamma(2);
  const AlgElem V12 = V(1, 2), V21 = V(2, 1), W12 = W(1, 2), W21 = W(2, 1);
  const AlgElem G1 = G(1), G2 = G(2), Gi2 = Gi(2);

  put(fx, v12, v12, TensorElem2::zero());
  put(fx, v21, v21, TensorElem2::zero());
  put(fx, v21, v12, T(E(1), E(2)) + h * (T(V12 * V21, E(2)) + T(E(1), V21 * V12)));
  put_corrected(fx, v12, v21,
                -T(E(2), E(1)) - h * (T(E(2), V12 * V21) + T(V21 * V12, E(1))),
                -T(E(2), E(1)) - h * (T(E(1), V12 * V21) + T(V21 * V12, E(1))),
                "the source text puts e1 in the first slot of the v12v21 term; the "
                "idempotent window e2.A.e2 and cyclic antisymmetry with <<v21,v12>> "
                "force e2");
  register_v_table(fx, 4);

  put(fx, w21, v21, h * (T(W21, V21) + T(V21, W21)));
  put(fx, w12, v12, -h * (T(W12, V12) + T(V12, W12)));
  put(fx, w21, v12, h * T(E(1), Gi2) + h * T(G1, E(2)));
  put(fx, w12, v21, -h * (T(Gi2, E(1)) + T(E(2), G1)));
  put(fx, w12, w12, TensorElem2::zero());
  put(fx, w21, w21, TensorElem2::zero());
  put(fx, w21, w12, T(G1, Gi2) - h * (T(W12 * W21, E(2)) + T(E(1), W21 * W12)));
  put(fx, g2, v12, h * (T(V12 * G2, E(2)) + T(V12, G2)));
  put(fx, g2, v21, -h * (T(E(2), G2 * V21) + T(G2, V21)));
  put(fx, g1, v12, -h * (T(E(1), G1 * V12) + T(G1, V12)));
  put(fx, g1, v21, h * (T(V21 * G1, E(1)) + T(V21, G1)));

  fx.phi = {g1, g2};
  fx.relations = boalch_relations(fx.quiver);
  return fx;
}

Fixture triangle_fixture() {
  Fixture fx;
  fx.name = "triangle";
  fx.quiver = ColoredQuiver::complete(3);
  const Rational h(1, 2);
  const GenSymbol v12 = GenSymbol::v(1, 2), v13 = GenSymbol::v(1, 3),
                  v21 = GenSymbol::v(2, 1), v23 = GenSymbol::v(2, 3),
                  v31 = GenSymbol::v(3, 1), v32 = GenSymbol::v(3, 2);
  const GenSymbol w12 = GenSymbol::w(1, 2), w13 = GenSymbol::w(1, 3),
                  w21 = GenSymbol::w(2, 1), w23 = GenSymbol::w(2, 3),
                  w31 = GenSymbol::w(3, 1), w32 = GenSymbol::w(3, 2);
  const AlgElem V12 = V(1, 2), V13 = V(1, 3), V21 = V(2, 1), V23 = V(2, 3),
                V31 = V(3, 1), V32 = V(3, 2);
  const AlgElem W12 = W(1, 2), W13 = W(1, 3), W21 = W(2, 1), W23 = W(2, 3),
                W31 = W(3, 1), W32 = W(3, 2);
  const AlgElem G2 = G(2), G3 = G(3), Gi2 = Gi(2), Gi3 = Gi(3);

  // Generator pairs: the fifteen displayed identities, then their
  // antisymmetry completions and the diagonal zeros.
  put(fx, v12, v13, h * T(V12, V13));
  put(fx, v12, v32, h * T(V32, V12));
  put(fx, v21, v31, -h * T(V31, V21));
  put(fx, v21, v23, -h * T(V21, V23));
  put(fx, v13, v23, h * T(V23, V13));
  put(fx, v13, v32, -h * T(E(3), V13 * V32));
  put(fx, v31, v23, h * T(V23 * V31, E(3)));
  put(fx, v31, v32, -h * T(V31, V32));
  put(fx, v12, v21, -T(E(2), E(1)) - h * (T(E(2), V12 * V21) + T(V21 * V12, E(1))));
  put(fx, v12, v31, -h * T(V31 * V12, E(1)) - T(V32, E(1)));
  put(fx, v12, v23, -h * T(E(2), V12 * V23) + T(E(2), V13));
  put(fx, v21, v13, h * T(E(1), V21 * V13) + T(E(1), V23));
  put(fx, v21, v32, h * T(V32 * V21, E(2)) - T(V31, E(2)));
  put(fx, v13, v31,
      -T(E(3), E(1)) - T(V32 * V23, E(1)) -
          h * (T(E(3), V13 * V31) + T(V31 * V13, E(1))));
  put_corrected(fx, v23, v32,
                -T(E(3), E(2)) - h * (T(E(3), V23 * V32) + T(V32 * V23, E(2))),
                -T(E(3), E(2)) - h * (T(E(3), V23 * V32) + T(V32 * V23, E(3))),
                "the source text puts e3 in the second slot of the v32v23 term; the "
                "idempotent window e3.A.e3 (x) e2.A.e2 forces e2");
  append_flips(fx, 0, 15);
  for (const auto& s : {v12, v13, v21, v23, v31, v32}) put(fx, s, s, TensorElem2::zero());
  register_v_table(fx, 36);

  // (w, v) pairs: the complete displayed list.
  size_t wv = fx.derived.size();
  put(fx, w12, v12, -h * (T(V12, W12) + T(W12, V12)));
  put(fx, w12, v21, h * (T(V21 * W12, E(1)) + T(E(2), W12 * V21)) - T(E(2), E(1)));
  put(fx, w12, v13, -h * T(W12, V13));
  put(fx, w12, v31, h * T(V31 * W12, E(1)));
  put_corrected(fx, w12, v23, h * T(E(2), W12 * V23), h * T(E(3), W12 * V23),
                "the source text puts e3 in the first slot; the idempotent window "
                "e2.A.e2 forces e2");
  put(fx, w12, v32, -h * T(V32, W12));
  put(fx, w21, v12, T(E(1), E(2)) - h * (T(V12 * W21, E(2)) + T(E(1), W21 * V12)));
  put(fx, w21, v21, h * (T(W21, V21) + T(V21, W21)));
  put(fx, w21, v13, -h * T(E(1), W21 * V13));
  put(fx, w21, v31, h * T(V31, W21));
  put(fx, w21, v23, h * T(W21, V23));
  put(fx, w21, v32, -h * T(V32 * W21, E(2)));
  put(fx, w13, v12, -h * T(W13, V12));
  put(fx, w13, v21, h * T(V21 * W13, E(1)) - T(W23, E(1)));
  put(fx, w13, v13, -h * (T(W13, V13) + T(V13, W13)));
  put(fx, w13, v31, h * (T(V31 * W13, E(1)) + T(E(3), W13 * V31)) - T(E(3), E(1)));
  put(fx, w13, v23, -h * T(V23, W13));
  put(fx, w13, v32, h * T(E(3), W13 * V32));
  put(fx, w31, v12, -h * T(E(1), W31 * V12) + T(E(1), W32));
  put(fx, w31, v21, h * T(V21, W31));
  put(fx, w31, v13, T(E(1), E(3)) - h * (T(V13 * W31, E(3)) + T(E(1), W31 * V13)));
  put(fx, w31, v31, h * (T(W31, V31) + T(V31, W31)));
  put(fx, w31, v23, -h * T(V23 * W31, E(3)));
  put(fx, w31, v32, h * T(W31, V32));
  put(fx, w23, v12, h * T(V12 * W23, E(2)));
  put(fx, w23, v21, -h * T(W23, V21));
  put(fx, w23, v13, -h * T(V13, W23));
  put(fx, w23, v31, h * T(E(3), W23 * V31) - T(E(3), V21));
  put(fx, w23, v23, -h * (T(V23, W23) + T(W23, V23)));
  put(fx, w23, v32, h * (T(E(3), W23 * V32) + T(V32 * W23, E(2))) - T(E(3), E(2)));
  put(fx, w32, v12, h * T(V12, W32));
  put(fx, w32, v21, -h * T(E(2), W32 * V21));
  put(fx, w32, v13, -h * T(V13 * W32, E(3)) + T(V12, E(3)));
  put(fx, w32, v31, h * T(W32, V31));
  put(fx, w32, v23, T(E(2), E(3)) - h * (T(V23 * W32, E(3)) + T(E(2), W32 * V23)));
  put(fx, w32, v32, h * (T(W32, V32) + T(V32, W32)));
  append_flips(fx, wv, wv + 36);  // the (v, w) block

  // (w, w) pairs: fifteen displayed identities, completions, diagonal zeros.
  size_t ww = fx.derived.size();
  put(fx, w12, w21, h * (T(E(2), W12 * W21) + T(W21 * W12, E(1))) - T(Gi2, G(1)));
  put(fx, w12, w13, -h * T(W12, W13));
  put(fx, w12, w31, h * T(W31 * W12, E(1)));
  put(fx, w12, w23, h * T(E(2), W12 * W23) - T(E(2), W13));
  put(fx, w12, w32, -h * T(W32, W12));
  put(fx, w21, w13, -h * T(E(1), W21 * W13));
  put(fx, w21, w31, h * T(W31, W21));
  put(fx, w21, w23, h * T(W21, W23));
  put(fx, w21, w32, -h * T(W32 * W21, E(2)) + T(W31, E(2)));
  put(fx, w13, w31,
      h * (T(E(3), W13 * W31) + T(W31 * W13, E(1))) + T(Gi3, W13 * G3 * W31) -
          T(Gi3, E(1)));
  put(fx, w13, w23, -h * T(W23, W13));
  put(fx, w13, w32, h * T(E(3), W13 * W32) - T(Gi3, W12 * G2));
  put(fx, w31, w23, -h * T(W23 * W31, E(3)) + T(G2 * W21, Gi3));
  put(fx, w31, w32, h * T(W31, W32));
  put(fx, w23, w32, h * (T(E(3), W23 * W32) + T(W32 * W23, E(2))) - T(Gi3, G2));
  append_flips(fx, ww, ww + 15);
  for (const auto& s : {w12, w13, w21, w23, w31, w32}) put(fx, s, s, TensorElem2::zero());

  fx.phi = {GenSymbol::gamma(1), GenSymbol::gamma(2), GenSymbol::gamma(3)};
  fx.relations = boalch_relations(fx.quiver);
  return fx;
}

CheckReport verify_fixture(const Fixture& fx, const TensorOracle& oracle, int step_cap) {
  BracketContext ctx = BracketContext::for_quiver(fx.quiver, fx.table);
  CheckReport rep;
  for (const auto& e : fx.derived) {
    TensorElem2 computed = dbl(AlgElem::from_sym(e.x), AlgElem::from_sym(e.y), ctx);
    rep.items.push_back(layered_item("<<" + e.x.str() + "," + e.y.str() + ">>", computed,
                                     e.expected, ctx, oracle, step_cap));
  }
  return rep;
}

std::vector<CoefficientFamily> search_admissible(int n, const ValueGrid& grid,
                                                 size_t limit) {
  std::vector<CoefficientFamily> out;
  if (limit == 0 || n < 2) return out;
  struct Slot {
    int cls;  // 0 alpha, 1 beta, 2 mu, 3 nu, 4 kappa
    int p1, p2, p3;
  };
  std::vector<Slot> slots;
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (i == s || j == s) continue;
        slots.push_back({0, s, i, j});
        slots.push_back({1, s, i, j});
      }
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || i == s || j == s) continue;
        slots.push_back({2, s, i, j});
        slots.push_back({3, s, i, j});
      }
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) slots.push_back({4, i, j, k});
  const std::vector<Rational>* grids[5] = {&grid.alpha, &grid.beta, &grid.mu, &grid.nu,
                                           &grid.kappa};
  for (const auto& slot : slots)
    if (grids[slot.cls]->empty()) return out;  // nothing to enumerate for that class
  std::vector<size_t> odo(slots.size(), 0);
  while (true) {
    CoefficientFamily cf = CoefficientFamily::zero(n);
    for (size_t k = 0; k < slots.size(); ++k) {
      const Slot& sl = slots[k];
      const Rational& val = (*grids[sl.cls])[odo[k]];
      switch (sl.cls) {
        case 0: cf.set_alpha(sl.p1, sl.p2, sl.p3, val); break;
        case 1: cf.set_beta(sl.p1, sl.p2, sl.p3, val); break;
        case 2: cf.set_mu(sl.p1, sl.p2, sl.p3, val); break;
        case 3: cf.set_nu(sl.p1, sl.p2, sl.p3, val); break;
        case 4: cf.set_kappa(sl.p1, sl.p2, sl.p3, val); break;
      }
    }
    if (check_conditions(cf, /*fail_fast=*/true).all_satisfied()) {
      if (brute_force_qp(cf, n).overall() != Verdict::Equal)
        throw std::logic_error(
            "search_admissible: condition checker and brute force disagree");
      out.push_back(std::move(cf));
      if (out.size() >= limit) break;
    }
    size_t k = 0;
    for (; k < slots.size(); ++k) {
      if (++odo[k] < grids[slots[k].cls]->size()) break;
      odo[k] = 0;
    }
    if (k == slots.size()) break;
  }
  return out;
}

}  // namespace boalch
