#include "boalch/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace boalch {

int ColorClass::rank(int vertex) const {
  for (size_t r = 0; r < ordered.size(); ++r)
    if (ordered[r] == vertex) return static_cast<int>(r);
  return -1;
}

int ColorClass::part_of(int vertex) const {
  for (size_t p = 0; p < partition.size(); ++p)
    for (int v : partition[p])
      if (v == vertex) return static_cast<int>(p);
  return -1;
}

namespace {

// part_order may be 0-based or 1-based; normalize to 0-based positions.
std::vector<int> normalized_part_order(const ColorClass& c) {
  std::vector<int> po = c.part_order;
  if (po.empty()) {
    po.resize(c.partition.size());
    for (size_t i = 0; i < po.size(); ++i) po[i] = static_cast<int>(i);
    return po;
  }
  bool one_based = true;
  for (int p : po)
    if (p == 0) one_based = false;
  if (one_based && !po.empty() &&
      *std::max_element(po.begin(), po.end()) == static_cast<int>(po.size()))
    for (int& p : po) --p;
  return po;
}

void finalize_color(ColorClass& c) {
  c.ordered.clear();
  for (int p : normalized_part_order(c)) {
    if (p < 0 || p >= static_cast<int>(c.partition.size())) return;  // caught by validate
    for (int v : c.partition[p]) c.ordered.push_back(v);
  }
}

}  // namespace

const ColorClass* ColoredQuiver::color_by_id(const std::string& id) const {
  for (const auto& c : colors)
    if (c.id == id) return &c;
  return nullptr;
}

int ColoredQuiver::color_index(const std::string& id) const {
  for (size_t i = 0; i < colors.size(); ++i)
    if (colors[i].id == id) return static_cast<int>(i);
  return -1;
}

ColoredQuiver ColoredQuiver::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("quiver JSON parse error: ") + e.what());
  }
  ColoredQuiver q;
  if (!j.is_object() || !j.contains("n") || !j.contains("colors"))
    throw std::invalid_argument("quiver JSON must have fields 'n' and 'colors'");
  q.n = j.at("n").get<int>();
  for (const auto& cj : j.at("colors")) {
    ColorClass c;
    c.id = cj.at("id").get<std::string>();
    c.vertices = cj.at("vertices").get<std::vector<int>>();
    c.partition = cj.at("partition").get<std::vector<std::vector<int>>>();
    if (cj.contains("part_order")) c.part_order = cj.at("part_order").get<std::vector<int>>();
    finalize_color(c);
    q.colors.push_back(std::move(c));
  }
  return q;
}

std::string ColoredQuiver::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["colors"] = nlohmann::json::array();
  for (const auto& c : colors) {
    nlohmann::json cj;
    cj["id"] = c.id;
    cj["vertices"] = c.vertices;
    cj["partition"] = c.partition;
    cj["part_order"] = c.part_order;
    j["colors"].push_back(cj);
  }
  return j.dump(2);
}

ColoredQuiver ColoredQuiver::complete(int n, const std::string& color_id) {
  ColoredQuiver q;
  q.n = n;
  ColorClass c;
  c.id = color_id;
  for (int i = 1; i <= n; ++i) {
    c.vertices.push_back(i);
    c.partition.push_back({i});
    c.part_order.push_back(i - 1);
  }
  finalize_color(c);
  q.colors.push_back(std::move(c));
  return q;
}

std::vector<std::string> validate(const ColoredQuiver& q) {
  std::vector<std::string> bad;
  if (q.n < 1) bad.push_back("vertex count must be >= 1");
  std::set<std::string> ids;
  for (const auto& c : q.colors) {
    if (!ids.insert(c.id).second) bad.push_back("duplicate color id '" + c.id + "'");
    std::set<int> verts(c.vertices.begin(), c.vertices.end());
    if (verts.size() != c.vertices.size())
      bad.push_back("color '" + c.id + "': repeated vertex in vertex list");
    for (int v : c.vertices)
      if (v < 1 || v > q.n)
        bad.push_back("color '" + c.id + "': vertex " + std::to_string(v) +
                      " out of range 1.." + std::to_string(q.n));
    std::set<int> inparts;
    for (const auto& part : c.partition) {
      if (part.empty()) bad.push_back("color '" + c.id + "': empty part");
      for (int v : part) {
        if (!inparts.insert(v).second)
          bad.push_back("color '" + c.id + "': vertex " + std::to_string(v) +
                        " in two parts");
        if (!verts.count(v))
          bad.push_back("color '" + c.id + "': part vertex " + std::to_string(v) +
                        " not in vertex list");
      }
    }
    if (inparts != verts)
      bad.push_back("color '" + c.id + "': partition does not cover the vertex list");
    std::vector<int> po = normalized_part_order(c);
    if (po.size() != c.partition.size())
      bad.push_back("color '" + c.id + "': part_order length mismatch");
    std::set<int> seen;
    for (int p : po) {
      if (p < 0 || p >= static_cast<int>(c.partition.size()) || !seen.insert(p).second) {
        bad.push_back("color '" + c.id + "': part_order is not a permutation of the parts");
        break;
      }
    }
    if (c.ordered.size() != c.vertices.size())
      bad.push_back("color '" + c.id + "': induced order is not total");
  }
  return bad;
}

static void require_valid(const ColoredQuiver& q) {
  auto bad = validate(q);
  if (!bad.empty()) throw std::invalid_argument("invalid colored quiver: " + bad.front());
}

std::vector<GenSymbol> original_arrows(const ColoredQuiver& q) {
  require_valid(q);
  std::vector<GenSymbol> out;
  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    for (int i : c.vertices)
      for (int j : c.vertices)
        if (c.part_of(i) != c.part_of(j) && c.rank(i) < c.rank(j))
          out.push_back(GenSymbol::v(i, j, static_cast<int>(ci)));
  }
  return out;
}

std::vector<GenSymbol> double_quiver(const ColoredQuiver& q) {
  require_valid(q);
  std::vector<GenSymbol> out;
  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    for (int i : c.vertices)
      for (int j : c.vertices)
        if (i != j && c.part_of(i) != c.part_of(j))
          out.push_back(GenSymbol::v(i, j, static_cast<int>(ci)));
  }
  return out;
}

std::vector<GenSymbol> extended_double(const ColoredQuiver& q) {
  auto out = double_quiver(q);
  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    for (int i : c.vertices)
      for (int j : c.vertices)
        if (i != j) out.push_back(GenSymbol::w(i, j, static_cast<int>(ci)));
    for (int i : c.vertices) {
      out.push_back(GenSymbol::gamma(i, static_cast<int>(ci)));
      out.push_back(GenSymbol::gamma_inv(i, static_cast<int>(ci)));
    }
  }
  return out;
}

namespace {

AlgElem sym_elem(const GenSymbol& g) { return AlgElem::from_sym(g); }

// v_{c,ij} as an element; zero when i,j share a part (no such arrow).
AlgElem v_or_zero(const ColorClass& c, int ci, int i, int j) {
  if (i == j || c.part_of(i) == c.part_of(j)) return AlgElem::zero();
  return sym_elem(GenSymbol::v(i, j, ci));
}

}  // namespace

RelationSet boalch_relations(const ColoredQuiver& q) {
  require_valid(q);
  RelationSet rs;
  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    const int cidx = static_cast<int>(ci);
    AlgElem unit;
    for (int s : c.vertices) unit += AlgElem::unit(s);
    AlgElem vminus = unit, vplus = unit, wminus = unit, wplus = unit, gamma;
    for (int i : c.vertices)
      for (int j : c.vertices) {
        if (i == j) continue;
        bool up = c.rank(i) < c.rank(j);  // i below j in the color order
        if (c.part_of(i) != c.part_of(j)) {
          if (up)
            vplus += sym_elem(GenSymbol::v(i, j, cidx));
          else
            vminus += sym_elem(GenSymbol::v(i, j, cidx));
        }
        if (up)
          wplus += sym_elem(GenSymbol::w(i, j, cidx));
        else
          wminus += sym_elem(GenSymbol::w(i, j, cidx));
      }
    for (int i : c.vertices) gamma += sym_elem(GenSymbol::gamma(i, cidx));
    rs.relations.push_back(
        {"color '" + c.id + "' full", vminus * vplus, wplus * gamma * wminus});
    // Idempotent decomposition: e_i (lhs) e_j = e_i (rhs) e_j.
    AlgElem lhs = vminus * vplus, rhs = wplus * gamma * wminus;
    for (int i : c.vertices)
      for (int j : c.vertices) {
        AlgElem ei = AlgElem::unit(i), ej = AlgElem::unit(j);
        AlgElem l = ei * lhs * ej, r = ei * rhs * ej;
        if (l.is_zero() && r.is_zero()) continue;
        rs.relations.push_back({"color '" + c.id + "' component (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")",
                                l, r});
      }
  }
  return rs;
}

RelationSet fission_relations(const ColoredQuiver& q, const std::vector<Rational>& params,
                              const std::vector<std::vector<int>>& vertex_orders) {
  require_valid(q);
  if (static_cast<int>(params.size()) != q.n)
    throw std::invalid_argument("fission: need one parameter per vertex");
  for (const auto& p : params)
    if (p == 0) throw std::invalid_argument("fission: parameters must be nonzero");
  RelationSet rs;
  for (int s = 1; s <= q.n; ++s) {
    std::vector<int> order;
    if (s - 1 < static_cast<int>(vertex_orders.size()) && !vertex_orders[s - 1].empty())
      order = vertex_orders[s - 1];
    else
      for (size_t ci = 0; ci < q.colors.size(); ++ci)
        if (q.colors[ci].rank(s) >= 0) order.push_back(static_cast<int>(ci));
    AlgElem prod = AlgElem::unit(s);
    bool any = false;
    for (int ci : order) {
      if (ci < 0 || ci >= static_cast<int>(q.colors.size()) || q.colors[ci].rank(s) < 0)
        throw std::invalid_argument("fission: bad color order at vertex " +
                                    std::to_string(s));
      prod = prod * sym_elem(GenSymbol::gamma(s, ci));
      any = true;
    }
    if (!any) continue;
    AlgElem rhs = AlgElem::unit(s);
    rhs *= params[s - 1];
    rs.relations.push_back({"vertex " + std::to_string(s), prod, rhs});
  }
  return rs;
}

std::vector<Definition> derived_generators(const ColoredQuiver& q) {
  require_valid(q);
  std::vector<Definition> defs;
  for (size_t ci = 0; ci < q.colors.size(); ++ci) {
    const auto& c = q.colors[ci];
    const int cidx = static_cast<int>(ci);
    const auto& ord = c.ordered;  // ascending color order
    const int m = static_cast<int>(ord.size());
    // X[{i,k}] with i below k: w_{ik} = X * gamma_k^{-1};
    // Y[{k,i}]: w_{ki} = gamma_k^{-1} * Y.
    std::map<std::pair<int, int>, AlgElem> X, Y;
    for (int kr = m - 1; kr >= 0; --kr) {
      const int k = ord[kr];
      AlgElem g = AlgElem::unit(k);
      for (int jr = 0; jr < kr; ++jr) {
        const int j = ord[jr];
        g += v_or_zero(c, cidx, k, j) * v_or_zero(c, cidx, j, k);
      }
      for (int lr = kr + 1; lr < m; ++lr) {
        const int l = ord[lr];
        g -= X.at({k, l}) * sym_elem(GenSymbol::gamma_inv(l, cidx)) * Y.at({l, k});
      }
      defs.push_back({GenSymbol::gamma(k, cidx), g});
      for (int ir = 0; ir < kr; ++ir) {
        const int i = ord[ir];
        AlgElem x = v_or_zero(c, cidx, i, k);
        AlgElem y = v_or_zero(c, cidx, k, i);
        for (int jr = 0; jr < ir; ++jr) {
          const int j = ord[jr];
          x += v_or_zero(c, cidx, i, j) * v_or_zero(c, cidx, j, k);
          y += v_or_zero(c, cidx, k, j) * v_or_zero(c, cidx, j, i);
        }
        for (int lr = kr + 1; lr < m; ++lr) {
          const int l = ord[lr];
          x -= X.at({i, l}) * sym_elem(GenSymbol::gamma_inv(l, cidx)) * Y.at({l, k});
          y -= X.at({k, l}) * sym_elem(GenSymbol::gamma_inv(l, cidx)) * Y.at({l, i});
        }
        defs.push_back(
            {GenSymbol::w(i, k, cidx), x * sym_elem(GenSymbol::gamma_inv(k, cidx))});
        defs.push_back(
            {GenSymbol::w(k, i, cidx), sym_elem(GenSymbol::gamma_inv(k, cidx)) * y});
        X.emplace(std::make_pair(i, k), std::move(x));
        Y.emplace(std::make_pair(k, i), std::move(y));
      }
    }
  }
  return defs;
}

}  // namespace boalch
