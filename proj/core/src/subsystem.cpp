#include "arthur/subsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace arthur {

namespace {

struct Graph {
  int n;
  const std::vector<IntVec>& m;
  std::vector<std::vector<int>> adj;
  std::vector<Rat> len2;  // relative squared lengths within a component

  explicit Graph(const std::vector<IntVec>& cartan) : n((int)cartan.size()), m(cartan) {
    adj.resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && m[a][b] != 0) adj[a].push_back(b);
  }

  int bond(int a, int b) const {
    return static_cast<int>(std::max(std::abs((long long)m[a][b]), std::abs((long long)m[b][a])));
  }
};

std::vector<int> path_order(const Graph& g, const std::vector<int>& comp, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while ((int)order.size() < (int)comp.size()) {
    int next = -1;
    for (int b : g.adj[cur])
      if (b != prev) next = b;
    if (next < 0) throw std::logic_error("broken path in base diagram");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

BaseComponent classify_component(const Graph& g, std::vector<int> comp) {
  std::sort(comp.begin(), comp.end());
  int n = (int)comp.size();
  BaseComponent bc;

  // relative lengths by propagation from comp[0]
  std::vector<Rat> len2(g.n, Rat(0));
  len2[comp[0]] = 1;
  std::vector<int> todo{comp[0]};
  while (!todo.empty()) {
    int a = todo.back(); todo.pop_back();
    for (int b : g.adj[a]) {
      if (len2[b] != 0) continue;
      // (b,b)/(a,a) = m[b][a]/m[a][b]
      len2[b] = len2[a] * Rat(g.m[b][a]) / Rat(g.m[a][b]);
      todo.push_back(b);
    }
  }
  Rat mx = 0;
  for (int a : comp) mx = std::max(mx, len2[a]);
  auto is_long = [&](int a) { return len2[a] == mx; };

  int max_bond = 1;
  for (int a : comp)
    for (int b : g.adj[a]) max_bond = std::max(max_bond, g.bond(a, b));

  std::vector<int> deg1;
  int branch = -1;
  for (int a : comp) {
    if (g.adj[a].size() == 1) deg1.push_back(a);
    if (g.adj[a].size() == 3) branch = a;
    if (g.adj[a].size() > 3) throw std::logic_error("node of degree > 3 in base diagram");
  }

  if (n == 1) {
    bc.type = {Family::A, 1};
    bc.nodes = comp;
    return bc;
  }

  if (max_bond == 3) {
    bc.type = {Family::G, 2};
    bc.nodes = is_long(comp[0]) ? std::vector<int>{comp[1], comp[0]}
                                : std::vector<int>{comp[0], comp[1]};  // short first
    return bc;
  }

  if (max_bond == 2) {
    if (branch >= 0) throw std::logic_error("branched diagram with a double bond");
    if (n == 2) {
      bc.type = {Family::B, 2};
      bc.nodes = is_long(comp[0]) ? std::vector<int>{comp[0], comp[1]}
                                  : std::vector<int>{comp[1], comp[0]};  // long first
      return bc;
    }
    auto o1 = path_order(g, comp, deg1[0]);
    auto o2 = path_order(g, comp, deg1[1]);
    auto& ends_short = is_long(deg1[1]) ? o2 : o1;
    auto& ends_long = is_long(deg1[1]) ? o1 : o2;
    int longs = 0;
    for (int a : comp) longs += is_long(a);
    if (longs == n - 1) {  // B_n: unique short simple root, terminal
      bc.type = {Family::B, n};
      bc.nodes = ends_short;
    } else if (longs == 1) {  // C_n: unique long simple root, terminal
      bc.type = {Family::C, n};
      bc.nodes = ends_long;
    } else if (n == 4 && longs == 2) {
      bc.type = {Family::F, 4};
      bc.nodes = ends_short;  // long-long-short-short
    } else {
      throw std::logic_error("unrecognized doubly-laced diagram");
    }
    return bc;
  }

  // simply laced
  if (branch < 0) {
    bc.type = {Family::A, n};
    auto o1 = path_order(g, comp, deg1[0]);
    auto o2 = path_order(g, comp, deg1[1]);
    bc.nodes = std::min(o1, o2);
    return bc;
  }

  // arms from the branch node
  std::vector<std::vector<int>> arms;
  for (int b : g.adj[branch]) {
    std::vector<int> arm{b};
    int prev = branch, cur = b;
    for (;;) {
      int next = -1;
      for (int c : g.adj[cur])
        if (c != prev) next = c;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<size_t> shape{arms[0].size(), arms[1].size(), arms[2].size()};

  if (shape[0] == 1 && shape[1] == 1) {  // D_n
    bc.type = {Family::D, n};
    const auto& lng = arms[2];
    for (auto it = lng.rbegin(); it != lng.rend(); ++it) bc.nodes.push_back(*it);
    bc.nodes.push_back(branch);
    bc.nodes.push_back(arms[0][0]);
    bc.nodes.push_back(arms[1][0]);
    return bc;
  }
  if (shape[0] == 1 && shape[1] == 2 && shape[2] >= 2 && shape[2] <= 4) {  // E_n
    bc.type = {Family::E, n};
    bc.nodes.resize(n);
    bc.nodes[0] = arms[1][1];  // alpha_1
    bc.nodes[1] = arms[0][0];  // alpha_2
    bc.nodes[2] = arms[1][0];  // alpha_3
    bc.nodes[3] = branch;      // alpha_4
    for (size_t k = 0; k < arms[2].size(); ++k) bc.nodes[4 + k] = arms[2][k];
    return bc;
  }
  throw std::logic_error("unrecognized simply-laced diagram");
}

}  // namespace

BaseClassification classify_base(const std::vector<IntVec>& cartan) {
  Graph g(cartan);
  std::vector<char> used(g.n, 0);
  BaseClassification out;
  for (int s = 0; s < g.n; ++s) {
    if (used[s]) continue;
    std::vector<int> comp{s};
    used[s] = 1;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int b : g.adj[comp[k]])
        if (!used[b]) { used[b] = 1; comp.push_back(b); }
    out.components.push_back(classify_component(g, comp));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const BaseComponent& a, const BaseComponent& b) {
              if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
              if (a.type.family != b.type.family) return a.type.family < b.type.family;
              return a.nodes < b.nodes;
            });
  return out;
}

std::string BaseClassification::coxeter_label() const {
  if (components.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].type.str();
  }
  return s;
}

std::string algebra_name(TypeId t) {
  switch (t.family) {
    case Family::A: return "sl" + std::to_string(t.rank + 1);
    case Family::B: return "so" + std::to_string(2 * t.rank + 1);
    case Family::C: return "sp" + std::to_string(2 * t.rank);
    case Family::D: return "so" + std::to_string(2 * t.rank);
    case Family::E: return "e" + std::to_string(t.rank);
    case Family::F: return "f4";
    case Family::G: return "g2";
  }
  return "?";
}

std::string BaseClassification::algebra_label(int torus_dim) const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += algebra_name(components[i].type);
  }
  for (int i = 0; i < torus_dim; ++i) s += s.empty() ? "a" : "+a";
  return s;
}

std::vector<IntVec> dual_base_cartan(const RootSystem& rs, const std::vector<int>& roots) {
  auto m = root_base_cartan(rs, roots);
  int n = (int)m.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) std::swap(m[a][b], m[b][a]);
  return m;
}

std::vector<IntVec> root_base_cartan(const RootSystem& rs, const std::vector<int>& roots) {
  int n = (int)roots.size();
  int np = rs.num_positive();
  std::vector<IntVec> m(n, IntVec(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ra = roots[a] % np, rb = roots[b] % np;
      int sa = roots[a] < np ? 1 : -1, sb = roots[b] < np ? 1 : -1;
      int64_t p = 0;
      for (int i = 0; i < rs.rank(); ++i) p += rs.root_fund(ra)[i] * rs.coroot_coords(rb)[i];
      m[a][b] = sa * sb * p;
    }
  return m;
}

}  // namespace arthur
