#include "diagonals/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace dg {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("SimpleGraph: n must be positive");
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > n || e.first == e.second)
      throw std::invalid_argument("SimpleGraph: bad edge {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "}");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("SimpleGraph: repeated edge");

  std::set<int> vs;
  for (auto& e : edges_) {
    vs.insert(e.first);
    vs.insert(e.second);
  }
  vertices_.assign(vs.begin(), vs.end());

  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& e : edges_) parent[find(e.first)] = find(e.second);
  std::map<int, std::vector<int>> comps;
  for (int v : vertices_) comps[find(v)].push_back(v);
  for (auto& [root, members] : comps) components_.push_back(members);
  std::sort(components_.begin(), components_.end());
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> e;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::from_json(int n, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Edge> e;
  for (auto& pair : j) e.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  return SimpleGraph(n, e);
}

int SimpleGraph::edge_index(const Edge& e) const {
  Edge f = e.first < e.second ? e : Edge{e.second, e.first};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), f);
  return it != edges_.end() && *it == f ? static_cast<int>(it - edges_.begin()) : -1;
}

bool SimpleGraph::contains(const SimpleGraph& sub) const {
  for (auto& e : sub.edges_)
    if (edge_index(e) < 0) return false;
  return sub.n_ == n_;
}

SimpleGraph SimpleGraph::permuted(const Permutation& g) const {
  std::vector<Edge> e;
  for (auto& [a, b] : edges_) e.emplace_back(g(a), g(b));
  return SimpleGraph(n_, e);
}

SimpleGraph SimpleGraph::with_edge(Edge e) const {
  auto es = edges_;
  es.push_back(e);
  return SimpleGraph(n_, es);
}

std::string SimpleGraph::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto& [a, b] : edges_) j.push_back({a, b});
  return j.dump();
}

std::vector<SimpleGraph> enumerate_graphs(int n, int l) {
  std::vector<Edge> all = SimpleGraph::complete(n).edges();
  int m = static_cast<int>(all.size());
  if (l < 1 || l > m) throw std::out_of_range("enumerate_graphs: l must be in 1..n(n-1)/2");
  std::vector<SimpleGraph> out;
  std::vector<int> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<Edge> e;
    for (int i : idx) e.push_back(all[i]);
    out.emplace_back(n, e);
    int p = l - 1;
    while (p >= 0 && idx[p] == m - l + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < l; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  std::vector<int> img(g.n());
  std::iota(img.begin(), img.end(), 1);
  SimpleGraph best = g;
  do {
    SimpleGraph h = g.permuted(Permutation::from_images(img));
    if (h < best) best = h;
  } while (std::next_permutation(img.begin(), img.end()));
  return best;
}

std::vector<IsoClass> iso_classes(const std::vector<SimpleGraph>& graphs) {
  std::map<SimpleGraph, std::vector<SimpleGraph>> m;
  for (auto& g : graphs) {
    if (!graphs.empty() && g.n() != graphs.front().n())
      throw std::invalid_argument("iso_classes: graphs on different vertex counts");
    m[canonical_form(g)].push_back(g);
  }
  std::vector<IsoClass> out;
  for (auto& [rep, members] : m) out.push_back({rep, members});
  return out;
}

PermGroup stabilizer(const PermGroup& G, const SimpleGraph& g) {
  if (G.degree() != g.n()) throw std::invalid_argument("stabilizer: degree mismatch");
  return G.subgroup([&](const Permutation& s) { return g.permuted(s) == g; });
}

CycleData cycle_data(const SimpleGraph& g) {
  CycleData cd;
  int n = g.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<Edge> non_tree;
  for (auto& e : g.edges()) {
    int a = find(e.first), b = find(e.second);
    if (a != b) {
      parent[a] = b;
      cd.forest.push_back(e);
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    } else {
      non_tree.push_back(e);
    }
  }
  for (auto& [a, b] : non_tree) {
    // tree path from b back to a
    std::vector<int> prev(n + 1, 0);
    std::vector<int> stack{b};
    prev[b] = b;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!prev[y]) {
          prev[y] = x;
          stack.push_back(y);
        }
    }
    std::vector<int> path;  // a ... b along the tree
    for (int x = a; x != b; x = prev[x]) path.push_back(x);
    path.push_back(b);
    // walk: a -> b (the non-tree edge), then back along the tree to a
    OrientedCycle oc;
    oc.walk.push_back(a);
    for (auto it = path.rbegin(); it != path.rend() - 1; ++it) oc.walk.push_back(*it);
    oc.eta.assign(g.l(), 0);
    for (std::size_t s = 0; s < oc.walk.size(); ++s) {
      int u = oc.walk[s], w = oc.walk[(s + 1) % oc.walk.size()];
      oc.eta[g.edge_index({u, w})] = u < w ? 1 : -1;
    }
    cd.basis.push_back(std::move(oc));
  }
  cd.c = static_cast<int>(cd.basis.size());
  return cd;
}

Matrix boundary_matrix(const SimpleGraph& g) {
  const auto& vs = g.vertices();
  Matrix m(g.v(), g.l());
  auto row = [&](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  for (int k = 0; k < g.l(); ++k) {
    auto [i, j] = g.edges()[k];
    m(row(j), k) += 1;
    m(row(i), k) -= 1;
  }
  return m;
}

Matrix signed_edge_matrix(const SimpleGraph& g, const Permutation& sigma) {
  Matrix m(g.l(), g.l());
  for (int k = 0; k < g.l(); ++k) {
    auto [i, j] = g.edges()[k];
    int a = sigma(i), b = sigma(j);
    int t = g.edge_index({a, b});
    if (t < 0) throw std::invalid_argument("signed_edge_matrix: permutation does not stabilize the graph");
    m(t, k) = a < b ? 1 : -1;
  }
  return m;
}

MatrixRep edge_rep(const SimpleGraph& g, const PermGroup& G) {
  return MatrixRep::from_function(G, [&](const Permutation& s) { return signed_edge_matrix(g, s); });
}

MatrixRep cycle_rep(const SimpleGraph& g, const PermGroup& G) {
  auto cd = cycle_data(g);
  // basis vector j has +-1 on its own non-tree edge and 0 on the others
  std::vector<int> pivot;
  for (auto& oc : cd.basis) {
    int p = -1;
    for (int k = 0; k < g.l(); ++k)
      if (oc.eta[k] && std::find(cd.forest.begin(), cd.forest.end(), g.edges()[k]) == cd.forest.end()) p = k;
    pivot.push_back(p);
  }
  return MatrixRep::from_function(G, [&](const Permutation& s) {
    Matrix w = signed_edge_matrix(g, s);
    Matrix m(cd.c, cd.c);
    for (int j = 0; j < cd.c; ++j) {
      std::vector<Q> img(g.l());
      for (int r = 0; r < g.l(); ++r)
        for (int k = 0; k < g.l(); ++k) img[r] += w(r, k) * cd.basis[j].eta[k];
      for (int i = 0; i < cd.c; ++i) m(i, j) = img[pivot[i]] / cd.basis[i].eta[pivot[i]];
    }
    return m;
  });
}

int edge_permutation_sign(const SimpleGraph& g, const Permutation& sigma) {
  std::vector<int> img;
  for (auto& [i, j] : g.edges()) {
    int t = g.edge_index({sigma(i), sigma(j)});
    if (t < 0) throw std::invalid_argument("edge_permutation_sign: permutation does not stabilize the graph");
    img.push_back(t + 1);
  }
  return Permutation::from_images(img).sign();
}

ClassFunction edge_sign_character(const SimpleGraph& g, const PermGroup& G) {
  return ClassFunction::from_elements(G, [&](const Permutation& s) { return Q(edge_permutation_sign(g, s)); });
}

int epsilon_sign(const SimpleGraph& small, const SimpleGraph& big) {
  if (!big.contains(small)) throw std::invalid_argument("epsilon_sign: first graph is not a subgraph of the second");
  auto cur = small.edges();
  int sign = 1;
  for (auto& e : big.edges()) {
    if (small.edge_index(e) >= 0) continue;
    cur.push_back(e);
    std::sort(cur.begin(), cur.end());
    int a = static_cast<int>(std::find(cur.begin(), cur.end(), e) - cur.begin()) + 1;
    if ((a - 1) % 2) sign = -sign;
  }
  return sign;
}

}  // namespace dg
