#include "tpf/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace tpf {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
  return w;
}

DecompositionReport validate_decomposition(const Graph& g,
                                           const TreeDecomposition& d) {
  DecompositionReport r;
  auto fail = [&](const std::string& m) {
    r.violation = m;
    return r;
  };
  if ((int)d.bags.size() != d.tree.n)
    return fail("bag count differs from tree vertex count");
  if (d.tree.n == 0) return fail("empty tree");
  if (d.tree.m() != d.tree.n - 1 || !is_connected(d.tree))
    return fail("tree graph is not a tree");
  for (const auto& b : d.bags)
    for (int v : b)
      if (v < 0 || v >= g.n) return fail("bag vertex out of range");

  // (i) every vertex covered, and (iii) its support induces a subtree
  for (int v = 0; v < g.n; v++) {
    VertexSet support;
    for (int t = 0; t < d.tree.n; t++)
      if (vs_contains(d.bags[t], v)) support.push_back(t);
    if (support.empty())
      return fail("vertex " + std::to_string(v) + " is in no bag");
    if (components(d.tree, support).size() != 1)
      return fail("bags containing vertex " + std::to_string(v) +
                  " do not form a connected subtree");
  }
  // (ii) every edge inside some bag
  for (auto [u, v] : g.edge_list) {
    bool ok = false;
    for (const auto& b : d.bags)
      if (vs_contains(b, u) && vs_contains(b, v)) {
        ok = true;
        break;
      }
    if (!ok)
      return fail("edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} is inside no bag");
  }
  r.ok = true;
  r.width = d.width();
  return r;
}

int degeneracy(const Graph& g) {
  std::vector<int> deg(g.n);
  std::vector<char> gone(g.n, 0);
  for (int v = 0; v < g.n; v++) deg[v] = g.degree(v);
  int best = 0;
  for (int round = 0; round < g.n; round++) {
    int v = -1;
    for (int u = 0; u < g.n; u++)
      if (!gone[u] && (v == -1 || deg[u] < deg[v])) v = u;
    best = std::max(best, deg[v]);
    gone[v] = 1;
    for (int w : g.adj[v])
      if (!gone[w]) deg[w]--;
  }
  return best;
}

namespace {

// Working state for the exact search on one connected piece (n <= 62).
// Adjacency is a mutable bitmask array so elimination fill is cheap; the
// filled graph after eliminating a set depends only on the set, not on the
// order, which makes memoisation on the eliminated mask sound.
struct EliminationSearch {
  int n;
  std::vector<uint64_t> base_adj;
  std::unordered_set<uint64_t> failed;  // eliminated-masks proven infeasible
  int k = 0;

  explicit EliminationSearch(const Graph& g) : n(g.n), base_adj(g.n, 0) {
    for (auto [u, v] : g.edge_list) {
      base_adj[u] |= 1ull << v;
      base_adj[v] |= 1ull << u;
    }
  }

  static int popcount(uint64_t x) { return std::popcount(x); }

  // Degeneracy of the alive subgraph (treewidth lower bound).
  int alive_degeneracy(const std::vector<uint64_t>& adj, uint64_t alive) const {
    uint64_t left = alive;
    int best = 0;
    while (left) {
      int v = -1, dv = n + 1;
      for (uint64_t m = left; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int du = popcount(adj[u] & left);
        if (du < dv) {
          dv = du;
          v = u;
        }
      }
      best = std::max(best, dv);
      left &= ~(1ull << v);
    }
    return best;
  }

  void eliminate(std::vector<uint64_t>& adj, uint64_t& alive, int v) {
    uint64_t nb = adj[v] & alive;
    alive &= ~(1ull << v);
    for (uint64_t m = nb; m;) {
      int u = std::countr_zero(m);
      m &= m - 1;
      adj[u] |= nb & ~(1ull << u);  // fill: make the neighbourhood a clique
    }
  }

  // Try to finish eliminating `alive` with every bag of size <= k+1.
  // Appends the elimination order to `order` on success.
  bool decide(std::vector<uint64_t> adj, uint64_t alive,
              std::vector<int>& order) {
    size_t mark = order.size();
    // Safe reductions, applied exhaustively before branching.
    for (bool again = true; again;) {
      again = false;
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t nb = adj[v] & alive;
        int d = popcount(nb);
        bool simpl = true;
        for (uint64_t mm = nb; simpl && mm;) {
          int u = std::countr_zero(mm);
          mm &= mm - 1;
          if ((nb & ~(1ull << u)) & ~adj[u]) simpl = false;
        }
        if (simpl && d > k) {  // clique of size d+1 > k+1 survives any order
          order.resize(mark);
          return false;
        }
        if ((simpl && d <= k) || (d <= 2 && k >= 2) || (d <= 1 && k >= 1)) {
          eliminate(adj, alive, v);
          order.push_back(v);
          again = true;
        }
      }
    }

    int cnt = popcount(alive);
    if (cnt <= k + 1) {  // one bag holds the rest
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        order.push_back(v);
      }
      return true;
    }
    uint64_t mask = ~0ull >> (64 - n) & ~alive;
    if (failed.count(mask)) {
      order.resize(mark);
      return false;
    }
    // Edge-count bound for partial k-trees and a degeneracy bound.
    long long edges = 0;
    for (uint64_t m = alive; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      edges += popcount(adj[v] & alive);
    }
    edges /= 2;
    bool pruned = edges > (long long)k * cnt - (long long)k * (k + 1) / 2 ||
                  alive_degeneracy(adj, alive) > k;
    if (!pruned) {
      // Branch on eliminable vertices, cheapest fill first.
      std::vector<std::pair<long long, int>> cands;
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t nb = adj[v] & alive;
        int d = popcount(nb);
        if (d > k) continue;
        long long fill = 0;
        for (uint64_t mm = nb; mm;) {
          int u = std::countr_zero(mm);
          mm &= mm - 1;
          fill += popcount(nb & ~adj[u] & ~(1ull << u));
        }
        cands.push_back({fill * 64 + d, v});
      }
      std::sort(cands.begin(), cands.end());
      for (auto [key, v] : cands) {
        (void)key;
        auto adj2 = adj;
        uint64_t alive2 = alive;
        eliminate(adj2, alive2, v);
        order.push_back(v);
        if (decide(std::move(adj2), alive2, order)) return true;
        order.pop_back();
      }
    }
    failed.insert(mask);
    order.resize(mark);
    return false;
  }
};

// Min-fill greedy elimination; returns (order, width achieved).
std::pair<std::vector<int>, int> min_fill_order(const Graph& g) {
  int n = g.n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edge_list) adj[u][v] = adj[v][u] = 1;
  std::vector<char> alive(n, 1);
  std::vector<int> order;
  int width = 0;
  for (int round = 0; round < n; round++) {
    int best = -1;
    long long best_key = -1;
    for (int v = 0; v < n; v++) {
      if (!alive[v]) continue;
      std::vector<int> nb;
      for (int u = 0; u < n; u++)
        if (alive[u] && adj[v][u]) nb.push_back(u);
      long long fill = 0;
      for (size_t i = 0; i < nb.size(); i++)
        for (size_t j = i + 1; j < nb.size(); j++)
          if (!adj[nb[i]][nb[j]]) fill++;
      long long key = fill * 10000 + (long long)nb.size();
      if (best == -1 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    std::vector<int> nb;
    for (int u = 0; u < n; u++)
      if (alive[u] && adj[best][u]) nb.push_back(u);
    width = std::max(width, (int)nb.size());
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++)
        adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
    alive[best] = 0;
    order.push_back(best);
  }
  return {order, width};
}

// Tree decomposition from an elimination order: bag_i = v_i plus its alive
// neighbours in the filled graph; bag_i's tree parent is the bag of the
// first-eliminated vertex in bag_i \ {v_i}.
TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<int>& order) {
  int n = g.n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edge_list) adj[u][v] = adj[v][u] = 1;
  std::vector<char> alive(n, 1);
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[order[i]] = i;

  TreeDecomposition d;
  d.bags.resize(n);
  std::vector<Edge> tree_edges;
  for (int i = 0; i < n; i++) {
    int v = order[i];
    std::vector<int> nb;
    for (int u = 0; u < n; u++)
      if (alive[u] && u != v && adj[v][u]) nb.push_back(u);
    d.bags[i] = vs_sorted([&] {
      auto b = nb;
      b.push_back(v);
      return b;
    }());
    int parent = -1;  // earliest-eliminated alive neighbour
    for (int u : nb)
      if (parent == -1 || pos[u] < pos[parent]) parent = u;
    if (parent != -1)
      tree_edges.push_back({std::min(i, pos[parent]), std::max(i, pos[parent])});
    else if (i + 1 < n)
      tree_edges.push_back({i, i + 1});  // isolated piece: chain anywhere
    for (size_t a = 0; a < nb.size(); a++)
      for (size_t b = a + 1; b < nb.size(); b++)
        adj[nb[a]][nb[b]] = adj[nb[b]][nb[a]] = 1;
    alive[v] = 0;
  }
  d.tree = Graph(n, tree_edges);
  return d;
}

}  // namespace

TreewidthResult treewidth(const Graph& g, int exact_cap) {
  if (g.n < 1) throw std::invalid_argument("treewidth: empty graph");
  TreewidthResult res;

  auto [heur_order, heur_width] = min_fill_order(g);
  int lb = degeneracy(g);
  int ub = heur_width;

  if (g.n > exact_cap || g.n > 62) {
    res.exact = false;
    res.lower_bound = lb;
    res.upper_bound = ub;
    res.width = ub;
    res.decomposition = decomposition_from_order(g, heur_order);
    return res;
  }

  // Exact: decide(k) for k = lb, lb+1, ...; each failure certifies tw > k.
  // Components are solved independently (treewidth of a union is the max),
  // but the single elimination search handles that implicitly and the memo
  // keeps it cheap at this scale.
  std::vector<int> order;
  int k = std::max(lb, 0);
  for (;; k++) {
    EliminationSearch search(g);
    search.k = k;
    order.clear();
    if (k >= g.n - 1 ||
        search.decide(search.base_adj, ~0ull >> (64 - g.n), order)) {
      if (k >= g.n - 1 && order.empty())
        for (int v = 0; v < g.n; v++) order.push_back(v);
      break;
    }
  }
  res.exact = true;
  res.width = res.lower_bound = res.upper_bound = k;
  res.decomposition = decomposition_from_order(g, order);
  auto rep = validate_decomposition(g, res.decomposition);
  if (!rep.ok || rep.width > k)
    throw std::logic_error("treewidth: constructed decomposition invalid: " +
                           rep.violation);
  return res;
}

}  // namespace tpf
