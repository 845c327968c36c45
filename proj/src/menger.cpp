#include "tpf/menger.hpp"

#include <algorithm>
#include <deque>

namespace tpf {

namespace {

// Unit-vertex-capacity flow network: every vertex v other than a, b is split
// into v_in (2v) and v_out (2v+1) joined by a capacity-1 arc; a and b use a
// single node each. Edge arcs get effectively infinite capacity so that a
// minimum cut consists of split arcs only, i.e. is a vertex cut avoiding a, b.
struct FlowNet {
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int nodes) : out(nodes) {}

  void add(int u, int v, int cap) {
    out[u].push_back((int)arcs.size());
    arcs.push_back({v, cap});
    out[v].push_back((int)arcs.size());
    arcs.push_back({u, 0});
  }

  // Flow currently on forward arc ei equals its reverse twin's capacity.
  int flow_on(int ei) const { return arcs[ei ^ 1].cap; }

  void undo_unit(int ei) {
    arcs[ei].cap += 1;
    arcs[ei ^ 1].cap -= 1;
  }
};

}  // namespace

MengerResult menger(const Graph& g, int a, int b, int k) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
    throw std::invalid_argument("menger: bad endpoints");
  if (g.adjacent(a, b))
    throw std::invalid_argument("menger: endpoints must be non-adjacent");
  if (k < 1) throw std::invalid_argument("menger: k must be positive");

  const int INF = g.n + 1;
  auto node_in = [&](int v) { return 2 * v; };
  auto node_out = [&](int v) { return v == a || v == b ? 2 * v : 2 * v + 1; };

  FlowNet net(2 * g.n);
  for (int v = 0; v < g.n; v++)
    if (v != a && v != b) net.add(node_in(v), 2 * v + 1, 1);
  for (auto [u, v] : g.edge_list) {
    net.add(node_out(u), node_in(v), INF);
    net.add(node_out(v), node_in(u), INF);
  }

  int source = node_out(a), sink = node_in(b);
  int flow = 0;
  std::vector<int> via(net.out.size());
  while (flow < k) {
    // BFS for an augmenting path in the residual network.
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> q{source};
    via[source] = -2;
    while (!q.empty() && via[sink] == -1) {
      int u = q.front();
      q.pop_front();
      for (int ei : net.out[u]) {
        int w = net.arcs[ei].to;
        if (net.arcs[ei].cap > 0 && via[w] == -1) {
          via[w] = ei;
          q.push_back(w);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int u = sink; u != source;) {
      int ei = via[u];
      net.arcs[ei].cap -= 1;
      net.arcs[ei ^ 1].cap += 1;
      u = net.arcs[ei ^ 1].to;
    }
    flow++;
  }

  MengerResult res;
  if (flow < k) {
    // Residual reachability from the source; split arcs with the in-node
    // reachable and the out-node not are exactly the minimum cut (edge arcs
    // never appear in it thanks to their infinite capacity).
    std::vector<char> reach(net.out.size(), 0);
    std::deque<int> q{source};
    reach[source] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int ei : net.out[u])
        if (net.arcs[ei].cap > 0 && !reach[net.arcs[ei].to]) {
          reach[net.arcs[ei].to] = 1;
          q.push_back(net.arcs[ei].to);
        }
    }
    res.connected = false;
    for (int v = 0; v < g.n; v++)
      if (v != a && v != b && reach[2 * v] && !reach[2 * v + 1])
        res.cutset.push_back(v);
    if ((int)res.cutset.size() != flow)
      throw std::logic_error("menger: cut size disagrees with flow value");
    return res;
  }

  // Walk the unit flow out of the source to recover k vertex-disjoint paths,
  // consuming one unit per arc walked. Unit split capacities mean no interior
  // vertex carries two units, so walks cannot collide or loop.
  res.connected = true;
  res.paths.a = a;
  res.paths.b = b;
  for (int ei0 : net.out[source]) {
    if ((ei0 & 1) || net.flow_on(ei0) <= 0) continue;
    Path p{a};
    net.undo_unit(ei0);
    int node = net.arcs[ei0].to;  // an in-node
    while (node != sink) {
      int v = node / 2;
      p.push_back(v);
      // Step in-node -> out-node, then follow one carrying outgoing arc.
      int cur = 2 * v + 1;
      int next = -1;
      for (int ei : net.out[cur])
        if (!(ei & 1) && net.flow_on(ei) > 0) {
          net.undo_unit(ei);
          next = net.arcs[ei].to;
          break;
        }
      if (next == -1) throw std::logic_error("menger: broken flow walk");
      node = next;
    }
    p.push_back(b);

    // Shortcut the walk to an induced path inside its own vertex set: a BFS
    // shortest path has no chords, and it only uses this walk's vertices, so
    // the k paths stay internally disjoint.
    auto sp = shortest_path(g, a, b, vs_sorted(p));
    if (!sp) throw std::logic_error("menger: lost path while shortcutting");
    p = *sp;
    std::string why;
    if (!is_path(g, p, &why))
      throw std::logic_error("menger: shortcut not induced: " + why);
    res.paths.paths.push_back(p);
    if ((int)res.paths.paths.size() == k) break;
  }
  if ((int)res.paths.paths.size() != k)
    throw std::logic_error("menger: lost a flow unit");
  return res;
}

int vertex_connectivity_between(const Graph& g, int a, int b) {
  int lo = 0;
  int hi = std::min(g.degree(a), g.degree(b));
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (menger(g, a, b, mid).connected)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace tpf
