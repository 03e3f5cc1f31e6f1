#include "treecount/oracle.hpp"

#include <numeric>

namespace treecount {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    int root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      const int next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

class TreeSearch {
 public:
  TreeSearch(const BipartiteGraph& g, const std::function<void(const TreeEdgeSet&)>& visit)
      : n_(g.n()), vertices_(g.vertex_count()), edges_(g.edges()), visit_(visit) {}

  void run() {
    if (vertices_ - 1 > static_cast<int>(edges_.size())) return;
    UnionFind uf(vertices_);
    if (!connectable(uf, 0)) return;
    recurse(0, uf);
  }

 private:
  int u(int e) const { return edges_[e].first; }
  int w(int e) const { return n_ + edges_[e].second; }

  // Can the chosen forest plus edges [from, end) still span every vertex?
  bool connectable(const UnionFind& chosen, int from) const {
    UnionFind probe = chosen;
    int components = vertices_ - static_cast<int>(current_.edge_indices.size());
    for (int e = from; e < static_cast<int>(edges_.size()) && components > 1; ++e) {
      if (probe.unite(u(e), w(e))) --components;
    }
    return components == 1;
  }

  void recurse(int e, UnionFind& uf) {
    const int chosen = static_cast<int>(current_.edge_indices.size());
    if (chosen == vertices_ - 1) {
      visit_(current_);
      return;
    }
    const int remaining = static_cast<int>(edges_.size()) - e;
    if (remaining < vertices_ - 1 - chosen) return;

    // Include first, so trees come out in lexicographic order.
    {
      UnionFind next = uf;
      if (next.unite(u(e), w(e))) {
        current_.edge_indices.push_back(e);
        recurse(e + 1, next);
        current_.edge_indices.pop_back();
      }
    }
    if (connectable(uf, e + 1)) recurse(e + 1, uf);
  }

  int n_;
  int vertices_;
  std::vector<Edge> edges_;
  const std::function<void(const TreeEdgeSet&)>& visit_;
  TreeEdgeSet current_;
};

void check_size(const BipartiteGraph& g, int max_edges) {
  if (g.edge_count() > max_edges) {
    throw Error(ErrorCode::TooLarge, "|E| = " + std::to_string(g.edge_count()) +
                                         " exceeds the enumeration cap " + std::to_string(max_edges));
  }
}

}  // namespace

void for_each_tree(const BipartiteGraph& g, const std::function<void(const TreeEdgeSet&)>& visit,
                   int max_edges) {
  check_size(g, max_edges);
  TreeSearch(g, visit).run();
}

std::vector<TreeEdgeSet> enumerate_trees(const BipartiteGraph& g, int max_edges) {
  std::vector<TreeEdgeSet> trees;
  for_each_tree(g, [&](const TreeEdgeSet& t) { trees.push_back(t); }, max_edges);
  return trees;
}

mpz_class brute_tau(const BipartiteGraph& g, int max_edges) {
  mpz_class count = 0;
  for_each_tree(g, [&](const TreeEdgeSet&) { ++count; }, max_edges);
  return count;
}

std::vector<DegreeHistogram> all_degree_histograms(const BipartiteGraph& g, int max_edges) {
  const std::vector<Edge> edges = g.edges();
  const int n = g.n();
  std::vector<DegreeHistogram> hist(g.vertex_count());
  std::vector<int> degree(g.vertex_count());
  for_each_tree(
      g,
      [&](const TreeEdgeSet& t) {
        std::fill(degree.begin(), degree.end(), 0);
        for (int e : t.edge_indices) {
          ++degree[edges[e].first];
          ++degree[n + edges[e].second];
        }
        for (std::size_t v = 0; v < degree.size(); ++v) ++hist[v][degree[v]];
      },
      max_edges);
  return hist;
}

DegreeHistogram degree_histogram(const BipartiteGraph& g, const VertexRef& v, int max_edges) {
  v.validate(g);
  const std::vector<Edge> edges = g.edges();
  const int target = v.position(g);
  DegreeHistogram hist;
  for_each_tree(
      g,
      [&](const TreeEdgeSet& t) {
        int d = 0;
        for (int e : t.edge_indices) {
          d += (edges[e].first == target) + (g.n() + edges[e].second == target);
        }
        ++hist[d];
      },
      max_edges);
  return hist;
}

bool is_spanning_tree(const BipartiteGraph& g, const TreeEdgeSet& tree) {
  const int vertices = g.vertex_count();
  if (static_cast<int>(tree.edge_indices.size()) != vertices - 1) return false;
  const std::vector<Edge> edges = g.edges();
  std::vector<std::vector<int>> adj(vertices);
  for (int e : tree.edge_indices) {
    if (e < 0 || e >= static_cast<int>(edges.size())) return false;
    adj[edges[e].first].push_back(g.n() + edges[e].second);
    adj[g.n() + edges[e].second].push_back(edges[e].first);
  }
  // A graph with V-1 edges that reaches every vertex is a tree.
  std::vector<bool> seen(vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertices;
}

}  // namespace treecount
