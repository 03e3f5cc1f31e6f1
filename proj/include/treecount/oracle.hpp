#pragma once

#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "treecount/graph.hpp"
#include "treecount/spanning.hpp"

namespace treecount {

inline constexpr int kDefaultOracleEdgeCap = 30;

// A spanning tree as indices into g.edges(), ascending.
struct TreeEdgeSet {
  std::vector<int> edge_indices;
};

/// Visits every spanning tree exactly once, in lexicographic order of edge
/// indices. Backtracks over edges with a union-find for cycle rejection and
/// prunes branches whose remaining edges cannot connect the components.
/// Throws TooLarge when |E| exceeds max_edges.
void for_each_tree(const BipartiteGraph& g, const std::function<void(const TreeEdgeSet&)>& visit,
                   int max_edges = kDefaultOracleEdgeCap);

std::vector<TreeEdgeSet> enumerate_trees(const BipartiteGraph& g, int max_edges = kDefaultOracleEdgeCap);

mpz_class brute_tau(const BipartiteGraph& g, int max_edges = kDefaultOracleEdgeCap);

using DegreeHistogram = std::map<int, mpz_class>;

DegreeHistogram degree_histogram(const BipartiteGraph& g, const VertexRef& v,
                                 int max_edges = kDefaultOracleEdgeCap);

// Histograms for every vertex from a single enumeration, indexed by
// Laplacian position (first class, then second class).
std::vector<DegreeHistogram> all_degree_histograms(const BipartiteGraph& g,
                                                   int max_edges = kDefaultOracleEdgeCap);

// Independent check that `tree` is acyclic and spans g (BFS, no union-find).
bool is_spanning_tree(const BipartiteGraph& g, const TreeEdgeSet& tree);

}  // namespace treecount
