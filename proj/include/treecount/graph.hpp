#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "treecount/error.hpp"

namespace treecount {

// Bit-set adjacency limits the total vertex count.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;  // (first-class index, second-class index)

/// Simple bipartite graph with first class 0..n-1 and second class 0..m-1.
///
/// Adjacency is stored both ways as bit sets, so each side must fit in 64
/// vertices; the combined cap n + m <= 64 is enforced at construction.
/// Instances are immutable.
class BipartiteGraph {
 public:
  BipartiteGraph(int n, int m, std::span<const Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int vertex_count() const noexcept { return n_ + m_; }
  int edge_count() const noexcept { return edge_count_; }

  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1U; }
  std::uint64_t row(int i) const { return rows_[i]; }
  std::uint64_t column(int j) const { return cols_[j]; }

  int left_degree(int i) const;
  int right_degree(int j) const;
  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;

  // Row-major: (0,0), (0,1), ..., (1,0), ...
  std::vector<Edge> edges() const;

  // Lowercase hex of the row-major bit pattern; bit i*m + j is edge (i, j).
  std::string adjacency_hex() const;
  mpz_class adjacency_pattern() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
};

BipartiteGraph build_graph(int n, int m, std::span<const Edge> edges);
BipartiteGraph complete_bipartite(int n, int m);

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.front(); }

  std::string to_string() const;  // "4,4,3,3,1"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition parse_partition(std::string_view text);

// All partitions with exactly `parts` parts and largest part exactly `largest`,
// in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int parts, int largest);

BipartiteGraph from_partition(const Partition& p);

enum class Regularity { LeftRegular, RightRegular, Biregular, Irregular };

std::string_view to_string(Regularity r);

struct RegularityClass {
  Regularity kind = Regularity::Irregular;
  std::optional<int> left_degree;
  std::optional<int> right_degree;
};

RegularityClass classify_regularity(const BipartiteGraph& g);

mpz_class degree_product(const BipartiteGraph& g);

bool is_connected(const BipartiteGraph& g);

/// Removes degree-one vertices one at a time until none remain or the graph
/// is a single edge. Survivors keep their relative order on each side.
BipartiteGraph strip_degree_one(const BipartiteGraph& g);

/// Recovers the Ferrers partition if the first-class neighborhoods form an
/// inclusion chain. Graphs with isolated vertices are reported as absent.
std::optional<Partition> is_ferrers(const BipartiteGraph& g);

// Text format: "n m" header, then one "i j" edge per line; '#' comments.
BipartiteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

}  // namespace treecount
