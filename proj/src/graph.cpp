#include "treecount/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace treecount {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::ConnectivityRetriesExhausted: return "ConnectivityRetriesExhausted";
    case ErrorCode::NonIntegerInterpolation: return "NonIntegerInterpolation";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidTheta: return "InvalidTheta";
    case ErrorCode::InfeasibleK: return "InfeasibleK";
    case ErrorCode::ThetaGeqA: return "ThetaGeqA";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

BipartiteGraph::BipartiteGraph(int n, int m, std::span<const Edge> edges) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::EmptySide, "both vertex classes need at least one vertex");
  }
  if (n + m > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, "n + m = " + std::to_string(n + m) + " exceeds " +
                                         std::to_string(kMaxVertices));
  }
  rows_.assign(n, 0);
  cols_.assign(m, 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= m) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (rows_[i] & bit) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    rows_[i] |= bit;
    cols_[j] |= std::uint64_t{1} << i;
    ++edge_count_;
  }
}

int BipartiteGraph::left_degree(int i) const { return std::popcount(rows_[i]); }
int BipartiteGraph::right_degree(int j) const { return std::popcount(cols_[j]); }

std::vector<int> BipartiteGraph::left_degrees() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = left_degree(i);
  return d;
}

std::vector<int> BipartiteGraph::right_degrees() const {
  std::vector<int> d(m_);
  for (int j = 0; j < m_; ++j) d[j] = right_degree(j);
  return d;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

mpz_class BipartiteGraph::adjacency_pattern() const {
  mpz_class bits = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (has_edge(i, j)) mpz_setbit(bits.get_mpz_t(), static_cast<mp_bitcnt_t>(i * m_ + j));
    }
  }
  return bits;
}

std::string BipartiteGraph::adjacency_hex() const { return adjacency_pattern().get_str(16); }

BipartiteGraph build_graph(int n, int m, std::span<const Edge> edges) {
  return BipartiteGraph(n, m, edges);
}

BipartiteGraph complete_bipartite(int n, int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) edges.emplace_back(i, j);
  }
  return BipartiteGraph(n, m, edges);
}

// --- partitions ---

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::EmptyPartition, "partition has no parts");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    }
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      if (text.empty()) break;
      throw Error(ErrorCode::ParseError, "empty part in \"" + std::string(text) + "\"");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad part \"" + std::string(token) + "\"");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int parts, int largest) {
  std::vector<Partition> out;
  if (parts < 1 || largest < 1) return out;
  std::vector<int> current{largest};
  std::function<void()> extend = [&] {
    if (static_cast<int>(current.size()) == parts) {
      out.emplace_back(current);
      return;
    }
    for (int v = current.back(); v >= 1; --v) {
      current.push_back(v);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

BipartiteGraph from_partition(const Partition& p) {
  std::vector<Edge> edges;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.parts()[i]; ++j) edges.emplace_back(i, j);
  }
  return BipartiteGraph(p.size(), p.largest(), edges);
}

// --- classification ---

std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::LeftRegular: return "left-regular";
    case Regularity::RightRegular: return "right-regular";
    case Regularity::Biregular: return "biregular";
    case Regularity::Irregular: return "irregular";
  }
  return "irregular";
}

namespace {

std::optional<int> uniform_value(const std::vector<int>& v) {
  if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return {};
  return v.front();
}

}  // namespace

RegularityClass classify_regularity(const BipartiteGraph& g) {
  RegularityClass rc;
  rc.left_degree = uniform_value(g.left_degrees());
  rc.right_degree = uniform_value(g.right_degrees());
  if (rc.left_degree && rc.right_degree) {
    rc.kind = Regularity::Biregular;
  } else if (rc.left_degree) {
    rc.kind = Regularity::LeftRegular;
  } else if (rc.right_degree) {
    rc.kind = Regularity::RightRegular;
  }
  return rc;
}

mpz_class degree_product(const BipartiteGraph& g) {
  mpz_class d = 1;
  for (int a : g.left_degrees()) d *= a;
  for (int b : g.right_degrees()) d *= b;
  return d;
}

bool is_connected(const BipartiteGraph& g) {
  // Alternating frontier expansion from first-class vertex 0.
  std::uint64_t left = 1;
  std::uint64_t right = 0;
  for (;;) {
    std::uint64_t next_right = right;
    for (std::uint64_t rest = left; rest; rest &= rest - 1) {
      next_right |= g.row(std::countr_zero(rest));
    }
    std::uint64_t next_left = left;
    for (std::uint64_t rest = next_right; rest; rest &= rest - 1) {
      next_left |= g.column(std::countr_zero(rest));
    }
    if (next_left == left && next_right == right) break;
    left = next_left;
    right = next_right;
  }
  return std::popcount(left) == g.n() && std::popcount(right) == g.m();
}

BipartiteGraph strip_degree_one(const BipartiteGraph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "strip_degree_one needs a connected graph");
  }
  std::vector<std::uint64_t> rows(g.n());
  for (int i = 0; i < g.n(); ++i) rows[i] = g.row(i);
  std::uint64_t alive_left = g.n() == 64 ? ~0ULL : (std::uint64_t{1} << g.n()) - 1;
  std::uint64_t alive_right = g.m() == 64 ? ~0ULL : (std::uint64_t{1} << g.m()) - 1;
  int edges = g.edge_count();

  auto column_degree = [&](int j) {
    int d = 0;
    for (std::uint64_t rest = alive_left; rest; rest &= rest - 1) {
      d += (rows[std::countr_zero(rest)] >> j) & 1U;
    }
    return d;
  };

  bool changed = true;
  while (changed && edges > 1) {
    changed = false;
    for (std::uint64_t rest = alive_left; rest && edges > 1; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (std::popcount(rows[i]) == 1) {
        rows[i] = 0;
        alive_left &= ~(std::uint64_t{1} << i);
        --edges;
        changed = true;
      }
    }
    for (std::uint64_t rest = alive_right; rest && edges > 1; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (column_degree(j) == 1) {
        for (std::uint64_t r = alive_left; r; r &= r - 1) {
          rows[std::countr_zero(r)] &= ~(std::uint64_t{1} << j);
        }
        alive_right &= ~(std::uint64_t{1} << j);
        --edges;
        changed = true;
      }
    }
  }

  std::vector<int> right_index(g.m(), -1);
  int m2 = 0;
  for (int j = 0; j < g.m(); ++j) {
    if ((alive_right >> j) & 1U) right_index[j] = m2++;
  }
  std::vector<Edge> out;
  int n2 = 0;
  for (int i = 0; i < g.n(); ++i) {
    if (!((alive_left >> i) & 1U)) continue;
    for (std::uint64_t r = rows[i]; r; r &= r - 1) {
      out.emplace_back(n2, right_index[std::countr_zero(r)]);
    }
    ++n2;
  }
  return BipartiteGraph(n2, m2, out);
}

std::optional<Partition> is_ferrers(const BipartiteGraph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  // Degree descending, ties by neighborhood bit pattern descending. Bit j of
  // the row stands for column j, so reading columns 0..m-1 lexicographically
  // means comparing bit-reversed patterns.
  auto lex_key = [&](int i) {
    std::uint64_t r = g.row(i);
    std::uint64_t rev = 0;
    for (int j = 0; j < g.m(); ++j) rev |= ((r >> j) & 1U) << (63 - j);
    return rev;
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int dx = g.left_degree(x), dy = g.left_degree(y);
    if (dx != dy) return dx > dy;
    return lex_key(x) > lex_key(y);
  });
  for (int j = 0; j < g.m(); ++j) {
    if (g.right_degree(j) == 0) return {};
  }
  std::vector<int> parts;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::uint64_t r = g.row(order[k]);
    if (r == 0) return {};
    if (k > 0 && (r & ~g.row(order[k - 1])) != 0) return {};
    parts.push_back(std::popcount(r));
  }
  return Partition(std::move(parts));
}

// --- text I/O ---

BipartiteGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<std::pair<int, int>> sizes;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long x = 0, y = 0;
    std::string trailing;
    if (!(fields >> x >> y) || (fields >> trailing)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!sizes) {
      if (x < 0 || y < 0 || x > kMaxVertices || y > kMaxVertices) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad sizes");
      }
      sizes.emplace(static_cast<int>(x), static_cast<int>(y));
    } else {
      if (x < 0 || y < 0 || x > kMaxVertices || y > kMaxVertices) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "line " + std::to_string(line_no) + ": edge index out of range");
      }
      edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  if (!sizes) throw Error(ErrorCode::ParseError, "missing \"n m\" header");
  return BipartiteGraph(sizes->first, sizes->second, edges);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

}  // namespace treecount
