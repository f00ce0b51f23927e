#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmonium/matrix.hpp"

namespace harmonium {

/// Undirected edge {tail, head} on vertices 1..n, stored with tail < head
/// (the standard orientation tail -> head).
struct Edge {
  int tail;
  int head;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph on the ordered vertex set 1..n. Immutable after construction.
///
/// Per-vertex data elsewhere in the library (colorings, orientations,
/// defects) is held in 0-based vectors: index i belongs to vertex i + 1.
class Graph {
 public:
  /// Rejects loops and endpoints outside 1..n with DomainError; repeated
  /// edges collapse to one.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// 0-based neighbour indices of the vertex with 0-based index v.
  const std::vector<int>& neighbors(std::size_t v) const { return adjacency_[v]; }
  int degree(std::size_t v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_isolated_vertex() const;
  /// Vertex indices (0-based) of each connected component, by breadth-first search.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

enum class Family { path, cycle, complete, star };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// path: {j, j+1}; cycle: path plus {1, n}; complete: all pairs;
/// star: {1, j} for 2 <= j <= n. Requires n >= 2 (n >= 3 for cycles).
Graph family(Family kind, int n);

/// Vertices of `b` are renumbered after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// L = D - A.
IntegerMatrix laplacian(const Graph& g);

/// n x |E| signed incidence matrix; the column of edge {i < j} is e_j - e_i.
IntegerMatrix boundary_map(const Graph& g);

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Edge-list text: first non-comment line is n, then one "i j" pair per
/// line; blank lines and lines starting with '#' are ignored. Duplicate edges
/// are collapsed with a warning; loops, out-of-range indices and malformed
/// lines throw ParseError carrying the 1-based line number.
ParsedGraph parse_graph(std::string_view text);

/// Sign per edge, relative to the standard orientation.
struct EdgeOrientation {
  std::vector<std::int8_t> signs;
};

/// Sign per vertex; +1 asks for subharmonic behaviour, -1 for superharmonic.
struct VertexOrientation {
  std::vector<std::int8_t> signs;

  std::size_t size() const noexcept { return signs.size(); }
  /// Neither all +1 nor all -1.
  bool is_nonconstant() const;
  VertexOrientation operator-() const;

  friend auto operator<=>(const VertexOrientation&, const VertexOrientation&) = default;
};

/// All 2^n - 2 nonconstant orientations, ordered by the bitmask whose bit v
/// set means sign -1 at vertex index v.
std::vector<VertexOrientation> nonconstant_vertex_orientations(int n);

std::string to_string(const VertexOrientation& eps);

}  // namespace harmonium
