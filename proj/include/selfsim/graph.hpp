#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace selfsim {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Malformed input: bad ids, violated preconditions, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource cap (edge count, vertex count for exact diameters) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph stored as compressed adjacency rows.
/// Neighbor lists are sorted; vertices are 0..vertex_count()-1.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  /// Builds a simple graph from an edge list. Duplicate edges (in either
  /// orientation) are merged. Self-loops and out-of-range ids throw.
  static FiniteGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// Every edge once as (smaller, larger), ascending.
  std::vector<Edge> edges() const;

  bool operator==(const FiniteGraph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Shortest-path distances (unit edge weights) from a source set.
class DistanceMap {
 public:
  DistanceMap() = default;
  explicit DistanceMap(std::vector<std::uint32_t> raw) : dist_(std::move(raw)) {}

  std::size_t size() const { return dist_.size(); }
  bool reachable(VertexId v) const { return dist_[v] != kUnreached; }
  std::optional<std::uint32_t> operator[](VertexId v) const {
    if (!reachable(v)) return std::nullopt;
    return dist_[v];
  }
  /// Distance to a reachable vertex; throws std::out_of_range otherwise.
  std::uint32_t at(VertexId v) const;
  /// Largest finite distance, 0 for an all-unreachable map.
  std::uint32_t max_finite() const;

 private:
  friend DistanceMap bfs_distances(const FiniteGraph&, std::span<const VertexId>);
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist_;
};

struct BoundaryInfo {
  std::vector<VertexId> theta;    // vertex boundary, sorted
  std::vector<Edge> delta;        // (inside, outside), sorted
  std::vector<VertexId> closure;  // C plus theta, sorted
};

struct ReducedGraph {
  FiniteGraph graph;
  std::vector<VertexId> original_ids;  // new id -> id in the input graph
  bool edgeless = false;               // F covered every vertex
};

DistanceMap bfs_distances(const FiniteGraph& g, std::span<const VertexId> sources);

/// Connected components of the graph with `removed` deleted. Each component
/// is sorted; the list is ordered by smallest member.
std::vector<std::vector<VertexId>> components(const FiniteGraph& g,
                                              std::span<const VertexId> removed);

BoundaryInfo boundary(const FiniteGraph& g, std::span<const VertexId> set);

/// Sum of degrees over `set`.
std::uint64_t volume(const FiniteGraph& g, std::span<const VertexId> set);

/// The reduced graph on `kept`: two kept vertices are joined iff some
/// component of the complement has both in its vertex boundary.
ReducedGraph reduce(const FiniteGraph& g, std::span<const VertexId> kept);

struct DiameterOptions {
  std::size_t vertex_cap = 200000;
  bool allow_over_cap = false;
};

/// Exact diameter by BFS from every vertex. Throws InputError on a
/// disconnected graph and CapExceeded above the cap unless opted in.
std::uint32_t diameter(const FiniteGraph& g, DiameterOptions opts = {});

/// Label-preserving isomorphism g1 -> g2 (mapping[v1] = v2), or nullopt.
/// Deterministic; the returned mapping has been checked edge by edge.
std::optional<std::vector<VertexId>> isomorphism(const FiniteGraph& g1,
                                                 std::span<const int> labels1,
                                                 const FiniteGraph& g2,
                                                 std::span<const int> labels2);

/// True iff `mapping` is a bijection g1 -> g2 preserving labels, edges and non-edges.
bool is_isomorphism(const FiniteGraph& g1, std::span<const int> labels1,
                    const FiniteGraph& g2, std::span<const int> labels2,
                    std::span<const VertexId> mapping);

}  // namespace selfsim
