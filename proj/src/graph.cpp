#include "selfsim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace selfsim {

namespace {

void check_ids(const FiniteGraph& g, std::span<const VertexId> ids, const char* what) {
  for (VertexId v : ids) {
    if (v >= g.vertex_count()) {
      throw InputError(std::string(what) + ": vertex id " + std::to_string(v) +
                       " out of range (vertex count " + std::to_string(g.vertex_count()) +
                       ")");
    }
  }
}

std::vector<char> membership(std::size_t n, std::span<const VertexId> ids) {
  std::vector<char> in(n, 0);
  for (VertexId v : ids) in[v] = 1;
  return in;
}

}  // namespace

FiniteGraph FiniteGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  FiniteGraph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  std::vector<VertexId> raw(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort rows and drop duplicates, compacting in place.
  std::vector<std::size_t> offsets(vertex_count + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) raw[out++] = *it;
    offsets[v + 1] = out;
  }
  raw.resize(out);
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(raw);
  return g;
}

bool FiniteGraph::adjacent(VertexId u, VertexId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> FiniteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint32_t DistanceMap::at(VertexId v) const {
  if (v >= dist_.size() || !reachable(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " is unreachable");
  }
  return dist_[v];
}

std::uint32_t DistanceMap::max_finite() const {
  std::uint32_t best = 0;
  for (auto d : dist_) {
    if (d != kUnreached) best = std::max(best, d);
  }
  return best;
}

DistanceMap bfs_distances(const FiniteGraph& g, std::span<const VertexId> sources) {
  if (sources.empty()) throw InputError("bfs_distances: empty source set");
  check_ids(g, sources, "bfs_distances");
  std::vector<std::uint32_t> dist(g.vertex_count(), DistanceMap::kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  for (VertexId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == DistanceMap::kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return DistanceMap(std::move(dist));
}

std::vector<std::vector<VertexId>> components(const FiniteGraph& g,
                                              std::span<const VertexId> removed) {
  check_ids(g, removed, "components");
  std::vector<char> seen = membership(g.vertex_count(), removed);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

BoundaryInfo boundary(const FiniteGraph& g, std::span<const VertexId> set) {
  check_ids(g, set, "boundary");
  std::vector<char> in = membership(g.vertex_count(), set);
  BoundaryInfo info;
  std::vector<char> in_theta(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    for (VertexId w : g.neighbors(v)) {
      if (in[w]) continue;
      info.delta.emplace_back(v, w);
      in_theta[w] = 1;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_theta[v]) info.theta.push_back(v);
    if (in_theta[v] || in[v]) info.closure.push_back(v);
  }
  return info;
}

std::uint64_t volume(const FiniteGraph& g, std::span<const VertexId> set) {
  check_ids(g, set, "volume");
  std::uint64_t total = 0;
  for (VertexId v : set) total += g.degree(v);
  return total;
}

ReducedGraph reduce(const FiniteGraph& g, std::span<const VertexId> kept) {
  if (kept.empty()) throw InputError("reduce: empty vertex set");
  check_ids(g, kept, "reduce");
  const std::size_t n = g.vertex_count();
  std::vector<char> in = membership(n, kept);

  ReducedGraph out;
  std::vector<VertexId> new_id(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (in[v]) {
      new_id[v] = static_cast<VertexId>(out.original_ids.size());
      out.original_ids.push_back(v);
    }
  }
  out.edgeless = out.original_ids.size() == n;

  std::vector<Edge> edges;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack, touched;
  std::vector<std::size_t> stamp(n, 0);
  std::size_t comp_no = 0;
  for (VertexId start = 0; start < n; ++start) {
    if (in[start] || seen[start]) continue;
    ++comp_no;
    touched.clear();
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (in[w]) {
          if (stamp[w] != comp_no) {
            stamp[w] = comp_no;
            touched.push_back(w);
          }
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t i = 0; i < touched.size(); ++i) {
      for (std::size_t j = i + 1; j < touched.size(); ++j) {
        edges.emplace_back(new_id[touched[i]], new_id[touched[j]]);
      }
    }
  }
  out.graph = FiniteGraph::from_edges(out.original_ids.size(), edges);
  return out;
}

std::uint32_t diameter(const FiniteGraph& g, DiameterOptions opts) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("diameter: empty graph");
  if (n > opts.vertex_cap && !opts.allow_over_cap) {
    throw CapExceeded("diameter: " + std::to_string(n) + " vertices exceed the cap of " +
                      std::to_string(opts.vertex_cap) + "; opt in explicitly");
  }
  std::vector<std::uint32_t> dist(n);
  std::vector<VertexId> queue(n);
  std::uint32_t best = 0;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max());
    dist[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      VertexId u = queue[head++];
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::uint32_t>::max()) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw InputError("diameter: graph is disconnected");
    best = std::max(best, dist[queue[tail - 1]]);
  }
  return best;
}

}  // namespace selfsim
