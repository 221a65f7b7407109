// Label-preserving isomorphism search: colour refinement on the disjoint
// union of both graphs, then backtracking along a BFS vertex order where
// every candidate must be adjacent to the image of the BFS parent.

#include <algorithm>
#include <map>
#include <tuple>

#include "selfsim/graph.hpp"

namespace selfsim {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

// Stable colour refinement of g1 ⊔ g2. Colours are comparable across graphs.
std::vector<int> refine_colours(const FiniteGraph& g1, std::span<const int> l1,
                                const FiniteGraph& g2, std::span<const int> l2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n = n1 + g2.vertex_count();
  auto graph_of = [&](std::size_t v) -> std::pair<const FiniteGraph*, VertexId> {
    if (v < n1) return {&g1, static_cast<VertexId>(v)};
    return {&g2, static_cast<VertexId>(v - n1)};
  };

  std::vector<int> colour(n);
  {
    std::map<std::pair<int, std::size_t>, int> ids;
    for (std::size_t v = 0; v < n; ++v) {
      auto [g, local] = graph_of(v);
      int label = v < n1 ? l1[local] : l2[local];
      ids.emplace(std::make_pair(label, g->degree(local)), 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      auto [g, local] = graph_of(v);
      int label = v < n1 ? l1[local] : l2[local];
      colour[v] = ids.at({label, g->degree(local)});
    }
  }

  std::size_t classes = 0;
  std::vector<int> signature;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto [g, local] = graph_of(v);
      signature.clear();
      for (VertexId w : g->neighbors(local)) {
        signature.push_back(colour[v < n1 ? w : w + n1]);
      }
      std::sort(signature.begin(), signature.end());
      signature.insert(signature.begin(), colour[v]);
      sigs[v] = signature;
      ids.emplace(signature, 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids.at(sigs[v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

}  // namespace

bool is_isomorphism(const FiniteGraph& g1, std::span<const int> labels1,
                    const FiniteGraph& g2, std::span<const int> labels2,
                    std::span<const VertexId> mapping) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || mapping.size() != n) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  std::vector<char> used(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    VertexId w = mapping[v];
    if (w >= n || used[w]) return false;
    used[w] = 1;
    if (labels1[v] != labels2[w]) return false;
  }
  // Equal edge counts plus edge preservation implies non-edges are preserved.
  for (const auto& [u, v] : g1.edges()) {
    if (!g2.adjacent(mapping[u], mapping[v])) return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> isomorphism(const FiniteGraph& g1,
                                                 std::span<const int> labels1,
                                                 const FiniteGraph& g2,
                                                 std::span<const int> labels2) {
  const std::size_t n = g1.vertex_count();
  if (labels1.size() != n || labels2.size() != g2.vertex_count()) {
    throw InputError("isomorphism: label map size does not match vertex count");
  }
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<VertexId>{};

  std::vector<int> colour = refine_colours(g1, labels1, g2, labels2);
  std::map<int, std::size_t> hist1, hist2;
  for (std::size_t v = 0; v < n; ++v) {
    ++hist1[colour[v]];
    ++hist2[colour[v + n]];
  }
  if (hist1 != hist2) return std::nullopt;

  // Candidate pools per colour in g2, ascending id.
  std::map<int, std::vector<VertexId>> pool;
  for (VertexId w = 0; w < n; ++w) pool[colour[w + n]].push_back(w);

  // Vertex order for g1: BFS per component; component roots are chosen by
  // (class size, label, degree, id).
  std::vector<VertexId> order, parent(n, kNone);
  {
    std::vector<VertexId> roots(n);
    for (VertexId v = 0; v < n; ++v) roots[v] = v;
    std::sort(roots.begin(), roots.end(), [&](VertexId a, VertexId b) {
      return std::make_tuple(hist1[colour[a]], labels1[a], g1.degree(a), a) <
             std::make_tuple(hist1[colour[b]], labels1[b], g1.degree(b), b);
    });
    std::vector<char> seen(n, 0);
    for (VertexId root : roots) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        VertexId u = order[head++];
        for (VertexId w : g1.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            parent[w] = u;
            order.push_back(w);
          }
        }
      }
    }
  }

  std::vector<VertexId> map1(n, kNone), map2(n, kNone);
  std::vector<std::size_t> cursor(n, 0);

  auto candidates = [&](VertexId v) -> std::span<const VertexId> {
    if (parent[v] != kNone) return g2.neighbors(map1[parent[v]]);
    return pool[colour[v]];
  };
  auto feasible = [&](VertexId v, VertexId w) {
    if (map2[w] != kNone || colour[w + n] != colour[v]) return false;
    std::size_t mapped1 = 0, mapped2 = 0;
    for (VertexId x : g1.neighbors(v)) {
      if (map1[x] == kNone) continue;
      ++mapped1;
      if (!g2.adjacent(w, map1[x])) return false;
    }
    for (VertexId y : g2.neighbors(w)) {
      if (map2[y] != kNone) ++mapped2;
    }
    return mapped1 == mapped2;
  };

  std::size_t depth = 0;
  while (depth < n) {
    VertexId v = order[depth];
    if (map1[v] != kNone) {
      map2[map1[v]] = kNone;
      map1[v] = kNone;
    }
    auto cand = candidates(v);
    bool placed = false;
    while (cursor[depth] < cand.size()) {
      VertexId w = cand[cursor[depth]++];
      if (feasible(v, w)) {
        map1[v] = w;
        map2[w] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      if (depth < n) cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
  }

  if (!is_isomorphism(g1, labels1, g2, labels2, map1)) return std::nullopt;
  return map1;
}

}  // namespace selfsim
