#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "c60/error.hpp"
#include "c60/matrix.hpp"

namespace c60 {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using RotationSystem = std::vector<std::vector<Vertex>>;

// Polyhedron given only by its rotation system: for every vertex, the
// neighbors in counterclockwise order seen from outside.
struct SeedPolyhedron {
  RotationSystem rotation;

  std::size_t vertex_count() const { return rotation.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rotation) twice += r.size();
    return twice / 2;
  }
};

// Where a truncated vertex came from: the seed vertex it replaces and the
// seed edge {seed_vertex, seed_neighbor} it sits on.
struct Provenance {
  Vertex seed_vertex;
  Vertex seed_neighbor;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct FaceCensus {
  std::vector<std::vector<Vertex>> faces;
  std::size_t pentagon_count = 0;
  std::size_t hexagon_count = 0;
  std::map<std::size_t, std::size_t> by_length;
};

// Fixed-point-free involutive automorphism.
struct Involution {
  std::vector<Vertex> perm;
};

namespace detail {

inline void check_rotation(const RotationSystem& rotation) {
  const std::size_t n = rotation.size();
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex w : rotation[v]) {
      if (w >= n) throw Error(Errc::InvalidRotation, "neighbor " + std::to_string(w) + " out of range");
      if (w == v) throw Error(Errc::InvalidRotation, "self-loop at " + std::to_string(v));
      if (!seen.insert(w).second) throw Error(Errc::InvalidRotation, "repeated neighbor at " + std::to_string(v));
      const auto& back = rotation[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(Errc::InvalidRotation,
                    "asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(w));
      }
    }
  }
}

inline std::size_t position_in(const std::vector<Vertex>& ring, Vertex w) {
  auto it = std::find(ring.begin(), ring.end(), w);
  if (it == ring.end()) throw Error(Errc::InvalidRotation, "neighbor missing from rotation");
  return static_cast<std::size_t>(it - ring.begin());
}

// Traces faces with the rule: after the dart u->v comes v->w, where w
// follows u in the rotation at v.
inline std::vector<std::vector<Vertex>> trace_faces(const RotationSystem& rotation) {
  std::size_t darts = 0;
  for (const auto& r : rotation) darts += r.size();
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex u = 0; u < rotation.size(); ++u) {
    for (Vertex v : rotation[u]) {
      if (used.count({u, v})) continue;
      std::vector<Vertex> face;
      std::pair<Vertex, Vertex> dart{u, v};
      std::size_t steps = 0;
      while (!used.count(dart)) {
        if (++steps > darts) throw Error(Errc::InvalidRotation, "face walk did not close");
        used.insert(dart);
        face.push_back(dart.first);
        const auto& ring = rotation[dart.second];
        const Vertex next = ring[(position_in(ring, dart.first) + 1) % ring.size()];
        dart = {dart.second, next};
      }
      if (dart != std::pair<Vertex, Vertex>{u, v}) throw Error(Errc::InvalidRotation, "face walk entered another face");
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace detail

class PolyhedralGraph {
 public:
  PolyhedralGraph() = default;

  // Graph with an embedding; rotation must be symmetric.
  static PolyhedralGraph from_rotation(RotationSystem rotation, std::vector<Provenance> labels = {}) {
    detail::check_rotation(rotation);
    PolyhedralGraph g;
    g.n_ = rotation.size();
    g.adjacency_ = rotation;
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
    g.rotation_ = std::move(rotation);
    if (!labels.empty() && labels.size() != g.n_) throw Error(Errc::InvalidArgument, "label count mismatch");
    g.labels_ = std::move(labels);
    g.build_edges();
    return g;
  }

  // Abstract graph without an embedding.
  static PolyhedralGraph from_edges(std::size_t n, std::span<const Edge> edges) {
    PolyhedralGraph g;
    g.n_ = n;
    g.adjacency_.assign(n, {});
    for (auto [a, b] : edges) {
      if (a >= n || b >= n || a == b) throw Error(Errc::InvalidArgument, "bad edge");
      g.adjacency_[a].push_back(b);
      g.adjacency_[b].push_back(a);
    }
    for (auto& nb : g.adjacency_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw Error(Errc::InvalidArgument, "repeated edge");
    }
    g.build_edges();
    return g;
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }
  bool has_rotation() const { return !rotation_.empty() || n_ == 0; }
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<Provenance>& labels() const { return labels_; }

  friend bool operator==(const PolyhedralGraph& a, const PolyhedralGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.rotation_ == b.rotation_ && a.labels_ == b.labels_;
  }

 private:
  void build_edges() {
    edges_.clear();
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b : adjacency_[a])
        if (a < b) edges_.emplace_back(a, b);
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  RotationSystem rotation_;
  std::vector<Provenance> labels_;
};

// Pole 0, upper ring 1..5, lower ring 6..10, antipole 11. Lower vertex 5+i
// sits between upper i and upper i+1.
inline SeedPolyhedron canonical_icosahedron() {
  auto upper = [](int i) { return static_cast<Vertex>(((i - 1) % 5 + 5) % 5 + 1); };
  auto lower = [](int i) { return static_cast<Vertex>(((i - 1) % 5 + 5) % 5 + 6); };
  SeedPolyhedron s;
  s.rotation.resize(12);
  s.rotation[0] = {1, 2, 3, 4, 5};
  s.rotation[11] = {10, 9, 8, 7, 6};
  for (int i = 1; i <= 5; ++i) {
    s.rotation[upper(i)] = {0, upper(i - 1), lower(i - 1), lower(i), upper(i + 1)};
    s.rotation[lower(i)] = {11, lower(i + 1), upper(i + 1), upper(i), lower(i - 1)};
  }
  return s;
}

inline SeedPolyhedron canonical_tetrahedron() {
  return SeedPolyhedron{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
}

// Truncated vertex (v, w) sits on seed edge {v, w} next to v. Ids are
// assigned in order of (v, position of w in the rotation at v).
inline PolyhedralGraph truncate(const SeedPolyhedron& seed) {
  detail::check_rotation(seed.rotation);
  const std::size_t f = detail::trace_faces(seed.rotation).size();
  if (seed.vertex_count() + f != seed.edge_count() + 2) {
    throw Error(Errc::InvalidRotation, "seed rotation system is not a sphere embedding");
  }
  std::vector<std::size_t> offset(seed.vertex_count() + 1, 0);
  for (Vertex v = 0; v < seed.vertex_count(); ++v) offset[v + 1] = offset[v] + seed.rotation[v].size();
  auto id = [&](Vertex v, Vertex w) { return offset[v] + detail::position_in(seed.rotation[v], w); };

  RotationSystem rotation(offset.back());
  std::vector<Provenance> labels(offset.back());
  for (Vertex v = 0; v < seed.vertex_count(); ++v) {
    const auto& ring = seed.rotation[v];
    const std::size_t k = ring.size();
    for (std::size_t p = 0; p < k; ++p) {
      const Vertex self = offset[v] + p;
      rotation[self] = {id(ring[p], v), offset[v] + (p + 1) % k, offset[v] + (p + k - 1) % k};
      labels[self] = {v, ring[p]};
    }
  }
  return PolyhedralGraph::from_rotation(std::move(rotation), std::move(labels));
}

inline PolyhedralGraph buckyball() { return truncate(canonical_icosahedron()); }

inline FaceCensus face_census(const PolyhedralGraph& g) {
  if (!g.has_rotation()) throw Error(Errc::InvalidArgument, "face census needs a rotation system");
  FaceCensus census;
  census.faces = detail::trace_faces(g.rotation());
  for (const auto& f : census.faces) {
    ++census.by_length[f.size()];
    if (f.size() == 5) ++census.pentagon_count;
    if (f.size() == 6) ++census.hexagon_count;
  }
  return census;
}

inline bool is_connected(const PolyhedralGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

// All-pairs hop distances; unreachable pairs hold SIZE_MAX.
inline std::vector<std::vector<std::size_t>> distance_matrix(const PolyhedralGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v))
        if (d[s][w] == inf) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

// Length of a shortest cycle, 0 for a forest.
inline std::size_t girth(const PolyhedralGraph& g) {
  std::size_t best = 0;
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<Vertex> parent(n, n);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          const std::size_t len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline void check_permutation(std::span<const Vertex> perm, std::size_t n) {
  if (perm.size() != n) throw Error(Errc::InvalidPermutation, "permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw Error(Errc::InvalidPermutation, "not a bijection on 0..n-1");
    hit[p] = true;
  }
}

// Vertex v of g becomes perm[v].
inline PolyhedralGraph relabel(const PolyhedralGraph& g, std::span<const Vertex> perm) {
  check_permutation(perm, g.vertex_count());
  const std::size_t n = g.vertex_count();
  if (g.has_rotation()) {
    RotationSystem rotation(n);
    std::vector<Provenance> labels(g.labels().empty() ? 0 : n);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.rotation()[v]) rotation[perm[v]].push_back(perm[w]);
      if (!labels.empty()) labels[perm[v]] = g.labels()[v];
    }
    return PolyhedralGraph::from_rotation(std::move(rotation), std::move(labels));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return PolyhedralGraph::from_edges(n, edges);
}

inline bool is_automorphism(const PolyhedralGraph& g, std::span<const Vertex> perm) {
  check_permutation(perm, g.vertex_count());
  for (auto [a, b] : g.edges())
    if (!g.has_edge(perm[a], perm[b])) return false;
  return true;
}

// Backtracking search in index order, so the first complete assignment is
// the lexicographically smallest fixed-point-free involutive automorphism.
// Candidates must preserve hop distance to every vertex already placed.
inline Involution find_antipodal_involution(const PolyhedralGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || n % 2 == 1) throw Error(Errc::NotFound, "no fixed-point-free involution on an odd vertex count");
  const auto dist = distance_matrix(g);
  constexpr Vertex unset = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> image(n, unset);
  std::vector<bool> used(n, false);

  auto consistent = [&](Vertex v, Vertex t) {
    if (g.degree(v) != g.degree(t)) return false;
    for (Vertex u = 0; u < n; ++u) {
      if (image[u] == unset) continue;
      if (dist[v][u] != dist[t][image[u]]) return false;
    }
    // t is mapped back to v; compare t's distances too.
    for (Vertex u = 0; u < n; ++u) {
      if (image[u] == unset) continue;
      if (dist[t][u] != dist[v][image[u]]) return false;
    }
    return dist[v][t] == dist[t][v];
  };

  auto search = [&](auto&& self, Vertex v) -> bool {
    while (v < n && image[v] != unset) ++v;
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (t == v || used[t] || image[t] != unset) continue;
      if (!consistent(v, t)) continue;
      image[v] = t;
      image[t] = v;
      used[t] = used[v] = true;
      if (self(self, v + 1)) return true;
      image[v] = image[t] = unset;
      used[t] = used[v] = false;
    }
    return false;
  };

  if (!search(search, 0)) throw Error(Errc::NotFound, "no fixed-point-free involutive automorphism");
  if (!is_automorphism(g, image)) throw Error(Errc::NotFound, "distance-preserving map is not an automorphism");
  return Involution{image};
}

inline RationalMatrix laplacian(const PolyhedralGraph& g) {
  const std::size_t n = g.vertex_count();
  RationalMatrix a(n, n);
  for (Vertex v = 0; v < n; ++v) a(v, v) = static_cast<unsigned long>(g.degree(v));
  for (auto [x, y] : g.edges()) {
    a(x, y) = -1;
    a(y, x) = -1;
  }
  return a;
}

}  // namespace c60
