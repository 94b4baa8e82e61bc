#include <gtest/gtest.h>

#include <optional>
#include <queue>
#include <random>
#include <set>

#include "c60/c60.hpp"
#include "test_support.hpp"

namespace c60 {
namespace {

TEST(Seeds, Icosahedron) {
  const auto ico = PolyhedralGraph::from_rotation(canonical_icosahedron().rotation);
  EXPECT_EQ(ico.vertex_count(), 12u);
  EXPECT_EQ(ico.edge_count(), 30u);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(ico.degree(v), 5u);
  EXPECT_EQ(girth(ico), 3u);
  const auto census = face_census(ico);
  EXPECT_EQ(census.faces.size(), 20u);
  EXPECT_EQ(census.by_length.at(3), 20u);
}

TEST(Truncation, TetrahedronGivesTwelveVertices) {
  const auto g = truncate(canonical_tetrahedron());
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 18u);
  const auto census = face_census(g);
  EXPECT_EQ(census.by_length.at(3), 4u);
  EXPECT_EQ(census.hexagon_count, 4u);
}

TEST(Truncation, BuckyballCombinatorics) {
  const auto g = buckyball();
  EXPECT_EQ(g.vertex_count(), 60u);
  EXPECT_EQ(g.edge_count(), 90u);
  for (Vertex v = 0; v < 60; ++v) EXPECT_EQ(g.degree(v), 3u);
  const auto census = face_census(g);
  EXPECT_EQ(census.faces.size(), 32u);
  EXPECT_EQ(census.pentagon_count, 12u);
  EXPECT_EQ(census.hexagon_count, 20u);
  EXPECT_EQ(girth(g), 5u);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.vertex_count() - g.edge_count() + census.faces.size(), 2u);
}

TEST(Truncation, ProvenanceOfFaces) {
  const auto g = buckyball();
  const auto census = face_census(g);
  std::set<Vertex> pentagon_sources;
  for (const auto& f : census.faces) {
    std::set<Vertex> sources;
    for (Vertex v : f) sources.insert(g.labels()[v].seed_vertex);
    if (f.size() == 5) {
      // one seed vertex per pentagon
      EXPECT_EQ(sources.size(), 1u);
      pentagon_sources.insert(*sources.begin());
    } else {
      // a hexagon sits inside a seed triangle
      EXPECT_EQ(sources.size(), 3u);
    }
  }
  EXPECT_EQ(pentagon_sources.size(), 12u);
  // hexagon-hexagon edges are exactly the edges joining two seed vertices
  std::size_t bonds = 0;
  for (auto [a, b] : g.edges()) {
    if (g.labels()[a].seed_vertex != g.labels()[b].seed_vertex) {
      ++bonds;
      EXPECT_EQ(g.labels()[a].seed_neighbor, g.labels()[b].seed_vertex);
    }
  }
  EXPECT_EQ(bonds, 30u);
}

TEST(Truncation, Deterministic) { EXPECT_EQ(buckyball(), buckyball()); }

TEST(Truncation, RejectsBadRotations) {
  auto asym = canonical_tetrahedron();
  asym.rotation[0] = {1, 2};
  try {
    truncate(asym);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidRotation);
  }
  // consistent adjacency but a twisted ring: not a sphere
  auto twisted = canonical_icosahedron();
  std::swap(twisted.rotation[0][1], twisted.rotation[0][2]);
  EXPECT_THROW(truncate(twisted), Error);
}

TEST(Graph, FromEdgesValidates) {
  const std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(PolyhedralGraph::from_edges(2, loop), Error);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  EXPECT_THROW(PolyhedralGraph::from_edges(2, twice), Error);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto g = PolyhedralGraph::from_edges(3, path);
  EXPECT_EQ(girth(g), 0u);
  EXPECT_EQ(distance_matrix(g)[0][2], 2u);
}

TEST(Involution, OddOrderHasNone) {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  try {
    find_antipodal_involution(PolyhedralGraph::from_edges(3, tri));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFound);
  }
}

TEST(Involution, BuckyballAntipode) {
  const auto g = buckyball();
  const auto sigma = find_antipodal_involution(g);
  const auto dist = distance_matrix(g);
  for (Vertex v = 0; v < 60; ++v) {
    EXPECT_NE(sigma.perm[v], v);
    EXPECT_EQ(sigma.perm[sigma.perm[v]], v);
  }
  EXPECT_TRUE(is_automorphism(g, sigma.perm));
  EXPECT_EQ(sigma.perm[0], 5u);
  // the smallest valid involution is a half-turn, not the central inversion:
  // 0 is swapped with a neighbor
  EXPECT_EQ(dist[0][sigma.perm[0]], 1u);
}

// All automorphisms of a polyhedral map, by sending one directed edge with
// its rotation to every directed edge in both orientations.
std::vector<std::vector<Vertex>> all_automorphisms(const PolyhedralGraph& g) {
  const auto& rot = g.rotation();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  for (Vertex t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < rot[t].size(); ++s) {
      for (bool mirror : {false, true}) {
        std::vector<std::optional<Vertex>> img(n);
        std::vector<std::optional<std::size_t>> anchor(n);  // img of rot[v][0] is rot[img v][anchor]
        img[0] = t;
        anchor[0] = s;
        std::queue<Vertex> q;
        q.push(0);
        bool ok = rot[0].size() == rot[t].size();
        while (ok && !q.empty()) {
          const Vertex v = q.front();
          q.pop();
          const auto& rv = rot[v];
          const auto& rt = rot[*img[v]];
          const std::size_t k = rv.size();
          for (std::size_t p = 0; p < k && ok; ++p) {
            const std::size_t idx = mirror ? (*anchor[v] + k - p) % k : (*anchor[v] + p) % k;
            const Vertex w = rv[p], wt = rt[idx];
            if (rot[w].size() != rot[wt].size()) ok = false;
            if (!ok) break;
            // where v sits in w's ring must map to where img v sits in wt's ring
            const std::size_t pw = detail::position_in(rot[w], v);
            const std::size_t pt = detail::position_in(rot[wt], *img[v]);
            const std::size_t kw = rot[w].size();
            const std::size_t anchor_w = mirror ? (pt + pw) % kw : (pt + kw - pw) % kw;
            if (img[w]) {
              ok = *img[w] == wt && *anchor[w] == anchor_w;
            } else {
              img[w] = wt;
              anchor[w] = anchor_w;
              q.push(w);
            }
          }
        }
        if (!ok) continue;
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = *img[v];
        out.push_back(perm);
      }
    }
  }
  return out;
}

TEST(Involution, LexicographicallySmallestAgainstEnumeration) {
  const auto g = buckyball();
  const auto autos = all_automorphisms(g);
  EXPECT_EQ(autos.size(), 120u);
  std::optional<std::vector<Vertex>> best;
  for (const auto& p : autos) {
    EXPECT_TRUE(is_automorphism(g, p));
    bool inv = true;
    for (Vertex v = 0; v < p.size(); ++v) inv = inv && p[v] != v && p[p[v]] == v;
    if (inv && (!best || p < *best)) best = p;
  }
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(find_antipodal_involution(g).perm, *best);
}

TEST(Relabel, IdentityAndInvariants) {
  const auto g = buckyball();
  std::vector<Vertex> id(60);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(relabel(g, id), g);
  std::mt19937_64 rng(3);
  const auto perm = testing::random_permutation(rng, 60);
  const auto h = relabel(g, perm);
  EXPECT_EQ(h.edge_count(), 90u);
  for (Vertex v = 0; v < 60; ++v) EXPECT_EQ(h.degree(perm[v]), g.degree(v));
  EXPECT_EQ(face_census(h).pentagon_count, 12u);
  EXPECT_EQ(girth(h), 5u);
  const std::vector<Vertex> bad(60, 0);
  EXPECT_THROW(relabel(g, bad), Error);
}

TEST(Relabel, LaplacianSimilarity) {
  const auto g = truncate(canonical_tetrahedron());
  std::mt19937_64 rng(11);
  const auto perm = testing::random_permutation(rng, 12);
  EXPECT_EQ(charpoly(laplacian(relabel(g, perm))), charpoly(laplacian(g)));
}

TEST(Laplacian, RowSumsAndDiagonal) {
  const auto a = laplacian(buckyball());
  EXPECT_TRUE(a.is_symmetric());
  for (std::size_t i = 0; i < 60; ++i) {
    BigRational s(0);
    for (std::size_t j = 0; j < 60; ++j) s += a(i, j);
    EXPECT_EQ(sgn(s), 0);
    EXPECT_EQ(a(i, i), 3);
  }
  EXPECT_EQ(a.trace(), 180);
}

}  // namespace
}  // namespace c60
