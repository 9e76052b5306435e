#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcl/augment.hpp"
#include "pcl/bundled.hpp"
#include "pcl/random.hpp"

using namespace pcl;

namespace {

void check_ladder(const Graph& g, const Embedding& emb, int want_vertices, int want_edges) {
  const auto out = ladder_augment(g, emb);
  CHECK(out.graph.num_vertices() == want_vertices);
  CHECK(out.graph.num_edges() == want_edges);
  CHECK(out.embedding.genus == 0);
  CHECK(is_planar(planarity_test(out.graph)));
  CHECK(oracle::bookkeeping_failure(out.graph, out.embedding).empty());
  CHECK(vertex_connectivity(out.graph) >= 3);
  CHECK(oracle::brute_force_connectivity(out.graph) >= 3);
  for (int e = 0; e < g.num_edges(); ++e) {
    CHECK(out.graph.edge(e).tail == g.edge(e).tail);
    CHECK(out.graph.edge(e).head == g.edge(e).head);
  }
}

}  // namespace

TEST_SUITE("augment") {
  TEST_CASE("vertex connectivity of small graphs") {
    CHECK(vertex_connectivity(fixture::complete(4)) == 3);
    CHECK(vertex_connectivity(fixture::cycle(6)) == 2);
    CHECK(vertex_connectivity(fixture::path(4)) == 1);
    CHECK(vertex_connectivity(fixture::cube()) == 3);
    CHECK(vertex_connectivity(fixture::complete(6)) == 5);
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(vertex_connectivity(two) == 0);
  }

  TEST_CASE("truncated tetrahedron has connectivity 3 by both methods") {
    const auto cg = fixture::cayley(bundled::kA4, "k,r");
    CHECK(vertex_connectivity(cg.graph) == 3);
    CHECK(oracle::brute_force_connectivity(cg.graph) == 3);
    CHECK(local_vertex_connectivity(cg.graph, 0, 7, 10) == 3);
  }

  TEST_CASE("connectivity agrees with subset removal on random plane graphs") {
    std::mt19937_64 rng(suite_seed() + 5);
    for (int i = 0; i < 40; ++i) {
      const auto pg = random_plane_graph(rng, 14, 12);
      CHECK(vertex_connectivity(pg.graph) == oracle::brute_force_connectivity(pg.graph, 5));
    }
  }

  TEST_CASE("ladder on C4 gives 12 vertices and 20 edges") {
    const Graph g = fixture::cycle(4);
    check_ladder(g, fixture::plane(g), 12, 20);
  }

  TEST_CASE("ladder on K4 gives 16 vertices") {
    const Graph g = fixture::complete(4);
    check_ladder(g, fixture::plane(g), 16, 6 + 24);
  }

  TEST_CASE("ladder on the triangle is a drum") {
    const Graph g = fixture::cycle(3);
    check_ladder(g, fixture::plane(g), 9, 15);
  }

  TEST_CASE("digon faces are skipped") {
    Graph g = fixture::cycle(3);
    g.add_edge(0, 1);
    const auto emb = fixture::plane(g);
    const auto out = ladder_augment(g, emb);
    CHECK(out.augmented_faces.size() == 2);
    CHECK(out.graph.num_vertices() == 3 + 6);
  }

  TEST_CASE("frontier faces are left alone") {
    const auto ball = build_ball(families::z_cross_cyclic(3), 3);
    const auto emb = trace_faces(ball.graph, fixture::plane(ball.graph).rotation, ball.frontier);
    const auto out = ladder_augment(ball.graph, emb, ball.frontier);
    int interior = 0;
    for (const auto& f : emb.faces) interior += f.finite && f.darts.size() > 2;
    CHECK(static_cast<int>(out.augmented_faces.size()) == interior);
    CHECK(is_planar(planarity_test(out.graph)));
  }

  TEST_CASE("non-planar input is rejected") {
    const Graph g = fixture::complete(5);
    RotationSystem rot;
    for (int v = 0; v < 5; ++v) rot.order.push_back(g.darts_at(v));
    CHECK_THROWS_AS(ladder_augment(g, trace_faces(g, rot)), Error);
  }
}
