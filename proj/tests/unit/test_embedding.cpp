#include <algorithm>
#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcl/bundled.hpp"
#include "pcl/embedding.hpp"
#include "pcl/random.hpp"

using namespace pcl;

namespace {

// Rotation listing every vertex's darts in id order.
RotationSystem id_rotation(const Graph& g) {
  RotationSystem r;
  for (int v = 0; v < g.num_vertices(); ++v) r.order.push_back(g.darts_at(v));
  return r;
}

void check_bookkeeping(const Graph& g, const Embedding& emb) {
  const std::string why = oracle::bookkeeping_failure(g, emb);
  CHECK_MESSAGE(why.empty(), why);
  CHECK_NOTHROW(check_face_bookkeeping(g, emb));
}

}  // namespace

TEST_SUITE("embedding") {
  TEST_CASE("triangle has two faces of length 3") {
    const Graph g = fixture::cycle(3);
    const auto emb = trace_faces(g, id_rotation(g));
    CHECK(emb.faces.size() == 2);
    CHECK(emb.genus == 0);
    for (const auto& f : emb.faces) CHECK(f.darts.size() == 3);
    check_bookkeeping(g, emb);
  }

  TEST_CASE("K4 planar rotation gives the tetrahedron") {
    const Graph g = fixture::complete(4);
    const auto emb = fixture::plane(g);
    CHECK(emb.faces.size() == 4);
    CHECK(emb.genus == 0);
    CHECK(face_vector(emb) == std::vector<std::pair<int, int>>{{3, 4}});
    check_bookkeeping(g, emb);
  }

  TEST_CASE("every rotation of K5 has positive genus") {
    const Graph g = fixture::complete(5);
    RotationSystem rot = id_rotation(g);
    int min_genus = 1 << 20;
    long count = 0;
    // vertex v keeps its first dart fixed and permutes the other three
    std::function<void(int)> go = [&](int v) {
      if (v == g.num_vertices()) {
        const auto emb = trace_faces(g, rot);
        min_genus = std::min(min_genus, emb.genus);
        ++count;
        if (count % 97 == 0) check_bookkeeping(g, emb);
        return;
      }
      auto& o = rot.order[v];
      std::sort(o.begin() + 1, o.end());
      do go(v + 1);
      while (std::next_permutation(o.begin() + 1, o.end()));
    };
    go(0);
    CHECK(count == 7776);
    CHECK(min_genus >= 1);
    const auto res = planarity_test(g);
    REQUIRE_FALSE(is_planar(res));
    const auto& w = std::get<KuratowskiWitness>(res);
    CHECK(w.kind == KuratowskiWitness::Kind::K5);
    CHECK(verify_kuratowski(g, w));
  }

  TEST_CASE("faces are listed by lowest dart and start there") {
    const Graph g = fixture::cube();
    const auto emb = fixture::plane(g);
    int prev = -1;
    for (const auto& f : emb.faces) {
      CHECK(f.darts.front() == *std::min_element(f.darts.begin(), f.darts.end()));
      CHECK(f.darts.front() > prev);
      prev = f.darts.front();
    }
    for (int d = 0; d < g.num_darts(); ++d) {
      const auto& f = emb.faces[emb.face_of_dart[d]].darts;
      CHECK(std::find(f.begin(), f.end(), d) != f.end());
    }
  }

  TEST_CASE("bad rotations are rejected") {
    const Graph g = fixture::cycle(3);
    RotationSystem rot = id_rotation(g);
    rot.order[0].pop_back();
    CHECK_THROWS_AS(trace_faces(g, rot), Error);
    rot = id_rotation(g);
    std::swap(rot.order[0][0], rot.order[1][0]);
    CHECK_THROWS_AS(trace_faces(g, rot), Error);
  }

  TEST_CASE("prism is planar with 6 faces") {
    const auto cg = fixture::cayley(bundled::kZ4xZ2, "(1,0),(0,1)");
    const auto emb = fixture::plane(cg.graph);
    CHECK(emb.faces.size() == 6);
    check_bookkeeping(cg.graph, emb);
  }

  TEST_CASE("K4,4 Cayley graph yields a verified K3,3") {
    const auto cg = fixture::cayley(bundled::kZ4xZ2, "(1,0),(1,1)");
    const auto res = planarity_test(cg.graph);
    REQUIRE_FALSE(is_planar(res));
    const auto& w = std::get<KuratowskiWitness>(res);
    CHECK(w.kind == KuratowskiWitness::Kind::K33);
    CHECK(w.branch.size() == 6);
    CHECK(w.paths.size() == 9);
    std::string why;
    CHECK_MESSAGE(verify_kuratowski(cg.graph, w, &why), why);
    KuratowskiWitness broken = w;
    broken.edges.pop_back();
    CHECK_FALSE(verify_kuratowski(cg.graph, broken));
  }

  TEST_CASE("C6 is planar with 2 faces") {
    const Graph g = fixture::cycle(6);
    const auto emb = fixture::plane(g);
    CHECK(emb.faces.size() == 2);
    check_bookkeeping(g, emb);
  }

  TEST_CASE("loops and parallel edges survive planarity") {
    Graph g = fixture::cycle(4);
    g.add_edge(0, 1, "p");
    g.add_edge(2, 2, "loop", true);
    const auto emb = fixture::plane(g);
    CHECK(emb.genus == 0);
    check_bookkeeping(g, emb);
  }

  TEST_CASE("mirror and spins") {
    const Graph g = fixture::cube();
    const auto emb = fixture::plane(g);
    const auto m = trace_faces(g, mirror(emb.rotation));
    CHECK(m.genus == 0);
    CHECK(m.faces.size() == emb.faces.size());
    CHECK(mirror(mirror(emb.rotation)) == emb.rotation);
    std::vector<int> spins(8, -1);
    CHECK(canonical_form(apply_spins(emb.rotation, spins)) == canonical_form(mirror(emb.rotation)));
  }

  TEST_CASE("consistent embeddings") {
    const auto prism = fixture::cayley(bundled::kZ4xZ2, "(1,0),(0,1)");
    const auto found = search_consistent_embeddings(prism);
    REQUIRE_FALSE(found.empty());
    for (const auto& c : found) {
      CHECK(c.embedding.genus == 0);
      CHECK(c.spins[0] == 1);
      check_bookkeeping(prism.graph, c.embedding);
    }
    CHECK(search_consistent_embeddings(fixture::cayley(bundled::kZ4xZ2, "(1,0),(1,1)")).empty());
    CHECK_FALSE(search_consistent_embeddings(fixture::cayley(bundled::kZ3, "r")).empty());
  }

  TEST_CASE("frontier faces of truncated balls") {
    const auto path = build_ball(families::integers(), 3);
    const auto pe = fixture::plane(path.graph);
    const auto pr = classify_faces(path, trace_faces(path.graph, pe.rotation, path.frontier));
    CHECK(pr.finite_faces == 0);
    CHECK(pr.frontier_faces == 1);
    const auto tree = build_ball(families::free_group(2), 2);
    const auto tr = classify_faces(tree, trace_faces(tree.graph, fixture::plane(tree.graph).rotation, tree.frontier));
    CHECK(tr.finite_faces == 0);
    CHECK(tr.frontier_faces == 1);
    const auto prism = fixture::cayley(bundled::kZ4xZ2, "(1,0),(0,1)");
    const auto fr = classify_faces(prism, fixture::plane(prism.graph));
    CHECK(fr.finite_faces == 6);
    CHECK(fr.frontier_faces == 0);
    CHECK(fr.max_finite_length == 4);
  }

  TEST_CASE("random plane graphs keep their bookkeeping") {
    std::mt19937_64 rng(pcl::suite_seed() + 11);
    for (int i = 0; i < 50; ++i) {
      const auto pg = random_plane_graph(rng, 25, 20);
      check_bookkeeping(pg.graph, pg.embedding);
      CHECK(pg.embedding.genus == 0);
    }
  }
}
