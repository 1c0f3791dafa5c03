#include <doctest.h>

#include "corpus.hpp"
#include "glide/glide.hpp"
#include "walks.hpp"

using namespace glide;
using namespace glide::test;

namespace {

struct Grid {
  Hypergraph h = grid23();
  EdgeSet base = h.edge_set({"ad", "be", "cf"});
  EdgeSet s1 = h.edge_set({"ab", "ad", "be", "de"});
  EdgeSet s2 = h.edge_set({"bc", "be", "cf", "ef"});
  EdgeSet s12 = s1 ^ s2;
  VOrientation vo;

  Grid() {
    vo.set(h, s1, h.vertex_set({"a", "e"}));
    vo.set(h, s2, h.vertex_set({"c", "e"}));
    vo.set(h, s12, h.vertex_set({"b", "d", "f"}));
  }
  EdgePath loop() const { return EdgePath{base, {s1, s12, s2}}; }
};

std::map<std::string, std::size_t> named(const Hypergraph& h, const MarkedMatching& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& [e, k] : m.marks) out[h.edge_id(e)] = k + 1;
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  const Permutation p({1, 2, 0});
  CHECK(p.one_line() == "(2,3,1)");
  CHECK(p.cycles() == "(1 2 3)");
  CHECK((p * p * p).is_identity());
  CHECK((p * Permutation({1, 0, 2})).one_line() == "(3,2,1)");
  CHECK(Permutation::identity(4).cycles() == "()");
  CHECK_THROWS_AS(Permutation({0, 0}), InvariantViolation);
}

TEST_CASE("marks travel through the distinguished v-half") {
  const Grid g;
  const auto m0 = MarkedMatching::initial(g.base);
  CHECK(named(g.h, m0) == std::map<std::string, std::size_t>{{"ad", 1}, {"be", 2}, {"cf", 3}});

  const auto m1 = glide_marks(g.h, m0, g.s1, g.vo);
  CHECK(named(g.h, m1) == std::map<std::string, std::size_t>{{"ab", 1}, {"de", 2}, {"cf", 3}});
  const auto m2 = glide_marks(g.h, m1, g.s12, g.vo);
  CHECK(named(g.h, m2) == std::map<std::string, std::size_t>{{"bc", 1}, {"ad", 2}, {"ef", 3}});

  CHECK(glide_marks(g.h, m1, g.s1, g.vo).marks == m0.marks);
  CHECK_THROWS_AS(glide_marks(g.h, m0, g.h.edge_set({"ab", "bc", "cf", "ef", "de", "ad"}), g.vo), InvariantViolation);
}

TEST_CASE("sigma theta of the grid loop") {
  Grid g;
  CHECK(sigma_theta(g.h, g.loop(), g.vo).one_line() == "(2,3,1)");
  CHECK(sigma_theta(g.h, EdgePath{g.base, {}}, g.vo).is_identity());
  g.vo.flip(g.h, g.s2);
  CHECK(sigma_theta(g.h, g.loop(), g.vo).one_line() == "(2,1,3)");
  CHECK_THROWS_AS(sigma_theta(g.h, EdgePath{g.base, {g.s1}}, g.vo), InvariantViolation);
  CHECK_THROWS_AS(g.vo.set(g.h, g.s1, g.h.vertex_set({"a", "b"})), InvariantViolation);
}

TEST_CASE("sigma theta is a homomorphism on loops") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 60; ++round) {
    const auto h = to_hypergraph(random_graph(rng, 8, 11));
    const auto x = dimer_complex(h);
    if (x.count(1) == 0) continue;
    VOrientation vo;
    for (const auto& s : raag_of_complex(x).glides)
      if (rng() % 2) vo.flip(h, s);
    const auto base = x.vertices()[rng() % x.count(0)];
    const auto a = random_loop(rng, x, base, 8);
    const auto b = random_loop(rng, x, base, 8);
    CHECK(sigma_theta(h, a.then(b), vo) == sigma_theta(h, a, vo) * sigma_theta(h, b, vo));
    CHECK(sigma_theta(h, insert_backtrack(rng, x, a), vo) == sigma_theta(h, a, vo));
    if (const auto sq = insert_square(rng, x, a)) CHECK(sigma_theta(h, *sq, vo) == sigma_theta(h, a, vo));
  }
}

TEST_CASE("bipartite orientations") {
  const auto c6 = cycle_graph(6);
  const auto vo = bipartite_v_orientation(c6);
  REQUIRE(vo.side());
  CHECK(*vo.side() == c6.vertex_set({"a", "c", "e"}));
  CHECK(vo.vhalf(c6, c6.all_edges()) == c6.vertex_set({"a", "c", "e"}));
  CHECK_THROWS_AS(bipartite_v_orientation(triangle()), InvariantViolation);

  const Grid g;
  const auto bo = bipartite_v_orientation(g.h);
  CHECK(sigma_theta(g.h, g.loop(), bo).is_identity());
}

TEST_CASE("subdivided loops") {
  const Grid g;
  CHECK(sigma_theta_n(g.h, g.loop(), {}, g.vo) == sigma_theta(g.h, g.loop(), g.vo));
  CHECK(sigma_theta_n(g.h, g.loop(), {{"be", 1}}, g.vo).one_line() == "(3,2,4,1)");

  std::mt19937_64 rng(79);
  const auto bo = bipartite_v_orientation(g.h);
  for (int round = 0; round < 30; ++round) {
    std::map<std::string, unsigned> counts;
    for (const auto& id : {"ab", "ad", "be", "bc", "cf", "de", "ef"})
      if (rng() % 3 == 0) counts[id] = static_cast<unsigned>(rng() % 3);
    CHECK(sigma_theta_n(g.h, g.loop(), counts, bo).is_identity());
  }
}
