#include <doctest.h>
#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace glide;
using namespace glide::test;

TEST_CASE("validation") {
  CHECK(validate(triangle()).ok());

  const auto loop = graph({{"aa", {"a", "a"}}, {"ab", {"a", "b"}}});
  const auto report = validate(loop);
  REQUIRE_FALSE(report.ok());
  CHECK(report.issues[0].kind == IssueKind::Loop);
  CHECK(report.issues[0].id == "aa");

  const Hypergraph empty_boundary({"a"}, {{"e", {}}, {"f", {"a"}}}, Mode::Hypergraph);
  const auto r2 = validate(empty_boundary);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.issues[0].kind == IssueKind::EmptyBoundary);

  const Hypergraph isolated({"a", "b", "z"}, {{"ab", {"a", "b"}}});
  const auto r3 = validate(isolated);
  REQUIRE_FALSE(r3.ok());
  CHECK(r3.issues[0].kind == IssueKind::IsolatedVertex);
  CHECK(r3.issues[0].id == "z");
}

TEST_CASE("duplicate and unknown ids are input errors") {
  CHECK_THROWS_AS(Hypergraph({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{"e", {"a", "b"}}, {"e", {"a", "b"}}}), InputError);
  CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{"e", {"a", "c"}}}), InputError);
  CHECK_THROWS_AS(triangle().edge_set({"zz"}), InputError);
}

TEST_CASE("power group product") {
  const auto h = graph({{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"c", "d"}}});
  const auto a = h.edge_set({"e1", "e3"});
  CHECK(sym_diff(a, h.no_edges()) == a);
  CHECK(sym_diff(a, a) == h.no_edges());
  CHECK(sym_diff(h.edge_set({"e1", "e2"}), h.edge_set({"e2", "e3"})) == h.edge_set({"e1", "e3"}));
}

TEST_CASE("sets from different hypergraphs do not mix") {
  CHECK_THROWS_AS(sym_diff(triangle().all_edges(), square().all_edges()), AmbientMismatch);
  CHECK_THROWS_AS((void)triangle().all_edges().intersects(square().all_edges()), AmbientMismatch);
}

TEST_CASE("edge set order is lexicographic on sorted ids") {
  std::mt19937_64 rng(3);
  const auto h = to_hypergraph(theta_list(70));
  std::bernoulli_distribution coin(0.1);
  for (int round = 0; round < 500; ++round) {
    auto a = h.no_edges(), b = h.no_edges();
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
      if (coin(rng)) a.insert(e);
      if (coin(rng)) b.insert(e);
    }
    const auto la = a.indices(), lb = b.indices();
    CHECK((a < b) == std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end()));
    CHECK((a == b) == (la == lb));
  }
}

TEST_CASE("boundary vertices") {
  const auto g = grid23();
  CHECK(boundary_vertices(g, g.no_edges()).empty());
  CHECK(boundary_vertices(g, g.edge_set({"ab"})) == g.vertex_set({"a", "b"}));
  CHECK(boundary_vertices(g, g.edge_set({"ad", "be", "cf"})) == g.all_vertices());
}

TEST_CASE("independence") {
  const auto g = grid23();
  const auto s1 = g.edge_set({"ab", "be", "de", "ad"});
  const auto s2 = g.edge_set({"bc", "cf", "ef", "be"});
  CHECK(independent(g, s1, g.no_edges()));
  CHECK_FALSE(independent(g, s1, s1));
  CHECK_FALSE(independent(g, s1, s2));
}

TEST_CASE("decomposing cyclic sets") {
  const auto g = grid23();
  CHECK(decompose_cyclic(g, g.no_edges()).empty());
  const auto sq = square();
  const auto one = decompose_cyclic(sq, sq.all_edges());
  REQUIRE(one.size() == 1);
  CHECK(one[0].edges == sq.all_edges());

  const auto two = disjoint_union(cycle_list(3), cycle_list(3));
  const auto parts = decompose_cyclic(two, two.all_edges());
  REQUIRE(parts.size() == 2);
  CHECK_FALSE(parts[0].even());
  CHECK_FALSE(parts[1].even());
  CHECK((parts[0].edges | parts[1].edges) == two.all_edges());
  CHECK_THROWS_AS(decompose_cyclic(g, g.edge_set({"ab"})), InvariantViolation);
}

TEST_CASE("classifying cycles") {
  const auto sq = graph({{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"cd", {"c", "d"}}, {"da", {"d", "a"}}});
  const auto c = classify_cycle(sq, sq.all_edges());
  REQUIRE(c.even());
  CHECK(c.halves->first == sq.edge_set({"ab", "cd"}));
  CHECK(c.halves->second == sq.edge_set({"bc", "da"}));
  CHECK_FALSE(classify_cycle(triangle(), triangle().all_edges()).even());

  const auto g = grid23();
  const auto s12 = classify_cycle(g, g.edge_set({"ab", "bc", "cf", "ef", "de", "ad"}));
  REQUIRE(s12.vhalves.has_value());
  CHECK(s12.vhalves->first == g.vertex_set({"a", "c", "e"}));
  CHECK(s12.vhalves->second == g.vertex_set({"b", "d", "f"}));
}

TEST_CASE("halves agree with the bipartition oracle in both modes") {
  for (const auto& eg : corpus(7)) {
    for (auto mode : {Mode::Graph, Mode::Hypergraph}) {
      const auto h = to_hypergraph(eg, mode);
      for (auto m : brute_cycles(h)) {
        const auto s = to_set(h, m);
        const auto c = classify_cycle(h, s);
        const auto want = brute_halves(h, m);
        REQUIRE(c.even() == want.has_value());
        if (want) {
          CHECK(to_mask(c.halves->first) == want->first);
          CHECK(to_mask(c.halves->second) == want->second);
        }
        if (mode == Mode::Graph) CHECK(c.even() == (s.size() % 2 == 0));
      }
    }
  }
}

TEST_CASE("hypergraph halves") {
  // Two parallel 3-edges form an even cycle; three pairwise-overlapping 2-edges do not.
  const Hypergraph h({"a", "b", "c", "d"},
                     {{"p", {"a", "b", "c"}}, {"q", {"a", "b", "c"}}, {"r", {"a", "d"}}, {"t", {"b", "d"}}},
                     Mode::Hypergraph);
  const auto pq = classify_cycle(h, h.edge_set({"p", "q"}));
  CHECK(pq.even());
  CHECK_FALSE(pq.vhalves.has_value());
}

TEST_CASE("cycle enumeration matches the subset oracle") {
  for (const auto& eg : corpus(7)) {
    for (auto mode : {Mode::Graph, Mode::Hypergraph}) {
      const auto h = to_hypergraph(eg, mode);
      std::vector<EdgeSet> want;
      for (auto m : brute_cycles(h)) want.push_back(to_set(h, m));
      std::sort(want.begin(), want.end());
      CHECK(enumerate_cycles(h, h.edge_count()) == want);
    }
  }
  const auto g = grid23();
  CHECK(enumerate_cycles(g, 4).size() == 2);
}

TEST_CASE("perfect matchings") {
  CHECK(enumerate_perfect_matchings(triangle()).empty());
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ms = enumerate_perfect_matchings(theta(n));
    CHECK(ms.size() == n);
    for (const auto& m : ms) CHECK(m.size() == 1);
  }
  const auto g = grid23();
  const auto ms = matching_edges(enumerate_perfect_matchings(g));
  const std::vector<EdgeSet> want{g.edge_set({"ab", "cf", "de"}), g.edge_set({"ad", "bc", "ef"}),
                                  g.edge_set({"ad", "be", "cf"})};
  CHECK(ms == want);
}

TEST_CASE("perfect matchings agree with the subset oracle") {
  for (const auto& eg : corpus(8)) {
    const auto h = to_hypergraph(eg);
    CHECK(matching_edges(enumerate_perfect_matchings(h)) == brute_perfect_matchings(h));
  }
}

TEST_CASE("matched edges") {
  const auto g = grid23();
  const Matching a(g, g.edge_set({"ad", "be", "cf"}));
  CHECK(g.edge_id(matched_edge(g, a, g.vertex("a"))) == "ad");
  CHECK(g.edge_id(matched_edge(g, a, g.vertex("e"))) == "be");
  const Matching part(g, g.edge_set({"ad"}));
  CHECK_THROWS_AS(matched_edge(g, part, g.vertex("b")), InvariantViolation);
  CHECK_THROWS_AS(Matching(g, g.edge_set({"ab", "bc"})), InvariantViolation);
}

TEST_CASE("induced subhypergraphs") {
  const auto g = grid23();
  const Matching full(g, g.edge_set({"ad", "be", "cf"}));
  const auto same = induced_subhypergraph(g, full);
  CHECK(same.graph.edge_count() == g.edge_count());
  CHECK(same.matching.is_perfect());

  const auto one = induced_subhypergraph(g, Matching(g, g.edge_set({"ad"})));
  CHECK(one.graph.edge_count() == 1);
  CHECK(one.graph.edge_id(0) == "ad");
  CHECK(one.matching.is_perfect());

  const auto p = path3();
  const auto sub = induced_subhypergraph(p, Matching(p, p.edge_set({"ab"})));
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
}

TEST_CASE("vertex deletion keeps remaining vertices") {
  const auto g = grid23();
  const auto h = delete_vertices(g, g.vertex_set({"a"}));
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 5);
  CHECK_FALSE(h.find_edge("ab"));
}

TEST_CASE("transport by id") {
  const auto g = grid23();
  const auto h = delete_vertices(g, g.vertex_set({"a"}));
  const auto s = h.edge_set({"be", "cf"});
  CHECK(g.edge_ids(transport(s, h, g)) == std::vector<std::string>{"be", "cf"});
  CHECK_THROWS_AS(transport(g.edge_set({"ab"}), g, h), InvariantViolation);
}

TEST_CASE("subdivision") {
  const auto p = graph({{"e", {"a", "b"}}});
  const Matching a(p, p.all_edges());
  const auto none = subdivide(p, {}, a);
  CHECK(none.graph.edge_count() == 1);
  CHECK(none.matching.edges() == none.graph.all_edges());

  const auto s = subdivide(p, {{"e", 1}}, a);
  CHECK(s.graph.edge_count() == 3);
  CHECK(s.graph.vertex_count() == 4);
  REQUIRE(s.pieces[0].size() == 3);
  CHECK(s.matching.is_perfect());
  CHECK(s.matching.edges().contains(s.pieces[0][0]));
  CHECK_FALSE(s.matching.edges().contains(s.pieces[0][1]));
  CHECK(s.matching.edges().contains(s.pieces[0][2]));
  CHECK(s.graph.edge_id(s.pieces[0][0]) == "e#1");

  const auto sq = square();
  const Matching m(sq, sq.edge_set({"ab", "cd"}));
  const auto t = subdivide(sq, {{"bc", 1}}, m);
  CHECK(t.matching.is_perfect());
  const auto& bc = t.pieces[sq.edge("bc")];
  CHECK(t.matching.edges().contains(bc[1]));
  CHECK_FALSE(t.matching.edges().contains(bc[0]));
  const auto lifted = t.lift_set(sq.all_edges());
  CHECK(lifted.size() == 6);
  CHECK(t.project_set(lifted) == sq.all_edges());
  const auto other = t.lift_matching(sq.edge_set({"bc", "da"}));
  CHECK(Matching(t.graph, other).is_perfect());
}
