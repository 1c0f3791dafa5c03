// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "glide/glide.hpp"
#include "glide/io.hpp"
#include "oracles.hpp"
#include "systems.hpp"
#include "walks.hpp"

using namespace glide;
using namespace glide::test;

namespace {

// Per-example time limit for the golden examples, in seconds.
constexpr double golden_seconds = 1.0;

class Criterion {
 public:
  explicit Criterion(int n) : n_(n), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failures_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

  bool finish() const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const bool ok = failures_ == 0 && checks_ > 0;
    std::printf("criterion %d: %s (%zu checks, %zu failed, %.1fs%s%s)%s%s\n", n_, ok ? "PASS" : "FAIL", checks_,
                failures_, secs, notes_.empty() ? "" : "; ", notes_.c_str(), first_failure_.empty() ? "" : " first: ",
                first_failure_.c_str());
    std::fflush(stdout);
    return ok;
  }

 private:
  int n_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0, failures_ = 0;
  std::string notes_, first_failure_;
};

double seconds_of(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string label(const std::string& name, std::size_t graph) { return name + " #" + std::to_string(graph); }

Word mu_normal(const CubeComplex& x, const GlideRaag& g, const EdgePath& p) {
  return raag_normal_form(typing_word(x, g, Orientation(), p), g.spec);
}

bool trivial_group(const Hypergraph& h) {
  const auto ms = matching_edges(enumerate_perfect_matchings(h));
  if (ms.empty()) return true;
  const auto p = dimer_presentation(h, ms[0]);
  return tietze_simplify(p.presentation).generators.empty() && abelianization_rank(p.presentation).free_rank == 0;
}

bool criterion1() {
  Criterion c(1);
  auto timed = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    const double s = seconds_of([&] { ok = f(); });
    c.check(ok, name);
    c.check(s < golden_seconds, name + " took " + std::to_string(s) + "s");
  };
  timed("triangle", [] {
    const auto t = triangle();
    const auto x = dimer_complex(t);
    return enumerate_perfect_matchings(t).empty() && x.count(0) == 0 && trivial_group(t);
  });
  timed("square", [] {
    const auto s = square();
    const auto x = dimer_complex(s);
    return x.count(0) == 2 && x.count(1) == 1 && x.dimension() == 1 && trivial_group(s);
  });
  for (std::size_t k = 2; k <= 4; ++k)
    timed("C" + std::to_string(2 * k), [k] {
      const auto h = cycle_graph(2 * k);
      const auto x = dimer_complex(h);
      return x.count(0) == 2 && x.count(1) == 1 && x.dimension() == 1 && trivial_group(h);
    });
  for (std::size_t k = 1; k <= 4; ++k)
    timed("C" + std::to_string(2 * k + 1), [k] { return enumerate_perfect_matchings(cycle_graph(2 * k + 1)).empty(); });
  for (std::size_t n = 3; n <= 6; ++n)
    timed("THETA(" + std::to_string(n) + ")", [n] {
      const auto h = theta(n);
      const auto x = dimer_complex(h);
      const auto ms = x.vertices();
      bool complete = x.count(0) == n && x.count(1) == n * (n - 1) / 2 && x.dimension() == 1;
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
          complete = complete && x.contains(canonical_key(x.system(), make_cube(ms[i], {ms[i] ^ ms[j]})));
      const auto ab = abelianization_rank(dimer_presentation(h, ms[0]).presentation);
      const long long expected = static_cast<long long>((n - 1) * (n - 2) / 2);
      return complete && static_cast<long long>(ab.free_rank) == expected && ab.torsion.empty() &&
             1 - euler_characteristic(x) == expected;
    });
  return c.finish();
}

bool criterion2() {
  Criterion c(2);
  const auto h = grid23();
  const auto base = h.edge_set({"ad", "be", "cf"});
  const auto s1 = h.edge_set({"ab", "ad", "be", "de"});
  const auto s2 = h.edge_set({"bc", "be", "cf", "ef"});
  const auto s12 = s1 ^ s2;
  VOrientation vo;
  vo.set(h, s1, h.vertex_set({"a", "e"}));
  vo.set(h, s2, h.vertex_set({"c", "e"}));
  vo.set(h, s12, h.vertex_set({"b", "d", "f"}));
  const EdgePath loop{base, {s1, s12, s2}};
  const double secs = seconds_of([&] {
    const auto x = dimer_complex(h);
    const auto g = raag_of_complex(x);
    const auto gens = generator_loops(x, base);
    c.check(gens.size() == 1, "one generator loop");
    if (!gens.empty()) {
      const auto a = mu_normal(x, g, loop);
      c.check(a == mu_normal(x, g, gens[0]) || a == inverse(mu_normal(x, g, gens[0])), "loop generates the group");
    }
    const auto p = sigma_theta(h, loop, vo).one_line();
    c.check(p == "(2,3,1)", "permutation " + p);
    auto flipped = vo;
    flipped.flip(h, s2);
    const auto q = sigma_theta(h, loop, flipped).one_line();
    c.check(q == "(2,1,3)", "flipped permutation " + q);
    c.check(abelianization_rank(dimer_presentation(h, base).presentation).free_rank == 1, "rank 1");
    c.note(p + " then " + q);
  });
  c.check(secs < golden_seconds, "time");
  return c.finish();
}

bool criterion3() {
  Criterion c(3);
  std::mt19937_64 rng(1009);
  std::size_t graphs = 0, loops = 0, lifts = 0;
  while (graphs < 20) {
    const auto el = random_bipartite(rng, 5, 10);
    const auto h = to_hypergraph(el);
    const auto x = dimer_complex(h);
    if (x.count(0) == 0) continue;
    const auto gens = generator_loops(x, x.vertices()[0]);
    if (gens.empty()) continue;
    ++graphs;
    const auto vo = bipartite_v_orientation(h);
    for (const auto& loop : gens) {
      ++loops;
      c.check(sigma_theta(h, loop, vo).is_identity(), "bipartite loop " + std::to_string(loops));
      for (int k = 0; k < 5; ++k) {
        std::map<std::string, unsigned> counts;
        const auto total = rng() % 4;
        for (std::size_t i = 0; i < total; ++i) ++counts[h.edge_id(rng() % h.edge_count())];
        ++lifts;
        c.check(sigma_theta_n(h, loop, counts, vo).is_identity(), "subdivided loop " + std::to_string(loops));
      }
    }
  }
  c.note(std::to_string(graphs) + " graphs, " + std::to_string(loops) + " loops, " + std::to_string(lifts) +
         " subdivisions");
  return c.finish();
}

bool criterion4(const std::vector<EdgeList>& graphs) {
  Criterion c(4);
  std::size_t tested = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto h = to_hypergraph(graphs[i]);
    const auto sys = even_cycle_system(h);
    const auto ms = matching_edges(enumerate_perfect_matchings(h));
    const std::set<EdgeSet> d(ms.begin(), ms.end());
    c.check(!check_square_condition(sys, d).has_value(), label("square", i));
    c.check(!check_cube_condition(sys, d).has_value(), label("cube", i));
    CheckOptions opts;
    opts.max_dim = h.edge_count();
    const auto v = nonpositively_curved(sys, d, opts);
    c.check(v.regular, label("regular", i));
    c.check(all_links_flag(build_complex(sys, ms)) == v.npc, label("flag agreement", i));
    ++tested;
  }
  c.note(std::to_string(tested) + " graphs");
  return c.finish();
}

bool criterion5(const std::vector<EdgeList>& graphs) {
  Criterion c(5);
  std::size_t high = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto h = to_hypergraph(graphs[i]);
    const auto x = dimer_complex(h);
    c.check(library_cubes(x, 3) == brute_cubes(h, x.vertices(), 3), label("cubes", i));
    if (x.dimension() > 3) {
      ++high;
      c.check(library_cubes(x, x.dimension()) == brute_cubes(h, x.vertices(), x.dimension()), label("high cubes", i));
    }
  }
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(high) + " above dimension 3");
  return c.finish();
}

bool criterion6(const std::vector<EdgeList>& graphs) {
  Criterion c(6);
  std::size_t gens = 0, triples = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto h = to_hypergraph(graphs[i]);
    const auto x = dimer_complex(h);
    if (x.count(0) == 0) continue;
    const auto g = raag_of_complex(x);
    const auto p = dimer_presentation(h, x.vertices()[0]);
    for (std::size_t k = 0; k < p.presentation.generators.size(); ++k) {
      ++gens;
      const auto loop = word_to_loop(p, letter(k));
      c.check(mu_normal(x, g, word_to_loop(p, loop_to_word(p, loop))) == mu_normal(x, g, loop), label("psi phi", i));
    }
    const auto cubes = library_cubes(x, x.dimension());
    const auto& ms = p.matchings;
    for (const auto& a : ms)
      for (const auto& b : ms)
        for (const auto& d : ms) {
          ++triples;
          const bool common = std::any_of(cubes.begin(), cubes.end(), [&](const std::vector<EdgeSet>& v) {
            return std::binary_search(v.begin(), v.end(), a) && std::binary_search(v.begin(), v.end(), b) &&
                   std::binary_search(v.begin(), v.end(), d);
          });
          c.check(is_flat(h, a, b, d) == common, label("flat", i));
        }
    const auto rank = h1_rank(x);
    c.check(abelianization_rank(p.presentation).free_rank == rank, label("rank", i));
    c.check(abelianization_rank(tietze_simplify(p.presentation)).free_rank == rank, label("simplified rank", i));
  }
  c.note(std::to_string(gens) + " generators, " + std::to_string(triples) + " triples");
  return c.finish();
}

bool criterion7(const std::vector<EdgeList>& graphs) {
  Criterion c(7);
  std::mt19937_64 rng(2003);
  std::size_t loops = 0, squares = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto h = to_hypergraph(graphs[i]);
    const auto x = dimer_complex(h);
    if (x.count(1) == 0) continue;
    const auto g = raag_of_complex(x);
    const auto edges = raag_edges(h);
    Orientation o;
    for (const auto& s : g.glides)
      if (rng() % 2) o.flip(h, s);
    const auto s0 = rng() % g.glides.size();
    auto flipped = o;
    flipped.flip(h, g.glides[s0]);
    for (int k = 0; k < 100; ++k) {
      ++loops;
      const auto loop = random_loop(rng, x, x.vertices()[rng() % x.count(0)], 10);
      const auto mu = typing_word(x, g, o, loop);
      c.check(raag_normal_form(u_map(mu, g, o, h), edges).empty(), label("u of mu", i));
      const auto nf = raag_normal_form(mu, g.spec);
      c.check(raag_normal_form(typing_word(x, g, o, insert_backtrack(rng, x, loop)), g.spec) == nf,
              label("backtrack", i));
      if (const auto sq = insert_square(rng, x, loop)) {
        ++squares;
        c.check(raag_normal_form(typing_word(x, g, o, *sq), g.spec) == nf, label("square", i));
      }
      c.check(typing_word(x, g, flipped, loop) == half_flip(mu, s0), label("half flip", i));
    }
  }
  c.note(std::to_string(loops) + " loops, " + std::to_string(squares) + " square insertions");
  return c.finish();
}

// Grid points of every cube, coordinates in {0, 1/4, 1/2, 3/4, 1}.
template <class F>
void for_grid_points(const CubeComplex& x, F&& f) {
  static const std::vector<Rational> grid{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  for (const auto& v : x.vertices()) f(CubePoint{v, {}, {}});
  for (const auto& [key, cube] : x.cubes()) {
    std::vector<std::size_t> digits(cube.dim(), 0);
    while (true) {
      CubePoint p{cube.base, cube.directions, {}};
      for (auto k : digits) p.coords.push_back(grid[k]);
      f(p);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == grid.size()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
}

bool criterion8(const std::vector<EdgeList>& graphs, const std::vector<EdgeList>& census_graphs) {
  Criterion c(8);
  std::size_t points = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto h = to_hypergraph(graphs[i]);
    const auto x = dimer_complex(h);
    std::map<std::vector<Rational>, CubePoint> seen;
    bool ok = true;
    for_grid_points(x, [&](const CubePoint& p) {
      ++points;
      const auto canon = canonical_point(h, p);
      const auto l = omega(h, p);
      ok = ok && is_dimer_labeling(h, l) && canonical_point(h, omega_inverse(h, l)) == canon;
      const auto [it, fresh] = seen.emplace(l.values, canon);
      ok = ok && (fresh || it->second == canon);
    });
    c.check(ok, label("omega", i));
  }

  c.check(component_census(triangle()).size() == 1, "triangle census");
  c.check(component_census(square()).size() == 1, "square census");
  c.check(component_census(cycle_graph(5)).size() == 1, "pentagon census");
  c.check(component_census(disjoint_union(cycle_list(3), EdgeList{2, {{0, 1}}})).size() == 1, "triangle+K2 census");

  std::size_t labelings = 0;
  for (std::size_t i = 0; i < census_graphs.size(); ++i) {
    const auto h = to_hypergraph(census_graphs[i]);
    std::set<std::vector<EdgeSet>> classified;
    for (const auto& pair : brute_census_pairs(h))
      for (const auto& m : pair.matchings) {
        ++labelings;
        const auto l = census_labeling(h, pair.odd_cycles, pair.residual, m);
        c.check(is_dimer_labeling(h, l), label("census labeling", i));
        classified.insert(classify_labeling(h, l).odd_cycles);
      }
    const auto census = component_census(h);
    c.check(std::set<std::vector<EdgeSet>>(census.begin(), census.end()) == classified &&
                census.size() == classified.size(),
            label("census", i));
  }
  c.note(std::to_string(points) + " points, " + std::to_string(labelings) + " census labelings");
  return c.finish();
}

bool criterion9(const std::vector<EdgeList>& graphs) {
  Criterion c(9);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto g = to_hypergraph(graphs[i], Mode::Graph);
    const auto h = to_hypergraph(graphs[i], Mode::Hypergraph);
    const auto xg = dimer_complex(g);
    const auto xh = dimer_complex(h);
    c.check(complex_to_json(xg) == complex_to_json(xh), label("complex", i));
    if (xg.count(0) > 0)
      c.check(format_presentation(dimer_presentation(g, xg.vertices()[0]).presentation) ==
                  format_presentation(dimer_presentation(h, xh.vertices()[0]).presentation),
              label("presentation", i));
    c.check(component_census(g) == component_census(h), label("census", i));
  }
  const auto hyper = parse_graph(R"({"edges": [
      {"id": "p", "ends": ["a", "b", "c"]}, {"id": "q", "ends": ["a", "b", "c"]},
      {"id": "r", "ends": ["d", "e", "f"]}, {"id": "t", "ends": ["d", "e", "f"]}]})",
                                 Mode::Hypergraph);
  const auto x = dimer_complex(hyper);
  c.check(x.count(0) == 4 && x.count(1) == 4 && x.count(2) == 1 && euler_characteristic(x) == 1, "3-uniform counts");
  c.check(x.vertices() == brute_perfect_matchings(hyper), "3-uniform matchings");
  c.check(library_cubes(x, 3) == brute_cubes(hyper, brute_perfect_matchings(hyper), 3), "3-uniform cubes");
  c.note(std::to_string(graphs.size()) + " graphs");
  return c.finish();
}

bool criterion10() {
  Criterion c(10);
  const PowerSystem power(6);
  std::mt19937_64 rng(4001);
  for (int round = 0; round < 1000; ++round) {
    const auto set = power.random_precubic(rng, 1 + rng() % 4);
    c.check(is_precubic(power, set), "pre-cubic sample");
    c.check(is_cubic(power, set), "pre-cubic is cubic");
    std::vector<PowerSystem::element_type> t;
    for (const auto& s : set)
      if (rng() % 2) t.push_back(s);
    c.check(is_cubic(power, reflect(power, set, t)), "reflection is cubic");
  }
  c.note("1000 instances");
  return c.finish();
}

}  // namespace

int main() {
  const auto c9 = corpus(9);
  const auto c8 = corpus(8);
  bool ok = true;
  ok = criterion1() && ok;
  ok = criterion2() && ok;
  ok = criterion3() && ok;
  ok = criterion4(c9) && ok;
  ok = criterion5(c8) && ok;
  ok = criterion6(c8) && ok;
  ok = criterion7(c9) && ok;
  ok = criterion8(c9, c8) && ok;
  ok = criterion9(c8) && ok;
  ok = criterion10() && ok;
  return ok ? 0 : 1;
}
