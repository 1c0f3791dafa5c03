#include "glide/dimer.hpp"

#include <algorithm>

namespace glide {

bool congruent(const Matching& a, const Matching& b) { return a.boundary() == b.boundary(); }

BasedCube hull(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b) {
  const Matching ma(h, a), mb(h, b);
  if (!congruent(ma, mb)) throw InvariantViolation("matchings are not congruent");
  std::vector<EdgeSet> dirs;
  for (auto& c : decompose_cyclic(h, a ^ b)) {
    if (!c.even()) throw InvariantViolation("odd cycle between congruent matchings");
    dirs.push_back(std::move(c.edges));
  }
  return make_cube(a, std::move(dirs));
}

EdgePath hull_path(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b) {
  return {a, hull(h, a, b).directions};
}

namespace {

// mate[v] = the edge of m at v, or npos when v is uncovered.
std::vector<EdgeIndex> mates(const Hypergraph& h, const EdgeSet& m) {
  std::vector<EdgeIndex> out(h.vertex_count(), static_cast<EdgeIndex>(-1));
  m.for_each([&](EdgeIndex e) {
    for (auto v : h.ends(e)) out[v] = e;
  });
  return out;
}

bool flat_mates(const std::vector<EdgeIndex>& a, const std::vector<EdgeIndex>& b, const std::vector<EdgeIndex>& c) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != b[v] && b[v] != c[v] && a[v] != c[v]) return false;
  return true;
}

}  // namespace

bool is_flat(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  return flat_mates(mates(h, a), mates(h, b), mates(h, c));
}

std::size_t DimerPresentation::gen(std::size_t a, std::size_t b) const {
  const auto n = matchings.size();
  if (a == b || a >= n || b >= n) throw InvariantViolation("no generator for this pair of matchings");
  return a * (n - 1) + (b < a ? b : b - 1);
}

std::size_t DimerPresentation::matching_index(const EdgeSet& m) const {
  auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
  if (it == matchings.end() || *it != m) throw InvariantViolation("not a perfect matching of the presentation");
  return static_cast<std::size_t>(it - matchings.begin());
}

DimerPresentation groupoid_presentation(const Hypergraph& h) {
  DimerPresentation p;
  p.graph = h;
  p.matchings = matching_edges(enumerate_perfect_matchings(h));
  const auto n = p.matchings.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      p.presentation.generators.push_back("x" + std::to_string(a) + "_" + std::to_string(b));
      p.ends.emplace_back(a, b);
    }
  std::vector<std::vector<EdgeIndex>> m;
  for (const auto& x : p.matchings) m.push_back(mates(h, x));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (b == c || !flat_mates(m[a], m[b], m[c])) continue;
        Word r = concat(letter(p.gen(a, b)), letter(p.gen(b, c)));
        if (a != c) r = concat(r, letter(p.gen(a, c), -1));
        p.presentation.relators.push_back(std::move(r));
      }
    }
  return p;
}

DimerPresentation vertex_group(const DimerPresentation& groupoid, std::size_t base) {
  if (base >= groupoid.matchings.size()) throw InvariantViolation("basepoint out of range");
  DimerPresentation p = groupoid;
  p.basepoint = base;
  std::vector<Word> rels;
  for (std::size_t a = 0; a < p.matchings.size(); ++a)
    if (a != base) rels.push_back(letter(p.gen(base, a)));
  rels.insert(rels.end(), groupoid.presentation.relators.begin(), groupoid.presentation.relators.end());
  p.presentation.relators = std::move(rels);
  return p;
}

DimerPresentation dimer_presentation(const Hypergraph& h, const EdgeSet& a0) {
  const Matching m(h, a0);
  if (!m.is_perfect()) throw InvariantViolation("basepoint is not a perfect matching");
  auto g = groupoid_presentation(h);
  return vertex_group(g, g.matching_index(a0));
}

Word loop_to_word(const DimerPresentation& p, const EdgePath& loop) {
  if (!loop.closed()) throw InvariantViolation("path is not a loop");
  if (p.basepoint != DimerPresentation::no_basepoint && loop.start != p.matchings[p.basepoint])
    throw InvariantViolation("loop is not based at the basepoint");
  Word w;
  const auto vs = loop.vertices();
  for (std::size_t k = 1; k < vs.size(); ++k)
    w.letters.push_back({p.gen(p.matching_index(vs[k - 1]), p.matching_index(vs[k])), 1});
  return w;
}

EdgePath word_to_loop(const DimerPresentation& p, const Word& w) {
  if (p.basepoint == DimerPresentation::no_basepoint) throw InvariantViolation("presentation has no basepoint");
  const auto& a0 = p.matchings[p.basepoint];
  EdgePath out{a0, {}};
  for (const auto& l : w.letters) {
    auto [a, b] = p.ends.at(l.gen);
    if (l.exp < 0) std::swap(a, b);
    const auto& ma = p.matchings[a];
    const auto& mb = p.matchings[b];
    out = out.then(hull_path(p.graph, a0, ma)).then(hull_path(p.graph, ma, mb)).then(hull_path(p.graph, mb, a0));
  }
  return out;
}

Word rewrite_flat(const DimerPresentation& p, const Word& w) {
  std::vector<std::vector<EdgeIndex>> m;
  for (const auto& x : p.matchings) m.push_back(mates(p.graph, x));
  const auto base = p.basepoint;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& l : w.letters) {
    auto [a, b] = p.ends.at(l.gen);
    if (l.exp < 0) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (auto [a, b] : pairs) {
      bool gone = false;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        if (y != a || !flat_mates(m[x], m[a], m[b])) break;
        stack.pop_back();
        a = x;
        if (a == b) {
          gone = true;
          break;
        }
      }
      if (!gone) stack.emplace_back(a, b);
    }
    std::erase_if(stack, [&](const auto& e) { return e.first == base || e.second == base; });
    if (stack == pairs) break;
    pairs = std::move(stack);
  }
  Word out;
  for (auto [a, b] : pairs) out.letters.push_back({p.gen(a, b), 1});
  return out;
}

EdgePath base_change(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b, const EdgePath& loop) {
  if (!loop.closed() || loop.start != a) throw InvariantViolation("expected a loop at the first matching");
  return hull_path(h, b, a).then(loop).then(hull_path(h, a, b));
}

MatchingGroupComplex matching_group_complex(const Hypergraph& h, const Matching& a) {
  auto sub = induced_subhypergraph(h, a);
  auto x = dimer_complex(sub.graph);
  auto base = sub.matching.edges();
  return {std::move(sub), std::move(x), std::move(base)};
}

EdgePath inclusion_j(const Hypergraph& h, const Matching& a_prime, const Matching& a, const EdgePath& loop) {
  if (!a_prime.edges().is_subset_of(a.edges())) throw InvariantViolation("first matching is not contained in the second");
  const auto small = induced_subhypergraph(h, a_prime);
  const auto large = induced_subhypergraph(h, a);
  const auto c = transport(a.edges() - a_prime.edges(), h, large.graph);
  EdgePath out{transport(loop.start, small.graph, large.graph) | c, {}};
  for (const auto& s : loop.steps) out.steps.push_back(transport(s, small.graph, large.graph));
  return out;
}

}  // namespace glide
