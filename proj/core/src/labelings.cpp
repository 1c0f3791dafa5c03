#include "glide/labelings.hpp"

#include <algorithm>

namespace glide {

namespace {
const Rational zero(0), one(1), half(1, 2);

void require_size(const Hypergraph& h, const Labeling& l) {
  if (l.values.size() != h.edge_count()) throw InvariantViolation("labeling does not cover the edges");
}
}  // namespace

Labeling omega(const Hypergraph& h, const CubePoint& p) {
  if (p.directions.size() != p.coords.size()) throw InvariantViolation("one coordinate per direction expected");
  Labeling l;
  l.values.assign(h.edge_count(), zero);
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    if (p.base.contains(e)) l.values[e] = one;
  for (std::size_t i = 0; i < p.directions.size(); ++i) {
    const auto& x = p.coords[i];
    if (x < zero || x > one) throw InvariantViolation("coordinate outside [0,1]");
    p.directions[i].for_each([&](EdgeIndex e) { l.values[e] = p.base.contains(e) ? one - x : x; });
  }
  return l;
}

bool is_dimer_labeling(const Hypergraph& h, const Labeling& l) {
  require_size(h, l);
  for (const auto& x : l.values)
    if (x < zero || x > one) return false;
  for (VertexIndex v = 0; v < h.vertex_count(); ++v) {
    std::size_t nonzero = 0;
    Rational sum(0);
    for (auto e : h.incident(v))
      if (l.values[e] != zero) {
        ++nonzero;
        sum += l.values[e];
      }
    if (nonzero < 1 || nonzero > 2 || sum != one) return false;
  }
  return true;
}

CubePoint canonical_point(const Hypergraph& h, const CubePoint& p) {
  CubePoint out{p.base, {}, {}};
  std::vector<std::pair<EdgeSet, Rational>> kept;
  for (std::size_t i = 0; i < p.directions.size(); ++i) {
    const auto& s = p.directions[i];
    auto x = p.coords[i];
    if (x == zero) continue;
    if (x == one) {
      out.base ^= s;
      continue;
    }
    if (x > half) {
      out.base ^= s;
      x = one - x;
    }
    kept.emplace_back(s, x);
  }
  for (const auto& [s, x] : kept) {
    if (x == half) {
      const auto first = classify_cycle(h, s).halves->first;
      if ((out.base & s) != first) out.base ^= s;
    }
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [s, x] : kept) {
    out.directions.push_back(s);
    out.coords.push_back(x);
  }
  return out;
}

CubePoint omega_inverse(const Hypergraph& h, const Labeling& l) {
  require_size(h, l);
  auto base = h.no_edges();
  auto support = h.no_edges();
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto& x = l.values[e];
    if (x < zero || x > one) throw InvariantViolation("label outside [0,1] on edge '" + h.edge_id(e) + "'");
    if (x == one) base.insert(e);
    else if (x != zero) support.insert(e);
  }
  if (!is_cyclic(h, support)) throw InvariantViolation("fractional labels do not form a cyclic set");
  CubePoint p;
  std::vector<std::pair<EdgeSet, Rational>> dirs;
  for (const auto& c : decompose_cyclic(h, support)) {
    if (!c.even()) throw InvariantViolation("fractional support contains the odd cycle " + h.format(c.edges));
    const auto& [first, second] = *c.halves;
    const auto x1 = l.values[*first.first()];
    const auto x2 = l.values[*second.first()];
    bool constant = x1 + x2 == one;
    first.for_each([&](EdgeIndex e) { constant = constant && l.values[e] == x1; });
    second.for_each([&](EdgeIndex e) { constant = constant && l.values[e] == x2; });
    if (!constant) throw InvariantViolation("labels on " + h.format(c.edges) + " do not alternate x, 1-x");
    // s′ is the half carrying the larger value; ties go to the first half.
    const bool first_wins = x1 >= x2;
    base |= first_wins ? first : second;
    dirs.emplace_back(c.edges, one - (first_wins ? x1 : x2));
  }
  p.base = base;
  for (auto& [s, x] : dirs) {
    p.directions.push_back(s);
    p.coords.push_back(x);
  }
  return p;
}

LabelingClass classify_labeling(const Hypergraph& h, const Labeling& l) {
  if (!is_dimer_labeling(h, l)) throw InvariantViolation("not a dimer labeling");
  auto support = h.no_edges();
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    if (l.values[e] != zero && l.values[e] != one) support.insert(e);
  LabelingClass out;
  auto removed = h.no_vertices();
  for (const auto& c : decompose_cyclic(h, support)) {
    if (c.even()) continue;
    c.edges.for_each([&](EdgeIndex e) {
      if (l.values[e] != half) throw InvariantViolation("odd cycle " + h.format(c.edges) + " does not carry 1/2");
    });
    out.odd_cycles.push_back(c.edges);
    removed |= boundary_vertices(h, c.edges);
  }
  std::sort(out.odd_cycles.begin(), out.odd_cycles.end());
  out.residual_graph = delete_vertices(h, removed);
  Labeling rest;
  for (EdgeIndex e = 0; e < out.residual_graph.edge_count(); ++e)
    rest.values.push_back(l.values[h.edge(out.residual_graph.edge_id(e))]);
  out.residual = omega_inverse(out.residual_graph, rest);
  const Matching m(out.residual_graph, out.residual.base);
  if (!m.is_perfect()) throw InvariantViolation("residual base is not a perfect matching of the remaining graph");
  return out;
}

std::vector<std::vector<EdgeSet>> component_census(const Hypergraph& h, std::size_t max_cycle_edges) {
  std::vector<EdgeSet> odd;
  for (auto& s : enumerate_cycles(h, max_cycle_edges == 0 ? h.edge_count() : max_cycle_edges))
    if (!classify_cycle(h, s).even()) odd.push_back(std::move(s));
  std::vector<VertexSet> bounds;
  for (const auto& s : odd) bounds.push_back(boundary_vertices(h, s));

  std::vector<std::vector<EdgeSet>> out;
  std::vector<std::size_t> pick;
  auto used = h.no_vertices();
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (!enumerate_perfect_matchings(delete_vertices(h, used)).empty()) {
      std::vector<EdgeSet> c;
      for (auto i : pick) c.push_back(odd[i]);
      out.push_back(std::move(c));
    }
    for (std::size_t i = from; i < odd.size(); ++i) {
      if (bounds[i].intersects(used)) continue;
      pick.push_back(i);
      used |= bounds[i];
      self(self, i + 1);
      used -= bounds[i];
      pick.pop_back();
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Labeling census_labeling(const Hypergraph& h, const std::vector<EdgeSet>& c, const Hypergraph& residual,
                         const EdgeSet& m) {
  Labeling l;
  l.values.assign(h.edge_count(), zero);
  for (const auto& s : c) s.for_each([&](EdgeIndex e) { l.values[e] = half; });
  m.for_each([&](EdgeIndex e) { l.values[h.edge(residual.edge_id(e))] = one; });
  return l;
}

}  // namespace glide
