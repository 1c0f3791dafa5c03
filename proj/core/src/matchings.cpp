#include <algorithm>

#include "glide/incidence.hpp"

namespace glide {

bool is_matching(const Hypergraph& h, const EdgeSet& s) {
  auto seen = h.no_vertices();
  bool ok = true;
  s.for_each([&](EdgeIndex e) {
    if (h.ends(e).empty()) ok = false;
    for (auto v : h.ends(e)) {
      if (seen.contains(v)) ok = false;
      seen.insert(v);
    }
  });
  return ok;
}

Matching::Matching(const Hypergraph& h, EdgeSet edges) : edges_(std::move(edges)) {
  if (!is_matching(h, edges_)) throw InvariantViolation("not a matching: " + h.format(edges_));
  boundary_ = boundary_vertices(h, edges_);
}

std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h) {
  std::vector<Matching> out;
  auto covered = h.no_vertices();
  auto chosen = h.no_edges();

  auto search = [&](auto&& self, VertexIndex from) -> void {
    VertexIndex v = from;
    while (v < h.vertex_count() && covered.contains(v)) ++v;
    if (v == h.vertex_count()) {
      out.emplace_back(h, chosen);
      return;
    }
    for (auto e : h.incident(v)) {
      bool free = true;
      for (auto w : h.ends(e)) free = free && !covered.contains(w);
      if (!free) continue;
      for (auto w : h.ends(e)) covered.insert(w);
      chosen.insert(e);
      self(self, v + 1);
      chosen.erase(e);
      for (auto w : h.ends(e)) covered.erase(w);
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeIndex matched_edge(const Hypergraph& h, const Matching& a, VertexIndex v) {
  for (auto e : h.incident(v))
    if (a.edges().contains(e)) return e;
  throw InvariantViolation("vertex '" + h.vertex_id(v) + "' is not covered by the matching");
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const Matching& a) {
  const auto& inside = a.boundary();
  std::vector<std::string> vs = h.vertex_ids(inside);
  std::vector<EdgeSpec> es;
  for (auto& spec : h.edge_specs()) {
    const auto e = h.edge(spec.id);
    bool within = !h.ends(e).empty();
    for (auto v : h.ends(e)) within = within && inside.contains(v);
    if (within) es.push_back(std::move(spec));
  }
  Hypergraph sub(std::move(vs), std::move(es), h.mode());
  Matching ap(sub, transport(a.edges(), h, sub));
  return {std::move(sub), std::move(ap)};
}

Subdivision subdivide(const Hypergraph& g, const std::map<std::string, unsigned>& counts, const Matching& a) {
  for (const auto& [id, n] : counts) g.edge(id);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (g.ends(e).size() != 2) throw InvariantViolation("subdivision needs a graph; edge '" + g.edge_id(e) + "'");

  auto count = [&](EdgeIndex e) -> unsigned {
    auto it = counts.find(g.edge_id(e));
    return it == counts.end() ? 0u : it->second;
  };

  std::vector<std::string> vs = g.vertex_ids();
  std::vector<EdgeSpec> es;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& id = g.edge_id(e);
    const auto n = count(e);
    const auto& lo = g.vertex_id(g.ends(e)[0]);
    const auto& hi = g.vertex_id(g.ends(e)[1]);
    if (n == 0) {
      es.push_back({id, {lo, hi}});
      continue;
    }
    std::vector<std::string> path{lo};
    for (unsigned k = 1; k <= 2 * n; ++k) {
      path.push_back(id + "@" + std::to_string(k));
      vs.push_back(path.back());
    }
    path.push_back(hi);
    for (unsigned k = 1; k <= 2 * n + 1; ++k) es.push_back({id + "#" + std::to_string(k), {path[k - 1], path[k]}});
  }

  Subdivision sd{g, Hypergraph(std::move(vs), std::move(es), g.mode()), {}, Matching(g, a.edges())};
  sd.pieces.resize(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto n = count(e);
    if (n == 0) {
      sd.pieces[e].push_back(sd.graph.edge(g.edge_id(e)));
      continue;
    }
    for (unsigned k = 1; k <= 2 * n + 1; ++k)
      sd.pieces[e].push_back(sd.graph.edge(g.edge_id(e) + "#" + std::to_string(k)));
  }
  sd.matching = Matching(sd.graph, sd.lift_matching(a.edges()));
  return sd;
}

EdgeSet Subdivision::lift_set(const EdgeSet& s) const {
  auto out = graph.no_edges();
  s.for_each([&](EdgeIndex e) {
    for (auto p : pieces.at(e)) out.insert(p);
  });
  return out;
}

EdgeSet Subdivision::lift_matching(const EdgeSet& b) const {
  auto out = graph.no_edges();
  for (EdgeIndex e = 0; e < pieces.size(); ++e) {
    const auto& ps = pieces[e];
    if (ps.size() == 1) {
      if (b.contains(e)) out.insert(ps[0]);
      continue;
    }
    // Position k (1-based) is taken when its parity matches membership in b.
    for (std::size_t k = 0; k < ps.size(); ++k)
      if ((k % 2 == 0) == b.contains(e)) out.insert(ps[k]);
  }
  return out;
}

EdgeSet Subdivision::project_set(const EdgeSet& s) const {
  auto out = source.no_edges();
  for (EdgeIndex e = 0; e < pieces.size(); ++e) {
    std::size_t hit = 0;
    for (auto p : pieces[e]) hit += s.contains(p) ? 1 : 0;
    if (hit == pieces[e].size()) out.insert(e);
    else if (hit != 0) throw InvariantViolation("edge set splits the pieces of '" + source.edge_id(e) + "'");
  }
  return out;
}

}  // namespace glide
