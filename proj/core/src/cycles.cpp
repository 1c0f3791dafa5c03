#include <algorithm>
#include <numeric>

#include "glide/incidence.hpp"

namespace glide {

namespace {

void require_ambient(const Hypergraph& h, const EdgeSet& s) {
  if (s.ambient() != h.fingerprint() || s.universe() != h.edge_count())
    throw AmbientMismatch("edge set does not belong to this hypergraph");
}

// Member edges of s at each vertex of ∂s; empty lists elsewhere.
std::vector<std::vector<EdgeIndex>> members_at(const Hypergraph& h, const EdgeSet& s) {
  std::vector<std::vector<EdgeIndex>> at(h.vertex_count());
  s.for_each([&](EdgeIndex e) {
    for (auto v : h.ends(e)) at[v].push_back(e);
  });
  return at;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
  std::vector<std::uint32_t> parent;
};

std::vector<EdgeSet> components(const Hypergraph& h, const EdgeSet& s) {
  UnionFind uf(h.edge_count());
  for (const auto& list : members_at(h, s))
    for (std::size_t i = 1; i < list.size(); ++i) uf.unite(list[0], list[i]);
  std::vector<EdgeSet> out;
  std::vector<int> slot(h.edge_count(), -1);
  s.for_each([&](EdgeIndex e) {
    auto r = uf.find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(h.no_edges());
    }
    out[static_cast<std::size_t>(slot[r])].insert(e);
  });
  return out;
}

}  // namespace

bool is_cyclic(const Hypergraph& h, const EdgeSet& s) {
  require_ambient(h, s);
  for (const auto& list : members_at(h, s))
    if (!list.empty() && list.size() != 2) return false;
  return true;
}

bool is_cycle(const Hypergraph& h, const EdgeSet& s) {
  return !s.empty() && is_cyclic(h, s) && components(h, s).size() == 1;
}

Cycle classify_cycle(const Hypergraph& h, const EdgeSet& s) {
  if (!is_cycle(h, s)) throw InvariantViolation("not a cycle: " + h.format(s));
  Cycle c;
  c.edges = s;

  // Edges meeting at a vertex must land in different halves; a cycle is even
  // exactly when this conflict graph is 2-colourable. It is connected, so the
  // colouring is unique up to swapping the colours.
  const auto at = members_at(h, s);
  std::vector<std::vector<EdgeIndex>> conflict(h.edge_count());
  for (const auto& list : at)
    if (list.size() == 2) {
      conflict[list[0]].push_back(list[1]);
      conflict[list[1]].push_back(list[0]);
    }
  std::vector<int> colour(h.edge_count(), -1);
  const auto start = *s.first();
  colour[start] = 0;
  std::vector<EdgeIndex> stack{start};
  bool even = true;
  while (!stack.empty() && even) {
    auto e = stack.back();
    stack.pop_back();
    for (auto f : conflict[e]) {
      if (colour[f] < 0) {
        colour[f] = 1 - colour[e];
        stack.push_back(f);
      } else if (colour[f] == colour[e]) {
        even = false;
      }
    }
  }
  if (!even) {
    c.parity = Parity::Odd;
    return c;
  }
  c.parity = Parity::Even;
  auto first = h.no_edges();
  auto second = h.no_edges();
  s.for_each([&](EdgeIndex e) { (colour[e] == 0 ? first : second).insert(e); });
  c.halves = std::pair{first, second};

  bool two_ends = true;
  s.for_each([&](EdgeIndex e) { two_ends = two_ends && h.ends(e).size() == 2; });
  if (two_ends) {
    std::vector<int> side(h.vertex_count(), -1);
    const auto v0 = h.ends(start)[0];
    side[v0] = 0;
    std::vector<VertexIndex> vs{v0};
    while (!vs.empty()) {
      auto v = vs.back();
      vs.pop_back();
      for (auto e : at[v]) {
        auto ends = h.ends(e);
        auto w = ends[0] == v ? ends[1] : ends[0];
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          vs.push_back(w);
        }
      }
    }
    auto a = h.no_vertices();
    auto b = h.no_vertices();
    for (VertexIndex v = 0; v < h.vertex_count(); ++v)
      if (side[v] >= 0) (side[v] == side[v0] ? a : b).insert(v);
    if (*b.first() < *a.first()) std::swap(a, b);
    c.vhalves = std::pair{a, b};
  }
  return c;
}

std::vector<Cycle> decompose_cyclic(const Hypergraph& h, const EdgeSet& s) {
  if (!is_cyclic(h, s)) throw InvariantViolation("not a cyclic set: " + h.format(s));
  std::vector<Cycle> out;
  for (auto& comp : components(h, s)) out.push_back(classify_cycle(h, comp));
  return out;
}

std::vector<EdgeSet> enumerate_cycles(const Hypergraph& h, std::size_t max_edges) {
  std::vector<EdgeSet> out;
  std::vector<int> degree(h.vertex_count(), 0);
  auto current = h.no_edges();

  // Grow a connected set whose vertex degrees never exceed two, always
  // completing the smallest vertex of degree one. Each cycle whose smallest
  // edge is `low` is reached along exactly one branch.
  auto add = [&](EdgeIndex e, int d) {
    for (auto v : h.ends(e)) degree[v] += d;
    current.toggle(e);
  };
  auto fits = [&](EdgeIndex e) {
    for (auto v : h.ends(e))
      if (degree[v] >= 2) return false;
    return true;
  };

  auto grow = [&](auto&& self, EdgeIndex low, std::size_t size) -> void {
    std::optional<VertexIndex> open;
    current.for_each([&](EdgeIndex e) {
      for (auto v : h.ends(e))
        if (degree[v] == 1 && (!open || v < *open)) open = v;
    });
    if (!open) {
      out.push_back(current);
      return;
    }
    if (size == max_edges) return;
    for (auto f : h.incident(*open)) {
      if (f <= low || current.contains(f) || !fits(f)) continue;
      add(f, 1);
      self(self, low, size + 1);
      add(f, -1);
    }
  };

  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    if (h.ends(e).empty() || max_edges == 0) continue;
    add(e, 1);
    grow(grow, e, 1);
    add(e, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glide
