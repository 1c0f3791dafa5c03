#include "glide/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace glide {

CubeComplex::CubeComplex(EvenCycleSystem sys, std::vector<EdgeSet> vertices, const std::vector<BasedCube>& cubes)
    : sys_(std::move(sys)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  vertex_set_ = std::set<EdgeSet>(vertices_.begin(), vertices_.end());
  for (const auto& c : cubes) {
    if (c.dim() == 0) {
      if (!has_vertex(c.base)) throw InvariantViolation("0-cube outside the vertex set");
      continue;
    }
    for (const auto& v : cube_vertices(sys_, c))
      if (!has_vertex(v)) throw InvariantViolation("cube has a vertex outside the vertex set");
    auto key = canonical_key(sys_, c);
    if (!cubes_.contains(key)) cubes_.emplace(key, cube_from_key(sys_, key));
  }
  counts_.assign(1, vertices_.size());
  for (const auto& [key, c] : cubes_) {
    if (counts_.size() <= c.dim()) counts_.resize(c.dim() + 1, 0);
    ++counts_[c.dim()];
  }
  adjacency_.resize(vertices_.size());
  for (const auto& [key, c] : cubes_) {
    if (c.dim() != 1) continue;
    const auto i = vertex_index(key.min_vertex);
    const auto j = vertex_index(key.antipode);
    adjacency_[i].push_back({j, c.directions[0]});
    adjacency_[j].push_back({i, c.directions[0]});
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

std::size_t CubeComplex::vertex_index(const EdgeSet& a) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), a);
  if (it == vertices_.end() || *it != a)
    throw InvariantViolation("not a vertex of the complex: " + hypergraph().format(a));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool CubeComplex::contains(const CubeKey& k) const {
  if (k.min_vertex == k.antipode) return has_vertex(k.min_vertex);
  return cubes_.contains(k);
}

std::vector<BasedCube> CubeComplex::cubes_of_dim(std::size_t k) const {
  std::vector<BasedCube> out;
  if (k == 0) {
    for (const auto& v : vertices_) out.push_back({v, {}});
    return out;
  }
  for (const auto& [key, c] : cubes_)
    if (c.dim() == k) out.push_back(c);
  return out;
}

std::size_t CubeComplex::count(std::size_t k) const { return k < counts_.size() ? counts_[k] : 0; }

std::size_t CubeComplex::dimension() const {
  for (std::size_t k = counts_.size(); k-- > 1;)
    if (counts_[k] > 0) return k;
  return 0;
}

bool operator==(const CubeComplex& a, const CubeComplex& b) {
  if (a.hypergraph().fingerprint() != b.hypergraph().fingerprint()) return false;
  if (a.vertices_ != b.vertices_ || a.cubes_.size() != b.cubes_.size()) return false;
  for (auto i = a.cubes_.begin(), j = b.cubes_.begin(); i != a.cubes_.end(); ++i, ++j)
    if (i->first != j->first) return false;
  return true;
}

CubeComplex build_complex(const EvenCycleSystem& sys, std::vector<EdgeSet> d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  const std::set<EdgeSet> members(d.begin(), d.end());
  const auto& h = sys.hypergraph();
  std::vector<BasedCube> cubes;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const auto s = d[i] ^ d[j];
      if (!is_cyclic(h, s)) continue;
      auto cycles = decompose_cyclic(h, s);
      if (!std::all_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.even(); })) continue;
      std::vector<EdgeSet> dirs;
      for (auto& c : cycles) dirs.push_back(std::move(c.edges));
      auto cube = make_cube(d[i], std::move(dirs));
      const auto vs = cube_vertices(sys, cube);
      if (std::all_of(vs.begin(), vs.end(), [&](const EdgeSet& v) { return members.contains(v); }))
        cubes.push_back(std::move(cube));
    }
  return CubeComplex(sys, std::move(d), cubes);
}

std::vector<EdgeSet> matching_edges(const std::vector<Matching>& ms) {
  std::vector<EdgeSet> out;
  for (const auto& m : ms) out.push_back(m.edges());
  return out;
}

CubeComplex dimer_complex(const Hypergraph& h) {
  return build_complex(even_cycle_system(h), matching_edges(enumerate_perfect_matchings(h)));
}

Link link(const CubeComplex& x, const EdgeSet& a) {
  x.vertex_index(a);
  Link l;
  l.base = a;
  for (const auto& n : x.neighbors(x.vertex_index(a))) l.vertices.push_back(n.glide);
  std::sort(l.vertices.begin(), l.vertices.end());
  auto index_of = [&](const EdgeSet& s) {
    return static_cast<std::size_t>(std::lower_bound(l.vertices.begin(), l.vertices.end(), s) - l.vertices.begin());
  };
  std::set<std::vector<std::size_t>> simplices{{}};
  for (const auto& [key, c] : x.cubes()) {
    const auto vs = cube_vertices(x.system(), c);
    if (std::find(vs.begin(), vs.end(), a) == vs.end()) continue;
    std::vector<std::size_t> idx;
    for (const auto& s : c.directions) idx.push_back(index_of(s));
    std::sort(idx.begin(), idx.end());
    simplices.insert(std::move(idx));
  }
  l.simplices.assign(simplices.begin(), simplices.end());
  return l;
}

bool is_flag(const Link& l) {
  const auto n = l.vertices.size();
  const std::set<std::vector<std::size_t>> simplices(l.simplices.begin(), l.simplices.end());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& s : l.simplices)
    if (s.size() == 2) adj[s[0]][s[1]] = adj[s[1]][s[0]] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!simplices.contains({i})) return false;
  std::vector<std::size_t> clique;
  bool ok = true;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (!ok) return;
    if (clique.size() >= 3 && !simplices.contains(clique)) {
      ok = false;
      return;
    }
    for (std::size_t c = from; c < n; ++c) {
      bool fits = true;
      for (auto i : clique) fits = fits && adj[i][c];
      if (!fits) continue;
      clique.push_back(c);
      self(self, c + 1);
      clique.pop_back();
    }
  };
  grow(grow, 0);
  return ok;
}

bool all_links_flag(const CubeComplex& x) {
  for (const auto& a : x.vertices())
    if (!is_flag(link(x, a))) return false;
  return true;
}

namespace {
struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};
}  // namespace

std::vector<std::vector<EdgeSet>> components(const CubeComplex& x) {
  const auto n = x.vertices().size();
  DisjointSets ds(n);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& nb : x.neighbors(v)) ds.unite(v, nb.vertex);
  std::vector<std::vector<EdgeSet>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = ds.find(v);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x.vertices()[v]);
  }
  return out;
}

long long euler_characteristic(const CubeComplex& x) {
  long long chi = 0;
  for (std::size_t k = 0; k <= x.dimension(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(x.count(k));
  return chi;
}

CubeComplex skeleton(const CubeComplex& x, std::size_t k) {
  std::vector<BasedCube> cubes;
  for (const auto& [key, c] : x.cubes())
    if (c.dim() <= k) cubes.push_back(c);
  return CubeComplex(x.system(), x.vertices(), cubes);
}

Orientation Orientation::strict() {
  Orientation o;
  o.strict_ = true;
  return o;
}

Orientation Orientation::from_marker_edges(const Hypergraph& h, const std::map<EdgeSet, EdgeIndex>& markers) {
  Orientation o;
  for (const auto& [cycle, e] : markers) {
    if (!cycle.contains(e)) throw InvariantViolation("marker edge '" + h.edge_id(e) + "' is not in its cycle");
    const auto c = classify_cycle(h, cycle);
    if (!c.even()) throw InvariantViolation("cycle is odd: " + h.format(cycle));
    o.halves_[cycle] = c.halves->first.contains(e) ? c.halves->first : c.halves->second;
  }
  return o;
}

void Orientation::set_half(const Hypergraph& h, const EdgeSet& cycle, const EdgeSet& half) {
  const auto c = classify_cycle(h, cycle);
  if (!c.even()) throw InvariantViolation("cycle is odd: " + h.format(cycle));
  if (half != c.halves->first && half != c.halves->second)
    throw InvariantViolation(h.format(half) + " is not a half of " + h.format(cycle));
  halves_[cycle] = half;
}

void Orientation::flip(const Hypergraph& h, const EdgeSet& cycle) {
  const auto current = half(h, cycle);
  halves_[cycle] = cycle - current;
}

EdgeSet Orientation::half(const Hypergraph& h, const EdgeSet& cycle) const {
  if (auto it = halves_.find(cycle); it != halves_.end()) return it->second;
  if (strict_) throw InvariantViolation("no half chosen for cycle " + h.format(cycle));
  const auto c = classify_cycle(h, cycle);
  if (!c.even()) throw InvariantViolation("cycle is odd: " + h.format(cycle));
  return c.halves->first;
}

EdgeIndex Orientation::marker(const Hypergraph& h, const EdgeSet& cycle) const { return *half(h, cycle).first(); }

int Orientation::sign(const Hypergraph& h, const EdgeSet& from, const EdgeSet& s) const {
  return (s ^ from).contains(marker(h, s)) ? 1 : -1;
}

DirectedComplex orient(const CubeComplex& x, const Orientation& o) {
  const auto& h = x.hypergraph();
  DirectedComplex out;
  for (const auto& [key, c] : x.cubes()) {
    if (c.dim() == 1) {
      const auto& s = c.directions[0];
      if (o.sign(h, key.min_vertex, s) > 0) out.edges.push_back({key.min_vertex, key.antipode, s});
      else out.edges.push_back({key.antipode, key.min_vertex, s});
    } else if (c.dim() == 2) {
      const auto& a = c.base;
      for (int turn = 0; turn < 2; ++turn) {
        const auto& s = c.directions[turn];
        const auto& t = c.directions[1 - turn];
        // The side from A to sA and the side from tA to stA point the same way.
        if (o.sign(h, a, s) != o.sign(h, t ^ a, s))
          throw InvariantViolation("orientation breaks the square rule on " + h.format(s) + ", " + h.format(t));
      }
    }
  }
  return out;
}

EdgeSet EdgePath::end() const {
  auto v = start;
  for (const auto& s : steps) v ^= s;
  return v;
}

std::vector<EdgeSet> EdgePath::vertices() const {
  std::vector<EdgeSet> out{start};
  for (const auto& s : steps) out.push_back(out.back() ^ s);
  return out;
}

EdgePath EdgePath::reversed() const { return {end(), {steps.rbegin(), steps.rend()}}; }

EdgePath EdgePath::then(const EdgePath& next) const {
  if (end() != next.start) throw InvariantViolation("paths do not compose");
  EdgePath out = *this;
  out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
  return out;
}

EdgePath EdgePath::free_reduce() const {
  EdgePath out{start, {}};
  for (const auto& s : steps) {
    if (!out.steps.empty() && out.steps.back() == s) out.steps.pop_back();
    else out.steps.push_back(s);
  }
  return out;
}

bool is_path_in(const CubeComplex& x, const EdgePath& p) {
  if (!x.has_vertex(p.start)) return false;
  auto v = x.vertex_index(p.start);
  for (const auto& s : p.steps) {
    const auto& nbs = x.neighbors(v);
    auto it = std::find_if(nbs.begin(), nbs.end(), [&](const CubeComplex::Neighbor& n) { return n.glide == s; });
    if (it == nbs.end()) return false;
    v = it->vertex;
  }
  return true;
}

void require_path_in(const CubeComplex& x, const EdgePath& p) {
  if (!is_path_in(x, p)) throw InvariantViolation("path leaves the 1-skeleton of the complex");
}

namespace {
struct SpanningTree {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent;
  std::vector<EdgeSet> via;
};

SpanningTree bfs_tree(const CubeComplex& x, std::size_t root) {
  const auto n = x.vertices().size();
  SpanningTree t{std::vector<std::size_t>(n, SpanningTree::none), std::vector<EdgeSet>(n)};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& nb : x.neighbors(v)) {
      if (seen[nb.vertex]) continue;
      seen[nb.vertex] = true;
      t.parent[nb.vertex] = v;
      t.via[nb.vertex] = nb.glide;
      queue.push_back(nb.vertex);
    }
  }
  t.parent[root] = root;
  return t;
}

EdgePath path_from_root(const CubeComplex& x, const SpanningTree& t, std::size_t root, std::size_t target) {
  if (t.parent[target] == SpanningTree::none) throw InvariantViolation("vertex lies in another component");
  std::vector<EdgeSet> rev;
  for (auto v = target; v != root; v = t.parent[v]) rev.push_back(t.via[v]);
  return {x.vertices()[root], {rev.rbegin(), rev.rend()}};
}
}  // namespace

EdgePath tree_path(const CubeComplex& x, const EdgeSet& base, const EdgeSet& target) {
  const auto root = x.vertex_index(base);
  return path_from_root(x, bfs_tree(x, root), root, x.vertex_index(target));
}

std::vector<EdgePath> generator_loops(const CubeComplex& x, const EdgeSet& base) {
  const auto root = x.vertex_index(base);
  const auto t = bfs_tree(x, root);
  std::vector<EdgePath> out;
  for (const auto& [key, c] : x.cubes()) {
    if (c.dim() != 1) continue;
    const auto u = x.vertex_index(key.min_vertex);
    const auto v = x.vertex_index(key.antipode);
    if (t.parent[u] == SpanningTree::none) continue;
    if ((t.parent[v] == u && v != root) || (t.parent[u] == v && u != root)) continue;
    auto loop = path_from_root(x, t, root, u);
    loop.steps.push_back(c.directions[0]);
    out.push_back(loop.then(path_from_root(x, t, root, v).reversed()));
  }
  return out;
}

InclusionMap::InclusionMap(const CubeComplex& sub, const CubeComplex& super) : sub_(&sub), super_(&super) {
  if (sub.hypergraph().fingerprint() != super.hypergraph().fingerprint())
    throw AmbientMismatch("complexes live over different hypergraphs");
  for (const auto& v : sub.vertices())
    if (!super.has_vertex(v)) throw InvariantViolation("vertex missing from the target complex");
  for (const auto& [key, c] : sub.cubes())
    if (!super.contains(key)) throw InvariantViolation("cube missing from the target complex");
}

EdgePath InclusionMap::push(const EdgePath& p) const {
  require_path_in(*sub_, p);
  return p;
}

InclusionMap inclusion_map(const CubeComplex& sub, const CubeComplex& super) { return InclusionMap(sub, super); }

}  // namespace glide
