#include "glide/gliding.hpp"

namespace glide {

bool EvenCycleSystem::is_glide(const EdgeSet& s) const {
  if (s.ambient() != h_.fingerprint() || !is_cycle(h_, s)) return false;
  return classify_cycle(h_, s).even();
}

std::vector<EdgeSet> EvenCycleSystem::glides_at(const EdgeSet& a, const std::set<EdgeSet>& d) const {
  std::vector<EdgeSet> out;
  for (const auto& b : d) {
    auto s = a ^ b;
    if (is_glide(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> EvenCycleSystem::all_glides(std::size_t max_edges) const {
  std::vector<EdgeSet> out;
  for (auto& s : enumerate_cycles(h_, max_edges))
    if (classify_cycle(h_, s).even()) out.push_back(std::move(s));
  return out;
}

EvenCycleSystem even_cycle_system(const Hypergraph& h) { return EvenCycleSystem(h); }

EdgeSet glide(const EvenCycleSystem& sys, const EdgeSet& a, const EdgeSet& s) {
  if (!sys.is_glide(s)) throw InvariantViolation("not a glide: " + sys.hypergraph().format(s));
  return s ^ a;
}

BasedCube make_cube(EdgeSet base, std::vector<EdgeSet> directions) {
  std::sort(directions.begin(), directions.end());
  return {std::move(base), std::move(directions)};
}

std::vector<EdgeSet> cube_vertices(const EvenCycleSystem& sys, const BasedCube& c) {
  return cube_vertices(sys, c.base, c.directions);
}

CubeKey canonical_key(const EvenCycleSystem& sys, const BasedCube& c) {
  auto vs = cube_vertices(sys, c);
  auto lo = *std::min_element(vs.begin(), vs.end());
  auto all = product(sys, c.directions);
  return {lo, lo ^ all};
}

BasedCube cube_from_key(const EvenCycleSystem& sys, const CubeKey& k) {
  std::vector<EdgeSet> dirs;
  for (auto& c : decompose_cyclic(sys.hypergraph(), k.min_vertex ^ k.antipode)) dirs.push_back(std::move(c.edges));
  return make_cube(k.min_vertex, std::move(dirs));
}

BasedCube rebase(const EvenCycleSystem& sys, const BasedCube& c, std::uint32_t mask) {
  std::vector<EdgeSet> t;
  for (std::size_t i = 0; i < c.directions.size(); ++i)
    if ((mask >> i) & 1u) t.push_back(c.directions[i]);
  return make_cube(sys.multiply(product(sys, t), c.base), reflect(sys, c.directions, t));
}

}  // namespace glide
