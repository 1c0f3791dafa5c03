#include "glide/braid.hpp"

#include <algorithm>
#include <deque>

namespace glide {

namespace {
std::pair<VertexSet, VertexSet> vhalves_of(const Hypergraph& h, const EdgeSet& cycle) {
  const auto c = classify_cycle(h, cycle);
  if (!c.vhalves) throw InvariantViolation("cycle has no v-halves: " + h.format(cycle));
  return *c.vhalves;
}
}  // namespace

void VOrientation::set(const Hypergraph& h, const EdgeSet& cycle, const VertexSet& vhalf) {
  const auto [a, b] = vhalves_of(h, cycle);
  if (vhalf != a && vhalf != b) throw InvariantViolation(h.format(vhalf) + " is not a v-half of " + h.format(cycle));
  choice_[cycle] = vhalf;
}

void VOrientation::flip(const Hypergraph& h, const EdgeSet& cycle) {
  const auto [a, b] = vhalves_of(h, cycle);
  choice_[cycle] = vhalf(h, cycle) == a ? b : a;
}

VertexSet VOrientation::vhalf(const Hypergraph& h, const EdgeSet& cycle) const {
  if (auto it = choice_.find(cycle); it != choice_.end()) return it->second;
  const auto [a, b] = vhalves_of(h, cycle);
  if (side_) {
    if (a.is_subset_of(*side_)) return a;
    if (b.is_subset_of(*side_)) return b;
    throw InvariantViolation("cycle " + h.format(cycle) + " has no v-half on the chosen side");
  }
  return a;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i]) throw InvariantViolation("not a permutation");
    hit[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = i;
  return Permutation(std::move(xs));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvariantViolation("permutations of different sizes");
  std::vector<std::size_t> xs(a.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = a(b(i));
  return Permutation(std::move(xs));
}

std::string Permutation::one_line() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i] + 1);
  }
  return out + ")";
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (auto j = i; !seen[j]; j = images_[j]) {
      if (j != i) out += " ";
      out += std::to_string(j + 1);
      seen[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

MarkedMatching MarkedMatching::initial(const EdgeSet& m) {
  MarkedMatching out{m, {}};
  std::size_t k = 0;
  m.for_each([&](EdgeIndex e) { out.marks[e] = k++; });
  return out;
}

MarkedMatching glide_marks(const Hypergraph& h, const MarkedMatching& m, const EdgeSet& s, const VOrientation& vo) {
  const auto c = classify_cycle(h, s);
  if (!c.even()) throw InvariantViolation("cannot glide along an odd cycle");
  const auto inside = s & m.matching;
  if (inside != c.halves->first && inside != c.halves->second)
    throw InvariantViolation("cycle " + h.format(s) + " does not alternate with the matching");
  const auto distinguished = vo.vhalf(h, s);
  MarkedMatching out{s ^ m.matching, {}};
  for (const auto& [e, mark] : m.marks) {
    if (!s.contains(e)) {
      out.marks[e] = mark;
      continue;
    }
    const auto ends = h.ends(e);
    const auto w = distinguished.contains(ends[0]) ? ends[0] : ends[1];
    EdgeIndex next = e;
    for (auto f : h.incident(w))
      if (f != e && s.contains(f)) next = f;
    out.marks[next] = mark;
  }
  return out;
}

Permutation sigma_theta(const Hypergraph& h, const EdgePath& loop, const VOrientation& vo) {
  if (!loop.closed()) throw InvariantViolation("path is not a loop");
  const auto start = MarkedMatching::initial(loop.start);
  auto m = start;
  for (const auto& s : loop.steps) m = glide_marks(h, m, s, vo);
  std::vector<std::size_t> images(start.marks.size());
  for (const auto& [e, mark] : start.marks) images[mark] = m.marks.at(e);
  return Permutation(std::move(images));
}

VOrientation bipartite_v_orientation(const Hypergraph& h) {
  std::vector<int> side(h.vertex_count(), -1);
  for (VertexIndex root = 0; root < h.vertex_count(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto e : h.incident(v)) {
        const auto ends = h.ends(e);
        if (ends.size() != 2) throw InvariantViolation("bipartite orientation needs a graph");
        const auto w = ends[0] == v ? ends[1] : ends[0];
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          throw InvariantViolation("graph is not bipartite");
        }
      }
    }
  }
  auto v0 = h.no_vertices();
  for (VertexIndex v = 0; v < h.vertex_count(); ++v)
    if (side[v] == 0) v0.insert(v);
  return VOrientation(std::move(v0));
}

Permutation sigma_theta_n(const Hypergraph& h, const EdgePath& loop, const std::map<std::string, unsigned>& counts,
                          const VOrientation& vo) {
  if (!loop.closed()) throw InvariantViolation("path is not a loop");
  const auto sd = subdivide(h, counts, Matching(h, loop.start));
  EdgePath lifted{sd.matching.edges(), {}};
  VOrientation induced;
  for (const auto& s : loop.steps) {
    const auto t = sd.lift_set(s);
    lifted.steps.push_back(t);
    const auto original = transport(vo.vhalf(h, s), h, sd.graph);
    const auto [a, b] = vhalves_of(sd.graph, t);
    induced.set(sd.graph, t, original.is_subset_of(a) ? a : b);
  }
  return sigma_theta(sd.graph, lifted, induced);
}

}  // namespace glide
