#pragma once

// Glide complexes X_D: cubes whose vertices all lie in a finite set D,
// curvature conditions, links, orientations and edge paths.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "glide/gliding.hpp"

namespace glide {

/// Glides s with s·A ∈ D, found as B·A⁻¹ over B ∈ D. Works for any system.
template <GlidingSystem Sys>
std::vector<typename Sys::element_type> applicable_glides(const Sys& sys, const typename Sys::element_type& a,
                                                          const std::set<typename Sys::element_type>& d) {
  std::vector<typename Sys::element_type> out;
  const auto inv = sys.inverse(a);
  for (const auto& b : d) {
    auto s = sys.multiply(b, inv);
    if (sys.is_glide(s)) out.push_back(std::move(s));
  }
  return out;
}

template <class E>
struct SquareViolation {
  E base;
  E s;
  E t;
};

template <class E>
struct CubeViolation {
  E base;
  E s1;
  E s2;
  E s3;
};

template <class E>
struct RegularityViolation {
  E base;
  std::vector<E> glides;
};

struct CheckOptions {
  /// Largest pre-cubic set examined by the regularity sweep.
  std::size_t max_dim = 3;
};

/// For A ∈ D and independent s, t with sA, tA ∈ D: stA ∈ D.
template <GlidingSystem Sys>
std::optional<SquareViolation<typename Sys::element_type>> check_square_condition(
    const Sys& sys, const std::set<typename Sys::element_type>& d) {
  for (const auto& a : d) {
    const auto gs = applicable_glides(sys, a, d);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (!sys.independent(gs[i], gs[j])) continue;
        if (!d.contains(sys.multiply(gs[i], sys.multiply(gs[j], a)))) return SquareViolation<typename Sys::element_type>{a, gs[i], gs[j]};
      }
  }
  return std::nullopt;
}

/// The square condition of E rel D: a square with three corners in E and the
/// fourth in D has the fourth in E. Throws if E ⊄ D.
template <GlidingSystem Sys>
std::optional<SquareViolation<typename Sys::element_type>> check_square_condition_rel(
    const Sys& sys, const std::set<typename Sys::element_type>& e, const std::set<typename Sys::element_type>& d) {
  for (const auto& a : e)
    if (!d.contains(a)) throw InvariantViolation("subset is not contained in the ambient set");
  for (const auto& a : e) {
    const auto gs = applicable_glides(sys, a, e);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (!sys.independent(gs[i], gs[j])) continue;
        auto corner = sys.multiply(gs[i], sys.multiply(gs[j], a));
        if (d.contains(corner) && !e.contains(corner))
          return SquareViolation<typename Sys::element_type>{a, gs[i], gs[j]};
      }
  }
  return std::nullopt;
}

/// Seven vertices of a 3-cube in D force the eighth.
template <GlidingSystem Sys>
std::optional<CubeViolation<typename Sys::element_type>> check_cube_condition(
    const Sys& sys, const std::set<typename Sys::element_type>& d) {
  using E = typename Sys::element_type;
  for (const auto& a : d) {
    const auto gs = applicable_glides(sys, a, d);
    const auto n = gs.size();
    auto pair_ok = [&](std::size_t i, std::size_t j) {
      return sys.independent(gs[i], gs[j]) && d.contains(sys.multiply(gs[i], sys.multiply(gs[j], a)));
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!pair_ok(i, j)) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (!pair_ok(i, k) || !pair_ok(j, k)) continue;
          auto top = sys.multiply(gs[i], sys.multiply(gs[j], sys.multiply(gs[k], a)));
          if (!d.contains(top)) return CubeViolation<E>{a, gs[i], gs[j], gs[k]};
        }
      }
  }
  return std::nullopt;
}

/// Every pre-cubic S (|S| ≤ max_dim) with sA ∈ D and stA ∈ D for s ≠ t in S is cubic.
template <GlidingSystem Sys>
std::optional<RegularityViolation<typename Sys::element_type>> check_regularity(
    const Sys& sys, const std::set<typename Sys::element_type>& d, CheckOptions opts = {}) {
  using E = typename Sys::element_type;
  for (const auto& a : d) {
    const auto gs = applicable_glides(sys, a, d);
    const auto n = gs.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        ok[i][j] = ok[j][i] = sys.independent(gs[i], gs[j]) && d.contains(sys.multiply(gs[i], sys.multiply(gs[j], a)));
    std::vector<std::size_t> pick;
    std::optional<RegularityViolation<E>> bad;
    auto sweep = [&](auto&& self, std::size_t from) -> void {
      if (bad) return;
      std::vector<E> s;
      for (auto i : pick) s.push_back(gs[i]);
      if (!is_cubic(sys, s)) {
        bad = RegularityViolation<E>{a, s};
        return;
      }
      if (pick.size() == opts.max_dim) return;
      for (std::size_t c = from; c < n; ++c) {
        bool fits = true;
        for (auto i : pick) fits = fits && ok[i][c];
        if (!fits) continue;
        pick.push_back(c);
        self(self, c + 1);
        pick.pop_back();
      }
    };
    sweep(sweep, 0);
    if (bad) return bad;
  }
  return std::nullopt;
}

struct CurvatureVerdict {
  bool regular = false;
  bool cube_condition = false;
  bool npc = false;
};

/// Regular and cube condition, which together characterize nonpositive curvature.
template <GlidingSystem Sys>
CurvatureVerdict nonpositively_curved(const Sys& sys, const std::set<typename Sys::element_type>& d,
                                      CheckOptions opts = {}) {
  CurvatureVerdict v;
  v.regular = !check_regularity(sys, d, opts).has_value();
  v.cube_condition = !check_cube_condition(sys, d).has_value();
  v.npc = v.regular && v.cube_condition;
  return v;
}

class CubeComplex {
 public:
  struct Neighbor {
    std::size_t vertex;
    EdgeSet glide;
  };

  /// Cells given explicitly; every cube must have all vertices in `vertices`.
  CubeComplex(EvenCycleSystem sys, std::vector<EdgeSet> vertices, const std::vector<BasedCube>& cubes);

  const EvenCycleSystem& system() const noexcept { return sys_; }
  const Hypergraph& hypergraph() const noexcept { return sys_.hypergraph(); }
  const std::vector<EdgeSet>& vertices() const noexcept { return vertices_; }
  const std::set<EdgeSet>& vertex_set() const noexcept { return vertex_set_; }
  bool has_vertex(const EdgeSet& a) const { return vertex_set_.contains(a); }
  std::size_t vertex_index(const EdgeSet& a) const;

  /// Cubes of positive dimension under canonical keys.
  const std::map<CubeKey, BasedCube>& cubes() const noexcept { return cubes_; }
  bool contains(const CubeKey& k) const;
  std::vector<BasedCube> cubes_of_dim(std::size_t k) const;
  /// Number of k-cubes; k = 0 counts vertices.
  std::size_t count(std::size_t k) const;
  /// Largest cube dimension; 0 for a nonempty discrete complex and for the empty one.
  std::size_t dimension() const;

  /// 1-cells at a vertex, ascending by neighbor.
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  friend bool operator==(const CubeComplex& a, const CubeComplex& b);

 private:
  EvenCycleSystem sys_;
  std::vector<EdgeSet> vertices_;
  std::set<EdgeSet> vertex_set_;
  std::map<CubeKey, BasedCube> cubes_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// X_D: every cube of the even-cycle system whose vertices lie in D.
/// Each such cube is the hull of its minimal vertex and its antipode, so a
/// sweep over vertex pairs finds all of them.
CubeComplex build_complex(const EvenCycleSystem& sys, std::vector<EdgeSet> d);

/// X_D for D = the perfect matchings of h.
CubeComplex dimer_complex(const Hypergraph& h);

std::vector<EdgeSet> matching_edges(const std::vector<Matching>& ms);

struct Link {
  EdgeSet base;
  std::vector<EdgeSet> vertices;                 // glides s with sA ∈ D, ascending
  std::vector<std::vector<std::size_t>> simplices;  // index sets, ascending, including the empty one
};

/// Throws if A is not a vertex.
Link link(const CubeComplex& x, const EdgeSet& a);

/// Every set of pairwise adjacent link vertices spans a simplex.
bool is_flag(const Link& l);
bool all_links_flag(const CubeComplex& x);

/// Connected components as sorted vertex lists, ordered by first vertex.
std::vector<std::vector<EdgeSet>> components(const CubeComplex& x);
long long euler_characteristic(const CubeComplex& x);
CubeComplex skeleton(const CubeComplex& x, std::size_t k);

/// A choice of distinguished half for even cycles. A 1-cell {A, sA} points
/// to the endpoint containing the smallest edge of the distinguished half of s.
/// Cycles without an explicit choice use the half holding the smallest edge,
/// unless the orientation is strict.
class Orientation {
 public:
  Orientation() = default;
  static Orientation strict();
  /// Orientation given by one chosen edge e_s ∈ s per cycle.
  static Orientation from_marker_edges(const Hypergraph& h, const std::map<EdgeSet, EdgeIndex>& markers);

  /// Throws unless `half` is a half of the even cycle `cycle`.
  void set_half(const Hypergraph& h, const EdgeSet& cycle, const EdgeSet& half);
  void flip(const Hypergraph& h, const EdgeSet& cycle);

  bool is_strict() const noexcept { return strict_; }
  bool has_explicit(const EdgeSet& cycle) const { return halves_.contains(cycle); }
  const std::map<EdgeSet, EdgeSet>& explicit_halves() const noexcept { return halves_; }

  EdgeSet half(const Hypergraph& h, const EdgeSet& cycle) const;
  EdgeIndex marker(const Hypergraph& h, const EdgeSet& cycle) const;
  /// +1 when moving from `from` along s agrees with the 1-cell direction.
  int sign(const Hypergraph& h, const EdgeSet& from, const EdgeSet& s) const;

 private:
  bool strict_ = false;
  std::map<EdgeSet, EdgeSet> halves_;
};

struct DirectedEdge {
  EdgeSet from;
  EdgeSet to;
  EdgeSet glide;
};

struct DirectedComplex {
  std::vector<DirectedEdge> edges;  // ordered by (min endpoint, max endpoint)
};

/// Directs every 1-cell and asserts that opposite sides of every square
/// agree. Throws on a missing half (strict orientations) or a broken square.
DirectedComplex orient(const CubeComplex& x, const Orientation& o);

/// A walk in the 1-skeleton: a start vertex and the glides traversed.
struct EdgePath {
  EdgeSet start;
  std::vector<EdgeSet> steps;

  EdgeSet end() const;
  std::vector<EdgeSet> vertices() const;
  bool closed() const { return end() == start; }
  EdgePath reversed() const;
  /// Concatenation; throws if this path does not end where `next` starts.
  EdgePath then(const EdgePath& next) const;
  /// Removes immediate backtracks.
  EdgePath free_reduce() const;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Every step is a glide between two vertices of x.
bool is_path_in(const CubeComplex& x, const EdgePath& p);
void require_path_in(const CubeComplex& x, const EdgePath& p);

/// Loops at `base` generating the fundamental group: one per 1-cell of the
/// base's component outside a BFS spanning tree, in cell order.
std::vector<EdgePath> generator_loops(const CubeComplex& x, const EdgeSet& base);

/// Tree path from `base` to `target` in the BFS spanning tree used by generator_loops.
EdgePath tree_path(const CubeComplex& x, const EdgeSet& base, const EdgeSet& target);

/// Cellular inclusion X_E → X_D; identity on shared cells.
class InclusionMap {
 public:
  /// Throws if some cell of `sub` is missing from `super`.
  InclusionMap(const CubeComplex& sub, const CubeComplex& super);
  EdgePath push(const EdgePath& p) const;
  const CubeComplex& source() const noexcept { return *sub_; }
  const CubeComplex& target() const noexcept { return *super_; }

 private:
  const CubeComplex* sub_;
  const CubeComplex* super_;
};

InclusionMap inclusion_map(const CubeComplex& sub, const CubeComplex& super);

}  // namespace glide
