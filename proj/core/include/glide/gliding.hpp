#pragma once

// Gliding systems: a group, a set of glides and an independence relation.
// Generic algorithms are templates over the GlidingSystem concept so tests can
// host other groups; the even-cycle system on 2^E is the shipped instance.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <set>
#include <vector>

#include "glide/incidence.hpp"

namespace glide {

template <class S>
concept GlidingSystem = requires(const S& sys, const typename S::element_type& a) {
  typename S::element_type;
  { sys.multiply(a, a) } -> std::convertible_to<typename S::element_type>;
  { sys.inverse(a) } -> std::convertible_to<typename S::element_type>;
  { sys.identity() } -> std::convertible_to<typename S::element_type>;
  { sys.is_glide(a) } -> std::convertible_to<bool>;
  { sys.independent(a, a) } -> std::convertible_to<bool>;
};

/// [T]: product of the members of T (they commute pairwise when T is pre-cubic).
template <GlidingSystem Sys>
typename Sys::element_type product(const Sys& sys, const std::vector<typename Sys::element_type>& t) {
  auto p = sys.identity();
  for (const auto& s : t) p = sys.multiply(p, s);
  return p;
}

/// Finite set of pairwise independent glides.
template <GlidingSystem Sys>
bool is_precubic(const Sys& sys, const std::vector<typename Sys::element_type>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!sys.is_glide(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !sys.independent(s[i], s[j])) return false;
  }
  return true;
}

namespace detail {
template <GlidingSystem Sys>
std::vector<typename Sys::element_type> subset_products(const Sys& sys,
                                                        const std::vector<typename Sys::element_type>& s) {
  if (s.size() >= 31) throw InvariantViolation("too many directions for an explicit cube");
  std::vector<typename Sys::element_type> out;
  const std::uint32_t n = std::uint32_t{1} << s.size();
  out.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) {
    auto p = sys.identity();
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((mask >> i) & 1u) p = sys.multiply(p, s[i]);
    out.push_back(std::move(p));
  }
  return out;
}

template <class E>
bool all_distinct(const std::vector<E>& xs) {
  if constexpr (std::totally_ordered<E>) {
    return std::set<E>(xs.begin(), xs.end()).size() == xs.size();
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (xs[i] == xs[j]) return false;
    return true;
  }
}
}  // namespace detail

/// Pre-cubic and distinct subsets have distinct products.
template <GlidingSystem Sys>
bool is_cubic(const Sys& sys, const std::vector<typename Sys::element_type>& s) {
  return is_precubic(sys, s) && detail::all_distinct(detail::subset_products(sys, s));
}

/// S_T = (S ∖ T) ∪ T̄, keeping the positions of S.
template <GlidingSystem Sys>
std::vector<typename Sys::element_type> reflect(const Sys& sys, const std::vector<typename Sys::element_type>& s,
                                                const std::vector<typename Sys::element_type>& t) {
  for (const auto& x : t)
    if (std::find(s.begin(), s.end(), x) == s.end()) throw InvariantViolation("reflection set is not a subset");
  auto out = s;
  for (auto& x : out)
    if (std::find(t.begin(), t.end(), x) != t.end()) x = sys.inverse(x);
  return out;
}

/// {[T]·A : T ⊆ S}, indexed by the bitmask of T.
template <GlidingSystem Sys>
std::vector<typename Sys::element_type> cube_vertices(const Sys& sys, const typename Sys::element_type& base,
                                                      const std::vector<typename Sys::element_type>& s) {
  auto out = detail::subset_products(sys, s);
  for (auto& p : out) p = sys.multiply(p, base);
  if (!detail::all_distinct(out)) throw InvariantViolation("cube vertices collide; directions are not cubic");
  return out;
}

/// Glides are even cycles, independence is vertex-disjointness.
class EvenCycleSystem {
 public:
  using element_type = EdgeSet;

  explicit EvenCycleSystem(Hypergraph h) : h_(std::move(h)) {}

  const Hypergraph& hypergraph() const noexcept { return h_; }

  EdgeSet multiply(const EdgeSet& a, const EdgeSet& b) const { return a ^ b; }
  EdgeSet inverse(const EdgeSet& a) const { return a; }
  EdgeSet identity() const { return h_.no_edges(); }
  bool is_glide(const EdgeSet& s) const;
  bool independent(const EdgeSet& s, const EdgeSet& t) const { return glide::independent(h_, s, t); }

  /// Glides s with s·A ∈ D, ascending.
  std::vector<EdgeSet> glides_at(const EdgeSet& a, const std::set<EdgeSet>& d) const;
  /// Every glide of at most max_edges edges.
  std::vector<EdgeSet> all_glides(std::size_t max_edges) const;

 private:
  Hypergraph h_;
};

static_assert(GlidingSystem<EvenCycleSystem>);

EvenCycleSystem even_cycle_system(const Hypergraph& h);

/// s·A; throws if s is not a glide.
EdgeSet glide(const EvenCycleSystem& sys, const EdgeSet& a, const EdgeSet& s);

struct BasedCube {
  EdgeSet base;
  std::vector<EdgeSet> directions;  // pairwise disjoint, ascending

  std::size_t dim() const noexcept { return directions.size(); }
};

/// Lex-least vertex of a cube and the vertex opposite to it.
struct CubeKey {
  EdgeSet min_vertex;
  EdgeSet antipode;

  friend bool operator==(const CubeKey&, const CubeKey&) = default;
  friend std::strong_ordering operator<=>(const CubeKey& a, const CubeKey& b) {
    if (auto c = a.min_vertex <=> b.min_vertex; c != 0) return c;
    return a.antipode <=> b.antipode;
  }
};

BasedCube make_cube(EdgeSet base, std::vector<EdgeSet> directions);
std::vector<EdgeSet> cube_vertices(const EvenCycleSystem& sys, const BasedCube& c);
CubeKey canonical_key(const EvenCycleSystem& sys, const BasedCube& c);
/// The cube a key stands for, based at its minimal vertex.
BasedCube cube_from_key(const EvenCycleSystem& sys, const CubeKey& k);
/// The based cube (A′, S′) with A′ = [T]A, T given by a direction bitmask.
BasedCube rebase(const EvenCycleSystem& sys, const BasedCube& c, std::uint32_t mask);

}  // namespace glide
