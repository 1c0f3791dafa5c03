#pragma once

// Finite hypergraphs and graphs, the power group of edge sets, cycles and
// matchings.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glide/error.hpp"

namespace glide {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

namespace detail {
struct EdgeTag {};
struct VertexTag {};
}  // namespace detail

/// Subset of a fixed, ordered ambient set (the edges or the vertices of one
/// hypergraph). Elements are positions in the ambient id order, so the
/// symmetric difference is a positionwise xor. Sets from different ambients
/// never mix: combining them throws AmbientMismatch.
///
/// The total order is lexicographic on the ascending lists of member
/// positions, which is lexicographic on sorted ids because positions follow
/// id order.
template <class Tag>
class IndexSet {
 public:
  using index_type = std::uint32_t;

  IndexSet() = default;
  IndexSet(std::size_t universe, std::uint64_t ambient)
      : universe_(universe), ambient_(ambient), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t ambient() const noexcept { return ambient_; }

  bool contains(index_type i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1u) != 0;
  }
  void insert(index_type i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void erase(index_type i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  void toggle(index_type i) {
    check_index(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::optional<index_type> first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0)
        return static_cast<index_type>(k * 64 + std::countr_zero(words_[k]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        f(static_cast<index_type>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<index_type> indices() const {
    std::vector<index_type> out;
    for_each([&](index_type i) { out.push_back(i); });
    return out;
  }

  IndexSet& operator^=(const IndexSet& o) {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool intersects(const IndexSet& o) const {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & o.words_[k]) != 0) return true;
    return false;
  }
  bool is_subset_of(const IndexSet& o) const {
    require_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
    return a.ambient_ == b.ambient_ && a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) noexcept {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const auto diff = a.words_[k] ^ b.words_[k];
      if (diff == 0) continue;
      const auto bit = std::countr_zero(diff);
      const bool a_has = ((a.words_[k] >> bit) & 1u) != 0;
      const IndexSet& other = a_has ? b : a;
      const bool other_continues = other.any_above(k, bit);
      // The set holding the first differing element is smaller exactly when
      // the other list still has elements after the common prefix.
      if (a_has) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
      return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(ambient_ * 0x9e3779b97f4a7c15ULL);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  bool any_above(std::size_t word, int bit) const noexcept {
    const auto mask = bit == 63 ? std::uint64_t{0} : (~std::uint64_t{0} << (bit + 1));
    if ((words_[word] & mask) != 0) return true;
    for (std::size_t k = word + 1; k < words_.size(); ++k)
      if (words_[k] != 0) return true;
    return false;
  }
  void check_index(index_type i) const {
    if (i >= universe_) throw std::out_of_range("index outside the ambient set");
  }
  void require_same(const IndexSet& o) const {
    if (ambient_ != o.ambient_ || universe_ != o.universe_)
      throw AmbientMismatch("sets belong to different hypergraphs");
  }

  std::size_t universe_ = 0;
  std::uint64_t ambient_ = 0;
  std::vector<std::uint64_t> words_;
};

using EdgeSet = IndexSet<detail::EdgeTag>;
using VertexSet = IndexSet<detail::VertexTag>;

struct IndexSetHash {
  template <class Tag>
  std::size_t operator()(const IndexSet<Tag>& s) const noexcept {
    return s.hash();
  }
};

/// Graph mode requires exactly two distinct ends per edge and selects the
/// graph-specific algorithms (walking a cycle, simple-cycle search).
/// Hypergraph mode accepts any non-empty boundary and uses the generic ones.
enum class Mode { Graph, Hypergraph };

struct EdgeSpec {
  std::string id;
  std::vector<std::string> ends;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Finite incidence structure (E, V, ∂). Vertices and edges are ordered by
/// id; every index-based structure in the library uses that order.
/// Copies share the immutable incidence data.
class Hypergraph {
 public:
  Hypergraph();
  Hypergraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges, Mode mode = Mode::Graph);
  /// Vertex set inferred from the edge ends.
  static Hypergraph from_edges(std::vector<EdgeSpec> edges, Mode mode = Mode::Graph);

  Mode mode() const noexcept;
  Hypergraph with_mode(Mode mode) const;

  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;
  const std::string& vertex_id(VertexIndex v) const;
  const std::string& edge_id(EdgeIndex e) const;
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  VertexIndex vertex(std::string_view id) const;
  EdgeIndex edge(std::string_view id) const;

  /// ∂e as sorted distinct vertex indices.
  std::span<const VertexIndex> ends(EdgeIndex e) const;
  /// Number of ends as listed in the input; larger than ends(e).size() for loops.
  std::size_t listed_end_count(EdgeIndex e) const;
  std::span<const EdgeIndex> incident(VertexIndex v) const;

  /// Structural hash of ids and incidences; identifies the ambient of sets.
  std::uint64_t fingerprint() const noexcept;

  EdgeSet no_edges() const;
  EdgeSet all_edges() const;
  VertexSet no_vertices() const;
  VertexSet all_vertices() const;
  EdgeSet edge_set(std::span<const std::string> ids) const;
  EdgeSet edge_set(std::initializer_list<std::string_view> ids) const;
  VertexSet vertex_set(std::span<const std::string> ids) const;
  VertexSet vertex_set(std::initializer_list<std::string_view> ids) const;

  std::vector<std::string> edge_ids(const EdgeSet& s) const;
  std::vector<std::string> vertex_ids(const VertexSet& s) const;
  std::string format(const EdgeSet& s) const;
  std::string format(const VertexSet& s) const;

  std::vector<EdgeSpec> edge_specs() const;
  const std::vector<std::string>& vertex_ids() const noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

enum class IssueKind { EmptyBoundary, IsolatedVertex, Loop, WrongArity };

struct ValidationIssue {
  IssueKind kind;
  std::string id;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const Hypergraph& h);

/// Product in the power group 2^E: (A ∪ B) ∖ (A ∩ B).
EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b);

/// ∂s, the vertices adjacent to at least one edge of s.
VertexSet boundary_vertices(const Hypergraph& h, const EdgeSet& s);

/// ∂s ∩ ∂t = ∅.
bool independent(const Hypergraph& h, const EdgeSet& s, const EdgeSet& t);

/// Every vertex meets either zero or exactly two members of s.
bool is_cyclic(const Hypergraph& h, const EdgeSet& s);

enum class Parity { Even, Odd };

struct Cycle {
  EdgeSet edges;
  Parity parity = Parity::Odd;
  /// Present for even cycles; first is the half holding the smallest edge.
  std::optional<std::pair<EdgeSet, EdgeSet>> halves;
  /// Present for even cycles whose edges all have two ends; first is the
  /// v-half holding the smallest vertex.
  std::optional<std::pair<VertexSet, VertexSet>> vhalves;

  bool even() const noexcept { return parity == Parity::Even; }
};

/// Splits a cyclic set into its cycles (components of the share-a-vertex
/// relation), ordered by smallest edge. Throws InvariantViolation if s is not cyclic.
std::vector<Cycle> decompose_cyclic(const Hypergraph& h, const EdgeSet& s);

/// Parity, halves and v-halves of a cycle. Throws if s is not a cycle.
Cycle classify_cycle(const Hypergraph& h, const EdgeSet& s);

/// s is a single cycle (cyclic and connected).
bool is_cycle(const Hypergraph& h, const EdgeSet& s);

/// Every cycle with at most max_edges edges, in canonical order.
/// Graph mode runs a simple-cycle search; hypergraph mode grows cyclic sets
/// by completing vertices of degree one.
std::vector<EdgeSet> enumerate_cycles(const Hypergraph& h, std::size_t max_edges);

bool is_matching(const Hypergraph& h, const EdgeSet& s);

/// A set of edges with pairwise disjoint boundaries, with ∂A cached.
class Matching {
 public:
  Matching(const Hypergraph& h, EdgeSet edges);

  const EdgeSet& edges() const noexcept { return edges_; }
  const VertexSet& boundary() const noexcept { return boundary_; }
  bool is_perfect() const noexcept { return boundary_.size() == boundary_.universe(); }
  std::size_t size() const noexcept { return edges_.size(); }

  friend bool operator==(const Matching& a, const Matching& b) noexcept { return a.edges_ == b.edges_; }
  friend auto operator<=>(const Matching& a, const Matching& b) noexcept { return a.edges_ <=> b.edges_; }

 private:
  EdgeSet edges_;
  VertexSet boundary_;
};

/// All perfect matchings in canonical order.
std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h);

/// The member edge of a incident to v (A_v). Throws if v ∉ ∂A.
EdgeIndex matched_edge(const Hypergraph& h, const Matching& a, VertexIndex v);

struct InducedSubhypergraph {
  Hypergraph graph;  // Γ_A
  Matching matching; // A^p, perfect in graph
};

/// Γ_A: vertices ∂A and every edge whose boundary lies inside ∂A.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const Matching& a);

/// Re-expresses s in another hypergraph by edge id; throws if an id is missing.
EdgeSet transport(const EdgeSet& s, const Hypergraph& from, const Hypergraph& to);
VertexSet transport(const VertexSet& s, const Hypergraph& from, const Hypergraph& to);

/// Γ with the given vertices and every edge touching them removed.
/// Remaining vertices are kept even if they become isolated.
Hypergraph delete_vertices(const Hypergraph& h, const VertexSet& removed);

/// Γ^n: every edge e with n(e) > 0 becomes a path of 2n(e)+1 pieces through
/// 2n(e) new vertices, running from its smaller end to its larger end.
/// Pieces are named "<e>#1".."<e>#<2n+1>", new vertices "<e>@1".."<e>@<2n>".
struct Subdivision {
  Hypergraph source;
  Hypergraph graph;
  std::vector<std::vector<EdgeIndex>> pieces;  // by source edge, in path order
  Matching matching;                            // A_n

  /// All pieces of every edge in s; carries cycles of Γ to cycles of Γ^n.
  EdgeSet lift_set(const EdgeSet& s) const;
  /// The matching B_n: odd pieces of matched edges, even pieces of the rest.
  EdgeSet lift_matching(const EdgeSet& b) const;
  /// Inverse of lift_set on sets made of whole edges; throws otherwise.
  EdgeSet project_set(const EdgeSet& s) const;
};

Subdivision subdivide(const Hypergraph& g, const std::map<std::string, unsigned>& counts, const Matching& a);

}  // namespace glide

template <class Tag>
struct std::hash<glide::IndexSet<Tag>> {
  std::size_t operator()(const glide::IndexSet<Tag>& s) const noexcept { return s.hash(); }
};
