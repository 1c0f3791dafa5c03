#pragma once

// v-orientations and the permutation shadow of the matching-to-braid map.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glide/complex.hpp"

namespace glide {

/// A distinguished v-half per even cycle. Cycles without an explicit choice
/// take their vertices on the given side when one is set, and otherwise the
/// v-half holding the smallest vertex.
class VOrientation {
 public:
  VOrientation() = default;
  explicit VOrientation(VertexSet side) : side_(std::move(side)) {}

  /// Throws unless `vhalf` is a v-half of the even cycle.
  void set(const Hypergraph& h, const EdgeSet& cycle, const VertexSet& vhalf);
  void flip(const Hypergraph& h, const EdgeSet& cycle);
  VertexSet vhalf(const Hypergraph& h, const EdgeSet& cycle) const;

  const std::map<EdgeSet, VertexSet>& explicit_choices() const noexcept { return choice_; }
  const std::optional<VertexSet>& side() const noexcept { return side_; }

 private:
  std::map<EdgeSet, VertexSet> choice_;
  std::optional<VertexSet> side_;
};

/// Bijection {1..N} → {1..N}, stored zero-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (a ∘ b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// One-based one-line notation, e.g. "(2,3,1)".
  std::string one_line() const;
  /// One-based cycle notation without fixed points, "()" for the identity.
  std::string cycles() const;

 private:
  std::vector<std::size_t> images_;
};

/// A matching whose edges carry the marks 0..N-1.
struct MarkedMatching {
  EdgeSet matching;
  std::map<EdgeIndex, std::size_t> marks;

  /// Marks in ascending edge order.
  static MarkedMatching initial(const EdgeSet& m);
};

/// Glides the matching along s; each marked edge of s hands its mark to the
/// other edge of s at its endpoint in the distinguished v-half.
MarkedMatching glide_marks(const Hypergraph& h, const MarkedMatching& m, const EdgeSet& s, const VOrientation& vo);

/// σθ of a loop: final mark of the edge initially marked i, for each i.
Permutation sigma_theta(const Hypergraph& h, const EdgePath& loop, const VOrientation& vo);

/// V0 side of a 2-colouring; the smallest vertex of each component is in V0.
/// Throws if h is not a bipartite graph.
VOrientation bipartite_v_orientation(const Hypergraph& h);

/// σθ^n: the loop lifted to the subdivision Γⁿ, each lifted cycle oriented by
/// the v-half containing the original distinguished v-half.
Permutation sigma_theta_n(const Hypergraph& h, const EdgePath& loop, const std::map<std::string, unsigned>& counts,
                          const VOrientation& vo);

}  // namespace glide
