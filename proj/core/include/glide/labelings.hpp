#pragma once

// The evaluation map from cube points to edge labelings, dimer labelings,
// and the census of labeling components.

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "glide/complex.hpp"

namespace glide {

using Rational = boost::rational<std::int64_t>;

/// A point of a cube: base A, directions S, coordinate x(s) ∈ [0,1] per direction.
struct CubePoint {
  EdgeSet base;
  std::vector<EdgeSet> directions;
  std::vector<Rational> coords;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

/// Label per edge, in edge order.
struct Labeling {
  std::vector<Rational> values;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// ω(A, S, x)(e) = δ_A(e) off ∪S, x(s) on s ∖ A, 1 − x(s) on s ∩ A.
Labeling omega(const Hypergraph& h, const CubePoint& p);

/// At every vertex the nonzero incident labels number one or two and sum to 1;
/// all labels lie in [0,1].
bool is_dimer_labeling(const Hypergraph& h, const Labeling& l);

/// Representative with every coordinate in (0, 1/2]; at 1/2 the base meets the
/// cycle in the half holding its smallest edge. Equivalent points share it.
CubePoint canonical_point(const Hypergraph& h, const CubePoint& p);

/// Inverse of ω on labelings whose fractional support has only even cycles.
/// Throws InvariantViolation on an odd cycle or a labeling outside the image.
CubePoint omega_inverse(const Hypergraph& h, const Labeling& l);

struct LabelingClass {
  std::vector<EdgeSet> odd_cycles;  // C, ascending
  Hypergraph residual_graph;        // Γ^C
  CubePoint residual;               // point of the dimer complex of Γ^C
};

/// Splits off the odd cycles of the fractional support (each must carry 1/2)
/// and inverts ω on the rest. Throws InvariantViolation naming the failure.
LabelingClass classify_labeling(const Hypergraph& h, const Labeling& l);

/// Sets C of pairwise independent odd cycles such that deleting their vertices
/// leaves a graph that is empty or has a perfect matching. Cycles with more
/// than max_cycle_edges edges are not considered (0 means no bound).
std::vector<std::vector<EdgeSet>> component_census(const Hypergraph& h, std::size_t max_cycle_edges = 0);

/// The labeling that is 1/2 on C, δ_M on the rest (M a matching of Γ^C).
Labeling census_labeling(const Hypergraph& h, const std::vector<EdgeSet>& c, const Hypergraph& residual,
                         const EdgeSet& m);

}  // namespace glide
