#pragma once

// Brute-force reference computations. They work on edge bitmasks and raw
// incidences only, so they share no algorithm with the library.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "glide/glide.hpp"

namespace glide::test {

using Mask = std::uint32_t;

EdgeSet to_set(const Hypergraph& h, Mask m);
Mask to_mask(const EdgeSet& s);

/// Degree of every vertex in the edge subset.
std::vector<unsigned> degrees(const Hypergraph& h, Mask m);

/// Subsets meeting every vertex exactly once, ascending by EdgeSet order.
std::vector<EdgeSet> brute_perfect_matchings(const Hypergraph& h);

/// Minimal nonempty subsets with every degree 0 or 2.
std::vector<Mask> brute_cycles(const Hypergraph& h);

/// The alternating bipartition of a cycle, found by trying every split; the
/// first part holds the smallest edge. Empty when the cycle is odd.
std::optional<std::pair<Mask, Mask>> brute_halves(const Hypergraph& h, Mask cycle);

/// Vertex sets (sorted) of every cube of dimension at most max_dim with all
/// vertices in d, found by trying every base in d and every set of pairwise
/// disjoint even cycles.
std::set<std::vector<EdgeSet>> brute_cubes(const Hypergraph& h, const std::vector<EdgeSet>& d, std::size_t max_dim);

/// Sorted vertex sets of the cubes of x of dimension at most max_dim.
std::set<std::vector<EdgeSet>> library_cubes(const CubeComplex& x, std::size_t max_dim);

/// First Betti number over Q of the 2-skeleton: dim C1 − rank ∂1 − rank ∂2.
std::size_t h1_rank(const CubeComplex& x);

/// Every set C of pairwise vertex-disjoint odd cycles for which Γ^C is empty
/// or has a perfect matching, with the matchings of Γ^C (one empty matching
/// when Γ^C has no vertices).
struct CensusPair {
  std::vector<EdgeSet> odd_cycles;
  Hypergraph residual;
  std::vector<EdgeSet> matchings;
};
std::vector<CensusPair> brute_census_pairs(const Hypergraph& h);

/// Exact rank of an integer matrix over Q.
std::size_t rational_rank(std::vector<std::vector<long long>> rows);

}  // namespace glide::test
