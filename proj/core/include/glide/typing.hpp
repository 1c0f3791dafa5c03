#pragma once

// Typing homomorphisms into the right-angled Artin group on glides, and the
// map u into the right-angled Artin group on edges.

#include <map>
#include <vector>

#include "glide/complex.hpp"
#include "glide/words.hpp"

namespace glide {

/// The Artin group on a finite list of glides; independent glides commute.
struct GlideRaag {
  std::vector<EdgeSet> glides;  // ascending
  RaagSpec spec;
  std::map<EdgeSet, std::size_t> index;

  std::size_t index_of(const EdgeSet& s) const;
};

GlideRaag raag_of_system(const EvenCycleSystem& sys, std::vector<EdgeSet> glides);
/// Glides labelling the 1-cells of x.
GlideRaag raag_of_complex(const CubeComplex& x);

/// Generators h_e per edge in edge order; vertex-disjoint edges commute.
RaagSpec raag_edges(const Hypergraph& h);

/// μ(α): per step, the glide's generator with exponent +1 when the step
/// follows the 1-cell's direction.
Word typing_word(const CubeComplex& x, const GlideRaag& g, const Orientation& o, const EdgePath& path);

/// u(g_s) = ∏_{e ∈ s∖s′} h_e⁻¹ ∏_{e ∈ s′} h_e, extended to words.
Word u_map(const Word& w, const GlideRaag& g, const Orientation& o, const Hypergraph& h);

/// Inverts every occurrence of one generator.
Word half_flip(const Word& w, std::size_t gen);

}  // namespace glide
