#pragma once

// Dimer and matching groups: hulls, flat triples, presentations of the dimer
// group and groupoid, and the maps between matching groups.

#include <cstddef>
#include <vector>

#include "glide/complex.hpp"
#include "glide/words.hpp"

namespace glide {

/// Same vertex boundary (finite symmetric difference is automatic here).
bool congruent(const Matching& a, const Matching& b);

/// (A, cycles of AB). Throws unless A, B are congruent and AB has only even cycles.
BasedCube hull(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b);

/// Path from A to B through their hull, gliding the cycles of AB in ascending order.
EdgePath hull_path(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b);

/// At every covered vertex at least two of A_v, B_v, C_v coincide.
bool is_flat(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b, const EdgeSet& c);

/// Generators x_{A,B} for ordered pairs of distinct congruent perfect
/// matchings, named "x<i>_<j>" after positions in the canonical matching list.
/// As a groupoid presentation the relators are the flat-triple relations
/// x_{A,B} x_{B,C} x_{A,C}⁻¹ (A ≠ B ≠ C, x_{A,A} read as 1); a group
/// presentation at a basepoint A0 adds the relators x_{A0,A} first.
struct DimerPresentation {
  static constexpr std::size_t no_basepoint = static_cast<std::size_t>(-1);

  Hypergraph graph;
  std::vector<EdgeSet> matchings;
  std::size_t basepoint = no_basepoint;
  Presentation presentation;
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // (A, B) per generator

  std::size_t gen(std::size_t a, std::size_t b) const;
  std::size_t matching_index(const EdgeSet& m) const;
};

DimerPresentation groupoid_presentation(const Hypergraph& h);
/// Throws unless a0 is a perfect matching.
DimerPresentation dimer_presentation(const Hypergraph& h, const EdgeSet& a0);
/// Restriction of a groupoid presentation to the loops at one object.
DimerPresentation vertex_group(const DimerPresentation& groupoid, std::size_t base);

/// ψ: x_{A0,A1} x_{A1,A2} ⋯ along the vertices of a loop at the basepoint.
Word loop_to_word(const DimerPresentation& p, const EdgePath& loop);
/// φ: each x_{A,B}^{±1} becomes the loop A0 → A → B → A0 through hulls.
EdgePath word_to_loop(const DimerPresentation& p, const Word& w);

/// Rewrites a word with the presentation's own relations: replaces x_{A,B}⁻¹
/// by x_{B,A}, contracts x_{A,B} x_{B,C} to x_{A,C} for flat triples and drops
/// generators killed at the basepoint, until nothing changes. Not a normal form.
Word rewrite_flat(const DimerPresentation& p, const Word& w);

/// i_{A,B}(α) = BA · α · AB as hull paths.
EdgePath base_change(const Hypergraph& h, const EdgeSet& a, const EdgeSet& b, const EdgePath& loop);

struct MatchingGroupComplex {
  InducedSubhypergraph sub;
  CubeComplex complex;
  EdgeSet basepoint;
};

/// The dimer complex of Γ_A with basepoint A^p.
MatchingGroupComplex matching_group_complex(const Hypergraph& h, const Matching& a);

/// j_{A′,A}: a loop of Γ_{A′} mapped into Γ_A by B ↦ B ∪ (A ∖ A′).
EdgePath inclusion_j(const Hypergraph& h, const Matching& a_prime, const Matching& a, const EdgePath& loop);

}  // namespace glide
