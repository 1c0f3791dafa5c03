#pragma once

// Words over finite generating sets, right-angled Artin normal forms,
// presentations, abelianization and Tietze simplification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glide/error.hpp"

namespace glide {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // ±1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word letter(std::size_t gen, int exp = 1);
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
/// Cancels adjacent g^ε g^-ε pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);

/// Generators of a right-angled Artin group and which pairs commute.
class RaagSpec {
 public:
  RaagSpec() = default;
  explicit RaagSpec(std::vector<std::string> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  /// Throws on self-pairs or out-of-range indices.
  void set_commuting(std::size_t a, std::size_t b, bool value = true);
  bool commute(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<bool>> commute_;
};

/// Canonical representative of w in the group: cancel every g^ε … g^-ε pair
/// whose intervening letters all commute with g, then take the lexicographically
/// least arrangement by (generator, exponent) among the commutation-equivalent
/// words. Empty exactly when w is trivial.
Word raag_normal_form(const Word& w, const RaagSpec& spec);

/// The relations of a finite presentation are words that equal 1.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  /// Throws if a relator mentions an unknown generator.
  void check() const;
};

std::string format_word(const Word& w, const std::vector<std::string>& names);
/// `gens: a, b; rels: a*b*a^-1*b^-1`
std::string format_presentation(const Presentation& p);

/// Relator-by-generator matrix of exponent sums.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

IntegerMatrix exponent_matrix(const Presentation& p);

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
/// Throws InvariantViolation on 64-bit overflow.
std::vector<std::int64_t> smith_diagonal(IntegerMatrix m);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors greater than 1

  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization_rank(const Presentation& p);

struct TietzeOptions {
  std::size_t budget = 10000;  // maximum number of passes
};

/// Isomorphic presentation obtained by cyclically reducing and deduplicating
/// relators, dropping trivial ones, and eliminating generators that a relator
/// of length one or two expresses through another generator. Scans in index
/// order, so the result is deterministic.
Presentation tietze_simplify(const Presentation& p, TietzeOptions opts = {});

}  // namespace glide
