#include "glide/words.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace glide {

Word letter(std::size_t gen, int exp) {
  if (exp != 1 && exp != -1) throw InvariantViolation("exponents must be +1 or -1");
  return Word{{Letter{gen, exp}}};
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->gen, -it->exp});
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen && out.letters.back().exp == -l.exp)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  auto r = free_reduce(w);
  std::size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo].gen == r.letters[hi - 1].gen && r.letters[lo].exp == -r.letters[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo), r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

RaagSpec::RaagSpec(std::vector<std::string> generators)
    : generators_(std::move(generators)),
      commute_(generators_.size(), std::vector<bool>(generators_.size(), false)) {}

void RaagSpec::set_commuting(std::size_t a, std::size_t b, bool value) {
  if (a >= size() || b >= size()) throw InvariantViolation("generator index out of range");
  if (a == b) throw InvariantViolation("a generator cannot be listed as commuting with itself");
  commute_[a][b] = commute_[b][a] = value;
}

bool RaagSpec::commute(std::size_t a, std::size_t b) const { return a != b && commute_.at(a).at(b); }

Word raag_normal_form(const Word& w, const RaagSpec& spec) {
  std::vector<Letter> out;
  for (const auto& l : w.letters) {
    if (l.gen >= spec.size()) throw InvariantViolation("unknown generator index " + std::to_string(l.gen));
    bool cancelled = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      const auto& m = out[k];
      if (m.gen == l.gen) {
        if (m.exp == -l.exp) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          cancelled = true;
        }
        break;
      }
      if (!spec.commute(m.gen, l.gen)) break;
    }
    if (!cancelled) out.push_back(l);
  }

  // Lexicographically least linear extension of the dependence order.
  const auto n = out.size();
  std::vector<std::size_t> blockers(n, 0);
  std::vector<std::vector<std::size_t>> after(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!spec.commute(out[i].gen, out[j].gen)) {
        after[i].push_back(j);
        ++blockers[j];
      }
  std::set<std::pair<Letter, std::size_t>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (blockers[i] == 0) ready.insert({out[i], i});
  Word nf;
  while (!ready.empty()) {
    auto [l, i] = *ready.begin();
    ready.erase(ready.begin());
    nf.letters.push_back(l);
    for (auto j : after[i])
      if (--blockers[j] == 0) ready.insert({out[j], j});
  }
  return nf;
}

std::optional<std::size_t> Presentation::find(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

std::size_t Presentation::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown generator '" + name + "'");
}

void Presentation::check() const {
  for (const auto& r : relators)
    for (const auto& l : r.letters)
      if (l.gen >= generators.size()) throw InvariantViolation("relator mentions an unknown generator");
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "*";
    out += names.at(w.letters[i].gen);
    if (w.letters[i].exp < 0) out += "^-1";
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += "; rels: ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generators);
  }
  return out;
}

IntegerMatrix exponent_matrix(const Presentation& p) {
  p.check();
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& l : p.relators[i].letters) m.at(i, l.gen) += l.exp;
  return m;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw InvariantViolation("integer overflow in Smith normal form");
  return r;
}

std::int64_t magnitude(std::int64_t x) {
  if (x == INT64_MIN) throw InvariantViolation("integer overflow in Smith normal form");
  return x < 0 ? -x : x;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(IntegerMatrix m) {
  const auto rows = m.rows, cols = m.cols;
  auto row_op = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) m.at(target, j) = checked_sub(m.at(target, j), checked_mul(q, m.at(source, j)));
  };
  auto col_op = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) m.at(i, target) = checked_sub(m.at(i, target), checked_mul(q, m.at(i, source)));
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };

  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the remaining block becomes the pivot.
      std::int64_t best = 0;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const auto v = magnitude(m.at(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) return diag;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        row_op(i, t, m.at(i, t) / m.at(t, t));
        clean = clean && m.at(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        col_op(j, t, m.at(t, j) / m.at(t, t));
        clean = clean && m.at(t, j) == 0;
      }
      if (!clean) continue;
      std::optional<std::size_t> stray;
      for (std::size_t i = t + 1; i < rows && !stray; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            stray = i;
            break;
          }
      if (!stray) break;
      row_op(t, *stray, -1);
    }
    diag.push_back(magnitude(m.at(t, t)));
  }
  return diag;
}

Abelianization abelianization_rank(const Presentation& p) {
  const auto diag = smith_diagonal(exponent_matrix(p));
  Abelianization a;
  a.free_rank = p.generators.size() - diag.size();
  for (auto d : diag)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

namespace {

// Lexicographically least rotation of w or of its inverse.
Word canonical_relator(const Word& w) {
  Word best = w;
  for (const auto& base : {w, inverse(w)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      Word rot;
      rot.letters.insert(rot.letters.end(), base.letters.begin() + static_cast<std::ptrdiff_t>(r), base.letters.end());
      rot.letters.insert(rot.letters.end(), base.letters.begin(), base.letters.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot.letters < best.letters) best = rot;
    }
  }
  return best;
}

Word substitute(const Word& w, std::size_t gen, const Word& image) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.gen != gen) {
      out.letters.push_back(l);
      continue;
    }
    const auto piece = l.exp > 0 ? image : inverse(image);
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return out;
}

// Drops generator `gen` and shifts higher indices down.
void remove_generator(Presentation& p, std::size_t gen) {
  p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(gen));
  for (auto& r : p.relators)
    for (auto& l : r.letters)
      if (l.gen > gen) --l.gen;
}

bool tidy(Presentation& p) {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> kept;
  for (const auto& r : p.relators) {
    auto c = canonical_relator(cyclic_reduce(r));
    if (c.empty() || !seen.insert(c.letters).second) continue;
    kept.push_back(std::move(c));
  }
  const bool changed = kept != p.relators;
  p.relators = std::move(kept);
  return changed;
}

bool eliminate_one(Presentation& p) {
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto& r = p.relators[i];
    std::optional<std::size_t> gen;
    Word image;
    if (r.size() == 1) {
      gen = r.letters[0].gen;
    } else if (r.size() == 2 && r.letters[0].gen != r.letters[1].gen) {
      // a^ε b^δ = 1 gives b = a^(-εδ); the larger index is eliminated.
      const auto& x = r.letters[0];
      const auto& y = r.letters[1];
      const auto& keep = x.gen < y.gen ? x : y;
      const auto& drop = x.gen < y.gen ? y : x;
      gen = drop.gen;
      image = letter(keep.gen, -keep.exp * drop.exp);
    }
    if (!gen) continue;
    p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& other : p.relators) other = substitute(other, *gen, image);
    remove_generator(p, *gen);
    return true;
  }
  return false;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, TietzeOptions opts) {
  p.check();
  Presentation out = p;
  tidy(out);
  for (std::size_t pass = 0; pass < opts.budget; ++pass) {
    if (!eliminate_one(out)) break;
    tidy(out);
  }
  return out;
}

}  // namespace glide
