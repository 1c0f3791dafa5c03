#include "glide/typing.hpp"

#include <algorithm>

namespace glide {

std::size_t GlideRaag::index_of(const EdgeSet& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw InvariantViolation("glide is not a generator of the Artin group");
  return it->second;
}

GlideRaag raag_of_system(const EvenCycleSystem& sys, std::vector<EdgeSet> glides) {
  std::sort(glides.begin(), glides.end());
  glides.erase(std::unique(glides.begin(), glides.end()), glides.end());
  GlideRaag g;
  std::vector<std::string> names;
  for (const auto& s : glides) {
    if (!sys.is_glide(s)) throw InvariantViolation("not a glide: " + sys.hypergraph().format(s));
    names.push_back("g" + sys.hypergraph().format(s));
  }
  g.spec = RaagSpec(std::move(names));
  for (std::size_t i = 0; i < glides.size(); ++i) {
    g.index.emplace(glides[i], i);
    for (std::size_t j = i + 1; j < glides.size(); ++j)
      if (sys.independent(glides[i], glides[j])) g.spec.set_commuting(i, j);
  }
  g.glides = std::move(glides);
  return g;
}

GlideRaag raag_of_complex(const CubeComplex& x) {
  std::vector<EdgeSet> glides;
  for (const auto& [key, c] : x.cubes())
    if (c.dim() == 1) glides.push_back(c.directions[0]);
  return raag_of_system(x.system(), std::move(glides));
}

RaagSpec raag_edges(const Hypergraph& h) {
  std::vector<std::string> names;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) names.push_back("h" + h.edge_id(e));
  RaagSpec spec(std::move(names));
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    for (EdgeIndex f = e + 1; f < h.edge_count(); ++f) {
      auto a = h.no_edges(), b = h.no_edges();
      a.insert(e);
      b.insert(f);
      if (independent(h, a, b)) spec.set_commuting(e, f);
    }
  return spec;
}

Word typing_word(const CubeComplex& x, const GlideRaag& g, const Orientation& o, const EdgePath& path) {
  require_path_in(x, path);
  Word w;
  auto at = path.start;
  for (const auto& s : path.steps) {
    w.letters.push_back({g.index_of(s), o.sign(x.hypergraph(), at, s)});
    at ^= s;
  }
  return w;
}

Word u_map(const Word& w, const GlideRaag& g, const Orientation& o, const Hypergraph& h) {
  std::vector<Word> images;
  for (const auto& s : g.glides) {
    const auto half = o.half(h, s);
    Word img;
    (s - half).for_each([&](EdgeIndex e) { img.letters.push_back({e, -1}); });
    half.for_each([&](EdgeIndex e) { img.letters.push_back({e, 1}); });
    images.push_back(std::move(img));
  }
  Word out;
  for (const auto& l : w.letters) {
    const auto& img = images.at(l.gen);
    out = concat(out, l.exp > 0 ? img : inverse(img));
  }
  return out;
}

Word half_flip(const Word& w, std::size_t gen) {
  Word out = w;
  for (auto& l : out.letters)
    if (l.gen == gen) l.exp = -l.exp;
  return out;
}

}  // namespace glide
