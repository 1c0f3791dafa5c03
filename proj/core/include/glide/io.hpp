#pragma once

// JSON, DOT and text forms of graphs, orientations, labelings, complexes,
// presentations and words.

#include <string>

#include <nlohmann/json.hpp>

#include "glide/braid.hpp"
#include "glide/complex.hpp"
#include "glide/dimer.hpp"
#include "glide/labelings.hpp"
#include "glide/words.hpp"

namespace glide {

/// {"vertices": [...], "edges": [{"id": ..., "ends": [...]}]}; "vertices" may
/// be omitted. Throws InputError naming the offending field.
Hypergraph graph_from_json(const nlohmann::json& j, Mode mode);
Hypergraph parse_graph(const std::string& text, Mode mode);
Hypergraph read_graph_file(const std::string& path, Mode mode);
nlohmann::json graph_to_json(const Hypergraph& h);

nlohmann::json edge_set_to_json(const Hypergraph& h, const EdgeSet& s);
EdgeSet edge_set_from_json(const Hypergraph& h, const nlohmann::json& j);

struct OrientationFile {
  Orientation halves;
  VOrientation vhalves;
};

/// {"halves": [{"cycle": [...], "half": [...]}], "vhalves": [{"cycle": [...], "vhalf": [...]}]}
OrientationFile orientation_from_json(const Hypergraph& h, const nlohmann::json& j);
OrientationFile read_orientation_file(const Hypergraph& h, const std::string& path);

/// "p/q" or an integer string.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// {"edge id": "p/q", ...}; absent edges are 0.
Labeling labeling_from_json(const Hypergraph& h, const nlohmann::json& j);
Labeling read_labeling_file(const Hypergraph& h, const std::string& path);
nlohmann::json labeling_to_json(const Hypergraph& h, const Labeling& l);

nlohmann::json complex_to_json(const CubeComplex& x);
CubeComplex complex_from_json(const EvenCycleSystem& sys, const nlohmann::json& j);
/// Directed 1-skeleton; vertices are named by their edge sets.
std::string complex_to_dot(const CubeComplex& x, const Orientation& o);

nlohmann::json word_to_json(const Word& w, const std::vector<std::string>& names);
Word word_from_json(const nlohmann::json& j, const std::vector<std::string>& names);
nlohmann::json presentation_to_json(const Presentation& p);

nlohmann::json cube_point_to_json(const Hypergraph& h, const CubePoint& p);

std::string read_text_file(const std::string& path);

}  // namespace glide
