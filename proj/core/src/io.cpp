#include "glide/io.hpp"

#include <fstream>
#include <sstream>

namespace glide {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw InputError(where + ": missing field '" + name + "'");
  return j.at(name);
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph graph_from_json(const json& j, Mode mode) {
  if (!j.is_object()) throw InputError("graph: expected an object");
  const auto& edges = field(j, "edges", "graph");
  if (!edges.is_array()) throw InputError("graph.edges: expected an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "graph.edges[" + std::to_string(i) + "]";
    EdgeSpec spec;
    spec.id = string_at(field(edges[i], "id", where), where + ".id");
    spec.ends = strings_at(field(edges[i], "ends", where), where + ".ends");
    if (mode == Mode::Graph && spec.ends.size() != 2)
      throw InputError(where + ".ends: graph mode needs exactly 2 ends, got " + std::to_string(spec.ends.size()));
    specs.push_back(std::move(spec));
  }
  if (j.contains("vertices")) return Hypergraph(strings_at(j.at("vertices"), "graph.vertices"), std::move(specs), mode);
  return Hypergraph::from_edges(std::move(specs), mode);
}

Hypergraph parse_graph(const std::string& text, Mode mode) { return graph_from_json(parse_json(text, "graph"), mode); }

Hypergraph read_graph_file(const std::string& path, Mode mode) { return parse_graph(read_text_file(path), mode); }

json graph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& spec : h.edge_specs()) edges.push_back({{"id", spec.id}, {"ends", spec.ends}});
  return {{"vertices", h.vertex_ids()}, {"edges", edges}};
}

json edge_set_to_json(const Hypergraph& h, const EdgeSet& s) { return h.edge_ids(s); }

EdgeSet edge_set_from_json(const Hypergraph& h, const json& j) {
  const auto ids = strings_at(j, "edge set");
  return h.edge_set(ids);
}

OrientationFile orientation_from_json(const Hypergraph& h, const json& j) {
  if (!j.is_object()) throw InputError("orientation: expected an object");
  OrientationFile out;
  if (j.contains("halves")) {
    const auto& list = j.at("halves");
    if (!list.is_array()) throw InputError("orientation.halves: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto where = "orientation.halves[" + std::to_string(i) + "]";
      const auto cycle = h.edge_set(strings_at(field(list[i], "cycle", where), where + ".cycle"));
      const auto half = h.edge_set(strings_at(field(list[i], "half", where), where + ".half"));
      out.halves.set_half(h, cycle, half);
    }
  }
  if (j.contains("vhalves")) {
    const auto& list = j.at("vhalves");
    if (!list.is_array()) throw InputError("orientation.vhalves: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto where = "orientation.vhalves[" + std::to_string(i) + "]";
      const auto cycle = h.edge_set(strings_at(field(list[i], "cycle", where), where + ".cycle"));
      const auto vhalf = h.vertex_set(strings_at(field(list[i], "vhalf", where), where + ".vhalf"));
      out.vhalves.set(h, cycle, vhalf);
    }
  }
  return out;
}

OrientationFile read_orientation_file(const Hypergraph& h, const std::string& path) {
  return orientation_from_json(h, parse_json(read_text_file(path), "orientation"));
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used != text.size()) throw InputError("bad rational '" + text + "'");
      return Rational(n);
    }
    const auto num = text.substr(0, slash), den = text.substr(slash + 1);
    const auto p = std::stoll(num, &used);
    if (used != num.size()) throw InputError("bad rational '" + text + "'");
    const auto q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw InputError("bad rational '" + text + "'");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw InputError("bad rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Labeling labeling_from_json(const Hypergraph& h, const json& j) {
  if (!j.is_object()) throw InputError("labeling: expected an object of edge id to \"p/q\"");
  Labeling l;
  l.values.assign(h.edge_count(), Rational(0));
  for (const auto& [id, value] : j.items()) {
    const auto e = h.find_edge(id);
    if (!e) throw InputError("labeling." + id + ": unknown edge");
    if (value.is_number_integer()) l.values[*e] = Rational(value.get<std::int64_t>());
    else l.values[*e] = parse_rational(string_at(value, "labeling." + id));
  }
  return l;
}

Labeling read_labeling_file(const Hypergraph& h, const std::string& path) {
  return labeling_from_json(h, parse_json(read_text_file(path), "labeling"));
}

json labeling_to_json(const Hypergraph& h, const Labeling& l) {
  json out = json::object();
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) out[h.edge_id(e)] = format_rational(l.values.at(e));
  return out;
}

json complex_to_json(const CubeComplex& x) {
  const auto& h = x.hypergraph();
  json vertices = json::array();
  for (const auto& v : x.vertices()) vertices.push_back(edge_set_to_json(h, v));
  json cubes = json::array();
  for (const auto& [key, c] : x.cubes()) {
    json dirs = json::array();
    for (const auto& s : c.directions) dirs.push_back(edge_set_to_json(h, s));
    cubes.push_back({{"dim", c.dim()},
                     {"min_vertex", edge_set_to_json(h, key.min_vertex)},
                     {"antipode", edge_set_to_json(h, key.antipode)},
                     {"directions", dirs}});
  }
  return {{"vertices", vertices}, {"cubes", cubes}};
}

CubeComplex complex_from_json(const EvenCycleSystem& sys, const json& j) {
  const auto& h = sys.hypergraph();
  std::vector<EdgeSet> vertices;
  const auto& vs = field(j, "vertices", "complex");
  if (!vs.is_array()) throw InputError("complex.vertices: expected an array");
  for (const auto& v : vs) vertices.push_back(edge_set_from_json(h, v));
  std::vector<BasedCube> cubes;
  const auto& cs = field(j, "cubes", "complex");
  if (!cs.is_array()) throw InputError("complex.cubes: expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto where = "complex.cubes[" + std::to_string(i) + "]";
    const auto base = edge_set_from_json(h, field(cs[i], "min_vertex", where));
    const auto anti = edge_set_from_json(h, field(cs[i], "antipode", where));
    auto cube = cube_from_key(sys, {base, anti});
    const auto& dim = field(cs[i], "dim", where);
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() != cube.dim())
      throw InputError(where + ".dim: does not match the cube's directions");
    cubes.push_back(std::move(cube));
  }
  return CubeComplex(sys, std::move(vertices), cubes);
}

std::string complex_to_dot(const CubeComplex& x, const Orientation& o) {
  const auto& h = x.hypergraph();
  std::ostringstream out;
  out << "digraph dimer {\n";
  for (std::size_t i = 0; i < x.vertices().size(); ++i)
    out << "  v" << i << " [label=\"" << h.format(x.vertices()[i]) << "\"];\n";
  for (const auto& e : orient(x, o).edges)
    out << "  v" << x.vertex_index(e.from) << " -> v" << x.vertex_index(e.to) << " [label=\"" << h.format(e.glide)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

json word_to_json(const Word& w, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& l : w.letters) out.push_back({{"gen", names.at(l.gen)}, {"exp", l.exp}});
  return out;
}

Word word_from_json(const json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) throw InputError("word: expected an array");
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto where = "word[" + std::to_string(i) + "]";
    const auto name = string_at(field(j[i], "gen", where), where + ".gen");
    const auto& exp = field(j[i], "exp", where);
    if (!exp.is_number_integer() || (exp.get<int>() != 1 && exp.get<int>() != -1))
      throw InputError(where + ".exp: expected 1 or -1");
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError(where + ".gen: unknown generator '" + name + "'");
    w.letters.push_back({static_cast<std::size_t>(it - names.begin()), exp.get<int>()});
  }
  return w;
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(word_to_json(r, p.generators));
  return {{"generators", p.generators}, {"relators", rels}};
}

json cube_point_to_json(const Hypergraph& h, const CubePoint& p) {
  json dirs = json::array();
  for (std::size_t i = 0; i < p.directions.size(); ++i)
    dirs.push_back({{"cycle", edge_set_to_json(h, p.directions[i])}, {"x", format_rational(p.coords[i])}});
  return {{"base", edge_set_to_json(h, p.base)}, {"directions", dirs}};
}

}  // namespace glide
