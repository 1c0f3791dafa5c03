#include "glide_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "glide/glide.hpp"

namespace glide::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string mode = "graph";
  std::string format = "text";
  std::string orientation;
  std::size_t max_dim = 3;
  std::string basepoint;
  std::string subdivide;
  std::string loop;
  bool bipartite = false;
  std::string labeling;
  unsigned max_total = 2;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Hypergraph load(const Config& c) {
  const auto mode = c.mode == "hypergraph" ? Mode::Hypergraph : Mode::Graph;
  auto h = read_graph_file(c.input, mode);
  const auto report = validate(h);
  if (!report.ok()) {
    std::string msg = c.input + ": invalid input";
    for (const auto& issue : report.issues) msg += "\n  " + issue.message;
    throw InputError(msg);
  }
  return h;
}

OrientationFile load_orientation(const Config& c, const Hypergraph& h) {
  if (c.orientation.empty()) return {};
  return read_orientation_file(h, c.orientation);
}

std::map<std::string, unsigned> parse_counts(const std::string& text) {
  std::map<std::string, unsigned> out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--subdivide: expected edge=count, got '" + item + "'");
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      out[item.substr(0, eq)] = static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
      throw InputError("--subdivide: bad count in '" + item + "'");
    }
  }
  return out;
}

EdgeSet basepoint(const Config& c, const Hypergraph& h, const std::vector<EdgeSet>& matchings) {
  if (c.basepoint.empty()) {
    if (matchings.empty()) throw InvariantViolation("the graph has no perfect matching");
    return matchings.front();
  }
  const auto a = h.edge_set(split(c.basepoint, ','));
  if (!Matching(h, a).is_perfect()) throw InvariantViolation("basepoint is not a perfect matching");
  return a;
}

std::string ids(const Hypergraph& h, const EdgeSet& s) { return h.format(s); }

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_matchings(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto ms = enumerate_perfect_matchings(h);
  if (c.format == "json") {
    json list = json::array();
    for (const auto& m : ms) list.push_back(edge_set_to_json(h, m.edges()));
    print(out, {{"count", ms.size()}, {"matchings", list}});
    return ok;
  }
  out << "count: " << ms.size() << "\n";
  for (const auto& m : ms) out << ids(h, m.edges()) << "\n";
  return ok;
}

json verdict_json(const CurvatureVerdict& v) {
  return {{"regular", v.regular}, {"cube_condition", v.cube_condition}, {"npc", v.npc}};
}

int cmd_complex(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto x = dimer_complex(h);
  const auto verdict = nonpositively_curved(x.system(), x.vertex_set(), CheckOptions{c.max_dim});
  const auto chi = euler_characteristic(x);
  const auto comps = components(x).size();
  if (c.format == "dot") {
    out << complex_to_dot(x, load_orientation(c, h).halves);
    return ok;
  }
  if (c.format == "json") {
    auto j = complex_to_json(x);
    j["verdict"] = verdict_json(verdict);
    j["euler_characteristic"] = chi;
    j["components"] = comps;
    j["dimension"] = x.dimension();
    print(out, j);
    return ok;
  }
  out << "vertices: " << x.count(0) << "\n";
  for (std::size_t k = 1; k <= x.dimension(); ++k) out << k << "-cubes: " << x.count(k) << "\n";
  out << "dimension: " << x.dimension() << "\n";
  out << "euler_characteristic: " << chi << "\n";
  out << "components: " << comps << "\n";
  out << "regular: " << std::boolalpha << verdict.regular << "\n";
  out << "cube_condition: " << verdict.cube_condition << "\n";
  out << "npc: " << verdict.npc << "\n";
  return ok;
}

int cmd_curvature(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto x = dimer_complex(h);
  const auto& sys = x.system();
  const auto& d = x.vertex_set();
  const auto verdict = nonpositively_curved(sys, d, CheckOptions{c.max_dim});
  const auto square = check_square_condition(sys, d);
  const auto flag = all_links_flag(x);
  if (c.format == "json") {
    auto j = verdict_json(verdict);
    j["square_condition"] = !square.has_value();
    j["links_flag"] = flag;
    print(out, j);
    return ok;
  }
  out << std::boolalpha;
  out << "regular: " << verdict.regular << "\n";
  out << "cube_condition: " << verdict.cube_condition << "\n";
  out << "square_condition: " << !square.has_value() << "\n";
  out << "links_flag: " << flag << "\n";
  out << "npc: " << verdict.npc << "\n";
  return ok;
}

int cmd_presentation(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto ms = matching_edges(enumerate_perfect_matchings(h));
  const auto a0 = basepoint(c, h, ms);
  const auto p = dimer_presentation(h, a0);
  const auto simple = tietze_simplify(p.presentation);
  const auto ab = abelianization_rank(simple);
  if (c.format == "json") {
    json matchings = json::array();
    for (const auto& m : p.matchings) matchings.push_back(edge_set_to_json(h, m));
    print(out, {{"matchings", matchings},
                {"basepoint", p.basepoint},
                {"raw", presentation_to_json(p.presentation)},
                {"simplified", presentation_to_json(simple)},
                {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", ab.torsion}}}});
    return ok;
  }
  for (std::size_t i = 0; i < p.matchings.size(); ++i) out << "matching " << i << ": " << ids(h, p.matchings[i]) << "\n";
  out << "basepoint: " << p.basepoint << "\n";
  out << "raw: " << format_presentation(p.presentation) << "\n";
  out << "simplified: " << format_presentation(simple) << "\n";
  out << "abelianization: rank " << ab.free_rank << ", torsion [";
  for (std::size_t i = 0; i < ab.torsion.size(); ++i) out << (i ? ", " : "") << ab.torsion[i];
  out << "]\n";
  return ok;
}

std::vector<EdgePath> requested_loops(const Config& c, const Hypergraph& h, const CubeComplex& x, const EdgeSet& a0) {
  if (c.loop.empty()) return generator_loops(x, a0);
  EdgePath p{a0, {}};
  for (const auto& step : split(c.loop, ';')) p.steps.push_back(h.edge_set(split(step, ',')));
  require_path_in(x, p);
  if (!p.closed()) throw InvariantViolation("--loop does not return to the basepoint");
  return {p};
}

std::string format_loop(const Hypergraph& h, const EdgePath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.steps.size(); ++i) s += (i ? " " : "") + ids(h, p.steps[i]);
  return s.empty() ? "(empty)" : s;
}

VOrientation v_orientation(const Config& c, const Hypergraph& h) {
  if (c.bipartite) return bipartite_v_orientation(h);
  return load_orientation(c, h).vhalves;
}

int cmd_braid(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto x = dimer_complex(h);
  const auto a0 = basepoint(c, h, x.vertices());
  const auto vo = v_orientation(c, h);
  const auto counts = parse_counts(c.subdivide);
  json results = json::array();
  for (const auto& loop : requested_loops(c, h, x, a0)) {
    const auto perm = counts.empty() ? sigma_theta(h, loop, vo) : sigma_theta_n(h, loop, counts, vo);
    if (c.format == "json") {
      json steps = json::array();
      for (const auto& s : loop.steps) steps.push_back(edge_set_to_json(h, s));
      results.push_back({{"loop", steps}, {"one_line", perm.one_line()}, {"cycles", perm.cycles()}});
    } else {
      out << format_loop(h, loop) << " -> " << perm.one_line() << " " << perm.cycles() << "\n";
    }
  }
  if (c.format == "json") print(out, {{"basepoint", edge_set_to_json(h, a0)}, {"loops", results}});
  return ok;
}

int cmd_labelings(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto census = component_census(h);
  if (c.format == "json") {
    json list = json::array();
    for (const auto& cs : census) {
      json entry = json::array();
      for (const auto& s : cs) entry.push_back(edge_set_to_json(h, s));
      list.push_back(entry);
    }
    print(out, {{"components", census.size()}, {"census", list}});
    return ok;
  }
  out << "components: " << census.size() << "\n";
  for (const auto& cs : census) {
    out << "C = [";
    for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? ", " : "") << ids(h, cs[i]);
    out << "]\n";
  }
  return ok;
}

int cmd_classify(const Config& c, std::ostream& out) {
  const auto h = load(c);
  if (c.labeling.empty()) throw InputError("classify needs --labeling FILE");
  const auto l = read_labeling_file(h, c.labeling);
  const auto cls = classify_labeling(h, l);
  if (c.format == "json") {
    json odd = json::array();
    for (const auto& s : cls.odd_cycles) odd.push_back(edge_set_to_json(h, s));
    print(out, {{"odd_cycles", odd},
                {"residual_graph", graph_to_json(cls.residual_graph)},
                {"residual", cube_point_to_json(cls.residual_graph, cls.residual)}});
    return ok;
  }
  out << "C = [";
  for (std::size_t i = 0; i < cls.odd_cycles.size(); ++i) out << (i ? ", " : "") << ids(h, cls.odd_cycles[i]);
  out << "]\n";
  const auto& g = cls.residual_graph;
  if (g.vertex_count() == 0) {
    out << "residual: empty\n";
    return ok;
  }
  out << "residual base: " << g.format(cls.residual.base) << "\n";
  for (std::size_t i = 0; i < cls.residual.directions.size(); ++i)
    out << "residual direction: " << g.format(cls.residual.directions[i]) << " x="
        << format_rational(cls.residual.coords[i]) << "\n";
  return ok;
}

// Every map n on the edges with total at most `bound`, in lexicographic order of counts.
void for_each_count(const Hypergraph& h, unsigned bound, const std::function<void(const std::map<std::string, unsigned>&)>& f) {
  std::vector<unsigned> n(h.edge_count(), 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n.size()) {
      std::map<std::string, unsigned> m;
      for (std::size_t e = 0; e < n.size(); ++e)
        if (n[e]) m[h.edge_id(static_cast<EdgeIndex>(e))] = n[e];
      f(m);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      n[i] = k;
      self(self, i + 1, left - k);
    }
    n[i] = 0;
  };
  rec(rec, 0, bound);
}

int cmd_kernel_experiment(const Config& c, std::ostream& out) {
  const auto h = load(c);
  const auto x = dimer_complex(h);
  const auto a0 = basepoint(c, h, x.vertices());
  const auto vo = v_orientation(c, h);
  json results = json::array();
  for (const auto& loop : requested_loops(c, h, x, a0)) {
    std::size_t tried = 0;
    std::optional<std::map<std::string, unsigned>> witness;
    std::string witness_perm;
    for_each_count(h, c.max_total, [&](const std::map<std::string, unsigned>& n) {
      if (witness) return;
      ++tried;
      const auto p = sigma_theta_n(h, loop, n, vo);
      if (!p.is_identity()) {
        witness = n;
        witness_perm = p.one_line();
      }
    });
    std::string wtext;
    if (witness) {
      for (const auto& [e, k] : *witness) wtext += (wtext.empty() ? "" : ",") + e + "=" + std::to_string(k);
      if (wtext.empty()) wtext = "0";
    }
    if (c.format == "json") {
      json steps = json::array();
      for (const auto& s : loop.steps) steps.push_back(edge_set_to_json(h, s));
      json r = {{"loop", steps}, {"tried", tried}, {"in_all_kernels", !witness}};
      if (witness) r["witness"] = {{"subdivision", wtext}, {"one_line", witness_perm}};
      results.push_back(r);
    } else {
      out << format_loop(h, loop) << ": ";
      if (witness) out << "nontrivial at n = " << wtext << " " << witness_perm << "\n";
      else out << "trivial for all " << tried << " subdivisions with |n| <= " << c.max_total << "\n";
    }
  }
  if (c.format == "json") print(out, {{"max_total", c.max_total}, {"loops", results}});
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimer and glide complexes of finite graphs", "glidectl"};
  app.require_subcommand(1);
  Config cfg;
  int (*action)(const Config&, std::ostream&) = nullptr;

  auto common = [&](CLI::App* sub, bool formats_dot) {
    sub->add_option("input", cfg.input, "graph JSON file")->required();
    sub->add_option("--mode", cfg.mode, "graph or hypergraph")->check(CLI::IsMember({"graph", "hypergraph"}));
    if (formats_dot)
      sub->add_option("--format", cfg.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    else
      sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* matchings = app.add_subcommand("matchings", "list perfect matchings");
  common(matchings, false);
  matchings->callback([&] { action = cmd_matchings; });

  auto* complex = app.add_subcommand("complex", "export the dimer complex with its curvature verdict");
  common(complex, true);
  complex->add_option("--orientation", cfg.orientation, "orientation JSON file (for dot)");
  complex->add_option("--max-dim", cfg.max_dim, "largest set size in the regularity sweep");
  complex->callback([&] { action = cmd_complex; });

  auto* curvature = app.add_subcommand("curvature", "check square, cube, regularity and flag conditions");
  common(curvature, false);
  curvature->add_option("--max-dim", cfg.max_dim, "largest set size in the regularity sweep");
  curvature->callback([&] { action = cmd_curvature; });

  auto* presentation = app.add_subcommand("presentation", "dimer group presentation and abelianization");
  common(presentation, false);
  presentation->add_option("--basepoint", cfg.basepoint, "comma-separated edge ids of a perfect matching");
  presentation->callback([&] { action = cmd_presentation; });

  auto* braid = app.add_subcommand("braid", "permutations of marked matchings along loops");
  common(braid, false);
  braid->add_option("--orientation", cfg.orientation, "orientation JSON file");
  braid->add_option("--basepoint", cfg.basepoint, "comma-separated edge ids of a perfect matching");
  braid->add_option("--loop", cfg.loop, "cycles separated by ';', edge ids by ','");
  braid->add_option("--subdivide", cfg.subdivide, "edge=count,... subdivision counts");
  braid->add_flag("--bipartite", cfg.bipartite, "use the bipartite v-orientation");
  braid->callback([&] { action = cmd_braid; });

  auto* labelings = app.add_subcommand("labelings", "census of dimer labeling components");
  common(labelings, false);
  labelings->callback([&] { action = cmd_labelings; });

  auto* classify = app.add_subcommand("classify", "odd cycles and residual cube point of a labeling");
  common(classify, false);
  classify->add_option("--labeling", cfg.labeling, "labeling JSON file")->required();
  classify->callback([&] { action = cmd_classify; });

  auto* kernel = app.add_subcommand("kernel-experiment", "search subdivisions for nontrivial permutations");
  common(kernel, false);
  kernel->add_option("--orientation", cfg.orientation, "orientation JSON file");
  kernel->add_option("--basepoint", cfg.basepoint, "comma-separated edge ids of a perfect matching");
  kernel->add_option("--loop", cfg.loop, "cycles separated by ';', edge ids by ','");
  kernel->add_option("--max-total", cfg.max_total, "bound on the total subdivision count");
  kernel->add_flag("--bipartite", cfg.bipartite, "use the bipartite v-orientation");
  kernel->callback([&] { action = cmd_kernel_experiment; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  try {
    return action(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const Error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return invariant_violation;
  }
}

}  // namespace glide::cli
