#include "glide/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace glide {

struct Hypergraph::Data {
  Mode mode = Mode::Graph;
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<std::vector<VertexIndex>> ends;
  std::vector<std::size_t> listed;
  std::vector<std::vector<EdgeIndex>> incident;
  std::unordered_map<std::string, VertexIndex> vertex_pos;
  std::unordered_map<std::string, EdgeIndex> edge_pos;
  std::uint64_t fingerprint = 0;
};

namespace {

class Fnv {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) mix(c);
    mix(0xff);
  }
  void add(std::uint64_t x) {
    for (int k = 0; k < 8; ++k) mix(static_cast<unsigned char>(x >> (8 * k)));
  }
  std::uint64_t value() const { return h_; }

 private:
  void mix(unsigned char c) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

Hypergraph::Hypergraph() : Hypergraph(std::vector<std::string>{}, std::vector<EdgeSpec>{}) {}

Hypergraph::Hypergraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges, Mode mode) {
  auto d = std::make_shared<Data>();
  d->mode = mode;
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end())
    throw InputError("duplicate vertex id '" + *it + "'");
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id) throw InputError("duplicate edge id '" + edges[i].id + "'");

  d->vertices = std::move(vertices);
  for (std::size_t i = 0; i < d->vertices.size(); ++i)
    d->vertex_pos.emplace(d->vertices[i], static_cast<VertexIndex>(i));
  d->incident.resize(d->vertices.size());

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& spec = edges[i];
    std::vector<VertexIndex> ends;
    for (const auto& v : spec.ends) {
      auto it = d->vertex_pos.find(v);
      if (it == d->vertex_pos.end())
        throw InputError("edge '" + spec.id + "' refers to unknown vertex '" + v + "'");
      ends.push_back(it->second);
    }
    d->listed.push_back(ends.size());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (auto v : ends) d->incident[v].push_back(static_cast<EdgeIndex>(i));
    d->edge_pos.emplace(spec.id, static_cast<EdgeIndex>(i));
    d->edges.push_back(std::move(spec.id));
    d->ends.push_back(std::move(ends));
  }

  Fnv f;
  f.add(static_cast<std::uint64_t>(d->vertices.size()));
  for (const auto& v : d->vertices) f.add(v);
  f.add(static_cast<std::uint64_t>(d->edges.size()));
  for (std::size_t i = 0; i < d->edges.size(); ++i) {
    f.add(d->edges[i]);
    for (auto v : d->ends[i]) f.add(static_cast<std::uint64_t>(v));
    f.add(static_cast<std::uint64_t>(d->listed[i]));
  }
  d->fingerprint = f.value();
  d_ = std::move(d);
}

Hypergraph Hypergraph::from_edges(std::vector<EdgeSpec> edges, Mode mode) {
  std::vector<std::string> vs;
  for (const auto& e : edges) vs.insert(vs.end(), e.ends.begin(), e.ends.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Hypergraph(std::move(vs), std::move(edges), mode);
}

Mode Hypergraph::mode() const noexcept { return d_->mode; }

Hypergraph Hypergraph::with_mode(Mode mode) const {
  auto d = std::make_shared<Data>(*d_);
  d->mode = mode;
  Hypergraph h;
  h.d_ = std::move(d);
  return h;
}

std::size_t Hypergraph::vertex_count() const noexcept { return d_->vertices.size(); }
std::size_t Hypergraph::edge_count() const noexcept { return d_->edges.size(); }
const std::string& Hypergraph::vertex_id(VertexIndex v) const { return d_->vertices.at(v); }
const std::string& Hypergraph::edge_id(EdgeIndex e) const { return d_->edges.at(e); }

std::optional<VertexIndex> Hypergraph::find_vertex(std::string_view id) const {
  auto it = d_->vertex_pos.find(std::string(id));
  if (it == d_->vertex_pos.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::string_view id) const {
  auto it = d_->edge_pos.find(std::string(id));
  if (it == d_->edge_pos.end()) return std::nullopt;
  return it->second;
}

VertexIndex Hypergraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

EdgeIndex Hypergraph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InputError("unknown edge '" + std::string(id) + "'");
}

std::span<const VertexIndex> Hypergraph::ends(EdgeIndex e) const { return d_->ends.at(e); }
std::size_t Hypergraph::listed_end_count(EdgeIndex e) const { return d_->listed.at(e); }
std::span<const EdgeIndex> Hypergraph::incident(VertexIndex v) const { return d_->incident.at(v); }
std::uint64_t Hypergraph::fingerprint() const noexcept { return d_->fingerprint; }

EdgeSet Hypergraph::no_edges() const { return EdgeSet(edge_count(), fingerprint()); }
VertexSet Hypergraph::no_vertices() const { return VertexSet(vertex_count(), fingerprint()); }

EdgeSet Hypergraph::all_edges() const {
  auto s = no_edges();
  for (EdgeIndex e = 0; e < edge_count(); ++e) s.insert(e);
  return s;
}

VertexSet Hypergraph::all_vertices() const {
  auto s = no_vertices();
  for (VertexIndex v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

EdgeSet Hypergraph::edge_set(std::span<const std::string> ids) const {
  auto s = no_edges();
  for (const auto& id : ids) s.insert(edge(id));
  return s;
}

EdgeSet Hypergraph::edge_set(std::initializer_list<std::string_view> ids) const {
  auto s = no_edges();
  for (auto id : ids) s.insert(edge(id));
  return s;
}

VertexSet Hypergraph::vertex_set(std::span<const std::string> ids) const {
  auto s = no_vertices();
  for (const auto& id : ids) s.insert(vertex(id));
  return s;
}

VertexSet Hypergraph::vertex_set(std::initializer_list<std::string_view> ids) const {
  auto s = no_vertices();
  for (auto id : ids) s.insert(vertex(id));
  return s;
}

std::vector<std::string> Hypergraph::edge_ids(const EdgeSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](EdgeIndex e) { out.push_back(edge_id(e)); });
  return out;
}

std::vector<std::string> Hypergraph::vertex_ids(const VertexSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](VertexIndex v) { out.push_back(vertex_id(v)); });
  return out;
}

namespace {
std::string braces(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}
}  // namespace

std::string Hypergraph::format(const EdgeSet& s) const { return braces(edge_ids(s)); }
std::string Hypergraph::format(const VertexSet& s) const { return braces(vertex_ids(s)); }

std::vector<EdgeSpec> Hypergraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    EdgeSpec spec{edge_id(e), {}};
    for (auto v : ends(e)) spec.ends.push_back(vertex_id(v));
    // Preserve loops so a round trip keeps them visible to validation.
    for (std::size_t k = spec.ends.size(); k < listed_end_count(e); ++k) spec.ends.push_back(spec.ends.front());
    out.push_back(std::move(spec));
  }
  return out;
}

const std::vector<std::string>& Hypergraph::vertex_ids() const noexcept { return d_->vertices; }

ValidationReport validate(const Hypergraph& h) {
  ValidationReport r;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto& id = h.edge_id(e);
    const auto n = h.ends(e).size();
    if (n == 0) {
      r.issues.push_back({IssueKind::EmptyBoundary, id, "edge '" + id + "' has no ends"});
      continue;
    }
    if (h.mode() != Mode::Graph) continue;
    if (n < h.listed_end_count(e))
      r.issues.push_back({IssueKind::Loop, id, "edge '" + id + "' is a loop"});
    else if (n != 2)
      r.issues.push_back({IssueKind::WrongArity, id,
                          "edge '" + id + "' has " + std::to_string(n) + " ends, graph mode needs 2"});
  }
  for (VertexIndex v = 0; v < h.vertex_count(); ++v)
    if (h.incident(v).empty())
      r.issues.push_back({IssueKind::IsolatedVertex, h.vertex_id(v), "vertex '" + h.vertex_id(v) + "' is isolated"});
  return r;
}

EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

VertexSet boundary_vertices(const Hypergraph& h, const EdgeSet& s) {
  if (s.ambient() != h.fingerprint() || s.universe() != h.edge_count())
    throw AmbientMismatch("edge set does not belong to this hypergraph");
  auto out = h.no_vertices();
  s.for_each([&](EdgeIndex e) {
    for (auto v : h.ends(e)) out.insert(v);
  });
  return out;
}

bool independent(const Hypergraph& h, const EdgeSet& s, const EdgeSet& t) {
  return !boundary_vertices(h, s).intersects(boundary_vertices(h, t));
}

EdgeSet transport(const EdgeSet& s, const Hypergraph& from, const Hypergraph& to) {
  auto out = to.no_edges();
  s.for_each([&](EdgeIndex e) {
    auto t = to.find_edge(from.edge_id(e));
    if (!t) throw InvariantViolation("edge '" + from.edge_id(e) + "' missing from target hypergraph");
    out.insert(*t);
  });
  return out;
}

VertexSet transport(const VertexSet& s, const Hypergraph& from, const Hypergraph& to) {
  auto out = to.no_vertices();
  s.for_each([&](VertexIndex v) {
    auto t = to.find_vertex(from.vertex_id(v));
    if (!t) throw InvariantViolation("vertex '" + from.vertex_id(v) + "' missing from target hypergraph");
    out.insert(*t);
  });
  return out;
}

Hypergraph delete_vertices(const Hypergraph& h, const VertexSet& removed) {
  std::vector<std::string> vs;
  for (VertexIndex v = 0; v < h.vertex_count(); ++v)
    if (!removed.contains(v)) vs.push_back(h.vertex_id(v));
  std::vector<EdgeSpec> es;
  for (auto& spec : h.edge_specs()) {
    bool touches = false;
    for (auto v : h.ends(h.edge(spec.id))) touches = touches || removed.contains(v);
    if (!touches) es.push_back(std::move(spec));
  }
  return Hypergraph(std::move(vs), std::move(es), h.mode());
}

}  // namespace glide
