#include "harmonium/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>

#include "harmonium/error.hpp"

namespace harmonium {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 0) throw DomainError("negative vertex count");
  for (auto& e : edges) {
    if (e.tail == e.head) throw DomainError("loop at vertex " + std::to_string(e.tail));
    if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_) {
      throw DomainError("edge endpoint outside 1.." + std::to_string(n_));
    }
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.tail - 1)].push_back(e.head - 1);
    adjacency_[static_cast<std::size_t>(e.head - 1)].push_back(e.tail - 1);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.empty(); });
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int root = 0; root < n_; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> component;
    std::queue<int> frontier;
    frontier.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (int w : adjacency_[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.push_back(std::move(component));
  }
  return result;
}

bool Graph::is_connected() const { return n_ > 0 && components().size() == 1; }

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Graph family(Family kind, int n) {
  const int minimum = kind == Family::cycle ? 3 : 2;
  if (n < minimum) {
    throw DomainError(std::string(to_string(kind)) + " graph needs n >= " + std::to_string(minimum));
  }
  std::vector<Edge> edges;
  switch (kind) {
    case Family::path:
      for (int j = 1; j < n; ++j) edges.push_back({j, j + 1});
      break;
    case Family::cycle:
      for (int j = 1; j < n; ++j) edges.push_back({j, j + 1});
      edges.push_back({1, n});
      break;
    case Family::complete:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
      }
      break;
    case Family::star:
      for (int j = 2; j <= n; ++j) edges.push_back({1, j});
      break;
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.tail + shift, e.head + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

IntegerMatrix laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntegerMatrix l(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    l(v, v) = g.degree(v);
    for (int w : g.neighbors(v)) l(v, static_cast<std::size_t>(w)) = -1;
  }
  return l;
}

IntegerMatrix boundary_map(const Graph& g) {
  IntegerMatrix d(static_cast<std::size_t>(g.vertex_count()), g.edge_count());
  for (std::size_t c = 0; c < g.edge_count(); ++c) {
    const Edge& e = g.edges()[c];
    d(static_cast<std::size_t>(e.tail - 1), c) = -1;
    d(static_cast<std::size_t>(e.head - 1), c) = 1;
  }
  return d;
}

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) fields.push_back(s.substr(start, i - start));
  }
  return fields;
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> warnings;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = strip(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (!n) {
      if (fields.size() != 1) throw ParseError(line_no, "expected the vertex count on its own line");
      n = to_int(fields[0]);
      if (!n || *n < 1) throw ParseError(line_no, "vertex count must be a positive integer");
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected an edge 'i j'");
    const auto i = to_int(fields[0]);
    const auto j = to_int(fields[1]);
    if (!i || !j) throw ParseError(line_no, "edge endpoints must be integers");
    if (*i < 1 || *i > *n || *j < 1 || *j > *n) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(*n));
    }
    if (*i == *j) throw ParseError(line_no, "loop edge at vertex " + std::to_string(*i));
    const Edge e{std::min(*i, *j), std::max(*i, *j)};
    if (!seen.insert(e).second) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                         std::to_string(e.tail) + " " + std::to_string(e.head) + " ignored");
      continue;
    }
    edges.push_back(e);
  }
  if (!n) throw ParseError(line_no, "missing vertex count");

  Graph g(*n, std::move(edges));
  if (g.has_isolated_vertex()) {
    warnings.push_back("graph has an isolated vertex; it is harmonic under every coloring");
  }
  return {std::move(g), std::move(warnings)};
}

bool VertexOrientation::is_nonconstant() const {
  const bool has_plus = std::find(signs.begin(), signs.end(), 1) != signs.end();
  const bool has_minus = std::find(signs.begin(), signs.end(), -1) != signs.end();
  return has_plus && has_minus;
}

VertexOrientation VertexOrientation::operator-() const {
  VertexOrientation r = *this;
  for (auto& s : r.signs) s = static_cast<std::int8_t>(-s);
  return r;
}

std::vector<VertexOrientation> nonconstant_vertex_orientations(int n) {
  if (n < 1 || n > 30) throw DomainError("vertex orientations need 1 <= n <= 30");
  std::vector<VertexOrientation> result;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    VertexOrientation eps;
    eps.signs.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) eps.signs[static_cast<std::size_t>(v)] = (mask >> v) & 1U ? -1 : 1;
    result.push_back(std::move(eps));
  }
  return result;
}

std::string to_string(const VertexOrientation& eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.signs.size(); ++i) {
    if (i) s += ", ";
    s += eps.signs[i] > 0 ? "+1" : "-1";
  }
  return s + ")";
}

}  // namespace harmonium
