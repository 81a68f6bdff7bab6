#include "clawtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace clawtree {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > kMaxVertices)
    throw GraphError("graph with " + std::to_string(vertex_count) + " vertices exceeds the " +
                     std::to_string(kMaxVertices) + "-vertex limit");
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  g.matrix_.assign(vertex_count * vertex_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " references a vertex outside 0.." +
                       std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    auto& cell = g.matrix_[static_cast<std::size_t>(e.u) * vertex_count + e.v];
    if (cell) throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    cell = 1;
    g.matrix_[static_cast<std::size_t>(e.v) * vertex_count + e.u] = 1;
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    ++g.edge_count_;
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed: return "malformed";
    case ParseErrorKind::vertex_out_of_range: return "vertex-out-of-range";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::duplicate_edge: return "duplicate-edge";
    case ParseErrorKind::edge_count_mismatch: return "edge-count-mismatch";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

bool is_comment(std::string_view s) {
  auto pos = s.find_first_not_of(" \t");
  return pos != std::string_view::npos && s[pos] == '#';
}

// Exactly two unsigned integers separated by whitespace.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view s) {
  std::uint64_t values[2];
  std::size_t pos = 0;
  for (auto& value : values) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data() + pos) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - s.data());
  }
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  if (pos != s.size()) return std::nullopt;
  return std::make_pair(values[0], values[1]);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t n = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (is_blank(line) || is_comment(line)) {
      if (end == text.size()) break;
      continue;
    }

    auto pair = parse_pair(line);
    if (!pair) throw ParseError(ParseErrorKind::malformed, line_no, std::string(line));
    if (!header) {
      header = pair;
      header_line = line_no;
      n = pair->first;
      if (n > Graph::kMaxVertices)
        throw ParseError(ParseErrorKind::malformed, line_no, "vertex count too large");
    } else {
      auto [a, b] = *pair;
      if (a >= n || b >= n)
        throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                         std::to_string(a) + " " + std::to_string(b) + " with N=" + std::to_string(n));
      if (a == b) throw ParseError(ParseErrorKind::self_loop, line_no, std::to_string(a));
      if (!seen.insert(std::min(a, b) * n + std::max(a, b)).second)
        throw ParseError(ParseErrorKind::duplicate_edge, line_no,
                         std::to_string(a) + " " + std::to_string(b));
      if (edges.size() == header->second)
        throw ParseError(ParseErrorKind::edge_count_mismatch, line_no,
                         "more than " + std::to_string(header->second) + " edges");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(ParseErrorKind::malformed, line_no, "missing \"N M\" header");
  if (edges.size() != header->second)
    throw ParseError(ParseErrorKind::edge_count_mismatch, header_line,
                     "header declares " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

std::optional<ClawWitness> claw_witness(const Graph& g) {
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
            return ClawWitness{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

std::string to_string(const SigmaValue& s) {
  return s.is_infinite() ? std::string("inf") : std::to_string(*s.value);
}

namespace {

struct SigmaSearch {
  const Graph& g;
  std::size_t k;
  // bound[v][j]: sum of the j smallest degrees among vertices v..N-1.
  std::vector<std::vector<std::uint64_t>> bound;
  std::vector<std::uint32_t> blocked;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

  static constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max() / 4;

  SigmaSearch(const Graph& graph, std::size_t k_) : g(graph), k(k_) {
    const std::size_t n = g.vertex_count();
    bound.assign(n + 1, std::vector<std::uint64_t>(k + 1, kUnreachable));
    std::vector<std::uint64_t> degs;
    for (std::size_t v = n + 1; v-- > 0;) {
      if (v < n) degs.insert(std::upper_bound(degs.begin(), degs.end(), g.degree(static_cast<Vertex>(v))),
                             g.degree(static_cast<Vertex>(v)));
      bound[v][0] = 0;
      std::uint64_t acc = 0;
      for (std::size_t j = 1; j <= k && j <= degs.size(); ++j) {
        acc += degs[j - 1];
        bound[v][j] = acc;
      }
    }
    blocked.assign(n, 0);
  }

  void run(Vertex start, std::size_t depth, std::uint64_t sum) {
    if (depth == k) {
      best = std::min(best, sum);
      return;
    }
    for (Vertex v = start; v < g.vertex_count(); ++v) {
      // The bound is monotone in v, so nothing further can improve.
      if (bound[v][k - depth] == kUnreachable || sum + bound[v][k - depth] >= best) return;
      if (blocked[v]) continue;
      for (Vertex w : g.neighbors(v)) ++blocked[w];
      run(v + 1, depth + 1, sum + g.degree(v));
      for (Vertex w : g.neighbors(v)) --blocked[w];
    }
  }
};

}  // namespace

SigmaValue sigma_k(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("sigma_k requires k >= 1");
  if (k > g.vertex_count()) return SigmaValue::infinity();
  SigmaSearch search(g, k);
  search.run(0, 0, 0);
  if (search.best == std::numeric_limits<std::uint64_t>::max()) return SigmaValue::infinity();
  return SigmaValue::finite(search.best);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
  }
  return reached == n;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw GraphError("line graph of an edgeless graph");
  std::map<Edge, Vertex> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index.emplace(edges[i], static_cast<Vertex>(i));
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        out.emplace_back(index.at(Edge(v, nb[i])), index.at(Edge(v, nb[j])));
  }
  std::sort(out.begin(), out.end());
  return Graph::from_edges(edges.size(), out);
}

HypothesisReport check_hypothesis(const Graph& g, std::size_t m, std::size_t n) {
  HypothesisReport r;
  r.m = m;
  r.n = n;
  r.connected = is_connected(g);
  r.claw = claw_witness(g);
  r.claw_free = !r.claw.has_value();
  r.m_constraint_ok = static_cast<std::int64_t>(m) <= ceil_two_thirds(static_cast<std::int64_t>(n));
  r.sigma_value = sigma_k(g, m + 1);
  r.threshold = static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(n) +
                static_cast<std::int64_t>(m) - 1;
  r.satisfied = r.connected && r.claw_free && r.m_constraint_ok && r.sigma_value.at_least(r.threshold);
  return r;
}

}  // namespace clawtree
