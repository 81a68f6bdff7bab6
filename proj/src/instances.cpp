#include "clawtree/instances.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "clawtree/oracle.hpp"

namespace clawtree {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph spider(std::size_t legs, std::size_t length) {
  if (legs < 3 || length < 1) throw std::invalid_argument("spider needs legs >= 3 and length >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < length; ++j) {
      const auto cur = static_cast<Vertex>(1 + i * length + j);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return Graph::from_edges(1 + legs * length, edges);
}

Graph random_connected(std::size_t nv, std::size_t extra, std::uint64_t seed) {
  if (nv == 0) throw std::invalid_argument("random_connected needs at least one vertex");
  const std::size_t max_extra = nv * (nv - 1) / 2 - (nv - 1);
  if (extra > max_extra) throw std::invalid_argument("too many extra edges for " + std::to_string(nv) + " vertices");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::uint8_t> used(nv * nv, 0);
  for (std::size_t v = 1; v < nv; ++v) {
    const auto p = static_cast<Vertex>(rng.bounded(v));
    edges.emplace_back(p, static_cast<Vertex>(v));
    used[p * nv + v] = 1;
  }
  std::vector<Edge> pool;
  for (Vertex a = 0; a < nv; ++a)
    for (Vertex b = a + 1; b < nv; ++b)
      if (!used[a * nv + b]) pool.emplace_back(a, b);
  // Partial Fisher-Yates: the first `extra` slots become the chosen non-edges.
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + rng.bounded(pool.size() - i);
    std::swap(pool[i], pool[j]);
    edges.push_back(pool[i]);
  }
  return Graph::from_edges(nv, edges);
}

Graph cycle_graph(std::size_t nv) {
  if (nv < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nv; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % nv));
  return Graph::from_edges(nv, edges);
}

Graph path_graph(std::size_t nv) {
  if (nv == 0) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < nv; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(nv, edges);
}

Graph complete_graph(std::size_t nv) {
  if (nv == 0) throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < nv; ++a)
    for (Vertex b = a + 1; b < nv; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(nv, edges);
}

Graph net_graph() {
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, edges);
}

Graph four_net_graph() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) edges.emplace_back(a, b);
    edges.emplace_back(a, a + 4);
  }
  return Graph::from_edges(8, edges);
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Graph named(std::string_view name) {
  if (name == "net") return net_graph();
  if (name == "4net") return four_net_graph();
  if (name.size() >= 2) {
    const std::size_t k = parse_size(name.substr(1), "named graph size");
    if (name[0] == 'c') return cycle_graph(k);
    if (name[0] == 'p') return path_graph(k);
    if (name[0] == 'k') return complete_graph(k);
  }
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  switch (kind) {
    case Kind::named: return "named:" + name;
    case Kind::random_connected: return "random:" + std::to_string(size) + ":" + std::to_string(param);
    case Kind::line_of_random: return "line-random:" + std::to_string(size) + ":" + std::to_string(param);
    case Kind::line_of_spider: return "line-spider:" + std::to_string(size) + ":" + std::to_string(param);
  }
  return {};
}

std::string GeneratorSpec::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (char c : to_string()) mix(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GeneratorSpec parse_spec(std::string_view text, std::uint64_t seed) {
  const auto parts = split(text, ':');
  GeneratorSpec spec;
  spec.seed = seed;
  if (parts[0] == "named" && parts.size() == 2) {
    spec.kind = GeneratorSpec::Kind::named;
    spec.name = std::string(parts[1]);
    named(spec.name);  // validate
    return spec;
  }
  if (parts.size() != 3) throw std::invalid_argument("malformed generator spec '" + std::string(text) + "'");
  if (parts[0] == "random")
    spec.kind = GeneratorSpec::Kind::random_connected;
  else if (parts[0] == "line-random")
    spec.kind = GeneratorSpec::Kind::line_of_random;
  else if (parts[0] == "line-spider")
    spec.kind = GeneratorSpec::Kind::line_of_spider;
  else
    throw std::invalid_argument("unknown generator kind '" + std::string(parts[0]) + "'");
  spec.size = parse_size(parts[1], "size");
  spec.param = parse_size(parts[2], "parameter");
  return spec;
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::named: return named(spec.name);
    case GeneratorSpec::Kind::random_connected: return random_connected(spec.size, spec.param, spec.seed);
    case GeneratorSpec::Kind::line_of_random: return line_graph(random_connected(spec.size, spec.param, spec.seed));
    case GeneratorSpec::Kind::line_of_spider: return line_graph(spider(spec.size, spec.param));
  }
  throw std::invalid_argument("unknown generator kind");
}

std::vector<NamedGraph> claw_free_corpus(std::size_t random_count, std::uint64_t seed, std::uint64_t tree_cap) {
  std::vector<NamedGraph> out;
  auto admit = [&](std::string id, Graph g) {
    if (g.vertex_count() == 0 || g.vertex_count() > 12 || !is_connected(g) || claw_witness(g)) return false;
    if (matrix_tree_count(g) > tree_cap) return false;
    for (const NamedGraph& prior : out)
      if (prior.graph == g) return false;
    out.push_back({std::move(id), std::move(g)});
    return true;
  };
  for (const char* name : {"c5", "c6", "k4", "k5", "net", "4net"}) admit(name, named(name));
  for (std::size_t legs = 3; legs <= 5; ++legs)
    for (std::size_t length = 1; length <= 2; ++length)
      admit("line-spider:" + std::to_string(legs) + ":" + std::to_string(length), line_graph(spider(legs, length)));

  // Source graphs with 4..8 vertices; line graphs of denser ones exceed the caps.
  SplitMix64 rng(seed);
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; accepted < random_count; ++attempt) {
    if (attempt > 1000 * (random_count + 1)) throw std::runtime_error("corpus generation stalled");
    const std::size_t nv = 4 + rng.bounded(5);
    const std::size_t max_extra = nv * (nv - 1) / 2 - (nv - 1);
    const std::size_t extra = rng.bounded(std::min<std::size_t>(max_extra, 4) + 1);
    const std::uint64_t graph_seed = rng.next();
    Graph src = random_connected(nv, extra, graph_seed);
    if (src.edge_count() == 0) continue;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(graph_seed));
    if (admit("line-random:" + std::to_string(nv) + ":" + std::to_string(extra) + ":" + buf, line_graph(src)))
      ++accepted;
  }
  return out;
}

}  // namespace clawtree
