#include "gndb/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace gndb {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::out_of_range("complete_bipartite: parts must be nonempty");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::out_of_range("cycle: need at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) {
  if (leaves < 1) throw std::out_of_range("star: need at least 1 leaf");
  return complete_bipartite(1, leaves);
}

namespace {

int parse_int(std::string_view tok, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad family parameter in '" + std::string(spec) + "'");
  return value;
}

}  // namespace

Graph make_family(std::string_view spec) {
  size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("family spec needs name:params, got '" + std::string(spec) + "'");
  std::string_view name = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);

  if (name == "bipartite") {
    size_t comma = params.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("bipartite spec needs M,N, got '" + std::string(spec) + "'");
    return complete_bipartite(parse_int(params.substr(0, comma), spec),
                              parse_int(params.substr(comma + 1), spec));
  }
  int n = parse_int(params, spec);
  if (name == "complete") return complete(n);
  if (name == "cycle") return cycle(n);
  if (name == "path") return path(n);
  if (name == "star") return star(n);
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace gndb
