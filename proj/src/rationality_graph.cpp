#include "weyld/rationality_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "weyld/rationality.hpp"

namespace weyld {

namespace {

void check_gamma_rank(int rank) {
  if (rank < 5 || rank % 2 == 0 || rank > kMaxRank)
    throw std::invalid_argument("Gamma(D_r) requires odd rank >= 5");
}

}  // namespace

std::string GammaVertex::name() const {
  switch (kind) {
    case Kind::W0:
      return "w0";
    case Kind::C:
    case Kind::D: {
      std::string text = kind == Kind::C ? "c" : "d";
      for (int a : subset.members()) {
        text += '_';
        text += std::to_string(a);
      }
      return text;
    }
  }
  return {};
}

SignedPerm GammaVertex::element() const {
  switch (kind) {
    case Kind::W0:
      return longest_element(subset.rank());
    case Kind::C:
      return c_element(subset);
    case Kind::D:
      return d_element(subset);
  }
  throw std::logic_error("invalid vertex kind");
}

int GammaGraph::vertex_id(const GammaVertex& vertex) const {
  const std::uint32_t half = 1u << (rank - 1);
  switch (vertex.kind) {
    case GammaVertex::Kind::W0:
      return 0;
    case GammaVertex::Kind::C:
      return static_cast<int>(vertex.subset.mask());
    case GammaVertex::Kind::D:
      return static_cast<int>(half - 1 + vertex.subset.mask());
  }
  throw std::logic_error("invalid vertex kind");
}

int GammaGraph::adjacency_degree(int id) const {
  return static_cast<int>(adjacency[id].size());
}

GammaGraph build_gamma(int rank) {
  check_gamma_rank(rank);
  GammaGraph graph;
  graph.rank = rank;
  const std::uint32_t half = 1u << (rank - 1);

  graph.vertices.push_back(GammaVertex{GammaVertex::Kind::W0,
                                       SubsetIndex::empty_set(rank)});
  for (std::uint32_t mask = 1; mask < half; ++mask)
    graph.vertices.push_back(GammaVertex{GammaVertex::Kind::C,
                                         SubsetIndex(rank, mask)});
  for (std::uint32_t mask = 1; mask < half; ++mask)
    graph.vertices.push_back(GammaVertex{GammaVertex::Kind::D,
                                         SubsetIndex(rank, mask)});

  for (int half_index = 0; half_index < 2; ++half_index) {
    const bool c_half = half_index == 0;
    for (std::uint32_t mask = 1; mask < half; ++mask) {
      const SubsetIndex subset(rank, mask);
      const int self = c_half ? static_cast<int>(mask)
                              : static_cast<int>(half - 1 + mask);
      for (int a = 1; a <= rank - 1; ++a) {
        if (!toggle_admissible(subset, a)) continue;
        const std::uint32_t other_mask = mask ^ (1u << (a - 1));
        const int other =
            other_mask == 0
                ? 0
                : (c_half ? static_cast<int>(other_mask)
                          : static_cast<int>(half - 1 + other_mask));
        const int label = a <= rank - 2 ? a : (c_half ? rank - 1 : rank);
        graph.edges.push_back(GammaEdge{std::min(self, other),
                                        std::max(self, other), label});
      }
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const GammaEdge& a, const GammaEdge& b) {
              return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
            });
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()),
                    graph.edges.end());

  graph.adjacency.assign(graph.vertices.size(), {});
  for (const GammaEdge& edge : graph.edges) {
    graph.adjacency[edge.from].emplace_back(edge.to, edge.label);
    graph.adjacency[edge.to].emplace_back(edge.from, edge.label);
  }
  for (auto& list : graph.adjacency) std::sort(list.begin(), list.end());
  return graph;
}

int degree(const GammaVertex& vertex) {
  if (vertex.kind == GammaVertex::Kind::W0) return 2;
  int interior = 0;
  for (int a : vertex.subset.members())
    if (a >= 2) ++interior;
  return 1 + interior;
}

std::uint64_t edge_count(int rank) {
  check_gamma_rank(rank);
  return (std::uint64_t{1} << (rank - 1)) +
         static_cast<std::uint64_t>(rank - 2) * (std::uint64_t{1} << (rank - 2));
}

std::vector<GammaVertex> leaves(int rank) {
  check_gamma_rank(rank);
  const SubsetIndex one = SubsetIndex::of(rank, {1});
  return {GammaVertex{GammaVertex::Kind::C, one},
          GammaVertex{GammaVertex::Kind::D, one}};
}

std::vector<int> deletion_word(const SubsetIndex& subset) {
  if (subset.is_empty())
    throw std::invalid_argument("deletion_word requires a non-empty subset");
  const int n = subset.rank() - 1;
  std::vector<int> word;
  SubsetIndex current = subset;
  while (!current.is_empty()) {
    const int m = current.max();
    if (m == n) {
      word.push_back(n);
      current = current.toggled(n);
      continue;
    }
    // omega_m: grow the chain m+1..n downward, toggle m out, shrink upward.
    for (int a = n; a >= m; --a) {
      word.push_back(a);
      current = current.toggled(a);
    }
    for (int a = m + 1; a <= n; ++a) {
      word.push_back(a);
      current = current.toggled(a);
    }
  }
  return word;
}

std::vector<int> distances_from(const GammaGraph& graph, int source_id) {
  if (source_id < 0 || source_id >= static_cast<int>(graph.vertices.size()))
    throw std::invalid_argument("vertex id out of range");
  std::vector<int> distance(graph.vertices.size(), -1);
  std::deque<int> queue;
  distance[source_id] = 0;
  queue.push_back(source_id);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    for (const auto& [neighbor, label] : graph.adjacency[node])
      if (distance[neighbor] < 0) {
        distance[neighbor] = distance[node] + 1;
        queue.push_back(neighbor);
      }
  }
  return distance;
}

std::string gamma_to_dot(const GammaGraph& graph) {
  std::string out = "graph gamma_d" + std::to_string(graph.rank) + " {\n";
  for (const GammaVertex& vertex : graph.vertices)
    out += "  " + vertex.name() + " [shape=circle];\n";
  for (const GammaEdge& edge : graph.edges)
    out += "  " + graph.vertices[edge.from].name() + " -- " +
           graph.vertices[edge.to].name() + " [label=\"s" +
           std::to_string(edge.label) + "\"];\n";
  out += "}\n";
  return out;
}

std::string gamma_to_json(const GammaGraph& graph) {
  nlohmann::json out;
  out["rank"] = graph.rank;
  std::vector<std::string> names;
  names.reserve(graph.vertices.size());
  for (const GammaVertex& vertex : graph.vertices) names.push_back(vertex.name());
  out["vertices"] = names;
  nlohmann::json edges = nlohmann::json::array();
  for (const GammaEdge& edge : graph.edges) {
    nlohmann::json entry;
    entry["source"] = graph.vertices[edge.from].name();
    entry["target"] = graph.vertices[edge.to].name();
    entry["label"] = "s" + std::to_string(edge.label);
    edges.push_back(entry);
  }
  out["edges"] = edges;
  return out.dump(2);
}

std::vector<std::string> edge_validation_failures(const GammaGraph& graph) {
  std::vector<std::string> failures;
  std::vector<SignedPerm> elements;
  std::vector<char> rational(graph.vertices.size(), -1);
  elements.reserve(graph.vertices.size());
  for (const GammaVertex& vertex : graph.vertices)
    elements.push_back(vertex.element());
  auto rational_at = [&](int id) {
    if (rational[id] < 0) rational[id] = is_rational(elements[id]) ? 1 : 0;
    return rational[id] == 1;
  };
  for (const GammaEdge& edge : graph.edges) {
    const std::string tag = graph.vertices[edge.from].name() + " -- " +
                            graph.vertices[edge.to].name() + " [s" +
                            std::to_string(edge.label) + "]";
    const SignedPerm moved =
        simple_reflection(edge.label, graph.rank).compose(elements[edge.from]);
    if (!(moved == elements[edge.to]))
      failures.push_back(tag + ": s_label * u != v");
    if (!rational_at(edge.from) || !rational_at(edge.to))
      failures.push_back(tag + ": endpoint fails the rationality test");
  }
  return failures;
}

std::vector<std::string> missing_edge_failures(const GammaGraph& graph) {
  std::vector<std::string> failures;
  std::map<std::string, int> id_by_one_line;
  std::vector<SignedPerm> elements;
  elements.reserve(graph.vertices.size());
  for (int id = 0; id < static_cast<int>(graph.vertices.size()); ++id) {
    elements.push_back(graph.vertices[id].element());
    id_by_one_line[format_one_line(elements.back())] = id;
  }
  for (int id = 0; id < static_cast<int>(graph.vertices.size()); ++id) {
    for (int a = 1; a <= graph.rank; ++a) {
      const SignedPerm moved = simple_reflection(a, graph.rank).compose(elements[id]);
      if (!is_rational(moved)) continue;
      const std::string tag = graph.vertices[id].name() + " * s" + std::to_string(a);
      const auto found = id_by_one_line.find(format_one_line(moved));
      if (found == id_by_one_line.end()) {
        failures.push_back(tag + ": rational move leaves the vertex set");
        continue;
      }
      const auto& neighbors = graph.adjacency[id];
      const bool present =
          std::find(neighbors.begin(), neighbors.end(),
                    std::make_pair(found->second, a)) != neighbors.end();
      if (!present)
        failures.push_back(tag + ": rational move has no matching edge");
    }
  }
  return failures;
}

}  // namespace weyld
