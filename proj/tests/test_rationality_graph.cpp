#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "weyld/rationality_graph.hpp"

using namespace weyld;

TEST_CASE("vertex and edge counts") {
  const GammaGraph g5 = build_gamma(5);
  CHECK(g5.vertices.size() == 31);
  CHECK(g5.edges.size() == 40);
  CHECK(edge_count(5) == 40);

  const GammaGraph g7 = build_gamma(7);
  CHECK(g7.vertices.size() == 127);
  CHECK(g7.edges.size() == 224);
  CHECK(edge_count(7) == 224);

  CHECK_THROWS_AS(build_gamma(4), std::invalid_argument);
  CHECK_THROWS_AS(build_gamma(3), std::invalid_argument);
}

TEST_CASE("neighbors of w0") {
  const GammaGraph g5 = build_gamma(5);
  const auto& neighbors = g5.adjacency[0];
  REQUIRE(neighbors.size() == 2);
  CHECK(g5.vertices[neighbors[0].first].name() == "c_4");
  CHECK(neighbors[0].second == 4);
  CHECK(g5.vertices[neighbors[1].first].name() == "d_4");
  CHECK(neighbors[1].second == 5);
}

TEST_CASE("degrees match the closed form") {
  for (const int rank : {5, 7}) {
    const GammaGraph graph = build_gamma(rank);
    for (int id = 0; id < static_cast<int>(graph.vertices.size()); ++id)
      CHECK(graph.adjacency_degree(id) == degree(graph.vertices[id]));
  }
  const GammaGraph g5 = build_gamma(5);
  std::map<int, int> histogram;
  for (int id = 0; id < 31; ++id) ++histogram[g5.adjacency_degree(id)];
  CHECK(histogram == std::map<int, int>{{1, 2}, {2, 13}, {3, 12}, {4, 4}});
}

TEST_CASE("leaves") {
  for (const int rank : {5, 7}) {
    const GammaGraph graph = build_gamma(rank);
    std::vector<GammaVertex> found;
    for (int id = 0; id < static_cast<int>(graph.vertices.size()); ++id)
      if (graph.adjacency_degree(id) == 1) found.push_back(graph.vertices[id]);
    CHECK(found == leaves(rank));
  }
}

TEST_CASE("label decomposition at rank 5") {
  const GammaGraph g5 = build_gamma(5);
  std::map<int, int> by_label;
  for (const GammaEdge& edge : g5.edges) ++by_label[edge.label];
  // Eight spin edges per half; the ordinary labels split four per half.
  CHECK(by_label == std::map<int, int>{{1, 8}, {2, 8}, {3, 8}, {4, 8}, {5, 8}});
  int c_half_ordinary = 0;
  for (const GammaEdge& edge : g5.edges)
    if (edge.label <= 3 &&
        g5.vertices[edge.from].kind != GammaVertex::Kind::D &&
        g5.vertices[edge.to].kind == GammaVertex::Kind::C)
      ++c_half_ordinary;
  CHECK(c_half_ordinary == 12);  // labels 1,2,3 with 4 edges each
}

TEST_CASE("deletion words") {
  CHECK(deletion_word(SubsetIndex::parse("4", 5)) == std::vector<int>{4});
  CHECK(deletion_word(SubsetIndex::parse("2", 5)) ==
        std::vector<int>{4, 3, 2, 3, 4});

  // Every word reaches the empty set through admissible toggles, for all
  // subset sizes with n = rank - 1 up to 6.
  for (const int rank : {2, 3, 4, 5, 6, 7}) {
    for (std::uint32_t mask = 1; mask < (1u << (rank - 1)); ++mask) {
      SubsetIndex current(rank, mask);
      for (const int label : deletion_word(current)) {
        REQUIRE(toggle_admissible(current, label));
        current = current.toggled(label);
      }
      CHECK(current.is_empty());
    }
  }
}

TEST_CASE("distances") {
  const GammaGraph g5 = build_gamma(5);
  const std::vector<int> from_w0 = distances_from(g5, 0);
  CHECK(*std::min_element(from_w0.begin(), from_w0.end()) == 0);
  // Connected: every vertex reached.
  CHECK(std::count(from_w0.begin(), from_w0.end(), -1) == 0);
  const GammaVertex c_spin{GammaVertex::Kind::C, SubsetIndex::parse("4", 5)};
  CHECK(from_w0[g5.vertex_id(c_spin)] == 1);

  // The deletion-word bound on the distance to w0.
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    const SubsetIndex subset(5, mask);
    long long bound = 0;
    for (const int member : subset.members()) bound += 2 * (4 - member) + 1;
    const GammaVertex vertex{GammaVertex::Kind::C, subset};
    CHECK(from_w0[g5.vertex_id(vertex)] <= bound);
  }
  CHECK(from_w0[g5.vertex_id({GammaVertex::Kind::C, SubsetIndex::parse("2", 5)})] <= 5);

  // Cross-half distances add up through w0.
  for (std::uint32_t left = 1; left < 16; ++left)
    for (std::uint32_t right = 1; right < 16; ++right) {
      const GammaVertex c{GammaVertex::Kind::C, SubsetIndex(5, left)};
      const GammaVertex d{GammaVertex::Kind::D, SubsetIndex(5, right)};
      const std::vector<int> from_c = distances_from(g5, g5.vertex_id(c));
      CHECK(from_c[g5.vertex_id(d)] == from_c[0] + from_w0[g5.vertex_id(d)]);
    }
}

TEST_CASE("exports are deterministic and well formed") {
  const GammaGraph g5 = build_gamma(5);
  const std::string dot = gamma_to_dot(g5);
  CHECK(dot == gamma_to_dot(build_gamma(5)));
  CHECK(dot.find("graph gamma_d5 {") == 0);
  CHECK(dot.find("w0 -- c_4 [label=\"s4\"];") != std::string::npos);
  CHECK(dot.find("w0 -- d_4 [label=\"s5\"];") != std::string::npos);
  CHECK(dot.find("c_1_3") != std::string::npos);

  const std::string json_text = gamma_to_json(g5);
  CHECK(json_text == gamma_to_json(build_gamma(5)));
  CHECK(json_text.find("\"c_2\"") != std::string::npos);
  CHECK(json_text.find("\"label\": \"s4\"") != std::string::npos);
}

TEST_CASE("edges validate against the group action") {
  for (const int rank : {5, 7}) {
    const GammaGraph graph = build_gamma(rank);
    CHECK(edge_validation_failures(graph).empty());
  }
  CHECK(missing_edge_failures(build_gamma(5)).empty());
}
