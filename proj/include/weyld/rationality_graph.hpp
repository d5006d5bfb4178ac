#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weyld/cyclic_family.hpp"
#include "weyld/signed_perm.hpp"

namespace weyld {

// A vertex of Gamma(D_r): the longest element or a family element with its
// subset. Vertex names follow the export convention "w0", "c_1_3", "d_2".
struct GammaVertex {
  enum class Kind { W0, C, D };
  Kind kind = Kind::W0;
  SubsetIndex subset;

  std::string name() const;
  SignedPerm element() const;

  friend bool operator==(const GammaVertex&, const GammaVertex&) = default;
};

struct GammaEdge {
  int from = 0;  // vertex ids with from < to
  int to = 0;
  int label = 0;  // simple-reflection index

  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

// Gamma(D_r) built from the subset-toggle rules; vertices are ordered w_0
// first, then the c-half by ascending bitmask, then the d-half the same way,
// so every export is reproducible.
struct GammaGraph {
  int rank = 0;
  std::vector<GammaVertex> vertices;
  std::vector<GammaEdge> edges;                            // sorted by (from, to)
  std::vector<std::vector<std::pair<int, int>>> adjacency; // (neighbor, label)

  int vertex_id(const GammaVertex& vertex) const;
  int adjacency_degree(int id) const;
};

// Construction never touches the group: vertices are the 2^r - 1 family
// labels and edges come from the toggle rules (ordinary toggle of a needs
// a+1 in I; the spin toggle of r-1 is always allowed, labelled r-1 on the
// c-half and r on the d-half).
GammaGraph build_gamma(int rank);

// Closed-form degree: 2 for w_0, else 1 + #(I intersect {2..r-1}).
int degree(const GammaVertex& vertex);

// Closed-form edge total 2^{r-1} + (r-2) 2^{r-2}.
std::uint64_t edge_count(int rank);

// The two valency-one vertices.
std::vector<GammaVertex> leaves(int rank);

// Toggle labels carrying I to the empty set inside the abstract subset
// graph, deleting successive maxima; every step is admissible.
std::vector<int> deletion_word(const SubsetIndex& subset);

// Breadth-first distances from a vertex id; -1 marks unreachable vertices
// (none occur, the graph is connected).
std::vector<int> distances_from(const GammaGraph& graph, int source_id);

std::string gamma_to_dot(const GammaGraph& graph);
std::string gamma_to_json(const GammaGraph& graph);

// Group-theoretic audit of the constructed graph. The first returns a
// description of every edge (u, v, label a) where s_a u != v or either side
// fails the rationality test; the second reports rational simple moves that
// have no matching edge. Both are empty on a correct build.
std::vector<std::string> edge_validation_failures(const GammaGraph& graph);
std::vector<std::string> missing_edge_failures(const GammaGraph& graph);

}  // namespace weyld
