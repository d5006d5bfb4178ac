#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyld/root_system.hpp"
#include "weyld/signed_perm.hpp"

namespace weyld {

// The iterated sets nu_0, nu_1, ... of a group element, recorded up to the
// first level that is empty or repeats its predecessor. The element is
// rational exactly when the stable value is empty.
struct NuSequence {
  std::vector<std::vector<Root>> levels;
  const std::vector<Root>& stable() const { return levels.back(); }
};

// The root-poset graph of u: vertices nu_0(u) in canonical root order,
// an arc alpha -> beta whenever u^{-1}(alpha) <= beta (self-loops included).
struct RationalityGraph {
  int rank = 0;
  std::vector<Root> vertices;
  std::vector<Root> preimages;          // u^{-1} of each vertex, positive
  std::vector<std::vector<int>> arcs;   // sorted target positions per vertex

  int arc_count() const;
  std::optional<int> vertex_position(const Root& root) const;
  bool has_arc(int from, int to) const;
};

// A directed cycle in the graph of u, witnessing non-rationality. The roots
// are the cycle's vertices in order; a loop stores the single vertex v with
// u^{-1}(v) <= v, a two-cycle the pair visited alternately.
struct Certificate {
  enum class Kind { Loop, TwoCycle, Cycle };
  Kind kind = Kind::Loop;
  std::vector<Root> roots;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// nu_0(u) = u(Pi_+) intersect Pi_+, canonical order.
std::vector<Root> nu0(const SignedPerm& u);

// Iterates nu_k(u) = u(Adj(nu_{k-1}(u))) intersect Pi_+ until the level is
// empty or equal to its predecessor. A level count beyond #Pi_+ would
// contradict finiteness and throws.
NuSequence nu_sequence(const SignedPerm& u);

RationalityGraph build_graph(const SignedPerm& u);

// True iff the graph of u has no directed cycle. Checks self-loops while
// collecting vertices, then two-cycles, then runs a full DFS; the ladder
// only affects speed, not the verdict.
bool is_rational(const SignedPerm& u);

// A certificate when u is not rational, nothing otherwise. Deterministic:
// the first loop in canonical vertex order, else the first two-cycle, else
// the first back-edge cycle found by DFS in canonical order.
std::optional<Certificate> find_certificate(const SignedPerm& u);

// Checks that the certificate is an actual directed cycle in the graph of u.
bool certificate_holds(const SignedPerm& u, const Certificate& cert);

// Simple indices a with u^{-1}(alpha_a) > 0 and s_a u rational; requires u
// itself rational. Used to confirm the descent step empirically, never
// assumed inside library logic.
std::vector<int> rational_ascents(const SignedPerm& u);

std::string certificate_to_json(const Certificate& cert);

}  // namespace weyld
