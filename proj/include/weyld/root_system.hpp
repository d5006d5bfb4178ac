#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyld {

inline constexpr int kMaxRank = 15;
inline constexpr int kMaxPositiveRoots = kMaxRank * (kMaxRank - 1);

// Kind of a type-D root: e_i - e_j or e_i + e_j with i < j.
enum class RootKind : std::uint8_t { Minus, Plus };

// A root stored as a positive root (1 <= i < j <= rank) plus an overall
// sign, so that images of positive roots under group elements stay in one
// representation. Functions that promise positive roots return sign = +1.
struct Root {
  RootKind kind = RootKind::Minus;
  std::uint8_t i = 1;
  std::uint8_t j = 2;
  std::int8_t sign = +1;

  friend bool operator==(const Root&, const Root&) = default;
};

inline Root minus_root(int i, int j) {
  return Root{RootKind::Minus, static_cast<std::uint8_t>(i),
              static_cast<std::uint8_t>(j), +1};
}
inline Root plus_root(int i, int j) {
  return Root{RootKind::Plus, static_cast<std::uint8_t>(i),
              static_cast<std::uint8_t>(j), +1};
}
// Simple root alpha_a: e_a - e_{a+1} for a < rank, e_{rank-1} + e_rank for a = rank.
Root simple_root(int a, int rank);

// Canonical position of a positive root: the whole Minus block first, then
// the Plus block, each lexicographic in (i, j). Downstream graph output is
// ordered by this index, so it must never change.
int root_index(const Root& root, int rank);
Root root_from_index(int index, int rank);
bool root_less(const Root& a, const Root& b, int rank);

// All r(r-1) positive roots in canonical order. Throws for rank < 2.
std::vector<Root> positive_roots(int rank);

// Coefficients (m_1, ..., m_r) of a coordinate vector in the simple-root
// basis. The two spin coefficients are computed doubled and divided at the
// end; odd parity means x is not in the root lattice and throws.
std::vector<long long> coefficient_vector(const std::vector<long long>& x, int rank);

// Root-poset order: rho <= eta iff eta - rho has non-negative coefficients
// on every simple root. This is the single source of truth for the order;
// the closed-form tests below exist only as an independent cross-check.
bool root_leq(const Root& rho, const Root& eta, int rank);

// Case-split order tests for the pair shapes they cover, nullopt otherwise:
//   e_a-e_b <= e_c-e_d        iff  c <= a < b <= d
//   e_b+e_r <= e_a+e_r        iff  a <= b
//   e_b+e_r <= e_a+e_{r-1}    iff  a <= b
//   e_a+e_r <= e_c-e_d        never
std::optional<bool> root_leq_closed_form(const Root& rho, const Root& eta, int rank);

// Downward closure of a set of positive roots, canonical order.
std::vector<Root> adj(const std::vector<Root>& set, int rank);

// Text form "e1-e3" / "e2+e5"; a leading '-' marks a negative root.
std::string root_to_string(const Root& root);
Root parse_root(const std::string& text, int rank);

void sort_roots(std::vector<Root>& roots, int rank);
bool contains_root(const std::vector<Root>& sorted, const Root& root, int rank);

}  // namespace weyld
