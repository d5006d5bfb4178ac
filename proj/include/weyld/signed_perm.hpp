#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weyld/root_system.hpp"

namespace weyld {

// An element of W(D_r): u(e_j) = sign(j) * e_{image(j)} with an even number
// of negative signs. The permutation is packed as a byte table and the signs
// as a bitmask so the enumeration oracle can copy elements by value.
class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(int rank);
  // No validation beyond debug assertions; callers own the invariants.
  static SignedPerm from_parts(int rank, const std::array<std::uint8_t, kMaxRank>& pi,
                               std::uint16_t neg_mask);
  // One-line entries a_j meaning e_j -> sgn(a_j) e_{|a_j|}; fully validated.
  static SignedPerm from_one_line(const std::vector<int>& entries);

  int rank() const { return rank_; }
  int image(int j) const { return pi_[j - 1]; }
  int sign(int j) const { return (neg_ >> (j - 1)) & 1u ? -1 : +1; }
  std::uint16_t neg_mask() const { return neg_; }

  // this(v(x)): apply v first, then this.
  SignedPerm compose(const SignedPerm& v) const;
  SignedPerm inverse() const;

  // Image of a root, normalized to (positive root, overall sign).
  Root apply(const Root& beta) const;

  bool is_identity() const;
  int negative_sign_count() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::uint16_t neg_ = 0;
  std::array<std::uint8_t, kMaxRank> pi_{};
};

// Reflection s_a in the simple root alpha_a. For a < rank this swaps
// e_a and e_{a+1}; for a = rank it maps e_{rank-1} -> -e_rank, e_rank -> -e_{rank-1}.
SignedPerm simple_reflection(int a, int rank);

// Longest element for odd rank >= 5: e_i -> -e_i for i < rank, e_rank fixed.
SignedPerm longest_element(int rank);

// Conjugation by the diagram automorphism tau (fixes e_1..e_{r-1}, negates
// e_r). tau itself is outside W(D_r), but tau u tau^{-1} is inside.
SignedPerm tau_conjugate(const SignedPerm& u);

// Coxeter length: number of positive roots sent to negative roots.
int length(const SignedPerm& u);

// One-line notation "(a_1,...,a_r)", the interchange format for elements.
SignedPerm parse_one_line(const std::string& text);
std::string format_one_line(const SignedPerm& u);

}  // namespace weyld
