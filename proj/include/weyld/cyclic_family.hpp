#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weyld/rationality.hpp"
#include "weyld/root_system.hpp"
#include "weyld/signed_perm.hpp"

namespace weyld {

// A subset I of {1..rank-1} as a bitmask; the empty subset stands for the
// longest element under the convention c_{} = d_{} = w_0.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  SubsetIndex(int rank, std::uint32_t mask);
  static SubsetIndex empty_set(int rank) { return SubsetIndex(rank, 0); }
  static SubsetIndex of(int rank, const std::vector<int>& members);
  // Comma-separated ascending list, e.g. "1,3"; "" parses as the empty set.
  static SubsetIndex parse(const std::string& text, int rank);

  int rank() const { return rank_; }
  std::uint32_t mask() const { return mask_; }
  bool is_empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int a) const;
  int min() const;  // throws on empty
  int max() const;  // throws on empty
  // n_I(a): the next element of I union {rank} after a; requires a in I.
  int next_marked(int a) const;
  SubsetIndex toggled(int a) const;
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::uint32_t mask_ = 0;
};

enum class FamilyHalf { C, D };

// Outcome of the one-line recognition test: w_0, a family element with its
// subset, or not rational at all.
struct RecognitionResult {
  enum class Kind { W0, CFamily, DFamily, NotRational };
  Kind kind = Kind::NotRational;
  SubsetIndex subset;

  friend bool operator==(const RecognitionResult&, const RecognitionResult&) = default;
};

// The two-level form of the graph of c_I: the gap roots A_I, the roots B_I
// created by the positive sign at e_r, the internal arrows A(a,b) -> B(q)
// for b <= q, and the preimage of every vertex.
struct TwoLevelData {
  std::vector<Root> a_set;                       // lexicographic in (a, b)
  std::vector<Root> b_set;                       // increasing q
  std::vector<std::pair<Root, Root>> arrows;
  std::vector<std::pair<Root, Root>> preimages;  // (vertex, c_I^{-1}(vertex))
};

// The increasing cycle (i_1 i_2 ... i_k rank) as an image table, 1-based:
// result[j-1] = p_I(j). Rejects the empty subset.
std::vector<int> p_cycle(const SubsetIndex& subset);

// The signed cyclic elements. Both accept the empty subset and return the
// longest element; non-empty subsets require odd rank >= 5.
SignedPerm c_element(const SubsetIndex& subset);
SignedPerm d_element(const SubsetIndex& subset);

TwoLevelData two_level_data(const SubsetIndex& subset);

// Closed-form number of arrows in the graph of c_I (gap sum).
long long arrow_count(const SubsetIndex& subset);

// Closed-form Coxeter length r(r-1) - (2r - 2 min I - #I), and the defect
// r(r-1) - length; the empty subset gives length r(r-1), defect 0.
long long family_length(const SubsetIndex& subset);
long long family_defect(const SubsetIndex& subset);

// Coefficients of F_r(q) = 1 + 2 sum_{n=0}^{r-2} q^{n+1}(1+q)^n by ascending
// degree (degree 2r-3). Arithmetic is overflow-checked.
std::vector<std::uint64_t> defect_polynomial(int rank);

// Decides membership in the rational family from one-line data alone: walk
// the orbit of r, test the increasing-cycle shape, then match one of the two
// sign patterns. Linear in the rank; requires odd rank >= 5.
RecognitionResult recognize(const SignedPerm& u);

// Whether left multiplication by s_a keeps the family element rational.
bool move_allowed(FamilyHalf half, const SubsetIndex& subset, int a);

// Toggle admissibility in the abstract subset graph: a+1 in I for a < rank-1,
// and the toggle of rank-1 always.
bool toggle_admissible(const SubsetIndex& subset, int a);

// The catalogue certificate for a forbidden move: a loop at alpha_a or at
// e_a - e_{n_I(a)} in the ordinary cases, and a loop at e_{i_1} + e_{r-1} or
// e_{i_1} + e_r or the spin two-cycle in the wrong-spin cases, transported by
// tau for the D half. Throws if the move is allowed.
Certificate forbidden_move_certificate(FamilyHalf half, const SubsetIndex& subset, int a);

// Length change of an admissible toggle: length(c_{I xor {a}}) - length(c_I),
// always +1 or -1.
int toggle_length_delta(const SubsetIndex& subset, int a);

std::string recognition_to_json(const RecognitionResult& result);

}  // namespace weyld
