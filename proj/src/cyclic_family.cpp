#include "weyld/cyclic_family.hpp"

#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace weyld {

namespace {

void check_family_rank(int rank) {
  if (rank < 5 || rank % 2 == 0 || rank > kMaxRank)
    throw std::invalid_argument("the signed cyclic family requires odd rank >= 5");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t result = 0;
  if (__builtin_add_overflow(a, b, &result))
    throw std::overflow_error("overflow in defect polynomial arithmetic");
  return result;
}

// tau on positive roots: flips the kind when the root involves e_r.
Root tau_root(const Root& root, int rank) {
  if (root.j != rank) return root;
  Root image = root;
  image.kind = root.kind == RootKind::Plus ? RootKind::Minus : RootKind::Plus;
  return image;
}

}  // namespace

SubsetIndex::SubsetIndex(int rank, std::uint32_t mask)
    : rank_(static_cast<std::uint8_t>(rank)), mask_(mask) {
  if (rank < 2 || rank > kMaxRank)
    throw std::invalid_argument("subset rank must be between 2 and " +
                                std::to_string(kMaxRank));
  if (mask >> (rank - 1))
    throw std::invalid_argument("subset members must lie in {1..rank-1}");
}

SubsetIndex SubsetIndex::of(int rank, const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int a : members) {
    if (a < 1 || a >= rank)
      throw std::invalid_argument("subset member out of range");
    mask |= 1u << (a - 1);
  }
  return SubsetIndex(rank, mask);
}

SubsetIndex SubsetIndex::parse(const std::string& text, int rank) {
  if (text.empty()) return SubsetIndex(rank, 0);
  std::vector<int> members;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [next, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || next == first)
      throw std::invalid_argument("malformed subset '" + text + "'");
    if (!members.empty() && value <= members.back())
      throw std::invalid_argument("subset members must be strictly ascending");
    members.push_back(value);
    pos += next - first;
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw std::invalid_argument("malformed subset '" + text + "'");
      ++pos;
    }
  }
  return of(rank, members);
}

int SubsetIndex::size() const { return std::popcount(mask_); }

bool SubsetIndex::contains(int a) const {
  return a >= 1 && a < rank_ && (mask_ >> (a - 1)) & 1u;
}

int SubsetIndex::min() const {
  if (mask_ == 0) throw std::logic_error("min of empty subset");
  return std::countr_zero(mask_) + 1;
}

int SubsetIndex::max() const {
  if (mask_ == 0) throw std::logic_error("max of empty subset");
  return std::bit_width(mask_);
}

int SubsetIndex::next_marked(int a) const {
  if (!contains(a)) throw std::invalid_argument("next_marked requires a member of I");
  const std::uint32_t above = mask_ >> a;
  if (above == 0) return rank_;
  return a + 1 + std::countr_zero(above);
}

SubsetIndex SubsetIndex::toggled(int a) const {
  if (a < 1 || a >= rank_)
    throw std::invalid_argument("toggle index out of range");
  return SubsetIndex(rank_, mask_ ^ (1u << (a - 1)));
}

std::vector<int> SubsetIndex::members() const {
  std::vector<int> result;
  for (int a = 1; a < rank_; ++a)
    if (contains(a)) result.push_back(a);
  return result;
}

std::string SubsetIndex::to_string() const {
  std::string text;
  for (int a : members()) {
    if (!text.empty()) text += ',';
    text += std::to_string(a);
  }
  return text;
}

std::vector<int> p_cycle(const SubsetIndex& subset) {
  if (subset.is_empty())
    throw std::invalid_argument("p_cycle requires a non-empty subset");
  const int r = subset.rank();
  std::vector<int> image(r);
  for (int j = 1; j <= r; ++j) image[j - 1] = j;
  const std::vector<int> members = subset.members();
  for (std::size_t t = 0; t + 1 < members.size(); ++t)
    image[members[t] - 1] = members[t + 1];
  image[members.back() - 1] = r;
  image[r - 1] = members.front();
  return image;
}

SignedPerm c_element(const SubsetIndex& subset) {
  if (subset.is_empty()) return longest_element(subset.rank());
  const int r = subset.rank();
  check_family_rank(r);
  const std::vector<int> cycle = p_cycle(subset);
  std::array<std::uint8_t, kMaxRank> pi{};
  for (int j = 1; j <= r; ++j) pi[j - 1] = static_cast<std::uint8_t>(cycle[j - 1]);
  const std::uint16_t neg = static_cast<std::uint16_t>((1u << (r - 1)) - 1u);
  return SignedPerm::from_parts(r, pi, neg);
}

SignedPerm d_element(const SubsetIndex& subset) {
  if (subset.is_empty()) return longest_element(subset.rank());
  const int r = subset.rank();
  check_family_rank(r);
  const std::vector<int> cycle = p_cycle(subset);
  std::array<std::uint8_t, kMaxRank> pi{};
  for (int j = 1; j <= r; ++j) pi[j - 1] = static_cast<std::uint8_t>(cycle[j - 1]);
  const std::uint16_t neg = static_cast<std::uint16_t>(
      ((1u << r) - 1u) ^ (1u << (subset.max() - 1)));
  return SignedPerm::from_parts(r, pi, neg);
}

TwoLevelData two_level_data(const SubsetIndex& subset) {
  if (subset.is_empty())
    throw std::invalid_argument("two_level_data requires a non-empty subset");
  const int r = subset.rank();
  check_family_rank(r);
  const int first = subset.min();
  TwoLevelData data;
  for (int a : subset.members()) {
    const int next = subset.next_marked(a);
    for (int b = a + 1; b < next; ++b) {
      data.a_set.push_back(minus_root(b, next));
      data.preimages.emplace_back(minus_root(b, next), minus_root(a, b));
    }
  }
  const std::vector<int> cycle = p_cycle(subset);
  std::vector<int> cycle_inverse(r + 1, 0);
  for (int j = 1; j <= r; ++j) cycle_inverse[cycle[j - 1]] = j;
  for (int q = first + 1; q <= r; ++q) {
    data.b_set.push_back(minus_root(first, q));
    data.preimages.emplace_back(minus_root(first, q), plus_root(cycle_inverse[q], r));
  }
  for (int a : subset.members()) {
    const int next = subset.next_marked(a);
    for (int b = a + 1; b < next; ++b)
      for (int q = b; q <= r; ++q)
        data.arrows.emplace_back(minus_root(b, next), minus_root(first, q));
  }
  return data;
}

long long arrow_count(const SubsetIndex& subset) {
  if (subset.is_empty())
    throw std::invalid_argument("arrow_count requires a non-empty subset");
  const int r = subset.rank();
  long long total = 0;
  for (int a : subset.members()) {
    const long long next = subset.next_marked(a);
    const long long gap = next - a - 1;
    total += gap * (2 * r - a - next + 2) / 2;
  }
  return total;
}

long long family_length(const SubsetIndex& subset) {
  const long long r = subset.rank();
  return r * (r - 1) - family_defect(subset);
}

long long family_defect(const SubsetIndex& subset) {
  if (subset.is_empty()) return 0;
  const long long r = subset.rank();
  return 2 * r - 2 * subset.min() - subset.size();
}

std::vector<std::uint64_t> defect_polynomial(int rank) {
  check_family_rank(rank);
  std::vector<std::uint64_t> coeffs(2 * rank - 2, 0);
  coeffs[0] = 1;
  // Add 2 q^{n+1} (1+q)^n term by term; binomial row kept checked.
  std::vector<std::uint64_t> row = {1};
  for (int n = 0; n <= rank - 2; ++n) {
    for (int k = 0; k <= n; ++k)
      coeffs[n + 1 + k] = checked_add(coeffs[n + 1 + k], checked_add(row[k], row[k]));
    std::vector<std::uint64_t> next(n + 2, 1);
    for (int k = 1; k <= n; ++k) next[k] = checked_add(row[k - 1], row[k]);
    row = std::move(next);
  }
  return coeffs;
}

RecognitionResult recognize(const SignedPerm& u) {
  const int r = u.rank();
  check_family_rank(r);
  const std::uint16_t full_minus = static_cast<std::uint16_t>((1u << (r - 1)) - 1u);
  const RecognitionResult not_rational{};

  if (u.image(r) == r) {
    // Trivial orbit of r: only w_0 qualifies.
    for (int j = 1; j < r; ++j)
      if (u.image(j) != j) return not_rational;
    if (u.neg_mask() != full_minus) return not_rational;
    return RecognitionResult{RecognitionResult::Kind::W0, SubsetIndex::empty_set(r)};
  }

  // Walk the orbit of r; the segment before returning must be increasing.
  std::uint32_t mask = 0;
  int current = u.image(r);
  int previous = 0;
  int steps = 0;
  while (current != r) {
    if (current < previous || ++steps > r) return not_rational;
    mask |= 1u << (current - 1);
    previous = current;
    current = u.image(current);
  }
  const SubsetIndex subset(r, mask);
  for (int j = 1; j < r; ++j)
    if (!subset.contains(j) && u.image(j) != j) return not_rational;

  if (u.neg_mask() == full_minus)
    return RecognitionResult{RecognitionResult::Kind::CFamily, subset};
  const std::uint16_t d_pattern = static_cast<std::uint16_t>(
      ((1u << r) - 1u) ^ (1u << (subset.max() - 1)));
  if (u.neg_mask() == d_pattern)
    return RecognitionResult{RecognitionResult::Kind::DFamily, subset};
  return not_rational;
}

bool move_allowed(FamilyHalf half, const SubsetIndex& subset, int a) {
  const int r = subset.rank();
  if (a < 1 || a > r) throw std::invalid_argument("simple index out of range");
  if (subset.is_empty()) return a == r - 1 || a == r;
  if (a <= r - 2) return subset.contains(a + 1);
  if (a == r - 1) return half == FamilyHalf::C;
  return half == FamilyHalf::D;
}

bool toggle_admissible(const SubsetIndex& subset, int a) {
  const int r = subset.rank();
  if (a < 1 || a > r - 1) return false;
  return a == r - 1 || subset.contains(a + 1);
}

Certificate forbidden_move_certificate(FamilyHalf half, const SubsetIndex& subset, int a) {
  const int r = subset.rank();
  check_family_rank(r);
  if (move_allowed(half, subset, a))
    throw std::invalid_argument("move is allowed; no certificate exists");

  Certificate cert;
  if (a <= r - 2) {
    // Ordinary reflection with a+1 not in I: loop at alpha_a, or at
    // e_a - e_{n_I(a)} when a itself is marked.
    cert.kind = Certificate::Kind::Loop;
    if (subset.contains(a))
      cert.roots = {minus_root(a, subset.next_marked(a))};
    else
      cert.roots = {simple_root(a, r)};
  } else {
    // Wrong spin reflection (s_r on the c-half, s_{r-1} on the d-half).
    const int first = subset.min();
    if (!subset.contains(r - 1)) {
      cert.kind = Certificate::Kind::Loop;
      cert.roots = {plus_root(first, r - 1)};
    } else if (subset.size() > 1) {
      cert.kind = Certificate::Kind::Loop;
      cert.roots = {plus_root(first, r)};
    } else {
      cert.kind = Certificate::Kind::TwoCycle;
      cert.roots = {simple_root(r - 1, r), simple_root(r, r)};
    }
  }
  if (half == FamilyHalf::D)
    for (Root& root : cert.roots) root = tau_root(root, r);
  return cert;
}

int toggle_length_delta(const SubsetIndex& subset, int a) {
  if (!toggle_admissible(subset, a))
    throw std::invalid_argument("toggle is not admissible");
  const long long delta = family_length(subset.toggled(a)) - family_length(subset);
  assert(delta == 1 || delta == -1);
  return static_cast<int>(delta);
}

std::string recognition_to_json(const RecognitionResult& result) {
  nlohmann::json out;
  switch (result.kind) {
    case RecognitionResult::Kind::W0:
      out["kind"] = "w0";
      break;
    case RecognitionResult::Kind::CFamily:
    case RecognitionResult::Kind::DFamily:
      out["kind"] = result.kind == RecognitionResult::Kind::CFamily ? "c" : "d";
      out["subset"] = result.subset.members();
      break;
    case RecognitionResult::Kind::NotRational:
      out["kind"] = "not_rational";
      break;
  }
  return out.dump();
}

}  // namespace weyld
