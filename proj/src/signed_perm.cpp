#include "weyld/signed_perm.hpp"

#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace weyld {

namespace {

void check_rank(int rank) {
  if (rank < 2 || rank > kMaxRank)
    throw std::invalid_argument("rank must be between 2 and " +
                                std::to_string(kMaxRank));
}

}  // namespace

SignedPerm SignedPerm::identity(int rank) {
  check_rank(rank);
  SignedPerm u;
  u.rank_ = static_cast<std::uint8_t>(rank);
  for (int j = 1; j <= rank; ++j) u.pi_[j - 1] = static_cast<std::uint8_t>(j);
  return u;
}

SignedPerm SignedPerm::from_parts(int rank, const std::array<std::uint8_t, kMaxRank>& pi,
                                  std::uint16_t neg_mask) {
  SignedPerm u;
  u.rank_ = static_cast<std::uint8_t>(rank);
  u.pi_ = pi;
  u.neg_ = neg_mask;
#ifndef NDEBUG
  assert(rank >= 2 && rank <= kMaxRank);
  std::uint16_t seen = 0;
  for (int j = 1; j <= rank; ++j) {
    assert(pi[j - 1] >= 1 && pi[j - 1] <= rank);
    seen |= static_cast<std::uint16_t>(1u << (pi[j - 1] - 1));
  }
  assert(seen == (1u << rank) - 1u);
  assert(std::popcount(neg_mask) % 2 == 0);
  assert((neg_mask >> rank) == 0);
#endif
  return u;
}

SignedPerm SignedPerm::from_one_line(const std::vector<int>& entries) {
  const int rank = static_cast<int>(entries.size());
  check_rank(rank);
  std::array<std::uint8_t, kMaxRank> pi{};
  std::uint16_t neg = 0;
  std::uint16_t seen = 0;
  for (int j = 1; j <= rank; ++j) {
    const int a = entries[j - 1];
    const int abs = a < 0 ? -a : a;
    if (abs < 1 || abs > rank)
      throw std::invalid_argument("one-line entry out of range");
    if (seen & (1u << (abs - 1)))
      throw std::invalid_argument("one-line entries are not a permutation");
    seen |= static_cast<std::uint16_t>(1u << (abs - 1));
    pi[j - 1] = static_cast<std::uint8_t>(abs);
    if (a < 0) neg |= static_cast<std::uint16_t>(1u << (j - 1));
  }
  if (std::popcount(neg) % 2 != 0)
    throw std::invalid_argument("odd number of sign changes; not in W(D_r)");
  return from_parts(rank, pi, neg);
}

SignedPerm SignedPerm::compose(const SignedPerm& v) const {
  if (rank_ != v.rank_) throw std::invalid_argument("rank mismatch in compose");
  SignedPerm w;
  w.rank_ = rank_;
  for (int j = 1; j <= rank_; ++j) {
    const int mid = v.pi_[j - 1];
    w.pi_[j - 1] = pi_[mid - 1];
    const unsigned bit = ((v.neg_ >> (j - 1)) ^ (neg_ >> (mid - 1))) & 1u;
    w.neg_ |= static_cast<std::uint16_t>(bit << (j - 1));
  }
  return w;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w;
  w.rank_ = rank_;
  for (int j = 1; j <= rank_; ++j) {
    const int img = pi_[j - 1];
    w.pi_[img - 1] = static_cast<std::uint8_t>(j);
    w.neg_ |= static_cast<std::uint16_t>(((neg_ >> (j - 1)) & 1u) << (img - 1));
  }
  return w;
}

Root SignedPerm::apply(const Root& beta) const {
  const int p = pi_[beta.i - 1];
  const int q = pi_[beta.j - 1];
  int sp = sign(beta.i) * beta.sign;
  int sq = sign(beta.j) * beta.sign;
  if (beta.kind == RootKind::Minus) sq = -sq;
  if (sp == sq) {
    const int lo = p < q ? p : q;
    const int hi = p < q ? q : p;
    return Root{RootKind::Plus, static_cast<std::uint8_t>(lo),
                static_cast<std::uint8_t>(hi), static_cast<std::int8_t>(sp)};
  }
  const int pos = sp > 0 ? p : q;
  const int neg = sp > 0 ? q : p;
  if (pos < neg)
    return Root{RootKind::Minus, static_cast<std::uint8_t>(pos),
                static_cast<std::uint8_t>(neg), +1};
  return Root{RootKind::Minus, static_cast<std::uint8_t>(neg),
              static_cast<std::uint8_t>(pos), -1};
}

bool SignedPerm::is_identity() const {
  if (neg_ != 0) return false;
  for (int j = 1; j <= rank_; ++j)
    if (pi_[j - 1] != j) return false;
  return true;
}

int SignedPerm::negative_sign_count() const { return std::popcount(neg_); }

SignedPerm simple_reflection(int a, int rank) {
  check_rank(rank);
  if (a < 1 || a > rank)
    throw std::invalid_argument("simple reflection index out of range");
  std::array<std::uint8_t, kMaxRank> pi{};
  for (int j = 1; j <= rank; ++j) pi[j - 1] = static_cast<std::uint8_t>(j);
  std::uint16_t neg = 0;
  if (a < rank) {
    pi[a - 1] = static_cast<std::uint8_t>(a + 1);
    pi[a] = static_cast<std::uint8_t>(a);
  } else {
    pi[rank - 2] = static_cast<std::uint8_t>(rank);
    pi[rank - 1] = static_cast<std::uint8_t>(rank - 1);
    neg = static_cast<std::uint16_t>((1u << (rank - 2)) | (1u << (rank - 1)));
  }
  return SignedPerm::from_parts(rank, pi, neg);
}

SignedPerm longest_element(int rank) {
  if (rank < 5 || rank % 2 == 0 || rank > kMaxRank)
    throw std::invalid_argument("longest element requires odd rank >= 5");
  std::array<std::uint8_t, kMaxRank> pi{};
  for (int j = 1; j <= rank; ++j) pi[j - 1] = static_cast<std::uint8_t>(j);
  const std::uint16_t neg = static_cast<std::uint16_t>((1u << (rank - 1)) - 1u);
  return SignedPerm::from_parts(rank, pi, neg);
}

SignedPerm tau_conjugate(const SignedPerm& u) {
  const int r = u.rank();
  std::array<std::uint8_t, kMaxRank> pi{};
  std::uint16_t neg = u.neg_mask();
  for (int j = 1; j <= r; ++j) pi[j - 1] = static_cast<std::uint8_t>(u.image(j));
  // Signs flip at the source r and at the source hitting target r; when
  // u fixes r these cancel.
  neg ^= static_cast<std::uint16_t>(1u << (r - 1));
  for (int j = 1; j <= r; ++j)
    if (u.image(j) == r) {
      neg ^= static_cast<std::uint16_t>(1u << (j - 1));
      break;
    }
  return SignedPerm::from_parts(r, pi, neg);
}

int length(const SignedPerm& u) {
  const int r = u.rank();
  int count = 0;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        const Root beta = kind == 0 ? minus_root(i, j) : plus_root(i, j);
        if (u.apply(beta).sign < 0) ++count;
      }
  return count;
}

SignedPerm parse_one_line(const std::string& text) {
  const auto fail = [&] {
    return std::invalid_argument("malformed one-line notation '" + text + "'");
  };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos || text[begin] != '(' || text[end] != ')')
    throw fail();
  std::vector<int> entries;
  std::size_t pos = begin + 1;
  while (pos < end) {
    while (pos < end && text[pos] == ' ') ++pos;
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [next, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || next == first) throw fail();
    entries.push_back(value);
    pos += next - first;
    while (pos < end && text[pos] == ' ') ++pos;
    if (pos < end) {
      if (text[pos] != ',') throw fail();
      ++pos;
    }
  }
  if (entries.empty()) throw fail();
  return SignedPerm::from_one_line(entries);
}

std::string format_one_line(const SignedPerm& u) {
  std::string text = "(";
  for (int j = 1; j <= u.rank(); ++j) {
    if (j > 1) text += ',';
    text += std::to_string(u.sign(j) * u.image(j));
  }
  text += ')';
  return text;
}

}  // namespace weyld
