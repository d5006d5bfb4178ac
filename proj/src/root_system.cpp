#include "weyld/root_system.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace weyld {

namespace {

void check_rank(int rank) {
  if (rank < 2 || rank > kMaxRank)
    throw std::invalid_argument("rank must be between 2 and " +
                                std::to_string(kMaxRank));
}

void check_root(const Root& root, int rank) {
  if (root.i < 1 || root.i >= root.j || root.j > rank)
    throw std::invalid_argument("root indices out of range for rank " +
                                std::to_string(rank));
}

// Position of the pair (i, j), i < j, in lexicographic order.
int pair_index(int i, int j, int rank) {
  return (i - 1) * rank - i * (i - 1) / 2 + (j - i - 1);
}

}  // namespace

Root simple_root(int a, int rank) {
  check_rank(rank);
  if (a < 1 || a > rank) throw std::invalid_argument("simple root index out of range");
  if (a < rank) return minus_root(a, a + 1);
  return plus_root(rank - 1, rank);
}

int root_index(const Root& root, int rank) {
  check_root(root, rank);
  const int npairs = rank * (rank - 1) / 2;
  const int base = root.kind == RootKind::Minus ? 0 : npairs;
  return base + pair_index(root.i, root.j, rank);
}

Root root_from_index(int index, int rank) {
  check_rank(rank);
  const int npairs = rank * (rank - 1) / 2;
  if (index < 0 || index >= 2 * npairs)
    throw std::invalid_argument("root index out of range");
  const RootKind kind = index < npairs ? RootKind::Minus : RootKind::Plus;
  int rest = index % npairs;
  int i = 1;
  while (rest >= rank - i) {
    rest -= rank - i;
    ++i;
  }
  return Root{kind, static_cast<std::uint8_t>(i),
              static_cast<std::uint8_t>(i + 1 + rest), +1};
}

bool root_less(const Root& a, const Root& b, int rank) {
  return root_index(a, rank) < root_index(b, rank);
}

std::vector<Root> positive_roots(int rank) {
  check_rank(rank);
  std::vector<Root> roots;
  roots.reserve(rank * (rank - 1));
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i < rank; ++i)
      for (int j = i + 1; j <= rank; ++j)
        roots.push_back(kind == 0 ? minus_root(i, j) : plus_root(i, j));
  return roots;
}

std::vector<long long> coefficient_vector(const std::vector<long long>& x, int rank) {
  check_rank(rank);
  if (static_cast<int>(x.size()) != rank)
    throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<long long> m(rank, 0);
  long long prefix = 0;
  for (int a = 1; a <= rank - 2; ++a) {
    prefix += x[a - 1];
    m[a - 1] = prefix;
  }
  prefix += x[rank - 2];  // prefix = x_1 + ... + x_{r-1}
  const long long twice_spin_minus = prefix - x[rank - 1];
  const long long twice_spin_plus = prefix + x[rank - 1];
  if (twice_spin_minus % 2 != 0 || twice_spin_plus % 2 != 0)
    throw std::invalid_argument("vector is not in the root lattice");
  m[rank - 2] = twice_spin_minus / 2;
  m[rank - 1] = twice_spin_plus / 2;
  return m;
}

bool root_leq(const Root& rho, const Root& eta, int rank) {
  check_root(rho, rank);
  check_root(eta, rank);
  // Coordinates of eta - rho; both roots are taken positive.
  std::array<int, kMaxRank> x{};
  x[eta.i - 1] += 1;
  x[eta.j - 1] += eta.kind == RootKind::Plus ? 1 : -1;
  x[rho.i - 1] -= 1;
  x[rho.j - 1] -= rho.kind == RootKind::Plus ? 1 : -1;
  int prefix = 0;
  for (int a = 1; a <= rank - 2; ++a) {
    prefix += x[a - 1];
    if (prefix < 0) return false;
  }
  prefix += x[rank - 2];
  return prefix - x[rank - 1] >= 0 && prefix + x[rank - 1] >= 0;
}

std::optional<bool> root_leq_closed_form(const Root& rho, const Root& eta, int rank) {
  check_root(rho, rank);
  check_root(eta, rank);
  if (rho.kind == RootKind::Minus && eta.kind == RootKind::Minus)
    return eta.i <= rho.i && rho.j <= eta.j;
  if (rho.kind == RootKind::Plus && rho.j == rank) {
    if (eta.kind == RootKind::Minus) return false;
    if (eta.j == rank || eta.j == rank - 1) return eta.i <= rho.i;
  }
  return std::nullopt;
}

std::vector<Root> adj(const std::vector<Root>& set, int rank) {
  check_rank(rank);
  std::vector<Root> closure;
  const std::vector<Root> all = positive_roots(rank);
  for (const Root& gamma : all)
    for (const Root& beta : set)
      if (root_leq(gamma, beta, rank)) {
        closure.push_back(gamma);
        break;
      }
  return closure;
}

std::string root_to_string(const Root& root) {
  std::string text;
  if (root.sign < 0) text += '-';
  text += 'e';
  text += std::to_string(static_cast<int>(root.i));
  text += root.kind == RootKind::Plus ? '+' : '-';
  text += 'e';
  text += std::to_string(static_cast<int>(root.j));
  return text;
}

Root parse_root(const std::string& text, int rank) {
  check_rank(rank);
  const auto fail = [&] {
    return std::invalid_argument("malformed root '" + text + "'");
  };
  std::size_t pos = 0;
  int sign = +1;
  if (pos < text.size() && text[pos] == '-') {
    sign = -1;
    ++pos;
  }
  auto read_index = [&]() -> int {
    if (pos >= text.size() || text[pos] != 'e') throw fail();
    ++pos;
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [next, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || next == begin) throw fail();
    pos += next - begin;
    return value;
  };
  const int i = read_index();
  if (pos >= text.size()) throw fail();
  const char op = text[pos++];
  if (op != '+' && op != '-') throw fail();
  const int j = read_index();
  if (pos != text.size()) throw fail();
  Root root{op == '+' ? RootKind::Plus : RootKind::Minus,
            static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
            static_cast<std::int8_t>(sign)};
  check_root(root, rank);
  return root;
}

void sort_roots(std::vector<Root>& roots, int rank) {
  std::sort(roots.begin(), roots.end(), [rank](const Root& a, const Root& b) {
    return root_index(a, rank) < root_index(b, rank);
  });
}

bool contains_root(const std::vector<Root>& sorted, const Root& root, int rank) {
  return std::binary_search(
      sorted.begin(), sorted.end(), root, [rank](const Root& a, const Root& b) {
        return root_index(a, rank) < root_index(b, rank);
      });
}

}  // namespace weyld
