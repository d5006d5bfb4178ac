#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weyld/signed_perm.hpp"

namespace weyld {

// Result of an exhaustive definition-level sweep over W(D_r). The sweep
// counts rational elements straight from the root-poset test and records
// every element where that verdict disagrees with the one-line recognition.
struct EnumerationReport {
  int rank = 0;
  std::uint64_t group_order = 0;
  std::uint64_t rational_count = 0;
  std::vector<std::string> mismatches;
  double elapsed_seconds = 0.0;
  int worker_count = 1;
  // The rational elements themselves, in enumeration order; small (2^r - 1
  // on success) and handy for the downstream descent check.
  std::vector<SignedPerm> rationals;

  bool counts_match() const;
};

struct DescentCheck {
  bool ok = true;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

struct CertificateCheck {
  bool ok = true;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

std::uint64_t factorial(int n);
std::uint64_t group_order(int rank);  // 2^{r-1} r!

// Permutation with the given rank in lexicographic order, via the factorial
// number system; images are 1-based.
std::array<std::uint8_t, kMaxRank> unrank_permutation(std::uint64_t index, int n);

// Even sign mask number t in {0 .. 2^{r-1}-1}: bits 2..r carry t and the
// sign of e_1 fixes the parity.
std::uint16_t even_sign_mask(std::uint32_t t);

// Visits every element of W(D_r) exactly once: permutation rank major,
// sign mask minor.
template <typename Visitor>
void enumerate_group_range(int rank, std::uint64_t perm_begin,
                           std::uint64_t perm_end, Visitor&& visit) {
  const std::uint32_t sign_count = 1u << (rank - 1);
  for (std::uint64_t index = perm_begin; index < perm_end; ++index) {
    const std::array<std::uint8_t, kMaxRank> pi = unrank_permutation(index, rank);
    for (std::uint32_t t = 0; t < sign_count; ++t)
      visit(SignedPerm::from_parts(rank, pi, even_sign_mask(t)));
  }
}

template <typename Visitor>
void enumerate_group(int rank, Visitor&& visit) {
  enumerate_group_range(rank, 0, factorial(rank), std::forward<Visitor>(visit));
}

using ProgressFn = std::function<void(std::uint64_t processed, std::uint64_t total)>;

// Counts rational elements by the definition-level test over the whole
// group, cross-checking every verdict against recognize (including that the
// recognized family element reproduces the input). workers <= 0 picks the
// hardware concurrency; the report is identical for any worker count.
EnumerationReport brute_force_verify(int rank, int workers = 1,
                                     const ProgressFn& progress = nullptr);

// Confirms the descent step on a known rational set: every rational element
// other than w_0 admits a rational length-increasing simple left
// multiplication.
DescentCheck verify_descent(int rank, const std::vector<SignedPerm>& rational_set);
DescentCheck verify_descent(int rank);

// Walks every forbidden simple move from every family element, asks the
// catalogue for its certificate and validates it as an actual loop or
// two-cycle in the rebuilt graph of the moved element.
CertificateCheck verify_certificates(int rank);

std::string report_to_json(const EnumerationReport& report);

}  // namespace weyld
