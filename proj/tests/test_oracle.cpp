#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>

#include "weyld/cyclic_family.hpp"
#include "weyld/oracle.hpp"
#include "weyld/rationality.hpp"

using namespace weyld;

TEST_CASE("factorials and unranking") {
  CHECK(factorial(5) == 120);
  CHECK(group_order(5) == 1920);
  CHECK(group_order(7) == 322560);
  CHECK(group_order(9) == 92897280);

  // Unranking is a bijection onto S_5 and respects lexicographic order.
  std::vector<std::array<std::uint8_t, kMaxRank>> perms;
  for (std::uint64_t index = 0; index < 120; ++index)
    perms.push_back(unrank_permutation(index, 5));
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  CHECK(std::adjacent_find(perms.begin(), perms.end()) == perms.end());
  CHECK_THROWS_AS(unrank_permutation(120, 5), std::invalid_argument);
}

TEST_CASE("even sign masks") {
  std::set<std::uint16_t> masks;
  for (std::uint32_t t = 0; t < 16; ++t) {
    const std::uint16_t mask = even_sign_mask(t);
    CHECK(std::popcount(mask) % 2 == 0);
    masks.insert(mask);
  }
  CHECK(masks.size() == 16);
}

TEST_CASE("enumeration visits the whole group exactly once") {
  for (const int rank : {3, 5}) {
    std::set<std::string> seen;
    std::uint64_t visits = 0;
    enumerate_group(rank, [&](const SignedPerm& u) {
      ++visits;
      seen.insert(format_one_line(u));
      CHECK(u.negative_sign_count() % 2 == 0);
    });
    CHECK(visits == group_order(rank));
    CHECK(seen.size() == visits);
  }
}

TEST_CASE("brute force counts at rank 5") {
  const EnumerationReport report = brute_force_verify(5, 1);
  CHECK(report.rank == 5);
  CHECK(report.group_order == 1920);
  CHECK(report.rational_count == 31);
  CHECK(report.mismatches.empty());
  CHECK(report.counts_match());
  CHECK(report.rationals.size() == 31);

  // The brute-force rational set is exactly the family.
  std::set<std::string> found;
  for (const SignedPerm& u : report.rationals) found.insert(format_one_line(u));
  std::set<std::string> family{format_one_line(longest_element(5))};
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    const SubsetIndex subset(5, mask);
    family.insert(format_one_line(c_element(subset)));
    family.insert(format_one_line(d_element(subset)));
  }
  CHECK(found == family);
}

TEST_CASE("extreme-length rational elements at rank 5") {
  const EnumerationReport report = brute_force_verify(5, 1);
  std::set<std::string> longest, second_longest, shortest;
  for (const SignedPerm& u : report.rationals) {
    const int len = length(u);
    if (len == 20) longest.insert(format_one_line(u));
    if (len == 19) second_longest.insert(format_one_line(u));
    if (len == 13) shortest.insert(format_one_line(u));
  }
  CHECK(longest == std::set<std::string>{"(-1,-2,-3,-4,5)"});
  const SubsetIndex spin = SubsetIndex::parse("4", 5);
  CHECK(second_longest ==
        std::set<std::string>{format_one_line(c_element(spin)),
                              format_one_line(d_element(spin))});
  const SubsetIndex one = SubsetIndex::parse("1", 5);
  CHECK(shortest == std::set<std::string>{format_one_line(c_element(one)),
                                          format_one_line(d_element(one))});
}

TEST_CASE("report is deterministic across worker counts") {
  const EnumerationReport one = brute_force_verify(5, 1);
  const EnumerationReport three = brute_force_verify(5, 3);
  CHECK(one.rational_count == three.rational_count);
  CHECK(one.mismatches == three.mismatches);
  CHECK(one.group_order == three.group_order);
  const auto lines = [](const EnumerationReport& report) {
    std::vector<std::string> out;
    for (const SignedPerm& u : report.rationals) out.push_back(format_one_line(u));
    return out;
  };
  CHECK(lines(one) == lines(three));
}

TEST_CASE("progress reporting steps at 2^20 elements") {
  std::uint64_t calls = 0;
  const EnumerationReport report =
      brute_force_verify(7, 2, [&](std::uint64_t, std::uint64_t) { ++calls; });
  // 322,560 elements stay below the first reporting step.
  CHECK(calls == 0);
  CHECK(report.counts_match());
}

TEST_CASE("descent check") {
  const DescentCheck check = verify_descent(5);
  CHECK(check.ok);
  CHECK(check.checked == 30);  // w_0 is excluded
}

TEST_CASE("certificate catalogue validates") {
  const CertificateCheck check = verify_certificates(5);
  CHECK(check.ok);
  // 31 elements, 5 simple moves each, minus the 80 allowed moves.
  CHECK(check.checked == 75);
}

TEST_CASE("report serialization") {
  EnumerationReport report;
  report.rank = 5;
  report.group_order = 1920;
  report.rational_count = 31;
  report.worker_count = 2;
  const std::string text = report_to_json(report);
  CHECK(text.find("\"rational_count\":31") != std::string::npos);
  CHECK(text.find("\"counts_match\":true") != std::string::npos);
}
