#include "weyld/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "weyld/cyclic_family.hpp"
#include "weyld/rationality.hpp"

namespace weyld {

namespace {

void check_oracle_rank(int rank) {
  if (rank < 5 || rank % 2 == 0 || rank > kMaxRank)
    throw std::invalid_argument("verification requires odd rank >= 5");
}

struct WorkerResult {
  std::uint64_t rational_count = 0;
  std::vector<std::string> mismatches;
  std::vector<SignedPerm> rationals;
};

// One contiguous block of permutation ranks; sign masks run innerly so the
// concatenation of block results reproduces the global enumeration order.
void sweep_range(int rank, std::uint64_t perm_begin, std::uint64_t perm_end,
                 WorkerResult& result, std::atomic<std::uint64_t>* processed,
                 const ProgressFn* progress, std::uint64_t total) {
  const std::uint32_t sign_count = 1u << (rank - 1);
  constexpr std::uint64_t kProgressStep = std::uint64_t{1} << 20;
  for (std::uint64_t index = perm_begin; index < perm_end; ++index) {
    const std::array<std::uint8_t, kMaxRank> pi = unrank_permutation(index, rank);
    for (std::uint32_t t = 0; t < sign_count; ++t) {
      const SignedPerm u = SignedPerm::from_parts(rank, pi, even_sign_mask(t));
      const bool definition_rational = is_rational(u);
      const RecognitionResult recognized = recognize(u);
      bool recognition_rational = false;
      switch (recognized.kind) {
        case RecognitionResult::Kind::W0:
          recognition_rational = u == longest_element(rank);
          break;
        case RecognitionResult::Kind::CFamily:
          recognition_rational = u == c_element(recognized.subset);
          break;
        case RecognitionResult::Kind::DFamily:
          recognition_rational = u == d_element(recognized.subset);
          break;
        case RecognitionResult::Kind::NotRational:
          break;
      }
      if (definition_rational != recognition_rational)
        result.mismatches.push_back(format_one_line(u));
      if (definition_rational) {
        ++result.rational_count;
        result.rationals.push_back(u);
      }
    }
    if (processed != nullptr) {
      const std::uint64_t before = processed->fetch_add(sign_count);
      const std::uint64_t after = before + sign_count;
      if (progress != nullptr && *progress &&
          before / kProgressStep != after / kProgressStep)
        (*progress)(after, total);
    }
  }
}

}  // namespace

bool EnumerationReport::counts_match() const {
  return mismatches.empty() &&
         rational_count == (std::uint64_t{1} << rank) - 1;
}

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int k = 2; k <= n; ++k) result *= static_cast<std::uint64_t>(k);
  return result;
}

std::uint64_t group_order(int rank) {
  return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
}

std::array<std::uint8_t, kMaxRank> unrank_permutation(std::uint64_t index, int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("bad permutation size");
  if (index >= factorial(n)) throw std::invalid_argument("permutation rank out of range");
  std::array<std::uint8_t, kMaxRank> remaining{};
  for (int k = 0; k < n; ++k) remaining[k] = static_cast<std::uint8_t>(k + 1);
  std::array<std::uint8_t, kMaxRank> result{};
  std::uint64_t base = factorial(n);
  int left = n;
  for (int position = 0; position < n; ++position) {
    base /= static_cast<std::uint64_t>(left);
    const int digit = static_cast<int>(index / base);
    index %= base;
    result[position] = remaining[digit];
    for (int k = digit; k + 1 < left; ++k) remaining[k] = remaining[k + 1];
    --left;
  }
  return result;
}

std::uint16_t even_sign_mask(std::uint32_t t) {
  const std::uint32_t parity = std::popcount(t) & 1u;
  return static_cast<std::uint16_t>((t << 1) | parity);
}

EnumerationReport brute_force_verify(int rank, int workers, const ProgressFn& progress) {
  check_oracle_rank(rank);
  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t perm_total = factorial(rank);
  workers = static_cast<int>(std::min<std::uint64_t>(workers, perm_total));

  const auto start = std::chrono::steady_clock::now();
  std::vector<WorkerResult> results(workers);
  std::atomic<std::uint64_t> processed{0};
  const std::uint64_t total = group_order(rank);
  std::atomic<std::uint64_t>* counter = progress ? &processed : nullptr;

  if (workers == 1) {
    sweep_range(rank, 0, perm_total, results[0], counter, &progress, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = perm_total / workers;
    const std::uint64_t remainder = perm_total % workers;
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < static_cast<int>(remainder) ? 1 : 0);
      threads.emplace_back([&, w, begin, end] {
        sweep_range(rank, begin, end, results[w], counter, &progress, total);
      });
      begin = end;
    }
    for (std::thread& thread : threads) thread.join();
  }

  EnumerationReport report;
  report.rank = rank;
  report.group_order = total;
  report.worker_count = workers;
  for (WorkerResult& result : results) {
    report.rational_count += result.rational_count;
    report.mismatches.insert(report.mismatches.end(), result.mismatches.begin(),
                             result.mismatches.end());
    report.rationals.insert(report.rationals.end(), result.rationals.begin(),
                            result.rationals.end());
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  const auto end = std::chrono::steady_clock::now();
  report.elapsed_seconds = std::chrono::duration<double>(end - start).count();
  return report;
}

DescentCheck verify_descent(int rank, const std::vector<SignedPerm>& rational_set) {
  check_oracle_rank(rank);
  const SignedPerm top = longest_element(rank);
  DescentCheck check;
  for (const SignedPerm& u : rational_set) {
    if (u == top) continue;
    ++check.checked;
    if (rational_ascents(u).empty())
      check.failures.push_back(format_one_line(u) + ": no rational ascent");
  }
  check.ok = check.failures.empty();
  return check;
}

DescentCheck verify_descent(int rank) {
  return verify_descent(rank, brute_force_verify(rank, 1).rationals);
}

CertificateCheck verify_certificates(int rank) {
  check_oracle_rank(rank);
  CertificateCheck check;
  const std::uint32_t half = 1u << (rank - 1);

  const auto probe = [&](FamilyHalf family_half, const SubsetIndex& subset,
                         const SignedPerm& element, const std::string& name) {
    for (int a = 1; a <= rank; ++a) {
      if (move_allowed(family_half, subset, a)) continue;
      ++check.checked;
      const Certificate cert = forbidden_move_certificate(family_half, subset, a);
      const SignedPerm moved = simple_reflection(a, rank).compose(element);
      if (!certificate_holds(moved, cert))
        check.failures.push_back("s" + std::to_string(a) + " * " + name +
                                 ": catalogue certificate does not hold");
      else if (is_rational(moved))
        check.failures.push_back("s" + std::to_string(a) + " * " + name +
                                 ": element is rational despite certificate");
    }
  };

  probe(FamilyHalf::C, SubsetIndex::empty_set(rank), longest_element(rank), "w0");
  for (std::uint32_t mask = 1; mask < half; ++mask) {
    const SubsetIndex subset(rank, mask);
    probe(FamilyHalf::C, subset, c_element(subset), "c_{" + subset.to_string() + "}");
    probe(FamilyHalf::D, subset, d_element(subset), "d_{" + subset.to_string() + "}");
  }
  check.ok = check.failures.empty();
  return check;
}

std::string report_to_json(const EnumerationReport& report) {
  nlohmann::json out;
  out["rank"] = report.rank;
  out["group_order"] = report.group_order;
  out["rational_count"] = report.rational_count;
  out["mismatches"] = report.mismatches;
  out["elapsed_seconds"] = report.elapsed_seconds;
  out["worker_count"] = report.worker_count;
  out["counts_match"] = report.counts_match();
  return out.dump();
}

}  // namespace weyld
