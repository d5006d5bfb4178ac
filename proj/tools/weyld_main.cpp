// Command-line surface: verification, recognition, family inspection and
// graph export for the type-D rationality toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "weyld/cyclic_family.hpp"
#include "weyld/oracle.hpp"
#include "weyld/rationality.hpp"
#include "weyld/rationality_graph.hpp"
#include "weyld/signed_perm.hpp"

namespace {

using nlohmann::json;
using namespace weyld;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitNotRational = 1;
constexpr int kExitBadArguments = 2;

int default_workers() {
  if (const char* env = std::getenv("WEYL_WORKERS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void require_family_rank(int rank) {
  if (rank < 5 || rank % 2 == 0)
    throw CLI::ValidationError(
        "rank", "the classification requires r >= 5 odd (got " +
                    std::to_string(rank) + ")");
  if (rank > kMaxRank)
    throw CLI::ValidationError("rank", "rank exceeds the supported maximum " +
                                           std::to_string(kMaxRank));
}

// Full output is assembled first and written in one piece, so failures never
// leave partial output behind.
void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + output_path);
  file << text;
}

json certificate_json(const Certificate& cert) {
  return json::parse(certificate_to_json(cert));
}

std::vector<std::string> root_strings(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  out.reserve(roots.size());
  for (const Root& root : roots) out.push_back(root_to_string(root));
  return out;
}

std::string join_strings(const json& values) {
  std::string out;
  for (const auto& value : values) {
    if (!out.empty()) out += ' ';
    out += value.get<std::string>();
  }
  return out;
}

int run_verify(int rank, int workers, bool force, const std::string& format,
               const std::string& output_path) {
  require_family_rank(rank);
  if (rank >= 11 && !force)
    throw CLI::ValidationError(
        "rank", "ranks >= 11 are out of desk scale; pass --force to run anyway");

  std::mutex progress_mutex;
  ProgressFn progress;
  if (rank >= 9)
    progress = [&progress_mutex](std::uint64_t done, std::uint64_t total) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      std::cerr << "progress: " << done << " / " << total << " elements\n";
    };

  const EnumerationReport report = brute_force_verify(rank, workers, progress);
  const DescentCheck descent = verify_descent(rank, report.rationals);
  const CertificateCheck certificates = verify_certificates(rank);
  const bool pass = report.counts_match() && descent.ok && certificates.ok;

  std::ostringstream out;
  if (format == "json") {
    json combined;
    combined["report"] = json::parse(report_to_json(report));
    combined["descent"] = {{"ok", descent.ok},
                           {"checked", descent.checked},
                           {"failures", descent.failures}};
    combined["certificates"] = {{"ok", certificates.ok},
                                {"checked", certificates.checked},
                                {"failures", certificates.failures}};
    combined["pass"] = pass;
    out << combined.dump(2) << "\n";
  } else {
    const std::uint64_t expected = (std::uint64_t{1} << rank) - 1;
    out << "rank " << rank << ": group order " << report.group_order << "\n";
    out << "rational elements: " << report.rational_count << " (expected "
        << expected << ")\n";
    out << "recognition mismatches: " << report.mismatches.size() << "\n";
    for (const std::string& line : report.mismatches) out << "  " << line << "\n";
    out << "descent check: " << descent.checked << " elements, "
        << descent.failures.size() << " failures\n";
    for (const std::string& line : descent.failures) out << "  " << line << "\n";
    out << "certificate check: " << certificates.checked << " forbidden moves, "
        << certificates.failures.size() << " failures\n";
    for (const std::string& line : certificates.failures) out << "  " << line << "\n";
    out << "elapsed: " << report.elapsed_seconds << " s (workers "
        << report.worker_count << ")\n";
    out << (pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  }
  emit(out.str(), output_path);
  return pass ? 0 : kExitVerifyFailed;
}

int run_recognize(const std::string& text) {
  SignedPerm u;
  try {
    u = parse_one_line(text);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadArguments;
  }
  if (u.rank() % 2 == 0 || u.rank() < 5) {
    std::cerr << "error: recognition is defined for r >= 5 odd (got rank "
              << u.rank() << ")\n";
    return kExitBadArguments;
  }
  const RecognitionResult result = recognize(u);
  std::cout << recognition_to_json(result) << "\n";
  return result.kind == RecognitionResult::Kind::NotRational ? kExitNotRational : 0;
}

int run_graph(int rank, const std::string& format, const std::string& output_path) {
  require_family_rank(rank);
  const GammaGraph graph = build_gamma(rank);
  if (format == "json")
    emit(gamma_to_json(graph) + "\n", output_path);
  else
    emit(gamma_to_dot(graph), output_path);
  return 0;
}

json family_nu_json(const SubsetIndex& subset) {
  const TwoLevelData data = two_level_data(subset);
  std::vector<Root> nu0_closed = data.a_set;
  nu0_closed.insert(nu0_closed.end(), data.b_set.begin(), data.b_set.end());
  sort_roots(nu0_closed, subset.rank());
  std::vector<Root> nu1_closed = data.a_set;
  sort_roots(nu1_closed, subset.rank());
  json out;
  out["nu0"] = root_strings(nu0_closed);
  out["nu1"] = root_strings(nu1_closed);
  out["nu2"] = json::array();
  return out;
}

int run_family(int rank, const std::string& subset_text, const std::string& show,
               bool check, const std::string& format, const std::string& output_path) {
  require_family_rank(rank);
  SubsetIndex subset = SubsetIndex::parse(subset_text, rank);
  if (subset.is_empty())
    throw CLI::ValidationError("subset", "subset must be non-empty");

  json out;
  out["rank"] = rank;
  out["subset"] = subset.members();
  std::ostringstream text;
  text << "I = {" << subset.to_string() << "}, rank " << rank << "\n";

  if (show == "element") {
    const SignedPerm c = c_element(subset);
    const SignedPerm d = d_element(subset);
    out["c"] = format_one_line(c);
    out["d"] = format_one_line(d);
    out["p_cycle"] = p_cycle(subset);
    text << "c_I = " << format_one_line(c) << "\n";
    text << "d_I = " << format_one_line(d) << "\n";
    if (check) {
      const bool ok = recognize(c) ==
                          RecognitionResult{RecognitionResult::Kind::CFamily, subset} &&
                      recognize(d) ==
                          RecognitionResult{RecognitionResult::Kind::DFamily, subset} &&
                      tau_conjugate(c) == d;
      out["check"] = ok;
      text << "check: " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) {
        emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
        return kExitVerifyFailed;
      }
    }
  } else if (show == "nu") {
    out.update(family_nu_json(subset));
    text << "nu0 = [" << join_strings(out["nu0"]) << "]\n";
    text << "nu1 = [" << join_strings(out["nu1"]) << "]\n";
    text << "nu2 = []\n";
    if (check) {
      const NuSequence seq = nu_sequence(c_element(subset));
      const json computed0 = root_strings(seq.levels.at(0));
      const json computed1 =
          seq.levels.size() > 1 ? json(root_strings(seq.levels.at(1))) : json::array();
      const bool ok = computed0 == out["nu0"] && computed1 == out["nu1"] &&
                      seq.stable().empty();
      out["check"] = ok;
      text << "check: " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) {
        emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
        return kExitVerifyFailed;
      }
    }
  } else if (show == "arrows") {
    const TwoLevelData data = two_level_data(subset);
    json arrows = json::array();
    for (const auto& [from, to] : data.arrows)
      arrows.push_back({root_to_string(from), root_to_string(to)});
    out["arrows"] = arrows;
    out["count"] = data.arrows.size();
    out["closed_form_count"] = arrow_count(subset);
    for (const auto& [from, to] : data.arrows)
      text << root_to_string(from) << " -> " << root_to_string(to) << "\n";
    text << "count " << data.arrows.size() << " (closed form "
         << arrow_count(subset) << ")\n";
    if (check) {
      const RationalityGraph graph = build_graph(c_element(subset));
      json actual = json::array();
      for (int from = 0; from < static_cast<int>(graph.vertices.size()); ++from)
        for (int to : graph.arcs[from])
          actual.push_back({root_to_string(graph.vertices[from]),
                            root_to_string(graph.vertices[to])});
      auto as_set = [](json value) {
        std::vector<std::string> flat;
        for (const auto& pair : value) flat.push_back(pair.dump());
        std::sort(flat.begin(), flat.end());
        return flat;
      };
      const bool ok = as_set(actual) == as_set(arrows) &&
                      arrow_count(subset) ==
                          static_cast<long long>(data.arrows.size());
      out["check"] = ok;
      text << "check: " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) {
        emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
        return kExitVerifyFailed;
      }
    }
  } else if (show == "length") {
    out["length"] = family_length(subset);
    out["defect"] = family_defect(subset);
    text << "length " << family_length(subset) << ", defect "
         << family_defect(subset) << "\n";
    if (check) {
      const bool ok = family_length(subset) == length(c_element(subset)) &&
                      family_length(subset) == length(d_element(subset));
      out["check"] = ok;
      text << "check: " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) {
        emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
        return kExitVerifyFailed;
      }
    }
  } else if (show == "certificate-table") {
    json rows = json::array();
    bool all_hold = true;
    for (const FamilyHalf half : {FamilyHalf::C, FamilyHalf::D}) {
      const char* half_name = half == FamilyHalf::C ? "c" : "d";
      for (int a = 1; a <= rank; ++a) {
        if (move_allowed(half, subset, a)) continue;
        const Certificate cert = forbidden_move_certificate(half, subset, a);
        json row;
        row["half"] = half_name;
        row["a"] = a;
        row["certificate"] = certificate_json(cert);
        if (check) {
          const SignedPerm element =
              half == FamilyHalf::C ? c_element(subset) : d_element(subset);
          const SignedPerm moved = simple_reflection(a, rank).compose(element);
          const bool holds = certificate_holds(moved, cert) && !is_rational(moved);
          row["check"] = holds;
          all_hold = all_hold && holds;
        }
        rows.push_back(row);
        text << "s" << a << " * " << half_name << "_I : "
             << row["certificate"].dump() << "\n";
      }
    }
    out["forbidden_moves"] = rows;
    if (check) {
      out["check"] = all_hold;
      text << "check: " << (all_hold ? "ok" : "FAILED") << "\n";
      if (!all_hold) {
        emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
        return kExitVerifyFailed;
      }
    }
  } else {
    throw CLI::ValidationError("show", "unknown view '" + show + "'");
  }

  emit(format == "json" ? out.dump(2) + "\n" : text.str(), output_path);
  return 0;
}

int run_defect_poly(int rank, const std::string& format,
                    const std::string& output_path) {
  require_family_rank(rank);
  const std::vector<std::uint64_t> coefficients = defect_polynomial(rank);
  std::uint64_t at_one = 0;
  for (const std::uint64_t c : coefficients) at_one += c;
  std::ostringstream out;
  if (format == "json") {
    json value;
    value["rank"] = rank;
    value["coefficients"] = coefficients;
    value["degree"] = coefficients.size() - 1;
    value["value_at_one"] = at_one;
    out << value.dump(2) << "\n";
  } else {
    out << "F_" << rank << "(q) coefficients (ascending):";
    for (const std::uint64_t c : coefficients) out << " " << c;
    out << "\n";
    out << "degree " << coefficients.size() - 1 << "\n";
    out << "F(1) = " << at_one << "\n";
  }
  emit(out.str(), output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Weyl group elements of odd type D: verification, "
               "recognition and graph export"};
  app.require_subcommand(1);

  int rank = 5;
  int workers = default_workers();
  bool force = false;
  std::string format = "text";
  std::string output_path;
  std::string one_line;
  std::string subset_text;
  std::string show = "element";
  bool check = false;

  CLI::App* verify = app.add_subcommand("verify",
      "Exhaustively count rational elements and run the descent and "
      "certificate checks");
  verify->add_option("-r,--rank", rank, "odd rank >= 5")->required();
  verify->add_option("-j,--workers", workers,
                     "worker threads (default: WEYL_WORKERS or hardware)");
  verify->add_flag("--force", force, "allow ranks >= 11 (hours of CPU time)");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("-o,--output", output_path, "write output to a file");

  CLI::App* recognize_cmd = app.add_subcommand(
      "recognize", "Classify a one-line signed permutation, e.g. \"(-5,-2,-3,-4,1)\"");
  recognize_cmd->add_option("element", one_line, "one-line notation")->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "Emit Gamma(D_r)");
  graph_cmd->add_option("-r,--rank", rank, "odd rank >= 5")->required();
  std::string graph_format = "dot";
  graph_cmd->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("-o,--output", output_path, "write output to a file");

  CLI::App* family_cmd = app.add_subcommand(
      "family", "Closed-form data for one subset: element, nu, arrows, length, "
                "certificate-table");
  family_cmd->add_option("-r,--rank", rank, "odd rank >= 5")->required();
  family_cmd->add_option("--subset", subset_text, "ascending list, e.g. 1,3")
      ->required();
  family_cmd->add_option("--show", show,
                         "element | nu | arrows | length | certificate-table")
      ->check(CLI::IsMember({"element", "nu", "arrows", "length",
                             "certificate-table"}));
  family_cmd->add_flag("--check", check,
                       "cross-validate against the definition-level computation");
  family_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  family_cmd->add_option("-o,--output", output_path, "write output to a file");

  CLI::App* poly_cmd = app.add_subcommand("defect-poly",
                                          "Coefficients of the defect polynomial");
  poly_cmd->add_option("-r,--rank", rank, "odd rank >= 5")->required();
  poly_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  poly_cmd->add_option("-o,--output", output_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    return app.exit(error) == 0 ? 0 : kExitBadArguments;
  }

  try {
    if (verify->parsed()) return run_verify(rank, workers, force, format, output_path);
    if (recognize_cmd->parsed()) return run_recognize(one_line);
    if (graph_cmd->parsed()) return run_graph(rank, graph_format, output_path);
    if (family_cmd->parsed())
      return run_family(rank, subset_text, show, check, format, output_path);
    if (poly_cmd->parsed()) return run_defect_poly(rank, format, output_path);
  } catch (const CLI::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadArguments;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadArguments;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadArguments;
  }
  return kExitBadArguments;
}
