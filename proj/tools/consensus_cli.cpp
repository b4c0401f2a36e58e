// Command-line front end: consensus detection on PrefLib SOC files,
// Monte-Carlo sweeps over random-profile models, analytic bounds, and
// directory scans.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "consensus/consensus.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitArgument = 3;
constexpr int kExitCapacity = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw consensus::ArgumentError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string pivot_names(const consensus::Preference& pivot,
                        const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < pivot.ranking().size(); ++i) {
    if (i != 0) out += " > ";
    const int alt = pivot.ranking()[i];
    out += alt >= 0 && static_cast<std::size_t>(alt) < names.size()
               ? names[static_cast<std::size_t>(alt)]
               : std::to_string(alt + 1);
  }
  return out;
}

std::string failure_text(consensus::FailureReason reason) {
  switch (reason) {
    case consensus::FailureReason::condition2_violated:
      return "condition 2 violated: all frequencies equal and every ranking present";
    case consensus::FailureReason::condition1_violated_all_candidates:
      return "condition 1 fails for every maximal-frequency candidate";
    case consensus::FailureReason::flexible_condition1_violated_all_candidates:
      return "flexible condition 1 fails for every maximal-frequency candidate";
    case consensus::FailureReason::none:
      break;
  }
  return "none";
}

void print_report_human(const consensus::ConsensusReport& report,
                        const std::vector<std::string>& names) {
  const char* label =
      report.kind == consensus::ConsensusKind::level1 ? "level-1 consensus" : "flexible consensus";
  if (report.found()) {
    std::cout << label << ": found (max frequency " << report.max_frequency
              << ", max pivot distance " << *report.d_hat << ")\n";
    for (const auto& pivot : report.pivots)
      std::cout << "  pivot: " << pivot_names(pivot, names) << "\n";
  } else {
    std::cout << label << ": not found (" << failure_text(report.failure_reason) << ")\n";
  }
}

struct FileScan {
  std::string path;
  bool parsed = false;
  std::string error;
  int k = 0;
  std::uint64_t n = 0;
  bool level1 = false;
  bool flexible = false;
  bool single_peaked = false;
};

FileScan scan_one(const fs::path& path) {
  FileScan result;
  result.path = path.string();
  try {
    const consensus::PreflibDocument doc = consensus::parse_preflib(read_file(result.path));
    const consensus::Profile profile = consensus::preflib_to_profile(doc);
    result.parsed = true;
    result.k = profile.alternative_count();
    result.n = profile.voter_count();
    result.level1 = consensus::detect_level1(profile).found();
    result.flexible = consensus::detect_flexible(profile).found();
    result.single_peaked = consensus::is_single_peaked(profile);
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CONSENSUS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

int run_detect(const std::string& input, const std::string& kind, bool as_json) {
  const consensus::PreflibDocument doc = consensus::parse_preflib(read_file(input));
  const consensus::Profile profile = consensus::preflib_to_profile(doc);
  std::vector<consensus::ConsensusReport> reports;
  if (kind == "level1" || kind == "both") reports.push_back(consensus::detect_level1(profile));
  if (kind == "flexible" || kind == "both") reports.push_back(consensus::detect_flexible(profile));
  if (as_json) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(consensus::report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_human(r, doc.alternative_names);
  }
  return kExitOk;
}

int run_simulate(const std::string& model, const std::vector<int>& ks,
                 const std::vector<std::uint64_t>& ns, const std::vector<double>& phis,
                 const std::vector<std::uint64_t>& ms, std::uint64_t trials, std::uint64_t seed,
                 const std::string& csv_path, bool as_json, int threads, bool skip_sp,
                 bool skip_stability) {
  std::vector<consensus::SweepPoint> grid;
  if (model == "mallows") {
    if (ns.empty()) throw consensus::ArgumentError("simulate: mallows model needs --n");
    for (int k : ks)
      for (std::uint64_t n : ns)
        for (double phi : phis.empty() ? std::vector<double>{1.0} : phis)
          grid.push_back(consensus::SweepPoint::mallows(k, n, phi));
  } else if (model == "impartial") {
    if (ms.empty()) throw consensus::ArgumentError("simulate: impartial model needs --m");
    for (int k : ks)
      for (std::uint64_t m : ms) grid.push_back(consensus::SweepPoint::impartial(k, m));
  } else {
    throw consensus::ArgumentError("simulate: unknown model '" + model + "'");
  }

  consensus::SweepOptions opts;
  opts.threads = threads;
  opts.check_single_peaked = !skip_sp;
  opts.check_stability = !skip_stability;

  std::vector<std::pair<consensus::SweepPoint, consensus::TrialStats>> results;
  for (const auto& point : grid) {
    // phi = 0 degenerates to a unanimous profile on the reference order;
    // handled here so the sampler itself can insist on phi > 0.
    if (point.model == consensus::SweepPoint::Model::mallows && point.phi == 0.0) {
      consensus::SweepPoint fixed = point;
      fixed.phi = 1e-12;
      results.emplace_back(point, consensus::run_sweep(fixed, trials, seed, opts));
    } else {
      results.emplace_back(point, consensus::run_sweep(point, trials, seed, opts));
    }
  }

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw consensus::ArgumentError("cannot write CSV file: " + csv_path);
    out << consensus::sweep_csv_header() << "\n";
    for (const auto& [point, stats] : results)
      out << consensus::sweep_csv_row(point, stats) << "\n";
  }

  if (as_json) {
    json out = json::array();
    for (const auto& [point, stats] : results)
      out.push_back(consensus::stats_to_json(point, stats));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [point, stats] : results) {
      if (point.model == consensus::SweepPoint::Model::mallows)
        std::printf("mallows k=%d n=%llu phi=%g trials=%llu seed=%llu: ", point.k,
                    static_cast<unsigned long long>(point.n), point.phi,
                    static_cast<unsigned long long>(stats.trials),
                    static_cast<unsigned long long>(stats.seed));
      else
        std::printf("impartial k=%d m=%llu trials=%llu seed=%llu: ", point.k,
                    static_cast<unsigned long long>(point.m),
                    static_cast<unsigned long long>(stats.trials),
                    static_cast<unsigned long long>(stats.seed));
      std::printf("level1 %.4f [%.4f,%.4f]  flexible %.4f [%.4f,%.4f]",
                  stats.level1.value, stats.level1.ci_low, stats.level1.ci_high,
                  stats.flexible.value, stats.flexible.ci_low, stats.flexible.ci_high);
      if (opts.check_single_peaked)
        std::printf("  single-peaked %.4f [%.4f,%.4f]", stats.single_peaked.value,
                    stats.single_peaked.ci_low, stats.single_peaked.ci_high);
      if (opts.check_stability)
        std::printf("  stability %llu/%llu ok",
                    static_cast<unsigned long long>(stats.stability_checked -
                                                    stats.stability_violations),
                    static_cast<unsigned long long>(stats.stability_checked));
      std::printf("\n");
    }
  }
  return kExitOk;
}

int run_bounds(int k, std::uint64_t m, bool as_json) {
  const consensus::Level1Bound upper = consensus::level1_upper_bound(m, k);
  const consensus::FlexibleBound lower = consensus::flexible_lower_bound(k);
  if (as_json) {
    json j{{"k", k},
           {"m", m},
           {"level1_upper_bound",
            {{"raw", upper.raw}, {"clamped", upper.clamped}, {"exponent", upper.exponent}}},
           {"flexible_lower_bound",
            {{"value", lower.value}, {"log10", lower.log10_value}, {"exact", lower.exact}}}};
    if (lower.exact) {
      j["flexible_lower_bound"]["numerator"] = lower.numerator.to_string();
      j["flexible_lower_bound"]["denominator"] = lower.denominator.to_string();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("level-1 upper bound (m=%llu, k=%d): %.6g (clamped %.6g, exponent %llu)\n",
                static_cast<unsigned long long>(m), k, upper.raw, upper.clamped,
                static_cast<unsigned long long>(upper.exponent));
    if (lower.exact) {
      std::string num = lower.numerator.to_string();
      std::string den = lower.denominator.to_string();
      const auto num64 = lower.numerator.to_u64();
      const auto den64 = lower.denominator.to_u64();
      if (num64 && den64) {  // display in lowest terms when it fits
        const std::uint64_t g = std::gcd(*num64, *den64);
        num = std::to_string(*num64 / g);
        den = std::to_string(*den64 / g);
      }
      std::printf("flexible lower bound (k=%d): %s/%s = %.6g\n", k, num.c_str(), den.c_str(),
                  lower.value);
    } else {
      std::printf("flexible lower bound (k=%d): %.6g (log10 = %.3f)\n", k, lower.value,
                  lower.log10_value);
    }
  }
  return kExitOk;
}

int run_scan(const std::string& dir, bool as_json) {
  if (!fs::is_directory(dir))
    throw consensus::ArgumentError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<FileScan> scans;
  scans.reserve(files.size());
  for (const auto& f : files) scans.push_back(scan_one(f));

  std::uint64_t parsed = 0, level1 = 0, flexible = 0, single_peaked = 0;
  for (const auto& s : scans) {
    if (!s.parsed) continue;
    ++parsed;
    level1 += s.level1 ? 1 : 0;
    flexible += s.flexible ? 1 : 0;
    single_peaked += s.single_peaked ? 1 : 0;
  }

  if (as_json) {
    json out;
    out["files"] = json::array();
    for (const auto& s : scans) {
      json row{{"path", s.path}, {"parsed", s.parsed}};
      if (s.parsed) {
        row["k"] = s.k;
        row["n"] = s.n;
        row["level1"] = s.level1;
        row["flexible"] = s.flexible;
        row["single_peaked"] = s.single_peaked;
      } else {
        row["error"] = s.error;
      }
      out["files"].push_back(std::move(row));
    }
    out["aggregate"] = json{{"files", scans.size()},
                            {"parsed", parsed},
                            {"level1", level1},
                            {"flexible", flexible},
                            {"single_peaked", single_peaked}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%-40s %5s %7s %7s %9s %13s\n", "file", "k", "n", "level1", "flexible",
                "single-peaked");
    for (const auto& s : scans) {
      const std::string name = fs::path(s.path).filename().string();
      if (s.parsed)
        std::printf("%-40s %5d %7llu %7s %9s %13s\n", name.c_str(), s.k,
                    static_cast<unsigned long long>(s.n), s.level1 ? "yes" : "no",
                    s.flexible ? "yes" : "no", s.single_peaked ? "yes" : "no");
      else
        std::printf("%-40s  error: %s\n", name.c_str(), s.error.c_str());
    }
    std::printf("parsed %llu/%zu files: level1 %llu, flexible %llu, single-peaked %llu\n",
                static_cast<unsigned long long>(parsed), scans.size(),
                static_cast<unsigned long long>(level1),
                static_cast<unsigned long long>(flexible),
                static_cast<unsigned long long>(single_peaked));
  }
  return kExitOk;
}

void emit_error(bool as_json, const char* type, const std::string& msg) {
  if (as_json) {
    json j{{"error", {{"type", type}, {"message", msg}}}};
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error (" << type << "): " << msg << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-1 and Flexible Consensus toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // detect
  std::string detect_input;
  std::string detect_kind = "both";
  CLI::App* detect = app.add_subcommand("detect", "detect consensus in a PrefLib SOC file");
  detect->add_option("-i,--input", detect_input, "SOC file")->required();
  detect->add_option("--kind", detect_kind, "level1 | flexible | both")
      ->check(CLI::IsMember({"level1", "flexible", "both"}));

  // simulate
  std::string sim_model;
  std::vector<int> sim_k{3};
  std::vector<std::uint64_t> sim_n;
  std::vector<double> sim_phi;
  std::vector<std::uint64_t> sim_m;
  std::uint64_t sim_trials = 1000;
  std::uint64_t sim_seed = default_seed();
  std::string sim_csv;
  int sim_threads = 1;
  bool sim_no_sp = false;
  bool sim_no_stability = false;
  CLI::App* simulate = app.add_subcommand("simulate", "run Monte-Carlo sweeps");
  simulate->add_option("--model", sim_model, "mallows | impartial")->required();
  simulate->add_option("--k", sim_k, "alternative counts");
  simulate->add_option("--n", sim_n, "voter counts (mallows)");
  simulate->add_option("--phi", sim_phi, "dispersion values (mallows)");
  simulate->add_option("--m", sim_m, "expected voter counts (impartial)");
  simulate->add_option("--trials", sim_trials, "trials per grid point");
  simulate->add_option("--seed", sim_seed, "master seed");
  simulate->add_option("--csv", sim_csv, "write results to a CSV file");
  simulate->add_option("--threads", sim_threads, "worker threads");
  simulate->add_flag("--no-single-peaked", sim_no_sp, "skip the single-peakedness check");
  simulate->add_flag("--no-stability", sim_no_stability, "skip stability verification");

  // bounds
  int bounds_k = 3;
  std::uint64_t bounds_m = 1000;
  CLI::App* bounds = app.add_subcommand("bounds", "print analytic probability bounds");
  bounds->add_option("--k", bounds_k, "alternative count")->required();
  bounds->add_option("--m", bounds_m, "impartial-culture parameter m");

  // preflib scan
  CLI::App* preflib = app.add_subcommand("preflib", "PrefLib dataset utilities");
  preflib->require_subcommand(1);
  std::string scan_dir;
  CLI::App* scan = preflib->add_subcommand("scan", "scan a directory of SOC files");
  scan->add_option("dir", scan_dir, "directory to scan")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error(as_json, "argument", e.what());
    return kExitArgument;
  }

  try {
    if (*detect) return run_detect(detect_input, detect_kind, as_json);
    if (*simulate)
      return run_simulate(sim_model, sim_k, sim_n, sim_phi, sim_m, sim_trials, sim_seed,
                          sim_csv, as_json, sim_threads, sim_no_sp, sim_no_stability);
    if (*bounds) return run_bounds(bounds_k, bounds_m, as_json);
    if (*preflib) return run_scan(scan_dir, as_json);
  } catch (const consensus::CapacityError& e) {
    emit_error(as_json, "capacity", e.what());
    return kExitCapacity;
  } catch (const consensus::ParseError& e) {
    emit_error(as_json, "parse", e.what());
    return kExitParse;
  } catch (const consensus::ArgumentError& e) {
    emit_error(as_json, "argument", e.what());
    return kExitArgument;
  } catch (const std::exception& e) {
    emit_error(as_json, "argument", e.what());
    return kExitArgument;
  }
  return kExitOk;
}
