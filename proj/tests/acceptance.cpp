// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "consensus/consensus.hpp"
#include "support.hpp"

using namespace consensus;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int g_failed = 0;

void run_criterion(int id, const std::string& title,
                   const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  if (c.failures.empty()) {
    std::printf("[PASS] criterion %d: %s\n", id, title.c_str());
  } else {
    ++g_failed;
    std::printf("[FAIL] criterion %d: %s\n", id, title.c_str());
    for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
  }
  std::fflush(stdout);
}

bool reports_match(const ConsensusReport& a, const ConsensusReport& b) {
  return a.outcome == b.outcome && a.pivots == b.pivots &&
         a.failure_reason == b.failure_reason;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double binom_sigma(double p, double trials) {
  return std::sqrt(p * std::max(0.0, 1.0 - p) / trials);
}

// Sweep results shared between the empirical criteria so criterion 6 can
// total the stability checks across everything criteria 3-5 generated.
struct SweepBank {
  std::vector<TrialStats> all;
  TrialStats uniform_n100;
  TrialStats uniform_n1000;
  TrialStats impartial_m100;
  TrialStats impartial_m1000;
  TrialStats impartial_m10000;
  std::map<double, TrialStats> mallows_by_phi;

  std::uint64_t stability_checked() const {
    std::uint64_t total = 0;
    for (const auto& stats : all) total += stats.stability_checked;
    return total;
  }
  std::uint64_t stability_violations() const {
    std::uint64_t total = 0;
    for (const auto& stats : all) total += stats.stability_violations;
    return total;
  }
};

}  // namespace

int main() {
  SweepBank bank;

  run_criterion(1, "detection algorithms agree exactly with the brute-force oracle",
                [](Criterion& c) {
    SplitMix64 rng(0xACCE5501ull);
    int mismatches = 0;
    for (int iter = 0; iter < 1000; ++iter) {
      const Profile profile = iter % 2 == 0
                                  ? testsupport::random_profile(rng, 3, 50)
                                  : testsupport::clustered_profile(
                                        rng, 3, 1 + rng.next_below(50),
                                        0.2 + rng.next_double() * 0.6);
      if (!reports_match(detect_level1(profile),
                         brute_force_detect(profile, ConsensusKind::level1)))
        ++mismatches;
      if (!reports_match(detect_flexible(profile),
                         brute_force_detect(profile, ConsensusKind::flexible)))
        ++mismatches;
    }
    for (int iter = 0; iter < 500; ++iter) {
      const Profile profile = iter % 2 == 0
                                  ? testsupport::random_profile(rng, 4, 50)
                                  : testsupport::clustered_profile(
                                        rng, 4, 1 + rng.next_below(50),
                                        0.2 + rng.next_double() * 0.6);
      if (!reports_match(detect_level1(profile),
                         brute_force_detect(profile, ConsensusKind::level1)))
        ++mismatches;
      if (!reports_match(detect_flexible(profile),
                         brute_force_detect(profile, ConsensusKind::flexible)))
        ++mismatches;
    }
    c.require(mismatches == 0,
              "oracle disagreements on " + std::to_string(mismatches) + " profiles");
  });

  run_criterion(2, "Mahonian tables: enumeration match (K=3..7) and K! sums (K=3..12)",
                [](Criterion& c) {
    for (int k = 3; k <= 7; ++k) {
      const auto all = enumerate_preferences(k);
      const Preference id = Preference::identity(k);
      std::vector<std::uint64_t> tally(
          static_cast<std::size_t>(max_inversion_distance(k)) + 1, 0);
      for (const auto& p : all)
        ++tally[static_cast<std::size_t>(testsupport::pair_scan_distance(p, id))];
      const MahonianTable t = mahonian_table(k);
      c.require(t.counts.size() == tally.size(), "table size mismatch at K=" + std::to_string(k));
      for (std::size_t j = 0; j < tally.size(); ++j)
        c.require(t.counts[j] == BigNat{tally[j]},
                  "T(" + std::to_string(k) + "," + std::to_string(j) + ") mismatch");
    }
    for (int k = 3; k <= 12; ++k) {
      BigNat sum;
      for (const auto& v : mahonian_table(k).counts) sum += v;
      c.require(sum == BigNat{factorial_u64(k)},
                "sum of T(" + std::to_string(k) + ",.) != K!");
    }
  });

  run_criterion(3, "impartial culture K=3: flexible fraction in [0.030,0.060], level-1 <= 0.01",
                [&bank](Criterion& c) {
    // phi = 1 uniform-culture profiles at the reference voter counts. Trial
    // counts well above the 2000 minimum keep the estimates tight.
    bank.uniform_n100 =
        run_sweep(SweepPoint::mallows(3, 100, 1.0), 100000, 0xACCE5503ull);
    bank.uniform_n1000 =
        run_sweep(SweepPoint::mallows(3, 1000, 1.0), 30000, 0xACCE5503ull);
    bank.all.push_back(bank.uniform_n100);
    bank.all.push_back(bank.uniform_n1000);
    for (const auto* stats : {&bank.uniform_n100, &bank.uniform_n1000}) {
      c.require(stats->flexible.value >= 0.030 && stats->flexible.value <= 0.060,
                "flexible fraction " + std::to_string(stats->flexible.value) +
                    " outside [0.030, 0.060]");
    }
    c.require(bank.uniform_n1000.level1.value <= 0.01,
              "level-1 fraction at 1000 voters is " +
                  std::to_string(bank.uniform_n1000.level1.value));
  });

  run_criterion(4, "level-1 fraction sits under the closed-form bound and decays in m",
                [&bank](Criterion& c) {
    const std::uint64_t trials = 3000;
    bank.impartial_m100 = run_sweep(SweepPoint::impartial(3, 100), trials, 0xACCE5504ull);
    bank.impartial_m1000 = run_sweep(SweepPoint::impartial(3, 1000), trials, 0xACCE5504ull);
    bank.impartial_m10000 = run_sweep(SweepPoint::impartial(3, 10000), trials, 0xACCE5504ull);
    bank.all.push_back(bank.impartial_m100);
    bank.all.push_back(bank.impartial_m1000);
    bank.all.push_back(bank.impartial_m10000);
    const double p100 = bank.impartial_m100.level1.value;
    const double p1000 = bank.impartial_m1000.level1.value;
    const double p10000 = bank.impartial_m10000.level1.value;
    const Level1Bound bound = level1_upper_bound(10000, 3);
    const double sigma10000 = binom_sigma(p10000, trials);
    c.require(p10000 <= bound.raw + 3 * sigma10000,
              "fraction at m=10000 (" + std::to_string(p10000) + ") above bound " +
                  std::to_string(bound.raw));
    const double s01 = 2 * std::hypot(binom_sigma(p100, trials), binom_sigma(p1000, trials));
    const double s12 = 2 * std::hypot(binom_sigma(p1000, trials), sigma10000);
    c.require(p1000 <= p100 + s01, "fraction rose from m=100 to m=1000 beyond noise");
    c.require(p10000 <= p1000 + s12, "fraction rose from m=1000 to m=10000 beyond noise");
  });

  run_criterion(5, "Mallows K=3 n=100 sweep has the expected qualitative shape",
                [&bank](Criterion& c) {
    for (double phi : {0.01, 0.05, 0.2, 1.0}) {
      bank.mallows_by_phi[phi] =
          run_sweep(SweepPoint::mallows(3, 100, phi), 1000, 0xACCE5505ull);
      bank.all.push_back(bank.mallows_by_phi[phi]);
    }

    c.require(bank.mallows_by_phi[0.01].level1_found > 0,
              "level-1 fraction is zero at phi=0.01");
    for (double phi : {0.05, 0.2, 1.0})
      c.require(bank.mallows_by_phi[phi].level1.value <= 0.01,
                "level-1 fraction at phi=" + std::to_string(phi) + " is " +
                    std::to_string(bank.mallows_by_phi[phi].level1.value) + " > 0.01");
    for (double phi : {0.01, 0.05, 0.2, 1.0})
      c.require(bank.mallows_by_phi[phi].flexible_found >
                    bank.mallows_by_phi[phi].level1_found,
                "flexible does not strictly exceed level-1 at phi=" + std::to_string(phi));
    const auto& sp = bank.mallows_by_phi;
    c.require(sp.at(0.01).single_peaked_found > sp.at(0.05).single_peaked_found &&
                  sp.at(0.05).single_peaked_found > sp.at(0.2).single_peaked_found &&
                  sp.at(0.2).single_peaked_found > sp.at(1.0).single_peaked_found,
              "single-peaked fraction is not decreasing in phi");
  });

  run_criterion(6, "stability guarantees hold on every flexible-consensus profile generated",
                [&bank](Criterion& c) {
    c.require(bank.stability_checked() > 0, "no flexible profiles were stability-checked");
    c.require(bank.stability_violations() == 0,
              std::to_string(bank.stability_violations()) + " stability violations");
  });

  run_criterion(7, "switching a disliked pair strictly decreases distance (exhaustive K=3,4)",
                [](Criterion& c) {
    for (int k : {3, 4}) {
      const auto all = enumerate_preferences(k);
      for (const auto& base : all) {
        const auto pos = base.positions();
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) {
            if (a == b || pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)])
              continue;
            for (const auto& p : all) {
              const auto ppos = p.positions();
              if (ppos[static_cast<std::size_t>(b)] > ppos[static_cast<std::size_t>(a)])
                continue;
              const int before = inversion_distance(p, base);
              const int after = inversion_distance(apply_switch(p, a, b), base);
              c.require(after < before, "switch failed to strictly decrease distance");
            }
          }
      }
    }
  });

  run_criterion(8, "binomial-equality approximation within 15% of Monte-Carlo (t=2,3)",
                [](Criterion& c) {
    c.require(p_equal_approx(2000, 1.0 / 6.0, 1) == 1.0, "t=1 must be exactly 1");
    SplitMix64 rng(0xACCE5508ull);
    const std::uint64_t m = 2000;
    const double p = 1.0 / 6.0;
    for (int t : {2, 3}) {
      const int samples = 1000000;
      int equal = 0;
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t first = binomial_draw(rng, m, p);
        bool all_equal = true;
        for (int extra = 1; extra < t; ++extra)
          all_equal = binomial_draw(rng, m, p) == first && all_equal;
        if (all_equal) ++equal;
      }
      const double mc = static_cast<double>(equal) / samples;
      const double approx = p_equal_approx(m, p, t);
      c.require(std::abs(approx - mc) <= 0.15 * mc,
                "t=" + std::to_string(t) + ": approx " + std::to_string(approx) +
                    " vs Monte-Carlo " + std::to_string(mc));
    }
  });

  run_criterion(9, "bounds are exact: 1/30 rational, closed-form exponents 2 and 17",
                [](Criterion& c) {
    const FlexibleBound b3 = flexible_lower_bound(3);
    c.require(b3.exact, "K=3 bound must be exact");
    c.require(b3.numerator * 30ull == b3.denominator, "K=3 bound != 1/30 as a rational");
    c.require(level1_upper_bound_exponent(3) == 2, "K=3 exponent != 2");
    c.require(level1_upper_bound_exponent(4) == 17, "K=4 exponent != 17");
    for (std::uint64_t m : {100ull, 10000ull}) {
      const double expect3 = 6.0 / std::sqrt(std::pow(2 * std::numbers::pi * m / 6.0, 2.0));
      const double expect4 = 24.0 / std::sqrt(std::pow(2 * std::numbers::pi * m / 24.0, 17.0));
      c.require(std::abs(level1_upper_bound(m, 3).raw - expect3) <= 1e-12 * expect3,
                "K=3 closed form mismatch");
      c.require(std::abs(level1_upper_bound(m, 4).raw - expect4) <= 1e-12 * expect4,
                "K=4 closed form mismatch");
    }
  });

  run_criterion(10, "preflib scan classifies the bundled fixtures; parser round-trips them",
                [](Criterion& c) {
    const fs::path dir = testsupport::fixtures_dir();

    // expected: name -> (parses, level1, flexible, single_peaked)
    struct Expected {
      bool parses, level1, flexible, single_peaked;
    };
    const std::map<std::string, Expected> expected{
        {"unanimous.soc", {true, true, true, true}},
        {"flexible_only.soc", {true, false, true, false}},
        {"level1_ball.soc", {true, true, true, true}},
        {"condorcet_cycle.soc", {true, false, false, false}},
        {"uniform_all.soc", {true, false, true, false}},
        {"sp_axis.soc", {true, false, true, true}},
        {"k4_unanimous.soc", {true, true, true, true}},
        {"tie_group.soc", {false, false, false, false}},
        {"malformed_count.soc", {false, false, false, false}},
        {"partial_order.soc", {false, false, false, false}},
    };

    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      auto it = expected.find(name);
      c.require(it != expected.end(), "unexpected fixture " + name);
      if (it == expected.end()) continue;
      ++seen;
      const std::string raw = slurp(entry.path());
      PreflibDocument doc;
      bool parsed = true;
      try {
        doc = parse_preflib(raw);
      } catch (const ParseError&) {
        parsed = false;
      }
      c.require(parsed == it->second.parses, name + ": parse outcome wrong");
      if (!parsed) continue;
      c.require(serialize_preflib(doc) == raw, name + ": round-trip not byte-exact");
      const Profile profile = preflib_to_profile(doc);
      c.require(detect_level1(profile).found() == it->second.level1,
                name + ": level-1 classification wrong");
      c.require(detect_flexible(profile).found() == it->second.flexible,
                name + ": flexible classification wrong");
      c.require(is_single_peaked(profile) == it->second.single_peaked,
                name + ": single-peaked classification wrong");
    }
    c.require(seen == 10, "expected 10 fixtures, saw " + std::to_string(seen));

    // The same classifications through the CLI's scan command.
    if (const char* bin = std::getenv("CONSENSUS_CLI_BIN")) {
      const fs::path out = fs::temp_directory_path() / "consensus_scan_acceptance.json";
      const std::string cmd = std::string(bin) + " --json preflib scan " + dir.string() +
                              " > " + out.string() + " 2>&1";
      const int status = std::system(cmd.c_str());
      c.require(WEXITSTATUS(status) == 0, "preflib scan exited nonzero");
      const nlohmann::json j = nlohmann::json::parse(slurp(out));
      fs::remove(out);
      c.require(j["aggregate"]["parsed"] == 7, "scan parsed-count wrong");
      for (const auto& row : j["files"]) {
        const std::string name = fs::path(row["path"].get<std::string>()).filename().string();
        const auto it = expected.find(name);
        if (it == expected.end()) continue;
        c.require(row["parsed"].get<bool>() == it->second.parses,
                  name + ": scan parse flag wrong");
        if (!it->second.parses) continue;
        c.require(row["level1"].get<bool>() == it->second.level1 &&
                      row["flexible"].get<bool>() == it->second.flexible &&
                      row["single_peaked"].get<bool>() == it->second.single_peaked,
                  name + ": scan classification wrong");
      }
    } else {
      c.require(false, "CONSENSUS_CLI_BIN not set; cannot exercise the scan command");
    }
  });

  if (g_failed == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
