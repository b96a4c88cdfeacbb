// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cutplan/cli/cache.hpp"
#include "cutplan/cli/document.hpp"
#include "cutplan/cli/report.hpp"
#include "cutplan/oracle.hpp"
#include "cutplan/planner.hpp"
#include "cutplan/simplex.hpp"
#include "support.hpp"

using namespace cutplan;
namespace fs = std::filesystem;

namespace {

const std::string kData = CUTPLAN_DATA_DIR;

// ln(20) / 8000 to 50 significant digits.
constexpr double kGoldenBound = 3.7446653419424887417940294701781759695957520287363e-4;

class CriterionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw CriterionFailed(what);
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> body;  // returns a short detail string
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Rational> fractions(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [n, d] : values) out.emplace_back(n, d);
  return out;
}

// k-out-of-n:G system: works iff at least k of n components work, so it
// fails as soon as n - k + 1 fail.
CutsetMatrix k_out_of_n_good(std::size_t k, std::size_t n) {
  return testing::k_out_of_n(n - k + 1, n);
}

std::string golden_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const auto doc = cli::read_document(kData + "/asymmetric5.json");
  cli::PlanOptions options;
  options.tests = 20003;
  options.alpha = 0.05;
  const auto result = cli::run_pipeline(doc.to_structure(), doc.name, options, nullptr);
  const double elapsed = seconds_since(start);
  const auto& r = result.report;

  expect(r.fractions.fractions ==
             fractions({{1, 5}, {1, 5}, {1, 5}, {0, 1}, {2, 5}}),
         "f != (1/5,1/5,1/5,0,2/5)");
  expect(r.fractions.cutset_fraction == Rational(2, 5), "g != 2/5");
  expect(r.fractions.n_zero == 5, "N0 != 5");
  expect(r.plan->n_minus == 20000, "N- != 20000");
  expect(r.plan->tests == std::vector<TestCount>{4000, 4000, 4000, 0, 8000}, "plan mismatch");
  expect(r.plan->n_min == 8000, "N_min != 8000");
  const double rel = std::abs(r.bound->q_upper - kGoldenBound) / kGoldenBound;
  expect(rel <= 1e-12, "q_upper relative error " + std::to_string(rel));
  expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");

  std::ostringstream detail;
  detail << "q_upper rel err " << rel << ", " << elapsed << " s";
  return detail.str();
}

std::string symmetric_structures() {
  const auto vote = optimize_fractions(testing::two_out_of_three());
  expect(vote.fractions == std::vector<Rational>(3, Rational(1, 3)), "2oo3 f not uniform");
  expect(vote.cutset_fraction == Rational(2, 3), "2oo3 g != 2/3");

  int structures = 0;
  int tied = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto cutsets = k_out_of_n_good(k, n);
      const auto fp = optimize_fractions(cutsets);
      const std::string tag = std::to_string(k) + "oo" + std::to_string(n);
      const std::vector<Rational> uniform(n, Rational(1, static_cast<long>(n)));
      if (cutsets.cutset_count() == 1 && n > 1) {
        // Parallel system: one cutset, so any split is optimal.
        expect(fp.alternative_optima, tag + " tie not flagged");
        ++tied;
        for (const auto& row : cutsets.rows()) {
          Rational share;
          for (auto j : row) share += uniform[j];
          expect(share >= fp.cutset_fraction, tag + " uniform split not optimal");
        }
      } else {
        expect(fp.fractions == uniform, tag + " f not uniform");
      }
      expect(fp.cutset_fraction == Rational(static_cast<long>(n - k + 1), static_cast<long>(n)),
             tag + " g != (n-k+1)/n");
      const TestCount n0 = fp.n_zero.convert_to<TestCount>();
      for (TestCount budget = n0; budget <= 3 * n0; budget += n0) {
        const auto best = oracle::brute_force_plan(cutsets, budget);
        expect(Rational(best.best_n_min) == fp.cutset_fraction * budget,
               tag + " oracle disagrees at N = " + std::to_string(budget));
      }
      ++structures;
    }
  }
  return std::to_string(structures) + " k-out-of-n structures, " + std::to_string(tied) +
         " parallel with tied optima";
}

std::string oracle_optimality() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2021);
  std::uniform_int_distribution<std::size_t> components(1, 5);
  int structures = 0;
  int checks = 0;
  while (structures < 60) {
    const auto cutsets = testing::random_structure(rng, components(rng), 6);
    expect(cutsets.cutset_count() <= 6, "generator produced s > 6");
    const auto fp = optimize_fractions(cutsets);
    if (fp.n_zero > 40) continue;
    const TestCount n0 = fp.n_zero.convert_to<TestCount>();
    for (TestCount n_minus = n0; n_minus <= 40; n_minus += n0) {
      const auto best = oracle::brute_force_plan(cutsets, n_minus);
      const auto plan = integer_plan(fp, cutsets, n_minus);
      expect(Rational(best.best_n_min) == fp.cutset_fraction * n_minus,
             "oracle beats LP plan on " + cutsets.canonical_string() + " at N- = " +
                 std::to_string(n_minus));
      expect(plan.n_min == best.best_n_min, "integer plan misses oracle optimum");
      ++checks;
    }
    ++structures;
  }
  const double elapsed = seconds_since(start);
  expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream detail;
  detail << structures << " structures, " << checks << " budgets, " << elapsed << " s";
  return detail.str();
}

std::string simplex_correctness() {
  std::mt19937_64 rng(1989);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int s = size(rng);
    const int m = size(rng);
    LpProblem lp;
    for (int j = 0; j < m; ++j) lp.cost.emplace_back(bit(rng));
    for (int i = 0; i < s; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.emplace_back(bit(rng));
      lp.constraint_matrix.push_back(std::move(row));
      lp.rhs.emplace_back(bit(rng));
    }
    const auto solution = solve_lp(lp);
    const auto vertices = oracle::enumerate_lp_vertices(lp);
    expect(solution.status == vertices.status, "status mismatch on trial " + std::to_string(trial));
    if (solution.status == LpStatus::kOptimal) {
      expect(solution.objective == vertices.objective,
             "objective mismatch on trial " + std::to_string(trial));
      expect(certifies_optimality(lp, solution),
             "dual certificate fails on trial " + std::to_string(trial));
      ++optimal;
    } else {
      ++infeasible;
    }
  }
  return std::to_string(optimal) + " optimal, " + std::to_string(infeasible) + " infeasible";
}

std::string shortest_path_property() {
  std::vector<CutsetMatrix> corpus = {testing::asymmetric_example(), testing::two_out_of_three()};
  for (const char* file : {"asymmetric5.json", "vote_2oo3.json", "vote_2oo3_truth_table.json",
                           "bridge.json"}) {
    corpus.push_back(minimal_cutsets(cli::read_document(kData + "/" + file).to_structure()));
  }
  for (std::size_t m = 1; m <= 6; ++m) corpus.push_back(testing::series(m));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) corpus.push_back(k_out_of_n_good(k, n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) corpus.push_back(testing::random_structure(rng, 1 + i % 8, 8));

  for (const auto& cutsets : corpus) {
    const auto fp = optimize_fractions(cutsets);
    const auto p = shortest_path_length(cutsets);
    expect(fp.cutset_fraction * p >= 1, "g < 1/P on " + cutsets.canonical_string());
  }

  const auto doc = cli::read_document(kData + "/asymmetric5.json");
  cli::PlanOptions options;
  options.tests = 20003;
  const auto report = cli::to_json(cli::run_pipeline(doc.to_structure(), doc.name, options,
                                                     nullptr).report);
  expect(report["path_strategy"]["shortest_path_length"] == 3, "P != 3");
  expect(report["path_strategy"]["n_min"] == 6667, "path strategy value != 6667");
  return std::to_string(corpus.size()) + " structures, example path strategy 6667";
}

std::string n_zero_equivalence() {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> length(1, 5);
  std::uniform_int_distribution<long> denominator(1, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rational> f;
    const int m = length(rng);
    for (int j = 0; j < m; ++j) {
      const long d = denominator(rng);
      f.emplace_back(std::uniform_int_distribution<long>(0, d)(rng), d);
    }
    const auto lcm = find_n_zero(f);
    const auto searched = oracle::increment_n_zero(f);
    expect(searched.has_value(), "increment search gave up");
    expect(lcm == *searched, "N0 mismatch on trial " + std::to_string(trial));
  }
  return "1000 vectors";
}

std::string cache_reuse() {
  const fs::path dir = fs::temp_directory_path() /
                       ("cutplan-acceptance-" + std::to_string(std::random_device{}()));
  const cli::PlanCache cache(dir);
  const auto doc = cli::read_document(kData + "/asymmetric5.json");
  const auto structure = doc.to_structure();

  cli::PlanOptions options;
  cli::run_pipeline(structure, doc.name, options, &cache);

  int compared = 0;
  bool ok = true;
  std::string failure;
  for (TestCount budget = 5; compared < 20; budget = budget * 3 + 1) {
    options.tests = budget;
    const auto before = lp_solve_count();
    const auto cached = cli::run_pipeline(structure, doc.name, options, &cache);
    const auto solves = lp_solve_count() - before;
    const auto fresh = cli::run_pipeline(structure, doc.name, options, nullptr);
    if (cached.cache != cli::CacheOutcome::kHit || solves != 0) {
      ok = false;
      failure = "LP re-run for budget " + std::to_string(budget);
      break;
    }
    if (cli::to_json(cached.report).dump(2) != cli::to_json(fresh.report).dump(2)) {
      ok = false;
      failure = "report differs for budget " + std::to_string(budget);
      break;
    }
    ++compared;
    if (budget > 1'000'000'000'000ULL) budget = 5;
  }
  fs::remove_all(dir);
  expect(ok, failure);
  return std::to_string(compared) + " budgets, 0 LP solves";
}

std::string bound_clamp() {
  expect(confidence_bound(0, 0.05).q_upper == 1.0, "n_min = 0 not clamped");
  expect(confidence_bound(1, 0.05).q_upper == 1.0, "n_min = 1 not clamped");
  double previous = confidence_bound(1, 0.05).q_upper;
  for (TestCount n = 2; n <= 10'000; ++n) {
    const double q = confidence_bound(n, 0.05).q_upper;
    expect(q <= previous, "bound increases at n_min = " + std::to_string(n));
    previous = q;
  }
  return "monotone over 1..10^4";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden five-component reproduction", golden_reproduction},
      {2, "symmetric structures split evenly", symmetric_structures},
      {3, "LP plans match exhaustive integer optimum", oracle_optimality},
      {4, "simplex matches vertex enumeration with dual certificates", simplex_correctness},
      {5, "g >= 1/P and path-strategy comparison", shortest_path_property},
      {6, "LCM N0 equals increment search", n_zero_equivalence},
      {7, "cached fractions reused without LP solves", cache_reuse},
      {8, "bound clamp and monotonicity", bound_clamp},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string status = "PASS";
    std::string detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << "[" << status << "] criterion " << c.id << ": " << c.title << " (" << detail
              << ")" << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " acceptance criteria failed")
            << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
