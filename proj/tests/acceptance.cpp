// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/cli.hpp"
#include "nsg/dilatation.hpp"
#include "nsg/ideals.hpp"
#include "nsg/presentation.hpp"
#include "nsg/verify.hpp"
#include "oracles.hpp"
#include "random_sets.hpp"

using nsg::CofiniteSet;
using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

using V = std::vector<Int>;
using Clock = std::chrono::steady_clock;

struct Context {
  std::vector<std::string> failures;

  void expect(bool ok, std::string const& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<void(Context&)> body;
};

bool contains(V const& v, Int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string label(NumericalSemigroup const& s, Int a) {
  return nsg::to_string(s) + " a=" + std::to_string(a);
}

void example_two_generator(Context& c) {
  V const gens{13, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 27};
  std::ostringstream out;
  std::ostringstream err;
  int const code = nsg::cli::run({"dilate", "3,5", "--a", "10"}, out, err);
  c.expect(code == 0, "dilate exit code");
  c.expect(out.str().find("members {0,13,15,16,18→}\n") != std::string::npos, "member set");
  c.expect(out.str().find("generators {13,15,16,18,19,20,21,22,23,24,25,27}\n") !=
               std::string::npos,
           "generator line");

  auto const t = nsg::dilate(NumericalSemigroup::from_generators({3, 5}), 10);
  c.expect(t.as_set() == CofiniteSet::from_members(V{0, 13, 15, 16}, 18), "T as a set");
  c.expect(t.minimal_generators() == gens, "T generators");
  auto const d = nsg::decompose_two_generator(3, 5, 10);
  c.expect(d.lambda == 0 && d.mu == 2, "(lambda, mu) = (0, 2)");
  c.expect(nsg::two_gen_dilatation_generators(3, 5, 10) == gens, "closed-form generators");
}

void example_nine_generator(Context& c) {
  auto const s = NumericalSemigroup::from_generators({11, 14, 18, 20, 21, 23, 24, 27, 30});
  auto const t = nsg::dilate(s, 5);
  c.expect(t.minimal_generators() == V{16, 19, 23, 25, 26, 27, 28, 29, 30, 33, 34, 36, 37, 40},
           "T generators");
  auto const inv = nsg::invariants(t);
  c.expect(inv.type == 13, "type 13");
  c.expect(inv.embedding_dimension == 14, "embedding dimension 14");
  c.expect(nsg::is_almost_symmetric(s), "S almost symmetric");
  c.expect(nsg::is_almost_symmetric(t), "T almost symmetric");
}

void invariant_transfer(Context& c) {
  V const expected{1, 2, 4, 7, 12, 23, 39, 67};
  auto const levels = nsg::enumerate_by_genus(8);
  c.expect(levels.size() == expected.size(), "number of levels");
  for (std::size_t g = 1; g <= levels.size(); ++g) {
    auto const& level = levels[g - 1];
    c.expect(static_cast<Int>(level.size()) == expected[g - 1],
             "count at genus " + std::to_string(g));
    std::vector<V> gap_sets;
    for (auto const& s : level) gap_sets.push_back(s.gaps());
    c.expect(gap_sets == oracle::gap_sets_of_genus(static_cast<int>(g)),
             "oracle gap sets at genus " + std::to_string(g));
    for (auto const& s : level) {
      for (Int a : nsg::admissible_shifts(s, 6)) {
        c.expect(nsg::transfer_report(s, a).passed(), label(s, a));
      }
    }
  }
}

void apery_and_generators(Context& c) {
  for (auto const& level : nsg::enumerate_by_genus(8)) {
    for (auto const& s : level) {
      for (Int a = 1; a <= 6; ++a) {
        if (!s.contains(a)) continue;
        auto const t = nsg::dilate(s, a);
        c.expect(nsg::generators_of_dilatation(s, a) == t.minimal_generators(),
                 label(s, a) + " generators");
        for (Int m = 1; m <= s.frobenius() + s.multiplicity(); ++m) {
          if (!s.contains(m)) continue;
          c.expect(nsg::apery_of_dilatation(s, a, m) == nsg::apery_set(t, m + a),
                   label(s, a) + " s=" + std::to_string(m));
        }
      }
    }
  }
  auto const s47 = NumericalSemigroup::from_generators({4, 7});
  c.expect(!s47.contains(10) && nsg::dilatation_domain(s47).contains(10), "10 in M-2M \\ S");
  auto const t47 = nsg::dilate(s47, 10);
  c.expect(!contains(nsg::apery_set(t47, 14), 31), "31 not in Ap(S+10, 14)");
  c.expect(t47.contains(31 - 14), "31 - 14 in S+10");
  c.expect(contains(nsg::dilatation_apery_formula(s47, 10, 4), 31), "formula produces 31");
}

void two_generator_closed_forms(Context& c) {
  for (Int n = 2; n <= 20; ++n) {
    for (Int m = n + 1; m <= 20; ++m) {
      if (std::gcd(n, m) != 1) continue;
      auto const s = NumericalSemigroup::from_generators({n, m});
      auto const brute = oracle::generated_monoid({n, m}, 4 * n * m);
      for (Int a = 1; a <= 2 * n * m; ++a) {
        if (!s.contains(a)) continue;
        auto const d = nsg::decompose_two_generator(n, m, a);
        std::string const where = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  " a=" + std::to_string(a);
        c.expect(d.mu >= 0 && d.mu < n && d.lambda >= 0 && d.lambda * n + d.mu * m == a,
                 where + " decomposition");
        c.expect(nsg::two_gen_dilatation_generators(n, m, a) ==
                     nsg::dilate(s, a).minimal_generators(),
                 where + " generators");
        c.expect(nsg::two_gen_apery_closed_form(n, m, a) == oracle::apery_by_residues(brute, a),
                 where + " Apéry set");
      }
    }
  }
}

void report(Context& c, nsg::VerificationSummary const& summary) {
  c.expect(summary.checks > 0, "no checks ran");
  for (auto const& v : summary.violations) c.expect(false, v);
}

void print_counts(nsg::VerificationSummary const& summary) {
  std::cout << "  " << summary.semigroups << " semigroups, " << summary.pairs << " pairs, "
            << summary.checks << " checks\n";
}

void canonical_identities(Context& c) {
  auto const summary = nsg::verify_canonical_family(8, 6);
  print_counts(summary);
  report(c, summary);
}

void classification_coherence(Context& c) {
  auto const summary = nsg::verify_classification_family(10);
  c.expect(summary.semigroups == 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204,
           "semigroup count through genus 10");
  print_counts(summary);
  report(c, summary);
}

void fixtures(Context& c) {
  auto const s = NumericalSemigroup::from_generators({4, 7, 9});
  c.expect(nsg::is_almost_symmetric(s), "almost symmetric");
  c.expect(nsg::contraction_candidates(s).empty(), "no contraction candidates");
  c.expect(nsg::canonical_ideal(s) == CofiniteSet::from_members(V{0, 4, 5, 7, 8, 9}, 11),
           "canonical ideal");
  c.expect(nsg::canonical_reduction_data(s) == nsg::CanonicalReduction{2, 1}, "reduction data");
  c.expect(nsg::trace_ideal(s) == s.maximal_ideal(), "trace ideal");
}

void presentations(Context& c) {
  c.expect(nsg::betti_contributions(NumericalSemigroup::from_generators({3, 5})).mu == 1,
           "mu(3,5)");
  c.expect(nsg::betti_contributions(NumericalSemigroup::from_generators({4, 7, 9})).mu == 3,
           "mu(4,7,9)");
  c.expect(nsg::betti_contributions(NumericalSemigroup::from_generators({4, 5, 6, 7})).mu == 6,
           "mu(4,5,6,7)");

  std::size_t pairs = 0;
  for (auto const& level : nsg::enumerate_by_genus(8)) {
    for (auto const& s : level) {
      auto const shifts = nsg::admissible_shifts(s, 6);
      pairs += shifts.size();
      if (!nsg::is_med(s)) continue;
      for (Int a : shifts) c.expect(nsg::presentation_defect(s, a) == 0, label(s, a));
    }
  }

  std::ostringstream out;
  std::ostringstream err;
  int const code =
      nsg::cli::run({"scan", "q28", "--max-genus", "8", "--max-a", "6"}, out, err);
  c.expect(code == 0, "scan exit code");
  auto const text = out.str();
  auto const lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  c.expect(lines == pairs, "one record per pair: " + std::to_string(lines) + " vs " +
                               std::to_string(pairs));
  Int nonzero = 0;
  for (auto const& r : nsg::scan_presentations(8, 6)) nonzero += r.gap != 0;
  std::cout << "  scan: " << pairs << " records, " << nonzero << " with nonzero gap\n";
}

// Dense lookup for a random cofinite set, exact on all integers.
oracle::Pred fast(testing_support::RandomCofinite const& r) {
  std::vector<char> table(static_cast<std::size_t>(r.conductor - r.lo + 1), 0);
  for (Int x : r.below) table[static_cast<std::size_t>(x - r.lo)] = 1;
  return [table, lo = r.lo, c = r.conductor](Int x) {
    return x >= c || (x >= lo && table[static_cast<std::size_t>(x - lo)] != 0);
  };
}

void ideal_engine(Context& c) {
  constexpr Int kLo = -120;
  constexpr Int kHi = 240;
  constexpr Int kPartLo = -30;
  constexpr Int kPartHi = 330;
  std::mt19937_64 rng(0x5eed'2024);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const ri = testing_support::random_cofinite(rng, -30, 60);
    auto const rj = testing_support::random_cofinite(rng, -30, 60);
    auto const i = ri.value();
    auto const j = rj.value();
    auto const pi = fast(ri);
    auto const pj = fast(rj);
    std::string const where = "trial " + std::to_string(trial);

    auto const s = nsg::sum(i, j);
    auto const brute_sum = oracle::sumset(pi, pj, kLo, kHi, kPartLo, kPartHi);
    auto const d = nsg::difference(i, j);
    for (Int x = kLo; x <= kHi; ++x) {
      c.expect(s.contains(x) == (brute_sum.count(x) > 0), where + " sum at " + std::to_string(x));
      bool in_diff = true;
      for (Int y = kPartLo; y <= kPartHi && in_diff; ++y) {
        if (pj(y) && !pi(x + y)) in_diff = false;
      }
      c.expect(d.contains(x) == in_diff, where + " difference at " + std::to_string(x));
    }

    // hI for h <= 4 stays inside [-120, 240]: its minimum is >= -120 and its
    // conductor is <= c(I) + 3 min(I) <= 240.
    std::set<Int> power;
    for (Int x = kLo; x <= kHi; ++x) {
      if (pi(x)) power.insert(x);
    }
    for (int h = 1; h <= 4; ++h) {
      if (h > 1) power = oracle::sumset(oracle::as_pred(power, kHi + 1), pi, kLo, kHi, kLo, kHi);
      auto const lib = nsg::multiple(i, h);
      for (Int x = kLo; x <= kHi; ++x) {
        c.expect(lib.contains(x) == (power.count(x) > 0),
                 where + " multiple h=" + std::to_string(h) + " at " + std::to_string(x));
      }
      c.expect(lib.conductor() <= kHi, where + " multiple conductor inside window");
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "<3,5> + 10 end to end", 1.0, example_two_generator},
      {2, "<11,14,18,20,21,23,24,27,30> + 5 end to end", 1.0, example_nine_generator},
      {3, "invariant transfer, genus <= 8, a <= 6", 60.0, invariant_transfer},
      {4, "Apery and generator formulas, a in S", 0.0, apery_and_generators},
      {5, "two-generator closed forms, m <= 20", 60.0, two_generator_closed_forms},
      {6, "canonical ideal and trace identities", 0.0, canonical_identities},
      {7, "classification coherence, genus <= 10", 120.0, classification_coherence},
      {8, "<4,7,9> fixtures", 0.0, fixtures},
      {9, "presentation sizes and scan", 120.0, presentations},
      {10, "ideal engine against brute force", 0.0, ideal_engine},
  };

  int failed = 0;
  for (auto const& criterion : criteria) {
    Context ctx;
    auto const start = Clock::now();
    try {
      criterion.body(ctx);
    } catch (std::exception const& e) {
      ctx.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      ctx.expect(false, "runtime " + std::to_string(seconds) + " s over the limit");
    }
    bool const ok = ctx.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %-48s %8.3f s\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), seconds);
    for (std::size_t k = 0; k < ctx.failures.size() && k < 10; ++k) {
      std::printf("        %s\n", ctx.failures[k].c_str());
    }
    if (ctx.failures.size() > 10) {
      std::printf("        ... %zu more\n", ctx.failures.size() - 10);
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
