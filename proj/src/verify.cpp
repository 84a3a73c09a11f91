#include "nsg/verify.hpp"

#include <algorithm>

#include "nsg/classify.hpp"
#include "nsg/dilatation.hpp"

namespace nsg {

namespace {

std::string pair_label(NumericalSemigroup const& s, Int a) {
  return to_string(s) + " a=" + std::to_string(a);
}

void check(VerificationSummary& summary, bool ok, std::string const& what) {
  ++summary.checks;
  if (!ok) summary.violations.push_back(what);
}

// Non-zero elements of Ap(S, e) that are not minimal generators.
std::vector<Int> apery_non_generators(NumericalSemigroup const& s) {
  auto const& gens = s.minimal_generators();
  std::vector<Int> out;
  for (Int x : apery_set(s, s.multiplicity())) {
    if (x != 0 && !std::binary_search(gens.begin(), gens.end(), x)) out.push_back(x);
  }
  return out;
}

template <typename Visit>
void for_each_pair(int max_genus, Int max_a, VerificationSummary& summary, Visit visit) {
  for (auto const& level : enumerate_by_genus(max_genus)) {
    for (auto const& s : level) {
      ++summary.semigroups;
      for (Int a : admissible_shifts(s, max_a)) {
        ++summary.pairs;
        visit(s, a);
      }
    }
  }
}

}  // namespace

std::vector<Int> admissible_shifts(NumericalSemigroup const& s, Int max_a) {
  auto const domain = dilatation_domain(s);
  std::vector<Int> out;
  for (Int a = 0; a <= max_a; ++a) {
    if (domain.contains(a)) out.push_back(a);
  }
  return out;
}

VerificationSummary verify_dilatation_family(int max_genus, Int max_a) {
  VerificationSummary summary;
  for_each_pair(max_genus, max_a, summary, [&](NumericalSemigroup const& s, Int a) {
    auto const label = pair_label(s, a);
    auto const t = dilate(s, a);
    check(summary, transfer_report(s, a).passed(), label + ": invariant transfer");
    check(summary, contract(t, a) == s, label + ": contraction round trip");

    auto shifted = apery_non_generators(s);
    for (Int& x : shifted) x += 2 * a;
    check(summary, apery_non_generators(t) == shifted,
          label + ": Apéry non-generators shift by 2a");

    if (a > 0 && s.contains(a)) {
      check(summary, generators_of_dilatation(s, a) == t.minimal_generators(),
            label + ": generators from Apéry sets");
      for (Int m = 1; m <= s.frobenius() + s.multiplicity(); ++m) {
        if (!s.contains(m)) continue;
        check(summary, apery_of_dilatation(s, a, m) == apery_set(t, m + a),
              label + " s=" + std::to_string(m) + ": Apéry set of dilatation");
      }
    }
  });
  return summary;
}

VerificationSummary verify_canonical_family(int max_genus, Int max_a) {
  VerificationSummary summary;
  for_each_pair(max_genus, max_a, summary, [&](NumericalSemigroup const& s, Int a) {
    auto const r = canonical_transfer_report(s, a);
    auto const label = pair_label(s, a);
    check(summary, r.canonical_forward, label + ": canonical ideal of dilatation");
    check(summary, r.canonical_backward, label + ": canonical ideal of base");
    check(summary, r.canonical_multiples, label + ": canonical multiples coincide");
    check(summary, r.canonical_reduction, label + ": canonical reduction numbers");
    check(summary, r.trace_translates, label + ": trace ideal translates");
    check(summary, r.almost_symmetric_equivalent, label + ": almost symmetry transfer");
    check(summary, r.two_agl_equivalent, label + ": 2-AGL transfer");
    check(summary, r.nearly_gorenstein_equivalent, label + ": nearly Gorenstein transfer");
    check(summary, r.base_classes_disjoint, label + ": 2-AGL/nearly Gorenstein on S");
    check(summary, r.dilatation_classes_disjoint, label + ": 2-AGL/nearly Gorenstein on T");
  });
  return summary;
}

VerificationSummary verify_classification_family(int max_genus) {
  VerificationSummary summary;
  for (auto const& level : enumerate_by_genus(max_genus)) {
    for (auto const& s : level) {
      ++summary.semigroups;
      auto const label = to_string(s);
      auto const routes = almost_symmetry_routes(s);
      check(summary, routes.agree(), label + ": almost symmetry tests agree");
      bool const almost_symmetric = routes.sum_in_maximal_ideal;
      bool const nearly_gorenstein = is_nearly_gorenstein(s);
      bool const two_agl = is_two_agl(s);
      check(summary, !almost_symmetric || nearly_gorenstein,
            label + ": almost symmetric but not nearly Gorenstein");
      check(summary, !(two_agl && nearly_gorenstein),
            label + ": both 2-AGL and nearly Gorenstein");
      check(summary, !(two_agl && almost_symmetric),
            label + ": both 2-AGL and almost symmetric");
      check(summary, wilf_holds(s), label + ": Wilf inequality fails");
    }
  }
  return summary;
}

std::vector<PresentationScanRecord> scan_presentations(int max_genus, Int max_a) {
  std::vector<PresentationScanRecord> out;
  for (auto const& level : enumerate_by_genus(max_genus)) {
    for (auto const& s : level) {
      Int const mu_s = betti_contributions(s).mu;
      for (Int a : admissible_shifts(s, max_a)) {
        PresentationScanRecord rec;
        rec.generators = s.minimal_generators();
        rec.shift = a;
        rec.mu_base = mu_s;
        rec.mu_dilatation = betti_contributions(dilate(s, a)).mu;
        rec.gap = rec.mu_dilatation - mu_s - a * s.embedding_dimension() - a * (a - 1) / 2;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

}  // namespace nsg
