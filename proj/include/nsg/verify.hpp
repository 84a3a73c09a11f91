#pragma once

#include <string>
#include <vector>

#include "nsg/presentation.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct VerificationSummary {
  Int semigroups = 0;
  Int pairs = 0;
  Int checks = 0;
  std::vector<std::string> violations;  // in enumeration order

  bool ok() const noexcept { return violations.empty(); }
};

/// Admissible shifts of S in [0, max_a].
std::vector<Int> admissible_shifts(NumericalSemigroup const& s, Int max_a);

/// Invariant transfer, contraction round trip, the Apéry/generator formulas
/// (shifts in S) and the Apéry non-generator correspondence, over every S of
/// genus <= max_genus and every admissible a <= max_a.
VerificationSummary verify_dilatation_family(int max_genus, Int max_a);

/// canonical_transfer_report over the same grid.
VerificationSummary verify_canonical_family(int max_genus, Int max_a);

/// Class inclusions and disjointness over every S of genus <= max_genus:
/// almost symmetric implies nearly Gorenstein, 2-AGL and nearly Gorenstein
/// never meet, the three almost-symmetry tests agree, and Wilf holds.
VerificationSummary verify_classification_family(int max_genus);

/// One record per (S, a) with S of genus <= max_genus and a admissible,
/// a <= max_a.
std::vector<PresentationScanRecord> scan_presentations(int max_genus, Int max_a);

}  // namespace nsg
