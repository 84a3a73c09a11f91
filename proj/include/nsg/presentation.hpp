#pragma once

#include <map>
#include <string>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Cardinality of a minimal presentation of S, split by degree.
///
/// For a member n, the graph ∇_n has the minimal generators g with n - g in S
/// as vertices and joins g, h whenever n - g - h is in S. A minimal
/// presentation has components(∇_n) - 1 relations of degree n.
struct PresentationProfile {
  std::map<Int, Int> betti_contributions;  // nonzero entries only
  Int mu = 0;
};

/// Largest degree that can carry a relation: F + 2 max(Γ). Past it every ∇_n
/// is complete.
Int presentation_search_bound(NumericalSemigroup const& s);

/// Scans degrees 0..bound; bound defaults to presentation_search_bound(s).
PresentationProfile betti_contributions(NumericalSemigroup const& s, Int bound = -1);

/// μ(S + a) - μ(S) - aν(S) - a(a-1)/2. Throws ShiftNotInDomain; with
/// require_member, also ShiftNotInSemigroup for a positive a outside S.
Int presentation_defect(NumericalSemigroup const& s, Int a, bool require_member = false);

struct PresentationScanRecord {
  std::vector<Int> generators;
  Int shift = 0;
  Int mu_base = 0;
  Int mu_dilatation = 0;
  Int gap = 0;
};

/// "gens=4,7,9 a=2 mu_S=3 mu_T=12 gap=0"
std::string to_log_line(PresentationScanRecord const& record);

}  // namespace nsg
