#pragma once

#include "nsg/cofinite_set.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Ω_S = {x in N : F(S) - x not in S}.
CofiniteSet canonical_ideal(NumericalSemigroup const& s);

struct CanonicalReduction {
  int reduction_number = 0;  // least h >= 1 with hΩ = (h+1)Ω
  Int excess = 0;            // |2Ω \ Ω|

  bool operator==(CanonicalReduction const&) const = default;
};

CanonicalReduction canonical_reduction_data(NumericalSemigroup const& s);

/// tr(S) = Ω + (S - Ω).
CofiniteSet trace_ideal(NumericalSemigroup const& s);

}  // namespace nsg
