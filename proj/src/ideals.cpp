#include "nsg/ideals.hpp"

namespace nsg {

CofiniteSet canonical_ideal(NumericalSemigroup const& s) {
  Int const f = s.frobenius();
  return CofiniteSet::from_predicate(0, f + 1, [&](Int x) { return !s.contains(f - x); });
}

CanonicalReduction canonical_reduction_data(NumericalSemigroup const& s) {
  auto const omega = canonical_ideal(s);
  CanonicalReduction out;
  out.excess = static_cast<Int>(set_minus(sum(omega, omega), omega).size());
  // 0 is in Ω, so hΩ grows with h and is bounded by [0, inf); the loop ends.
  auto power = omega;
  for (int h = 1;; ++h) {
    auto next = sum(power, omega);
    if (next == power) {
      out.reduction_number = h;
      return out;
    }
    power = std::move(next);
  }
}

CofiniteSet trace_ideal(NumericalSemigroup const& s) {
  auto const omega = canonical_ideal(s);
  return sum(omega, difference(s.as_set(), omega));
}

}  // namespace nsg
