#pragma once

#include <vector>

#include "nsg/cofinite_set.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// M - 2M. Its non-negative members are the admissible shifts for dilate();
/// the set also has negative members, which are never used as shifts.
CofiniteSet dilatation_domain(NumericalSemigroup const& s);

/// S + a = {0} ∪ (M + a). Throws ShiftNotInDomain unless a >= 0 and a is in
/// M - 2M.
NumericalSemigroup dilate(NumericalSemigroup const& s, Int a);

/// A semigroup together with one of its dilatations.
struct DilatationPair {
  NumericalSemigroup base;
  Int shift;
  NumericalSemigroup result;
};

DilatationPair dilatation_pair(NumericalSemigroup const& s, Int a);

/// The S with S + a = T, i.e. {0} ∪ (M_T - a). Requires 2M_T ⊆ M_T + a and
/// 0 < a < e(T) (a == 0 returns T). Throws ShiftTooLarge for a > e(T) and
/// NotContractible otherwise, including a == e(T) and contractions to N.
NumericalSemigroup contract(NumericalSemigroup const& t, Int a);

/// Every a >= 1 for which contract(t, a) succeeds, ascending.
std::vector<Int> contraction_candidates(NumericalSemigroup const& t);

/// The three-part union {0, s+2a} ∪ (Ap(S,s)\{0} + a) ∪ (Ap(S,a)\{0} + s + a),
/// with Apéry sets taken by definition. No hypotheses are checked, so this
/// also evaluates the union for shifts outside S.
std::vector<Int> dilatation_apery_formula(NumericalSemigroup const& s, Int a, Int modulus);

/// Ap(S + a, s + a) from Apéry sets of S. Requires a, s positive members of S;
/// throws ShiftNotInSemigroup when a is not in S.
std::vector<Int> apery_of_dilatation(NumericalSemigroup const& s, Int a, Int modulus);

/// Minimal generators of S + a built from Ap(S, e) and Ap(S, a): translates
/// are kept unless they lie in 2M + 2a. Requires a a positive member of S.
std::vector<Int> generators_of_dilatation(NumericalSemigroup const& s, Int a);

/// a = lambda * n + mu * m with 0 <= mu < n.
struct TwoGeneratorDecomposition {
  Int lambda;
  Int mu;
};

/// Throws BadParameters unless gcd(n, m) = 1, 2 <= n < m and a > 0;
/// NotRepresentable when lambda < 0.
TwoGeneratorDecomposition decompose_two_generator(Int n, Int m, Int a);

/// Ap(⟨n,m⟩, a) in closed form.
std::vector<Int> two_gen_apery_closed_form(Int n, Int m, Int a);

/// Minimal generators of ⟨n,m⟩ + a in closed form; ascending and deduplicated.
std::vector<Int> two_gen_dilatation_generators(Int n, Int m, Int a);

/// How the invariants of S carry over to T = S + a.
struct TransferReport {
  bool frobenius = false;            // F(T) = F(S) + a
  bool genus = false;                // g(T) = g(S) + a
  bool multiplicity = false;         // e(T) = e(S) + a
  bool sporadic_count = false;       // n(T) = n(S)
  bool type = false;                 // t(T) = t(S) + a
  bool hilbert = false;              // H_T(h) = H_S(h) + a, 1 <= h <= r + 2
  bool embedding_dimension = false;  // ν(T) = ν(S) + a
  bool med_stable = false;
  bool arf_stable = false;
  bool wilf_transferred = false;     // Wilf(S) implies Wilf(T)
  int hilbert_checked_up_to = 0;

  bool passed() const noexcept {
    return frobenius && genus && multiplicity && sporadic_count && type && hilbert &&
           embedding_dimension && med_stable && arf_stable && wilf_transferred;
  }
};

TransferReport transfer_report(NumericalSemigroup const& s, Int a);

}  // namespace nsg
