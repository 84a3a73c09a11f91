#pragma once

#include "nsg/semigroup.hpp"

namespace nsg {

/// The three independent tests for almost symmetry.
struct AlmostSymmetryRoutes {
  bool sum_in_maximal_ideal = false;    // Ω + M ⊆ M
  bool inside_endomorphisms = false;    // Ω ⊆ M - M
  bool canonical_reduction = false;     // symmetric, or r(Ω) = 2 and |2Ω \ Ω| = 1

  bool agree() const noexcept {
    return sum_in_maximal_ideal == inside_endomorphisms &&
           inside_endomorphisms == canonical_reduction;
  }
};

AlmostSymmetryRoutes almost_symmetry_routes(NumericalSemigroup const& s);

/// Throws std::logic_error if the three routes disagree.
bool is_almost_symmetric(NumericalSemigroup const& s);

/// r(Ω) = 2 and |2Ω \ Ω| = 2.
bool is_two_agl(NumericalSemigroup const& s);

/// M ⊆ tr(S). For non-symmetric S this is cross-checked against tr(S) = M and
/// a mismatch throws std::logic_error.
bool is_nearly_gorenstein(NumericalSemigroup const& s);

/// F + 1 <= n * ν.
bool wilf_holds(NumericalSemigroup const& s);

struct Classification {
  bool symmetric = false;
  bool almost_symmetric = false;
  bool two_agl = false;
  bool nearly_gorenstein = false;
  bool med = false;
  bool arf = false;
  bool wilf = false;
};

Classification classify(NumericalSemigroup const& s);

/// How the canonical ideal, the trace ideal and the three Gorenstein-adjacent
/// classes behave under T = S + a. Checks carrying a hypothesis on S are
/// reported as true when the hypothesis fails.
struct CanonicalTransferReport {
  bool base_symmetric = false;
  bool canonical_forward = false;        // Ω_T = (Ω_S ∪ {F(S)}) \ {F(T)}
  bool canonical_backward = false;       // Ω_S = (Ω_T ∪ {F(T)}) \ {F(S)}
  bool canonical_multiples = false;      // iΩ_S = iΩ_T, i = 2..4, S non-symmetric
  bool canonical_reduction = false;      // same r(Ω), S non-symmetric
  bool trace_translates = false;         // tr(T) = tr(S) + a, S non-symmetric
  bool almost_symmetric_equivalent = false;
  bool two_agl_equivalent = false;
  bool nearly_gorenstein_equivalent = false;
  bool base_classes_disjoint = false;    // not (2-AGL and nearly Gorenstein)
  bool dilatation_classes_disjoint = false;

  bool passed() const noexcept {
    return canonical_forward && canonical_backward && canonical_multiples &&
           canonical_reduction && trace_translates && almost_symmetric_equivalent &&
           two_agl_equivalent && nearly_gorenstein_equivalent && base_classes_disjoint &&
           dilatation_classes_disjoint;
  }
};

/// Throws ShiftNotInDomain for an inadmissible shift.
CanonicalTransferReport canonical_transfer_report(NumericalSemigroup const& s, Int a);

}  // namespace nsg
