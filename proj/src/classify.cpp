#include "nsg/classify.hpp"

#include <stdexcept>

#include "nsg/dilatation.hpp"
#include "nsg/ideals.hpp"

namespace nsg {

AlmostSymmetryRoutes almost_symmetry_routes(NumericalSemigroup const& s) {
  auto const omega = canonical_ideal(s);
  auto const m = s.maximal_ideal();
  auto const reduction = canonical_reduction_data(s);

  AlmostSymmetryRoutes routes;
  routes.sum_in_maximal_ideal = sum(omega, m).is_subset_of(m);
  routes.inside_endomorphisms = omega.is_subset_of(difference(m, m));
  routes.canonical_reduction =
      is_symmetric(s) || (reduction.reduction_number == 2 && reduction.excess == 1);
  return routes;
}

bool is_almost_symmetric(NumericalSemigroup const& s) {
  auto const routes = almost_symmetry_routes(s);
  if (!routes.agree()) {
    throw std::logic_error("almost symmetry tests disagree for " + to_string(s));
  }
  return routes.sum_in_maximal_ideal;
}

bool is_two_agl(NumericalSemigroup const& s) {
  return canonical_reduction_data(s) == CanonicalReduction{2, 2};
}

bool is_nearly_gorenstein(NumericalSemigroup const& s) {
  auto const trace = trace_ideal(s);
  auto const m = s.maximal_ideal();
  bool const contains_m = m.is_subset_of(trace);
  if (!is_symmetric(s) && contains_m != (trace == m)) {
    throw std::logic_error("trace ideal tests disagree for " + to_string(s));
  }
  return contains_m;
}

bool wilf_holds(NumericalSemigroup const& s) {
  Int const n = static_cast<Int>(s.small_elements().size());
  return s.frobenius() + 1 <= n * s.embedding_dimension();
}

Classification classify(NumericalSemigroup const& s) {
  Classification c;
  c.symmetric = is_symmetric(s);
  c.almost_symmetric = is_almost_symmetric(s);
  c.two_agl = is_two_agl(s);
  c.nearly_gorenstein = is_nearly_gorenstein(s);
  c.med = is_med(s);
  c.arf = is_arf(s);
  c.wilf = wilf_holds(s);
  return c;
}

CanonicalTransferReport canonical_transfer_report(NumericalSemigroup const& s, Int a) {
  auto const t = dilate(s, a);
  auto const omega_s = canonical_ideal(s);
  auto const omega_t = canonical_ideal(t);

  CanonicalTransferReport r;
  r.base_symmetric = is_symmetric(s);
  r.canonical_forward = omega_t == omega_s.with(s.frobenius()).without(t.frobenius());
  r.canonical_backward = omega_s == omega_t.with(t.frobenius()).without(s.frobenius());

  if (r.base_symmetric) {
    r.canonical_multiples = true;
    r.canonical_reduction = true;
    r.trace_translates = true;
  } else {
    r.canonical_multiples = true;
    for (int i = 2; i <= 4 && r.canonical_multiples; ++i) {
      r.canonical_multiples = multiple(omega_s, i) == multiple(omega_t, i);
    }
    r.canonical_reduction = canonical_reduction_data(s).reduction_number ==
                            canonical_reduction_data(t).reduction_number;
    r.trace_translates = trace_ideal(t) == trace_ideal(s).translated(a);
  }

  r.almost_symmetric_equivalent = is_almost_symmetric(s) == is_almost_symmetric(t);
  r.two_agl_equivalent = is_two_agl(s) == is_two_agl(t);
  r.nearly_gorenstein_equivalent = is_nearly_gorenstein(s) == is_nearly_gorenstein(t);
  r.base_classes_disjoint = !(is_two_agl(s) && is_nearly_gorenstein(s));
  r.dilatation_classes_disjoint = !(is_two_agl(t) && is_nearly_gorenstein(t));
  return r;
}

}  // namespace nsg
