#include "nsg/dilatation.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/classify.hpp"

namespace nsg {

namespace {

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_positive_member_shift(NumericalSemigroup const& s, Int a) {
  if (a <= 0 || !s.contains(a)) {
    throw Error(ErrorCode::ShiftNotInSemigroup,
                "shift " + std::to_string(a) + " must be a positive member of " + to_string(s));
  }
}

void require_positive_member_modulus(NumericalSemigroup const& s, Int modulus) {
  if (modulus == 0) {
    throw Error(ErrorCode::ZeroModulus, "Apéry set with respect to 0");
  }
  if (modulus < 0 || !s.contains(modulus)) {
    throw Error(ErrorCode::NotAMember, std::to_string(modulus) + " is not in " + to_string(s));
  }
}

}  // namespace

CofiniteSet dilatation_domain(NumericalSemigroup const& s) {
  auto const m = s.maximal_ideal();
  return difference(m, sum(m, m));
}

NumericalSemigroup dilate(NumericalSemigroup const& s, Int a) {
  if (a < 0 || !dilatation_domain(s).contains(a)) {
    throw Error(ErrorCode::ShiftNotInDomain,
                std::to_string(a) + " is not a non-negative element of M - 2M for " +
                    to_string(s));
  }
  if (a == 0) return s;
  std::vector<Int> gaps;
  for (Int x = 1; x <= s.frobenius() + a; ++x) {
    if (x - a <= 0 || !s.contains(x - a)) gaps.push_back(x);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

DilatationPair dilatation_pair(NumericalSemigroup const& s, Int a) {
  return DilatationPair{s, a, dilate(s, a)};
}

NumericalSemigroup contract(NumericalSemigroup const& t, Int a) {
  if (a < 0) {
    throw Error(ErrorCode::ShiftNotInDomain, "negative contraction shift");
  }
  if (a == 0) return t;
  Int const e = t.multiplicity();
  if (a > e) {
    throw Error(ErrorCode::ShiftTooLarge,
                std::to_string(a) + " exceeds the multiplicity " + std::to_string(e));
  }
  Int const f = t.frobenius();
  // 2M_T ⊆ M_T + a; sums beyond F + a are harmless.
  for (Int x = e; x <= f + a; ++x) {
    if (!t.contains(x)) continue;
    for (Int y = x; x + y - a <= f; ++y) {
      if (t.contains(y) && (x + y - a <= 0 || !t.contains(x + y - a))) {
        throw Error(ErrorCode::NotContractible,
                    std::to_string(x) + " + " + std::to_string(y) + " - " + std::to_string(a) +
                        " is not in the maximal ideal of " + to_string(t));
      }
    }
  }
  if (a == e) {
    throw Error(ErrorCode::NotContractible,
                "shifting by the multiplicity puts 0 into the maximal ideal");
  }
  std::vector<Int> gaps;
  for (Int x = 1; x + a <= f; ++x) {
    if (!t.contains(x + a)) gaps.push_back(x);
  }
  if (gaps.empty()) {
    throw Error(ErrorCode::NotContractible, "the contraction would be N");
  }
  return NumericalSemigroup::from_gaps(gaps);
}

std::vector<Int> contraction_candidates(NumericalSemigroup const& t) {
  std::vector<Int> out;
  for (Int a = 1; a <= t.multiplicity(); ++a) {
    try {
      contract(t, a);
      out.push_back(a);
    } catch (Error const& err) {
      if (err.code() != ErrorCode::NotContractible) throw;
    }
  }
  return out;
}

std::vector<Int> dilatation_apery_formula(NumericalSemigroup const& s, Int a, Int modulus) {
  std::vector<Int> out{0, modulus + 2 * a};
  for (Int alpha : apery_by_definition(s, modulus)) {
    if (alpha != 0) out.push_back(alpha + a);
  }
  for (Int beta : apery_by_definition(s, a)) {
    if (beta != 0) out.push_back(beta + modulus + a);
  }
  sort_unique(out);
  return out;
}

std::vector<Int> apery_of_dilatation(NumericalSemigroup const& s, Int a, Int modulus) {
  require_positive_member_shift(s, a);
  require_positive_member_modulus(s, modulus);
  return dilatation_apery_formula(s, a, modulus);
}

std::vector<Int> generators_of_dilatation(NumericalSemigroup const& s, Int a) {
  require_positive_member_shift(s, a);
  Int const e = s.multiplicity();
  auto const& gens = s.minimal_generators();
  // 2M = S \ (Γ ∪ {0})
  auto in_two_m = [&](Int x) {
    return x > 0 && s.contains(x) && !std::binary_search(gens.begin(), gens.end(), x);
  };

  std::vector<Int> out{e + a, e + 2 * a};
  for (Int alpha : apery_set(s, e)) {
    if (alpha != 0 && !in_two_m(alpha - a)) out.push_back(alpha + a);
  }
  for (Int beta : apery_set(s, a)) {
    if (!in_two_m(beta + e - a)) out.push_back(beta + e + a);
  }
  sort_unique(out);
  return out;
}

TwoGeneratorDecomposition decompose_two_generator(Int n, Int m, Int a) {
  if (n < 2 || m <= n || std::gcd(n, m) != 1 || a <= 0) {
    throw Error(ErrorCode::BadParameters, "need gcd(n,m) = 1, 2 <= n < m and a > 0");
  }
  Int mu = 0;
  while ((mu * m - a) % n != 0) ++mu;
  Int const lambda = (a - mu * m) / n;
  if (lambda < 0) {
    throw Error(ErrorCode::NotRepresentable,
                std::to_string(a) + " is not in ⟨" + std::to_string(n) + "," +
                    std::to_string(m) + "⟩");
  }
  return {lambda, mu};
}

std::vector<Int> two_gen_apery_closed_form(Int n, Int m, Int a) {
  auto const [lambda, mu] = decompose_two_generator(n, m, a);
  std::vector<Int> out;
  for (Int x = 0; x <= lambda - 1; ++x) {
    for (Int y = 0; y <= n + mu - 1; ++y) out.push_back(x * n + y * m);
  }
  for (Int x = lambda; x <= m - 1; ++x) {
    for (Int y = 0; y <= mu - 1; ++y) out.push_back(x * n + y * m);
  }
  sort_unique(out);
  return out;
}

std::vector<Int> two_gen_dilatation_generators(Int n, Int m, Int a) {
  auto const [lambda, mu] = decompose_two_generator(n, m, a);
  std::vector<Int> out{n + 2 * a};
  if (lambda == 0) {
    for (Int y = 1; y <= mu + 1; ++y) out.push_back(y * m + a);
    for (Int x = 1; x <= m - 1; ++x) {
      for (Int y = 0; y <= mu - 1; ++y) out.push_back(x * n + y * m + a);
    }
  } else {
    for (Int y = 1; y <= n - 1; ++y) out.push_back(y * m + a);
    for (Int x = 1; x <= lambda - 1; ++x) {
      for (Int y = 0; y <= n + mu - 1; ++y) out.push_back(x * n + y * m + a);
    }
    for (Int y = 0; y <= mu + 1; ++y) out.push_back(lambda * n + y * m + a);
    for (Int x = lambda + 1; x <= m; ++x) {
      for (Int y = 0; y <= mu - 1; ++y) out.push_back(x * n + y * m + a);
    }
  }
  sort_unique(out);
  return out;
}

TransferReport transfer_report(NumericalSemigroup const& s, Int a) {
  auto const t = dilate(s, a);
  auto const is = invariants(s);
  auto const it = invariants(t);

  TransferReport r;
  r.frobenius = it.frobenius == is.frobenius + a;
  r.genus = it.genus == is.genus + a;
  r.multiplicity = it.multiplicity == is.multiplicity + a;
  r.sporadic_count = it.sporadic_count == is.sporadic_count;
  r.type = it.type == is.type + a;
  r.embedding_dimension = it.embedding_dimension == is.embedding_dimension + a;

  r.hilbert_checked_up_to = static_cast<int>(is.reduction_number) + 2;
  r.hilbert = true;
  for (int h = 1; h <= r.hilbert_checked_up_to && r.hilbert; ++h) {
    r.hilbert = hilbert_function(t, h) == hilbert_function(s, h) + a;
  }

  r.med_stable = is_med(s) == is_med(t);
  r.arf_stable = is_arf(s) == is_arf(t);
  r.wilf_transferred = !wilf_holds(s) || wilf_holds(t);
  return r;
}

}  // namespace nsg
