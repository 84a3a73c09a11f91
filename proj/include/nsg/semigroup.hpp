#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/cofinite_set.hpp"
#include "nsg/error.hpp"

namespace nsg {

/// A numerical semigroup S other than N, stored as a dense membership table
/// on [0, F+1] together with its minimal generators and gaps.
///
/// Instances are immutable. Construction always yields the canonical form, so
/// equality compares the underlying sets.
class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators, GcdNotOne, IsAllOfN, or TooLarge. Redundant
  /// generators are dropped; zeros are ignored.
  static NumericalSemigroup from_generators(std::span<Int const> generators);
  static NumericalSemigroup from_generators(std::initializer_list<Int> generators) {
    return from_generators(std::span<Int const>(generators.begin(), generators.size()));
  }

  /// Throws NotAdditivelyClosed, IsAllOfN (no gaps), or BadParameters
  /// (non-positive entries).
  static NumericalSemigroup from_gaps(std::span<Int const> gaps);
  static NumericalSemigroup from_gaps(std::initializer_list<Int> gaps) {
    return from_gaps(std::span<Int const>(gaps.begin(), gaps.size()));
  }

  std::vector<Int> const& minimal_generators() const noexcept { return generators_; }
  std::vector<Int> const& gaps() const noexcept { return gaps_; }

  Int frobenius() const noexcept { return gaps_.back(); }
  Int conductor() const noexcept { return frobenius() + 1; }
  Int multiplicity() const noexcept { return generators_.front(); }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(generators_.size()); }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius()) return true;
    return membership_[static_cast<std::size_t>(x)] != 0;
  }

  /// Members up to and including the Frobenius number, ascending.
  std::vector<Int> small_elements() const;

  /// S as a relative ideal: min 0, conductor F+1.
  CofiniteSet as_set() const;
  /// M = S \ {0}.
  CofiniteSet maximal_ideal() const;

  bool operator==(NumericalSemigroup const& other) const noexcept {
    return gaps_ == other.gaps_;
  }

 private:
  explicit NumericalSemigroup(std::vector<char> membership);

  std::vector<Int> generators_;
  std::vector<Int> gaps_;
  // membership_[x] for 0 <= x <= F+1
  std::vector<char> membership_;
};

struct InvariantRecord {
  Int frobenius = 0;
  Int genus = 0;
  Int multiplicity = 0;
  Int sporadic_count = 0;  // |S ∩ [0, F]|
  Int type = 0;
  Int embedding_dimension = 0;
  Int reduction_number = 0;  // least h with (h+1)M = hM + e

  bool operator==(InvariantRecord const&) const = default;
};

InvariantRecord invariants(NumericalSemigroup const& s);

/// Pseudo-Frobenius numbers, i.e. (M - M) \ S; their count is the type.
std::vector<Int> pseudo_frobenius(NumericalSemigroup const& s);

/// Least h >= 1 with (h+1)M = hM + e.
int reduction_number_of_maximal_ideal(NumericalSemigroup const& s);

/// Ap(S, s) = {x in S : x - s not in S}, ascending. Throws ZeroModulus for
/// s == 0 and NotAMember for s outside S.
std::vector<Int> apery_set(NumericalSemigroup const& s, Int modulus);

/// {x in S : x - n not in S} for any n > 0, member or not. Agrees with
/// apery_set when n is in S.
std::vector<Int> apery_by_definition(NumericalSemigroup const& s, Int n);

/// H(h) = |hM \ (h+1)M|, with H(0) = 1.
Int hilbert_function(NumericalSemigroup const& s, int h);

struct Predicates {
  bool symmetric = false;
  bool med = false;
  bool arf = false;
};

Predicates predicates(NumericalSemigroup const& s);

bool is_symmetric(NumericalSemigroup const& s);
bool is_med(NumericalSemigroup const& s);
bool is_arf(NumericalSemigroup const& s);

/// All numerical semigroups of genus 1..max_genus; entry k-1 holds genus k,
/// each group ordered lexicographically by gap sequence.
std::vector<std::vector<NumericalSemigroup>> enumerate_by_genus(int max_genus);

/// Parses "4,7,9" (generators) or "gaps:1,2,4,7". Throws Parse on malformed
/// text, and the construction errors otherwise.
NumericalSemigroup parse_semigroup(std::string_view text);

/// "4,7,9"
std::string format_list(std::span<Int const> values);

/// "⟨4,7,9⟩"
std::string to_string(NumericalSemigroup const& s);

}  // namespace nsg
