#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nsg {

using Int = std::int64_t;

/// A set of integers that is bounded below and contains every integer from
/// some point on. Relative ideals of a numerical semigroup (M, hM, M-M,
/// canonical ideal, trace ideal, ...) all live here.
///
/// The representation is always normalized: `min()` is a member, and
/// `conductor()` is the least c such that [c, inf) is contained in the set.
/// Hence two sets are equal iff their normal forms are identical, and the
/// defaulted comparison is set equality.
class CofiniteSet {
 public:
  /// [0, inf)
  CofiniteSet() = default;

  /// [start, inf)
  static CofiniteSet interval_from(Int start);

  /// `below` lists members smaller than `conductor` (any order, duplicates
  /// allowed); everything >= conductor is a member as well. The conductor does
  /// not have to be minimal.
  static CofiniteSet from_members(std::span<Int const> below, Int conductor);

  /// Members of [lo, conductor) are those satisfying `pred`; everything at or
  /// above `conductor` is a member.
  static CofiniteSet from_predicate(Int lo, Int conductor,
                                    std::function<bool(Int)> const& pred);

  Int min() const noexcept { return min_; }
  Int conductor() const noexcept { return min_ + static_cast<Int>(bits_.size()); }

  bool contains(Int x) const noexcept {
    if (x < min_) return false;
    auto const off = static_cast<std::size_t>(x - min_);
    return off >= bits_.size() || bits_[off] != 0;
  }

  /// Members strictly below the conductor, ascending.
  std::vector<Int> sporadic() const;

  /// Members in [lo, hi], ascending.
  std::vector<Int> members_in(Int lo, Int hi) const;

  /// Number of non-members in [min(), conductor()).
  std::size_t holes() const noexcept;

  bool is_subset_of(CofiniteSet const& other) const;

  CofiniteSet translated(Int shift) const;
  CofiniteSet with(Int x) const;
  CofiniteSet without(Int x) const;

  bool operator==(CofiniteSet const&) const = default;

 private:
  static CofiniteSet normalized(Int lo, std::vector<char> bits);

  Int min_ = 0;
  // bits_[i] tells whether min_ + i is a member; the vector is empty or starts
  // with a member and ends with a non-member.
  std::vector<char> bits_;
};

/// Minkowski sum {i + j}.
CofiniteSet sum(CofiniteSet const& lhs, CofiniteSet const& rhs);

/// Residual quotient {z : z + rhs is contained in lhs}.
CofiniteSet difference(CofiniteSet const& lhs, CofiniteSet const& rhs);

/// The h-fold sumset I + ... + I, h >= 1.
CofiniteSet multiple(CofiniteSet const& set, int h);

/// Elements of `lhs` that are not in `rhs`. Always finite.
std::vector<Int> set_minus(CofiniteSet const& lhs, CofiniteSet const& rhs);

/// Renders as "{0,4,5,7,8,9,11→}": sporadic members, then the conductor.
std::string to_string(CofiniteSet const& set);
std::ostream& operator<<(std::ostream& os, CofiniteSet const& set);

}  // namespace nsg
