#include "nsg/cofinite_set.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nsg {

CofiniteSet CofiniteSet::normalized(Int lo, std::vector<char> bits) {
  // Drop the member tail, then leading non-members.
  while (!bits.empty() && bits.back() != 0) {
    bits.pop_back();
  }
  auto first = std::find(bits.begin(), bits.end(), char{1});
  auto const skip = first - bits.begin();
  bits.erase(bits.begin(), first);

  CofiniteSet out;
  out.min_ = lo + skip;
  out.bits_ = std::move(bits);
  return out;
}

CofiniteSet CofiniteSet::interval_from(Int start) {
  CofiniteSet out;
  out.min_ = start;
  return out;
}

CofiniteSet CofiniteSet::from_members(std::span<Int const> below, Int conductor) {
  if (below.empty()) {
    return interval_from(conductor);
  }
  Int const lo = std::min(*std::min_element(below.begin(), below.end()), conductor);
  std::vector<char> bits(static_cast<std::size_t>(conductor - lo), 0);
  for (Int x : below) {
    if (x < conductor) {
      bits[static_cast<std::size_t>(x - lo)] = 1;
    }
  }
  return normalized(lo, std::move(bits));
}

CofiniteSet CofiniteSet::from_predicate(Int lo, Int conductor,
                                        std::function<bool(Int)> const& pred) {
  if (conductor < lo) {
    throw std::invalid_argument("from_predicate: conductor below lower bound");
  }
  std::vector<char> bits(static_cast<std::size_t>(conductor - lo), 0);
  for (Int x = lo; x < conductor; ++x) {
    bits[static_cast<std::size_t>(x - lo)] = pred(x) ? 1 : 0;
  }
  return normalized(lo, std::move(bits));
}

std::vector<Int> CofiniteSet::sporadic() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) out.push_back(min_ + static_cast<Int>(i));
  }
  return out;
}

std::vector<Int> CofiniteSet::members_in(Int lo, Int hi) const {
  std::vector<Int> out;
  for (Int x = std::max(lo, min_); x <= hi; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::size_t CofiniteSet::holes() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), char{0}));
}

bool CofiniteSet::is_subset_of(CofiniteSet const& other) const {
  if (min_ < other.min_ || conductor() < other.conductor()) {
    // Either our minimum or some x in [conductor(), other.conductor()) escapes.
    return false;
  }
  for (Int x = min_; x < other.conductor(); ++x) {
    if (contains(x) && !other.contains(x)) return false;
  }
  return true;
}

CofiniteSet CofiniteSet::translated(Int shift) const {
  CofiniteSet out = *this;
  out.min_ += shift;
  return out;
}

CofiniteSet CofiniteSet::with(Int x) const {
  if (contains(x)) return *this;
  Int const lo = std::min(x, min_);
  Int const c = conductor();
  return from_predicate(lo, c, [&](Int y) { return y == x || contains(y); });
}

CofiniteSet CofiniteSet::without(Int x) const {
  if (!contains(x)) return *this;
  Int const c = std::max(conductor(), x + 1);
  return from_predicate(min_, c, [&](Int y) { return y != x && contains(y); });
}

CofiniteSet sum(CofiniteSet const& lhs, CofiniteSet const& rhs) {
  Int const lo = lhs.min() + rhs.min();
  // Past this point x = (x - rhs.min()) + rhs.min() or symmetrically.
  Int const hi = std::min(lhs.conductor() + rhs.min(), rhs.conductor() + lhs.min());
  std::vector<char> bits(static_cast<std::size_t>(hi - lo), 0);
  for (Int i = lhs.min(); i < hi - rhs.min(); ++i) {
    if (!lhs.contains(i)) continue;
    for (Int j = rhs.min(); i + j < hi; ++j) {
      if (rhs.contains(j)) bits[static_cast<std::size_t>(i + j - lo)] = 1;
    }
  }
  return CofiniteSet::from_predicate(
      lo, hi, [&](Int x) { return bits[static_cast<std::size_t>(x - lo)] != 0; });
}

CofiniteSet difference(CofiniteSet const& lhs, CofiniteSet const& rhs) {
  // z + j must land in lhs for every j >= rhs.conductor(), which forces
  // z >= lhs.conductor() - rhs.conductor(); and z + rhs.min() in lhs forces
  // z >= lhs.min() - rhs.min(). From lhs.conductor() - rhs.min() on, every z
  // qualifies.
  Int const lo = std::max(lhs.min() - rhs.min(), lhs.conductor() - rhs.conductor());
  Int const hi = lhs.conductor() - rhs.min();
  auto const sporadic = rhs.sporadic();
  return CofiniteSet::from_predicate(lo, hi, [&](Int z) {
    return std::all_of(sporadic.begin(), sporadic.end(),
                       [&](Int j) { return lhs.contains(z + j); });
  });
}

CofiniteSet multiple(CofiniteSet const& set, int h) {
  if (h < 1) {
    throw std::invalid_argument("multiple: h must be positive");
  }
  CofiniteSet acc = set;
  for (int k = 1; k < h; ++k) {
    acc = sum(acc, set);
  }
  return acc;
}

std::vector<Int> set_minus(CofiniteSet const& lhs, CofiniteSet const& rhs) {
  std::vector<Int> out;
  for (Int x = lhs.min(); x < rhs.conductor(); ++x) {
    if (lhs.contains(x) && !rhs.contains(x)) out.push_back(x);
  }
  return out;
}

std::string to_string(CofiniteSet const& set) {
  std::ostringstream os;
  os << set;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, CofiniteSet const& set) {
  os << '{';
  for (Int x : set.sporadic()) {
    os << x << ',';
  }
  return os << set.conductor() << "→}";
}

}  // namespace nsg
