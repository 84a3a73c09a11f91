#include "nsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nsg {

namespace {

// Dense tables beyond this many entries are refused rather than allocated.
constexpr Int kMaxConductor = Int{1} << 24;

std::string list_text(std::span<Int const> values) { return format_list(values); }

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::IsAllOfN: return "IsAllOfN";
    case ErrorCode::NotAdditivelyClosed: return "NotAdditivelyClosed";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::ShiftNotInDomain: return "ShiftNotInDomain";
    case ErrorCode::ShiftNotInSemigroup: return "ShiftNotInSemigroup";
    case ErrorCode::ShiftTooLarge: return "ShiftTooLarge";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

NumericalSemigroup::NumericalSemigroup(std::vector<char> membership)
    : membership_(std::move(membership)) {
  auto const top = static_cast<Int>(membership_.size()) - 1;
  for (Int x = 1; x < top; ++x) {
    if (membership_[static_cast<std::size_t>(x)] == 0) gaps_.push_back(x);
  }
  Int e = 1;
  while (!contains(e)) ++e;
  // Every minimal generator is e or lies in Ap(S, e), hence is <= F + e.
  for (Int x = e; x <= frobenius() + e; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (Int y = e; 2 * y <= x && !decomposable; ++y) {
      decomposable = contains(y) && contains(x - y);
    }
    if (!decomposable) generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<Int const> generators) {
  std::vector<Int> gens;
  for (Int g : generators) {
    if (g < 0) {
      throw Error(ErrorCode::BadParameters, "negative generator " + std::to_string(g));
    }
    if (g > 0) gens.push_back(g);
  }
  if (gens.empty()) {
    throw Error(ErrorCode::EmptyGenerators, "no positive generators given");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  if (d != 1) {
    throw Error(ErrorCode::GcdNotOne,
                "gcd(" + list_text(gens) + ") = " + std::to_string(d));
  }
  Int const e = gens.front();
  if (e == 1) {
    throw Error(ErrorCode::IsAllOfN, "generators contain 1");
  }

  // Sieve until e consecutive members appear; from there on everything is a
  // member.
  std::vector<char> table{1};
  Int run = 1;
  Int last_gap = 0;
  for (Int x = 1; run < e; ++x) {
    if (x > kMaxConductor) {
      throw Error(ErrorCode::TooLarge, "conductor exceeds table limit");
    }
    char member = 0;
    for (Int g : gens) {
      if (g > x) break;
      if (table[static_cast<std::size_t>(x - g)] != 0) {
        member = 1;
        break;
      }
    }
    table.push_back(member);
    if (member != 0) {
      ++run;
    } else {
      run = 0;
      last_gap = x;
    }
  }
  table.resize(static_cast<std::size_t>(last_gap + 2));
  table.back() = 1;
  return NumericalSemigroup(std::move(table));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<Int const> gaps) {
  std::vector<Int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) {
    throw Error(ErrorCode::IsAllOfN, "empty gap set describes N");
  }
  if (sorted.front() <= 0) {
    throw Error(ErrorCode::BadParameters, "gaps must be positive");
  }
  Int const frob = sorted.back();
  if (frob > kMaxConductor) {
    throw Error(ErrorCode::TooLarge, "conductor exceeds table limit");
  }
  std::vector<char> table(static_cast<std::size_t>(frob + 2), 1);
  for (Int g : sorted) table[static_cast<std::size_t>(g)] = 0;

  for (Int x = 1; x <= frob; ++x) {
    if (table[static_cast<std::size_t>(x)] == 0) continue;
    for (Int y = x; x + y <= frob; ++y) {
      if (table[static_cast<std::size_t>(y)] != 0 &&
          table[static_cast<std::size_t>(x + y)] == 0) {
        throw Error(ErrorCode::NotAdditivelyClosed,
                    std::to_string(x) + " + " + std::to_string(y) + " is listed as a gap");
      }
    }
  }
  return NumericalSemigroup(std::move(table));
}

std::vector<Int> NumericalSemigroup::small_elements() const {
  std::vector<Int> out;
  for (Int x = 0; x <= frobenius(); ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

CofiniteSet NumericalSemigroup::as_set() const {
  auto const small = small_elements();
  return CofiniteSet::from_members(small, conductor());
}

CofiniteSet NumericalSemigroup::maximal_ideal() const { return as_set().without(0); }

// ---------------------------------------------------------------------------

std::vector<Int> pseudo_frobenius(NumericalSemigroup const& s) {
  auto const m = s.maximal_ideal();
  return set_minus(difference(m, m), s.as_set());
}

int reduction_number_of_maximal_ideal(NumericalSemigroup const& s) {
  auto const m = s.maximal_ideal();
  auto power = m;
  for (int h = 1;; ++h) {
    auto next = sum(power, m);
    if (next == power.translated(s.multiplicity())) return h;
    power = std::move(next);
  }
}

InvariantRecord invariants(NumericalSemigroup const& s) {
  InvariantRecord r;
  r.frobenius = s.frobenius();
  r.genus = s.genus();
  r.multiplicity = s.multiplicity();
  r.sporadic_count = static_cast<Int>(s.small_elements().size());
  r.type = static_cast<Int>(pseudo_frobenius(s).size());
  r.embedding_dimension = s.embedding_dimension();
  r.reduction_number = reduction_number_of_maximal_ideal(s);
  return r;
}

std::vector<Int> apery_by_definition(NumericalSemigroup const& s, Int n) {
  if (n <= 0) {
    throw Error(ErrorCode::ZeroModulus, "Apéry modulus must be positive");
  }
  std::vector<Int> out;
  for (Int x = 0; x <= s.frobenius() + n; ++x) {
    if (s.contains(x) && !s.contains(x - n)) out.push_back(x);
  }
  return out;
}

std::vector<Int> apery_set(NumericalSemigroup const& s, Int modulus) {
  if (modulus == 0) {
    throw Error(ErrorCode::ZeroModulus, "Apéry set with respect to 0");
  }
  if (!s.contains(modulus)) {
    throw Error(ErrorCode::NotAMember, std::to_string(modulus) + " is not in " + to_string(s));
  }
  return apery_by_definition(s, modulus);
}

Int hilbert_function(NumericalSemigroup const& s, int h) {
  if (h < 0) {
    throw Error(ErrorCode::BadParameters, "negative Hilbert function argument");
  }
  if (h == 0) return 1;
  auto const m = s.maximal_ideal();
  auto const power = multiple(m, h);
  return static_cast<Int>(set_minus(power, sum(power, m)).size());
}

bool is_med(NumericalSemigroup const& s) {
  return s.embedding_dimension() == s.multiplicity();
}

bool is_symmetric(NumericalSemigroup const& s) {
  bool const by_type = pseudo_frobenius(s).size() == 1;
  // S = Ω_S, i.e. x in S  <=>  F - x not in S on [0, F].
  Int const f = s.frobenius();
  bool by_canonical = true;
  for (Int x = 0; x <= f && by_canonical; ++x) {
    by_canonical = s.contains(x) != s.contains(f - x);
  }
  if (by_type != by_canonical) {
    throw std::logic_error("symmetry by type and by canonical ideal disagree for " +
                           to_string(s));
  }
  return by_type;
}

bool is_arf(NumericalSemigroup const& s) {
  Int const bound = 2 * s.frobenius() + 2;
  auto const members = s.as_set().members_in(1, bound);
  for (std::size_t zi = 0; zi < members.size(); ++zi) {
    Int const z = members[zi];
    for (std::size_t yi = zi; yi < members.size(); ++yi) {
      Int const y = members[yi];
      for (std::size_t xi = yi; xi < members.size(); ++xi) {
        Int const v = members[xi] + y - z;
        if (v > s.frobenius()) break;
        if (!s.contains(v)) return false;
      }
    }
  }
  return true;
}

Predicates predicates(NumericalSemigroup const& s) {
  return Predicates{is_symmetric(s), is_med(s), is_arf(s)};
}

std::vector<std::vector<NumericalSemigroup>> enumerate_by_genus(int max_genus) {
  std::vector<std::vector<NumericalSemigroup>> out(
      static_cast<std::size_t>(std::max(max_genus, 0)));
  if (max_genus < 1) return out;

  // Children of S are S \ {x} for minimal generators x > F(S).
  std::vector<NumericalSemigroup> frontier{NumericalSemigroup::from_gaps({1})};
  for (int g = 1; g <= max_genus; ++g) {
    auto& level = out[static_cast<std::size_t>(g - 1)];
    level = std::move(frontier);
    std::sort(level.begin(), level.end(), [](auto const& a, auto const& b) {
      return a.gaps() < b.gaps();
    });
    frontier.clear();
    if (g == max_genus) break;
    for (auto const& s : level) {
      for (Int x : s.minimal_generators()) {
        if (x <= s.frobenius()) continue;
        auto gaps = s.gaps();
        gaps.push_back(x);
        frontier.push_back(NumericalSemigroup::from_gaps(gaps));
      }
    }
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  bool gap_form = false;
  constexpr std::string_view kGapPrefix = "gaps:";
  if (text.starts_with(kGapPrefix)) {
    gap_form = true;
    text.remove_prefix(kGapPrefix.size());
  }
  std::vector<Int> values;
  while (true) {
    auto const comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Int v = 0;
    auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "bad integer '" + std::string(token) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return gap_form ? NumericalSemigroup::from_gaps(values)
                  : NumericalSemigroup::from_generators(values);
}

std::string format_list(std::span<Int const> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

std::string to_string(NumericalSemigroup const& s) {
  return "⟨" + format_list(s.minimal_generators()) + "⟩";
}

}  // namespace nsg
