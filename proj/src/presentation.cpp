#include "nsg/presentation.hpp"

#include <numeric>
#include <sstream>

#include "nsg/dilatation.hpp"

namespace nsg {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

Int component_count(NumericalSemigroup const& s, Int degree) {
  std::vector<Int> vertices;
  for (Int g : s.minimal_generators()) {
    if (s.contains(degree - g)) vertices.push_back(g);
  }
  if (vertices.empty()) return 0;

  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  Int components = static_cast<Int>(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!s.contains(degree - vertices[i] - vertices[j])) continue;
      auto const ri = find_root(parent, i);
      auto const rj = find_root(parent, j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
  }
  return components;
}

}  // namespace

Int presentation_search_bound(NumericalSemigroup const& s) {
  return s.frobenius() + 2 * s.minimal_generators().back();
}

PresentationProfile betti_contributions(NumericalSemigroup const& s, Int bound) {
  if (bound < 0) bound = presentation_search_bound(s);
  PresentationProfile profile;
  for (Int n = 1; n <= bound; ++n) {
    if (!s.contains(n)) continue;
    Int const components = component_count(s, n);
    if (components > 1) {
      profile.betti_contributions[n] = components - 1;
      profile.mu += components - 1;
    }
  }
  return profile;
}

Int presentation_defect(NumericalSemigroup const& s, Int a, bool require_member) {
  auto const t = dilate(s, a);
  if (require_member && a > 0 && !s.contains(a)) {
    throw Error(ErrorCode::ShiftNotInSemigroup, std::to_string(a) + " is not in " + to_string(s));
  }
  Int const mu_s = betti_contributions(s).mu;
  Int const mu_t = betti_contributions(t).mu;
  return mu_t - mu_s - a * s.embedding_dimension() - a * (a - 1) / 2;
}

std::string to_log_line(PresentationScanRecord const& record) {
  std::ostringstream os;
  os << "gens=" << format_list(record.generators) << " a=" << record.shift
     << " mu_S=" << record.mu_base << " mu_T=" << record.mu_dilatation
     << " gap=" << record.gap;
  return os.str();
}

}  // namespace nsg
