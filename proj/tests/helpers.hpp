#pragma once

// Shared builders for the test suites.

#include <initializer_list>
#include <string>
#include <vector>

#include "dm/set_system.hpp"

namespace dmtest {

inline dm::Subset sub(std::initializer_list<int> elems, int width) {
  dm::Mask bits = 0;
  for (int e : elems) bits |= dm::bit(e);
  return dm::Subset(bits, width);
}

inline dm::SetSystem sys(std::vector<std::string> labels,
                         std::vector<std::vector<int>> sets) {
  dm::GroundSet g(std::move(labels));
  std::vector<dm::Subset> fam;
  for (const auto& s : sets) {
    dm::Mask bits = 0;
    for (int e : s) bits |= dm::bit(e);
    fam.emplace_back(bits, g.size());
  }
  return dm::SetSystem(std::move(g), std::move(fam));
}

inline dm::DeltaMatroid dmat(std::vector<std::string> labels,
                             std::vector<std::vector<int>> sets) {
  return dm::DeltaMatroid::validated(sys(std::move(labels), std::move(sets)));
}

// Every family over an n-element ground set, coded by the indicator of its
// 2^n subsets: bit m of `code` puts the subset with mask m into the family.
// There are 2^(2^n) codes; keep n tiny.
inline dm::SetSystem family_from_code(int n, std::uint64_t code) {
  std::vector<dm::Subset> fam;
  for (dm::Mask m = 0; m < (dm::Mask{1} << n); ++m) {
    if ((code >> m) & 1) fam.emplace_back(m, n);
  }
  return dm::SetSystem(dm::GroundSet::numbered(n), std::move(fam));
}

}  // namespace dmtest
