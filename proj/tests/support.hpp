#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "triwise/family.hpp"

namespace support {

/// Members as bitmasks in increasing numeric order.
inline std::vector<oracle::Mask> masks(const triwise::SetFamily& f) {
  std::vector<oracle::Mask> out;
  for (const auto& g : f.members()) out.push_back(g.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline triwise::SetFamily family(int n, const std::vector<oracle::Mask>& ms) { return triwise::SetFamily(n, ms); }

/// Each subset of [n] kept independently with probability `density`.
inline std::vector<oracle::Mask> random_family(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<oracle::Mask> out;
  for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
    if (keep(rng)) out.push_back(m);
  }
  return out;
}

/// A few random sets, each element present with probability `density`.
inline std::vector<oracle::Mask> random_sets(std::mt19937_64& rng, int n, int count, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<oracle::Mask> out;
  for (int k = 0; k < count; ++k) {
    oracle::Mask m = 0;
    for (int i = 0; i < n; ++i) {
      if (bit(rng)) m |= oracle::Mask{1} << i;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace support
