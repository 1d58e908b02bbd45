#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triwise/family.hpp"

namespace triwise {

/// The compression σ_{i,j} with 1 <= i < j <= n.
struct ShiftStep {
  int i = 1;
  int j = 2;
  friend bool operator==(const ShiftStep&, const ShiftStep&) = default;
};

/// Replaces every member G with j ∈ G, i ∉ G by (G \ {j}) ∪ {i}, unless that
/// set is already a member. Measure and size profile are preserved.
SetFamily shift_once(const SetFamily& family, ShiftStep step);

/// Σ_{G} Σ_{g ∈ G} g. Strictly decreases under every effective shift.
std::uint64_t shift_potential(const SetFamily& family);

struct SaturationTrace {
  SetFamily family;
  std::vector<ShiftStep> effective_steps;
  /// Potential before the first step and after each effective step.
  std::vector<std::uint64_t> potentials;
};

/// Applies shifts in lexicographic (i,j) order, restarting from (1,2) after
/// every effective step, until the family is shifted.
SetFamily shift_saturate(const SetFamily& family);
SaturationTrace shift_saturate_traced(const SetFamily& family);

struct ShiftViolation {
  Subset member;
  int i = 0;
  int j = 0;
};

/// First (member, i, j) in member order then lexicographic (i,j) whose shift
/// leaves the family, or nothing when the family is shifted.
std::optional<ShiftViolation> find_shift_violation(const SetFamily& family);
bool is_shifted(const SetFamily& family);

/// G ⤳ H: |G| <= |H| and the k-th smallest element of G is at least the k-th
/// smallest element of H for every k <= |G|. Equivalently the walk of G
/// stays weakly below-right of the walk of H.
bool leadsto(const Subset& g, const Subset& h);

/// The member H with G ⤳ H for every member G, if one exists.
std::optional<Subset> shift_end(const SetFamily& family);

/// Checks that g_family and h_family are disjoint, given that g_family is
/// shifted and up-closed and h_family has a shift-end outside g_family.
/// Throws PreconditionError when those hypotheses do not hold.
bool disjointness_check(const SetFamily& g_family, const SetFamily& h_family);

}  // namespace triwise
