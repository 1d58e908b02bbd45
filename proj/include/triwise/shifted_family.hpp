#pragma once

#include <span>
#include <vector>

#include "triwise/family.hpp"

namespace triwise {

/// Size profiles of the pieces of a shifted up-set relative to a frontier
/// family F_s^t and the walk partition for threshold t.
struct UpsetBreakdown {
  SizeProfile members;
  SizeProfile members_in_frontier;
  SizeProfile frontier;
  SizeProfile dot;
  SizeProfile ddot;
  SizeProfile tilde;
  SizeProfile miss;
  /// Members that do not hit y = 2x + t + 1 and lie outside F_s^t.
  SizeProfile core_outside_frontier;
};

/// A shifted, up-closed family given by ⤳-generators.
///
/// H is a member iff g ⤳ H for some generator g, which is the prefix
/// dominance |H ∩ [j]| >= |g ∩ [j]| for every j. Measures are computed by a
/// walk DP whose state is (ups so far, surviving generators, hit flags), so
/// ground sets far beyond enumeration range are fine.
class ShiftedUpset {
 public:
  ShiftedUpset(int n, std::vector<Subset> generators);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  /// ⤳-minimal generators in (popcount, value) order.
  [[nodiscard]] std::span<const Subset> generators() const noexcept { return gens_; }
  [[nodiscard]] bool contains(const Subset& h) const;

  /// Exact r-wise t-intersecting test. The prefix criterion
  /// r * min_g |g ∩ [i]| >= (r-1) i + t for a common i is tried first; it is
  /// sufficient but not necessary, so otherwise every multiset of r
  /// generators is checked with min_intersection.
  [[nodiscard]] bool is_r_wise_t_intersecting(int r, int t) const;
  /// Smallest i witnessing the common-index prefix criterion, or -1.
  [[nodiscard]] int prefix_witness(int r, int t) const;
  /// min |H_1 ∩ ... ∩ H_r| over H_i with g_i ⤳ H_i.
  [[nodiscard]] int min_intersection(std::span<const Subset> tuple) const;

  /// max{c : every member hits y = 2x + c}; 0 when some member never rises.
  [[nodiscard]] int lambda() const;

  [[nodiscard]] SizeProfile size_profile() const;
  [[nodiscard]] Rational measure(const Rational& p) const;
  [[nodiscard]] UpsetBreakdown breakdown(int t, int s) const;

  /// Explicit member list; only for ground sets small enough to enumerate.
  [[nodiscard]] SetFamily materialise() const;

 private:
  int n_;
  std::vector<Subset> gens_;
};

}  // namespace triwise
