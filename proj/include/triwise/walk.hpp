#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triwise/rational.hpp"
#include "triwise/subset.hpp"

namespace triwise {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Points of a walk lying on y = 2x + c, in walk order.
struct HitRecord {
  int offset = 0;
  std::vector<LatticePoint> points;
  /// Number of steps taken when each point was reached.
  std::vector<int> steps;
};

enum class WalkClass { Tilde, Dot, Ddot, Miss };

std::string_view to_string(WalkClass c);

/// Height above the line y = 2x after k steps: y - 2x.
int walk_offset_after(const Subset& g, int k);
/// max over k >= 1 of y - 2x, or 0 for the empty walk.
int max_offset(const Subset& g);

HitRecord hits_line(const Subset& g, int c);
bool hits(const Subset& g, int c);

/// TILDE if the walk hits y = 2x + t + 1; otherwise DOT, DDOT or MISS by the
/// number of hits on y = 2x + t.
WalkClass classify(const Subset& g, int t);

/// Rotates the segment between the first two hits on y = 2x + t by 180
/// degrees about its midpoint, which reverses the order of its steps.
Subset reflect_between_first_two_hits(const Subset& g, int t);

inline constexpr int kMaxBallotBruteForce = 40;

/// Walks from the origin to (s, 2s + t) that never touch y = 2x + t + 1,
/// counted by depth-first enumeration.
BigInt count_walks_ballot(int s, int t);
/// (t+1)/(3s+t+1) * C(3s+t+1, s).
BigInt f_closed(int s, int t);

/// μ_p of the n-step walks that hit y = 2x + c.
Rational truncated_hitting_measure(int c, int n, const Rational& p);
/// Entry k-1 is the value for k steps, k = 1..n.
std::vector<Rational> truncated_hitting_series(int c, int n, const Rational& p);

struct WitnessWalks {
  Subset w;
  Subset w_prime;
  Subset e;
};

/// Smallest ground set on which the witnesses for (s, t, I) are defined.
int witness_min_ground(int s, int t, int i);
/// The walks W_I, W' and E used to exclude E from the family; I is ignored
/// for s = 2.
WitnessWalks witness_walks(int s, int t, int i, int n);
/// W_i for s = 0 or s = 1.
Subset witness_w(int s, int t, int i, int n);

}  // namespace triwise
