#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triwise/family.hpp"

namespace triwise {

inline constexpr int kMaxAntichainGround = 6;
inline constexpr int kMaxSearchGround = 6;
inline constexpr int kMaxShiftedSearchGround = 8;

/// Number of antichains of 2^[n] (equivalently monotone Boolean functions).
std::uint64_t count_antichains(int n);

/// Calls `visit` with the truth table of every up-set of 2^[n], n <= 6; bit x
/// is set iff the subset with bitmask x is a member.
void for_each_upset_table(int n, const std::function<void(std::uint64_t)>& visit);

/// Minimal elements of an up-set given as a truth table.
std::uint64_t minimal_elements_table(int n, std::uint64_t table);

/// Every antichain of 2^[n] as a generator family, n <= 6.
void enumerate_antichains(int n, const std::function<void(const SetFamily&)>& visit);

struct SearchOptions {
  bool restrict_to_shifted = false;
  bool use_isomorphism_pruning = true;
  bool measure_upper_bound_pruning = true;
  std::vector<Rational> p_list;
  int threads = 1;
};

/// Maximum p-measure over up-closed r-wise t-intersecting families, for one p.
struct SearchReport {
  int n = 0;
  int t = 0;
  int r = 3;
  Rational p;
  bool restricted_to_shifted = false;
  bool isomorphism_pruning = false;
  Rational max_measure;
  /// Minimal generators of the maximizer with the smallest canonical form.
  SetFamily witness;
  /// One generator family per isomorphism class of maximizers.
  std::vector<SetFamily> maximizer_classes;
  std::uint64_t families_examined = 0;
  /// Distinct canonical forms among the examined families (n <= 5).
  std::optional<std::uint64_t> isomorphism_classes;
  double wall_time_seconds = 0;
  /// p^t, the value Theorem-range families are compared against.
  Rational reference;
  /// "known" (t = 1, p <= 2/3), "exploratory" (2 <= t <= 14) or "theorem".
  std::string status;
  bool matches_reference = false;
  /// Set when an exploratory result differs from p^t; never an error.
  bool flagged = false;
  /// True when every maximizer's up-closure is isomorphic to F_0^t.
  bool maximizers_isomorphic_to_f0 = false;
};

/// One report per entry of options.p_list.
std::vector<SearchReport> search_max_measure(int n, int t, int r, const SearchOptions& options);

/// Shifted, up-closed, r-wise t-intersecting families of 2^[n], n <= 8, as
/// full member lists, in generator-DFS order. The empty family is omitted.
std::vector<SetFamily> enumerate_shifted_families(int n, int t, int r = 3);
std::uint64_t count_shifted_families(int n, int t, int r = 3);

struct LemmaAudit {
  bool shifted = false;
  bool up_closed = false;
  bool intersecting = false;
  bool preconditions_hold = false;
  /// max{c : every member hits y = 2x + c}.
  int lambda = 0;
  bool lambda_at_least_t = false;
  bool every_member_hits_t = false;
  /// Smallest i with |F∩[i]|+|G∩[i]|+|H∩[i]| >= 2i+t for every triple.
  std::optional<int> prefix_index;
  std::size_t dot = 0;
  std::size_t ddot = 0;
  std::size_t tilde = 0;
  std::size_t miss = 0;
  /// The s with DOT ⊔ DDOT ⊂ F_s^t, when DOT is nonempty.
  std::optional<int> s;
  bool s_contains_core = false;
  bool passed = false;
  std::vector<std::string> failures;
};

LemmaAudit audit_lemmas(const SetFamily& family, int t);

}  // namespace triwise
