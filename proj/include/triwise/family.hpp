#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triwise/rational.hpp"
#include "triwise/subset.hpp"

namespace triwise {

/// Member counts by cardinality: counts[k] = #{G : |G| = k}.
struct SizeProfile {
  int n = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t total() const;
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

struct FamilyFlags {
  std::optional<bool> up_closed;
  std::optional<bool> shifted;
};

/// A deduplicated family of subsets of [n].
///
/// Members are kept sorted by (popcount, value), which is also the order used
/// for equality, canonical encodings and reports. Instances are immutable.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int n);
  SetFamily(int n, std::vector<Subset> members);
  SetFamily(int n, std::span<const std::uint64_t> masks);

  static SetFamily power_set(int n);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] std::span<const Subset> members() const noexcept { return members_; }
  [[nodiscard]] bool contains(const Subset& s) const;
  [[nodiscard]] bool contains_bits(std::uint64_t bits) const;
  [[nodiscard]] SizeProfile size_profile() const;

  /// Cached structural flags. A flag is only present when it was established
  /// during construction; present flags always agree with recomputation.
  [[nodiscard]] const FamilyFlags& flags() const noexcept { return flags_; }
  [[nodiscard]] SetFamily with_flags(FamilyFlags flags) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> members_;
  FamilyFlags flags_;
};

// --- measure ---------------------------------------------------------------

/// μ_p(F) = Σ_k c_k p^k (1-p)^(n-k), exact.
Rational p_measure(const SizeProfile& profile, const Rational& p);
Rational p_measure(const SetFamily& family, const Rational& p);
Rational symmetric_difference_measure(const SetFamily& a, const SetFamily& b, const Rational& p);

// --- set algebra -------------------------------------------------------------

SetFamily family_union(const SetFamily& a, const SetFamily& b);
SetFamily family_intersection(const SetFamily& a, const SetFamily& b);
SetFamily family_difference(const SetFamily& a, const SetFamily& b);
SetFamily symmetric_difference(const SetFamily& a, const SetFamily& b);

// --- intersection property ---------------------------------------------------

struct IntersectionCheck {
  bool holds = true;
  /// A violating r-tuple (with repetition) when holds is false.
  std::vector<Subset> witness;
};

/// True iff every r-multituple of members meets in at least t elements.
/// Only minimal generators are examined; supersets can only enlarge
/// intersections.
IntersectionCheck check_r_wise_t_intersecting(const SetFamily& family, int r, int t);
bool is_r_wise_t_intersecting(const SetFamily& family, int r, int t);

// --- up-sets -----------------------------------------------------------------

SetFamily up_closure(const SetFamily& family);
bool is_up_closed(const SetFamily& family);
/// The antichain of inclusion-minimal members.
SetFamily minimal_generators(const SetFamily& family);

// --- frontier families ---------------------------------------------------------

/// Largest family any enumeration-based constructor will materialise.
inline constexpr std::uint64_t kMaxMaterialisedMembers = std::uint64_t{1} << 24;

/// F_s^t = {F ⊂ [n] : |F ∩ [t+3s]| ≥ t+2s}.
SetFamily frontier_family(int s, int t, int n);
/// Σ_{i=0}^{s} C(t+3s, i) p^{t+3s-i} q^i.
Rational frontier_measure(int s, int t, const Rational& p, int n);

// --- isomorphism ----------------------------------------------------------------

inline constexpr int kMaxCanonicalGround = 10;

/// Lexicographically least member encoding over all n! relabelings:
/// one byte n, then each member (in (popcount, value) order) as
/// ceil(n/8) little-endian bytes.
std::string canonical_form(const SetFamily& family);
bool are_isomorphic(const SetFamily& a, const SetFamily& b);
/// Applies a relabeling; perm[i-1] is the image of element i.
SetFamily relabel(const SetFamily& family, std::span<const int> perm);

}  // namespace triwise
