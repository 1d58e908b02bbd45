#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace triwise {

inline constexpr int kMaxGroundSize = 62;

/// A member of 2^[n] stored as a bitmask: bit i-1 is set iff i is an element.
///
/// The same value doubles as an n-step lattice walk from the origin, with
/// step i going up when i is an element and right otherwise.
class Subset {
 public:
  constexpr Subset() = default;
  Subset(int n, std::uint64_t bits);

  static Subset from_elements(int n, std::span<const int> elements);
  static Subset from_elements(int n, std::initializer_list<int> elements);
  static Subset empty(int n) { return Subset(n, 0); }
  /// [k] = {1,...,k}.
  static Subset prefix(int n, int k);
  static Subset full(int n) { return prefix(n, n); }
  /// The closed range {lo,...,hi} ∩ [n]; empty when lo > hi.
  static Subset range(int n, int lo, int hi);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U);
  }
  /// |G ∩ [k]|.
  [[nodiscard]] int prefix_count(int k) const noexcept;
  [[nodiscard]] std::vector<int> elements() const;

  [[nodiscard]] Subset with(int element) const;
  [[nodiscard]] Subset without(int element) const;
  [[nodiscard]] bool is_subset_of(const Subset& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);

  /// "{1,2,5}"; the empty set prints as "{}".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Ground size first, then (popcount, value).
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline std::uint64_t ground_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// The periodic set ⋃_{i≥0} {a+3i, a+3i+1} ∩ [n]; empty when a > n.
Subset interval3(int a, int n);

}  // namespace triwise
