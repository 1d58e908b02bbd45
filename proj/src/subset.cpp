#include "triwise/subset.hpp"

#include <algorithm>

#include "triwise/error.hpp"

namespace triwise {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw DomainError("ground-set size must be in [0," + std::to_string(kMaxGroundSize) +
                      "], got " + std::to_string(n));
  }
}

void check_same_ground(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) throw DomainError("subsets over different ground sets");
}

}  // namespace

Subset::Subset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_ground(n);
  if ((bits & ~ground_mask(n)) != 0) {
    throw DomainError("subset has bits outside [" + std::to_string(n) + "]");
  }
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
  check_ground(n);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
    }
    bits |= std::uint64_t{1} << (e - 1);
  }
  return Subset(n, bits);
}

Subset Subset::from_elements(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::prefix(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n) throw DomainError("prefix length outside [0,n]");
  return Subset(n, ground_mask(k));
}

Subset Subset::range(int n, int lo, int hi) {
  check_ground(n);
  lo = std::max(lo, 1);
  hi = std::min(hi, n);
  if (lo > hi) return Subset(n, 0);
  return Subset(n, ground_mask(hi) & ~ground_mask(lo - 1));
}

int Subset::prefix_count(int k) const noexcept {
  if (k <= 0) return 0;
  if (k >= n_) return size();
  return std::popcount(bits_ & ground_mask(k));
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

Subset Subset::with(int element) const {
  if (element < 1 || element > n_) throw DomainError("element outside ground set");
  return Subset(n_, bits_ | (std::uint64_t{1} << (element - 1)));
}

Subset Subset::without(int element) const {
  if (element < 1 || element > n_) throw DomainError("element outside ground set");
  return Subset(n_, bits_ & ~(std::uint64_t{1} << (element - 1)));
}

Subset operator|(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.n_, a.bits_ | b.bits_);
}

Subset operator&(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.n_, a.bits_ & b.bits_);
}

Subset operator-(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.n_, a.bits_ & ~b.bits_);
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  s += '}';
  return s;
}

Subset interval3(int a, int n) {
  check_ground(n);
  if (a < 1) throw DomainError("interval3 start must be >= 1");
  std::uint64_t bits = 0;
  for (int x = a; x <= n; x += 3) {
    bits |= std::uint64_t{1} << (x - 1);
    if (x + 1 <= n) bits |= std::uint64_t{1} << x;
  }
  return Subset(n, bits);
}

}  // namespace triwise
