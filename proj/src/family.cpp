#include "triwise/family.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "triwise/error.hpp"

namespace triwise {

namespace {

void require_same_ground(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size()) {
    throw DomainError("families over different ground sets (n=" + std::to_string(a.ground_size()) +
                      " vs n=" + std::to_string(b.ground_size()) + ")");
  }
}

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

constexpr int kBitmapClosureLimit = 24;

}  // namespace

std::uint64_t SizeProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) throw DomainError("ground-set size out of range");
}

SetFamily::SetFamily(int n, std::vector<Subset> members) : SetFamily(n) {
  for (const auto& m : members) {
    if (m.ground_size() != n) throw DomainError("member " + m.to_string() + " has a different ground set");
  }
  members_ = std::move(members);
  sort_unique(members_);
}

SetFamily::SetFamily(int n, std::span<const std::uint64_t> masks) : SetFamily(n) {
  members_.reserve(masks.size());
  for (auto m : masks) members_.emplace_back(n, m);
  sort_unique(members_);
}

SetFamily SetFamily::power_set(int n) {
  if (n > kBitmapClosureLimit) throw CapabilityError("power set too large to materialise");
  std::vector<std::uint64_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), std::uint64_t{0});
  return SetFamily(n, masks).with_flags({true, true});
}

bool SetFamily::contains(const Subset& s) const {
  return s.ground_size() == n_ && std::binary_search(members_.begin(), members_.end(), s);
}

bool SetFamily::contains_bits(std::uint64_t bits) const {
  if ((bits & ~ground_mask(n_)) != 0) return false;
  return std::binary_search(members_.begin(), members_.end(), Subset(n_, bits));
}

SizeProfile SetFamily::size_profile() const {
  SizeProfile prof{n_, std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 1, 0)};
  for (const auto& m : members_) ++prof.counts[static_cast<std::size_t>(m.size())];
  return prof;
}

SetFamily SetFamily::with_flags(FamilyFlags flags) const {
  SetFamily out = *this;
  out.flags_ = flags;
  return out;
}

// --- measure ---------------------------------------------------------------

Rational p_measure(const SizeProfile& profile, const Rational& p) {
  require_probability(p);
  // p = a/b: Σ c_k a^k (b-a)^(n-k) / b^n.
  const BigInt& a = p.get_num();
  const BigInt& b = p.get_den();
  const BigInt c = b - a;
  BigInt total = 0;
  BigInt ak = 1;
  for (int k = 0; k <= profile.n; ++k) {
    const auto count = profile.counts[static_cast<std::size_t>(k)];
    if (count != 0) {
      BigInt ck;
      mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(profile.n - k));
      total += BigInt(static_cast<unsigned long>(count)) * ak * ck;
    }
    ak *= a;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(profile.n));
  Rational r(total, den);
  r.canonicalize();
  return r;
}

Rational p_measure(const SetFamily& family, const Rational& p) {
  return p_measure(family.size_profile(), p);
}

Rational symmetric_difference_measure(const SetFamily& a, const SetFamily& b, const Rational& p) {
  return p_measure(symmetric_difference(a, b), p);
}

// --- set algebra -------------------------------------------------------------

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a, b);
  std::vector<Subset> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return SetFamily(a.ground_size(), std::move(out));
}

SetFamily family_intersection(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a, b);
  std::vector<Subset> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return SetFamily(a.ground_size(), std::move(out));
}

SetFamily family_difference(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a, b);
  std::vector<Subset> out;
  std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                      b.members().end(), std::back_inserter(out));
  return SetFamily(a.ground_size(), std::move(out));
}

SetFamily symmetric_difference(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a, b);
  std::vector<Subset> out;
  std::set_symmetric_difference(a.members().begin(), a.members().end(), b.members().begin(),
                                b.members().end(), std::back_inserter(out));
  return SetFamily(a.ground_size(), std::move(out));
}

// --- intersection property ---------------------------------------------------

namespace {

struct TupleSearch {
  const std::vector<std::uint64_t>& gens;
  int r;
  int t;
  std::vector<std::size_t> stack;

  // Returns true when a violating tuple has been placed on the stack.
  bool find(int depth, std::size_t start, std::uint64_t running) {
    if (std::popcount(running) < t) {
      // Any completion keeps the intersection below t; pad with the last pick.
      const std::size_t pad = stack.empty() ? 0 : stack.back();
      while (static_cast<int>(stack.size()) < r) stack.push_back(pad);
      return true;
    }
    if (depth == r) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
      stack.push_back(i);
      if (find(depth + 1, i, running & gens[i])) return true;
      stack.pop_back();
    }
    return false;
  }
};

}  // namespace

IntersectionCheck check_r_wise_t_intersecting(const SetFamily& family, int r, int t) {
  if (r < 1) throw DomainError("r must be >= 1");
  IntersectionCheck result;
  if (family.empty()) return result;
  const SetFamily gens = minimal_generators(family);
  std::vector<std::uint64_t> bits;
  bits.reserve(gens.size());
  for (const auto& g : gens.members()) bits.push_back(g.bits());
  TupleSearch search{bits, r, t, {}};
  if (search.find(0, 0, ground_mask(family.ground_size()))) {
    result.holds = false;
    for (auto idx : search.stack) result.witness.push_back(gens.members()[idx]);
  }
  return result;
}

bool is_r_wise_t_intersecting(const SetFamily& family, int r, int t) {
  return check_r_wise_t_intersecting(family, r, t).holds;
}

// --- up-sets -----------------------------------------------------------------

SetFamily up_closure(const SetFamily& family) {
  const int n = family.ground_size();
  if (n <= kBitmapClosureLimit) {
    const std::size_t universe = std::size_t{1} << n;
    std::vector<std::uint8_t> mark(universe, 0);
    for (const auto& m : family.members()) mark[m.bits()] = 1;
    for (int b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t mask = 0; mask < universe; ++mask) {
        if (!(mask & bit) && mark[mask]) mark[mask | bit] = 1;
      }
    }
    const auto count = static_cast<std::uint64_t>(std::count(mark.begin(), mark.end(), 1));
    if (count > kMaxMaterialisedMembers) throw CapabilityError("up-closure too large to materialise");
    std::vector<std::uint64_t> masks;
    masks.reserve(count);
    for (std::size_t mask = 0; mask < universe; ++mask) {
      if (mark[mask]) masks.push_back(mask);
    }
    return SetFamily(n, masks).with_flags({true, family.flags().shifted == true ? std::optional<bool>(true)
                                                                                : std::nullopt});
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  for (const auto& m : family.members()) {
    if (seen.insert(m.bits()).second) queue.push_back(m.bits());
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t cur = queue[head];
    for (int b = 0; b < n; ++b) {
      const std::uint64_t next = cur | (std::uint64_t{1} << b);
      if (next != cur && seen.insert(next).second) {
        if (seen.size() > kMaxMaterialisedMembers) throw CapabilityError("up-closure too large to materialise");
        queue.push_back(next);
      }
    }
  }
  return SetFamily(n, queue).with_flags({true, std::nullopt});
}

bool is_up_closed(const SetFamily& family) {
  const int n = family.ground_size();
  for (const auto& m : family.members()) {
    for (int e = 1; e <= n; ++e) {
      if (!m.contains(e) && !family.contains(m.with(e))) return false;
    }
  }
  return true;
}

SetFamily minimal_generators(const SetFamily& family) {
  std::vector<Subset> mins;
  // Members arrive in nondecreasing size, so every proper subset that is a
  // member is already represented by some minimal member below it.
  for (const auto& m : family.members()) {
    const bool dominated = std::any_of(mins.begin(), mins.end(), [&](const Subset& g) {
      return g.is_subset_of(m);
    });
    if (!dominated) mins.push_back(m);
  }
  return SetFamily(family.ground_size(), std::move(mins));
}

// --- frontier families ---------------------------------------------------------

namespace {

void check_frontier_args(int s, int t, int n) {
  if (s < 0 || t < 1) throw DomainError("frontier family needs s >= 0 and t >= 1");
  if (t + 3 * s > n) {
    throw DomainError("frontier family needs t + 3s <= n (t=" + std::to_string(t) +
                      ", s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
  }
  if (n > kMaxGroundSize) throw DomainError("ground-set size out of range");
}

}  // namespace

SetFamily frontier_family(int s, int t, int n) {
  check_frontier_args(s, t, n);
  const int width = t + 3 * s;
  const int need = t + 2 * s;
  BigInt count = 0;
  for (int j = need; j <= width; ++j) count += binomial(static_cast<unsigned long>(width), static_cast<unsigned long>(j));
  count <<= static_cast<mp_bitcnt_t>(n - width);
  if (count > BigInt(static_cast<unsigned long>(kMaxMaterialisedMembers))) {
    throw CapabilityError("frontier family has too many members to materialise");
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(count.get_ui());
  const std::uint64_t tails = std::uint64_t{1} << (n - width);
  for (std::uint64_t head = 0; head < (std::uint64_t{1} << width); ++head) {
    if (std::popcount(head) < need) continue;
    for (std::uint64_t tail = 0; tail < tails; ++tail) masks.push_back(head | (tail << width));
  }
  return SetFamily(n, masks).with_flags({true, true});
}

Rational frontier_measure(int s, int t, const Rational& p, int n) {
  check_frontier_args(s, t, n);
  require_probability(p);
  const Rational q = 1 - p;
  const int width = t + 3 * s;
  Rational total = 0;
  for (int i = 0; i <= s; ++i) {
    total += Rational(binomial(static_cast<unsigned long>(width), static_cast<unsigned long>(i))) *
             pow(p, static_cast<unsigned long>(width - i)) * pow(q, static_cast<unsigned long>(i));
  }
  return total;
}

// --- isomorphism ----------------------------------------------------------------

namespace {

std::uint64_t order_key(std::uint64_t bits) {
  // Only used for n <= kMaxCanonicalGround, so the value fits below bit 16.
  return (static_cast<std::uint64_t>(std::popcount(bits)) << 16) | bits;
}

std::string encode(int n, const std::vector<std::uint64_t>& keys) {
  std::string out;
  out.push_back(static_cast<char>(n));
  const int bytes = (n + 7) / 8;
  for (auto k : keys) {
    const std::uint64_t bits = k & 0xFFFFU;
    for (int b = 0; b < bytes; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFF));
  }
  return out;
}

}  // namespace

SetFamily relabel(const SetFamily& family, std::span<const int> perm) {
  const int n = family.ground_size();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation length differs from n");
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& m : family.members()) {
    std::uint64_t out = 0;
    for (int e : m.elements()) out |= std::uint64_t{1} << (perm[static_cast<std::size_t>(e - 1)] - 1);
    masks.push_back(out);
  }
  return SetFamily(n, masks);
}

std::string canonical_form(const SetFamily& family) {
  const int n = family.ground_size();
  if (n > kMaxCanonicalGround) {
    throw CapabilityError("canonical_form scans n! relabelings and supports n <= " +
                          std::to_string(kMaxCanonicalGround));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> cur(family.size());
  // Two 5-bit lookup tables per relabeling keep the inner loop to two loads.
  std::array<std::uint64_t, 32> lo{}, hi{};
  do {
    for (std::uint64_t x = 0; x < 32; ++x) {
      std::uint64_t a = 0, b = 0;
      for (int i = 0; i < 5; ++i) {
        if (!((x >> i) & 1U)) continue;
        if (i < n) a |= std::uint64_t{1} << perm[static_cast<std::size_t>(i)];
        if (i + 5 < n) b |= std::uint64_t{1} << perm[static_cast<std::size_t>(i + 5)];
      }
      lo[x] = a;
      hi[x] = b;
    }
    std::size_t idx = 0;
    for (const auto& m : family.members()) {
      const std::uint64_t bits = m.bits();
      cur[idx++] = order_key(lo[bits & 31U] | hi[(bits >> 5) & 31U]);
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return encode(n, best);
}

bool are_isomorphic(const SetFamily& a, const SetFamily& b) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size()) return false;
  if (a.size_profile() != b.size_profile()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace triwise
