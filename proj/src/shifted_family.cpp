#include "triwise/shifted_family.hpp"

#include <algorithm>
#include <map>

#include "triwise/error.hpp"
#include "triwise/shift.hpp"

namespace triwise {

namespace {

constexpr std::size_t kMaxGenerators = 20;
constexpr int kMaxMaterialiseGround = 24;

SizeProfile zero_profile(int n) { return {n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)}; }

struct DpState {
  int ups = 0;
  std::uint32_t alive = 0;
  std::uint8_t hits_t = 0;
  bool hit_t1 = false;
  bool in_frontier = false;
  friend auto operator<=>(const DpState&, const DpState&) = default;
};

}  // namespace

ShiftedUpset::ShiftedUpset(int n, std::vector<Subset> generators) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) throw DomainError("ground-set size out of range");
  for (const auto& g : generators) {
    if (g.ground_size() != n) throw DomainError("generator over a different ground set");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool dominated = std::any_of(gens_.begin(), gens_.end(), [&](const Subset& h) { return leadsto(h, g); });
    if (!dominated) gens_.push_back(g);
  }
  if (gens_.size() > kMaxGenerators) throw CapabilityError("too many generators for the walk DP");
}

bool ShiftedUpset::contains(const Subset& h) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Subset& g) { return leadsto(g, h); });
}

int ShiftedUpset::prefix_witness(int r, int t) const {
  if (gens_.empty()) return 0;
  for (int i = 0; i <= n_; ++i) {
    int min_count = n_ + 1;
    for (const auto& g : gens_) min_count = std::min(min_count, g.prefix_count(i));
    if (r * min_count >= (r - 1) * i + t) return i;
  }
  return -1;
}

int ShiftedUpset::min_intersection(std::span<const Subset> tuple) const {
  // DP over ground elements. State: per-set surplus |H_i ∩ [j]| - |g_i ∩ [j]|,
  // capped at what g_i still needs, since extra surplus never helps.
  const std::size_t r = tuple.size();
  std::vector<int> dim(r);
  for (std::size_t i = 0; i < r; ++i) dim[i] = tuple[i].size() + 1;
  std::size_t states = 1;
  for (int d : dim) states *= static_cast<std::size_t>(d);
  constexpr int kInf = 1 << 29;
  std::vector<int> cur(states, kInf), next(states);
  cur[0] = 0;
  std::vector<int> need(r), sur(r);
  for (int j = 1; j <= n_; ++j) {
    std::fill(next.begin(), next.end(), kInf);
    for (std::size_t i = 0; i < r; ++i) need[i] = tuple[i].size() - tuple[i].prefix_count(j);
    for (std::size_t code = 0; code < states; ++code) {
      if (cur[code] == kInf) continue;
      std::size_t rest = code;
      for (std::size_t i = 0; i < r; ++i) {
        sur[i] = static_cast<int>(rest % static_cast<std::size_t>(dim[i]));
        rest /= static_cast<std::size_t>(dim[i]);
      }
      for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << r); ++pick) {
        std::size_t out = 0, stride = 1;
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
          int s = sur[i] + static_cast<int>((pick >> i) & 1U) - (tuple[i].contains(j) ? 1 : 0);
          if (s < 0) ok = false;
          s = std::min(s, need[i]);
          out += static_cast<std::size_t>(s) * stride;
          stride *= static_cast<std::size_t>(dim[i]);
        }
        if (!ok) continue;
        const int cost = cur[code] + (pick + 1 == (std::uint32_t{1} << r) ? 1 : 0);
        next[out] = std::min(next[out], cost);
      }
    }
    std::swap(cur, next);
  }
  return *std::min_element(cur.begin(), cur.end());
}

bool ShiftedUpset::is_r_wise_t_intersecting(int r, int t) const {
  if (r < 1) throw DomainError("r must be positive");
  if (gens_.empty() || t <= 0) return true;
  if (prefix_witness(r, t) >= 0) return true;
  // Every multiset of r generators; the up-set only adds supersets.
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  std::vector<Subset> tuple(static_cast<std::size_t>(r), gens_.front());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = gens_[idx[i]];
    if (min_intersection(tuple) < t) return false;
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == gens_.size()) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[pos - 1];
  }
}

int ShiftedUpset::lambda() const {
  int best = n_ + 1;
  for (const auto& g : gens_) {
    int d = 0, top = 0;
    for (int j = 1; j <= n_; ++j) {
      d += g.contains(j) ? 1 : -2;
      top = std::max(top, d);
    }
    best = std::min(best, top);
  }
  return gens_.empty() ? 0 : best;
}

UpsetBreakdown ShiftedUpset::breakdown(int t, int s) const {
  const int width = t + 3 * s;
  UpsetBreakdown out{zero_profile(n_), zero_profile(n_), zero_profile(n_), zero_profile(n_),
                     zero_profile(n_), zero_profile(n_), zero_profile(n_), zero_profile(n_)};
  const std::size_t k = gens_.size();
  std::vector<std::vector<int>> pref(k, std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
  for (std::size_t g = 0; g < k; ++g) {
    for (int j = 1; j <= n_; ++j) pref[g][static_cast<std::size_t>(j)] = gens_[g].prefix_count(j);
  }
  const std::uint32_t all = k == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
  std::map<DpState, std::uint64_t> cur{{DpState{0, all, 0, false, width == 0 && t + 2 * s <= 0}, 1}};
  for (int j = 1; j <= n_; ++j) {
    std::map<DpState, std::uint64_t> next;
    for (const auto& [st, cnt] : cur) {
      for (int up = 0; up <= 1; ++up) {
        DpState ns = st;
        ns.ups = st.ups + up;
        const int d = 3 * ns.ups - 2 * j;
        for (std::size_t g = 0; g < k; ++g) {
          if (ns.ups < pref[g][static_cast<std::size_t>(j)]) ns.alive &= ~(std::uint32_t{1} << g);
        }
        if (d == t && ns.hits_t < 2) ++ns.hits_t;
        if (d == t + 1) ns.hit_t1 = true;
        if (j == width && ns.ups >= t + 2 * s) ns.in_frontier = true;
        next[ns] += cnt;
      }
    }
    cur = std::move(next);
  }
  for (const auto& [st, cnt] : cur) {
    const auto u = static_cast<std::size_t>(st.ups);
    if (st.in_frontier) out.frontier.counts[u] += cnt;
    if (st.alive == 0) continue;
    out.members.counts[u] += cnt;
    if (st.in_frontier) out.members_in_frontier.counts[u] += cnt;
    if (st.hit_t1) {
      out.tilde.counts[u] += cnt;
    } else {
      if (st.hits_t == 0) out.miss.counts[u] += cnt;
      if (st.hits_t == 1) out.dot.counts[u] += cnt;
      if (st.hits_t >= 2) out.ddot.counts[u] += cnt;
      if (!st.in_frontier) out.core_outside_frontier.counts[u] += cnt;
    }
  }
  return out;
}

SizeProfile ShiftedUpset::size_profile() const { return breakdown(1, 0).members; }

Rational ShiftedUpset::measure(const Rational& p) const { return p_measure(size_profile(), p); }

SetFamily ShiftedUpset::materialise() const {
  if (n_ > kMaxMaterialiseGround) throw CapabilityError("ground set too large to materialise");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_); ++m) {
    if (contains(Subset(n_, m))) masks.push_back(m);
  }
  return SetFamily(n_, masks).with_flags({true, true});
}

}  // namespace triwise
