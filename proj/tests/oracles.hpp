#pragma once

// Brute-force reference implementations. They work directly on bitmasks and
// share no code with the library beyond the GMP number types.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Mask = std::uint64_t;

inline Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

inline Q qpow(const Q& x, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

/// Product measure of one point of the cube.
inline Q weight(Mask m, int n, const Q& p) {
  Q w = 1;
  for (int i = 0; i < n; ++i) w *= ((m >> i) & 1U) ? p : Q(1 - p);
  return w;
}

inline Q measure(const std::vector<Mask>& family, int n, const Q& p) {
  Q total = 0;
  for (Mask m : family) total += weight(m, n, p);
  return total;
}

inline std::vector<Mask> frontier(int s, int t, int n) {
  const int w = t + 3 * s;
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    int c = 0;
    for (int i = 0; i < w; ++i) c += (m >> i) & 1U;
    if (c >= t + 2 * s) out.push_back(m);
  }
  return out;
}

/// Every r-tuple with repetition, by nested enumeration.
inline bool r_wise_t_intersecting(const std::vector<Mask>& family, int r, int t) {
  if (family.empty()) return true;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    Mask meet = ~Mask{0};
    for (auto k : idx) meet &= family[k];
    if (std::popcount(meet) < t) return false;
    int pos = r - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == family.size()) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return true;
  }
}

inline bool up_closed(const std::vector<Mask>& family, int n) {
  std::set<Mask> s(family.begin(), family.end());
  for (Mask m : family) {
    for (int i = 0; i < n; ++i) {
      if (!s.count(m | (Mask{1} << i))) return false;
    }
  }
  return true;
}

inline std::vector<Mask> shift(const std::vector<Mask>& family, int i, int j) {
  const Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
  std::set<Mask> s(family.begin(), family.end());
  std::vector<Mask> out;
  for (Mask m : family) {
    if ((m & bj) && !(m & bi)) {
      const Mask moved = (m & ~bj) | bi;
      out.push_back(s.count(moved) ? m : moved);
    } else {
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool shifted(const std::vector<Mask>& family, int n) {
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (shift(family, i, j) != sorted) return false;
    }
  }
  return true;
}

inline std::vector<int> size_profile(const std::vector<Mask>& family, int n) {
  std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
  for (Mask m : family) ++c[static_cast<std::size_t>(std::popcount(m))];
  return c;
}

/// Lattice points visited after each step: (right steps, up steps).
inline std::vector<std::pair<int, int>> walk(Mask m, int n) {
  std::vector<std::pair<int, int>> pts;
  int x = 0, y = 0;
  for (int i = 0; i < n; ++i) {
    if ((m >> i) & 1U) ++y;
    else ++x;
    pts.emplace_back(x, y);
  }
  return pts;
}

inline int hit_count(Mask m, int n, int c) {
  int k = 0;
  for (auto [x, y] : walk(m, n)) k += (y == 2 * x + c);
  return k;
}

/// Pascal triangle binomial.
inline Z binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Z> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

/// Paths to (s, 2s+t) avoiding y = 2x + t + 1, by a grid DP.
inline Z ballot_dp(int s, int t) {
  const int h = 2 * s + t;
  std::vector<std::vector<Z>> a(static_cast<std::size_t>(s) + 1, std::vector<Z>(static_cast<std::size_t>(h) + 1, 0));
  for (int x = 0; x <= s; ++x) {
    for (int y = 0; y <= h; ++y) {
      if (y == 2 * x + t + 1) continue;
      if (x == 0 && y == 0) {
        a[0][0] = 1;
        continue;
      }
      Z v = 0;
      if (x > 0) v += a[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
      if (y > 0) v += a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
      a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
    }
  }
  return a[static_cast<std::size_t>(s)][static_cast<std::size_t>(h)];
}

/// Smallest root of x = p + (1-p) x^3 by monotone fixed-point iteration.
inline long double alpha_fixed_point(long double p) {
  long double x = 0;
  for (int i = 0; i < 200000; ++i) {
    const long double next = p + (1 - p) * x * x * x;
    if (next == x) break;
    x = next;
  }
  return x;
}

inline long double p0_float(int t) { return 2.0L / (std::sqrt(4.0L * t + 9.0L) - 1.0L); }

/// Antichains of 2^[n] by checking every family of subsets, n <= 4.
inline std::uint64_t antichains_brute(int n) {
  const int cube = 1 << n;
  std::uint64_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << cube); ++fam) {
    bool ok = true;
    for (int a = 0; a < cube && ok; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (int b = 0; b < cube && ok; ++b) {
        if (a != b && ((fam >> b) & 1U) && (a & b) == a) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

/// Applies every permutation of [n]; true if some maps a onto b.
inline bool isomorphic(const std::vector<Mask>& a, const std::vector<Mask>& b, int n) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> target(b.begin(), b.end());
  std::sort(target.begin(), target.end());
  do {
    std::vector<Mask> img;
    for (Mask m : a) {
      Mask r = 0;
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1U) r |= Mask{1} << perm[static_cast<std::size_t>(i)];
      }
      img.push_back(r);
    }
    std::sort(img.begin(), img.end());
    if (img == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every up-set of 2^[n] (n <= 4) by scanning all families of subsets.
inline std::vector<std::vector<Mask>> all_upsets_brute(int n) {
  const int cube = 1 << n;
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << cube); ++fam) {
    std::vector<Mask> members;
    for (int a = 0; a < cube; ++a) {
      if ((fam >> a) & 1U) members.push_back(static_cast<Mask>(a));
    }
    if (up_closed(members, n)) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace oracle
