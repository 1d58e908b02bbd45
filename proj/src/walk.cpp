#include "triwise/walk.hpp"

#include <algorithm>

#include "triwise/error.hpp"

namespace triwise {

std::string_view to_string(WalkClass c) {
  switch (c) {
    case WalkClass::Tilde: return "TILDE";
    case WalkClass::Dot: return "DOT";
    case WalkClass::Ddot: return "DDOT";
    case WalkClass::Miss: return "MISS";
  }
  return "?";
}

int walk_offset_after(const Subset& g, int k) {
  const int ups = g.prefix_count(k);
  return ups - 2 * (k - ups);
}

int max_offset(const Subset& g) {
  int d = 0, best = 0;
  for (int j = 1; j <= g.ground_size(); ++j) {
    d += g.contains(j) ? 1 : -2;
    best = std::max(best, d);
  }
  return best;
}

HitRecord hits_line(const Subset& g, int c) {
  if (c < 1) throw DomainError("line offset must be at least 1");
  HitRecord rec{c, {}, {}};
  int x = 0, y = 0;
  for (int j = 1; j <= g.ground_size(); ++j) {
    if (g.contains(j)) ++y;
    else ++x;
    if (y == 2 * x + c) {
      rec.points.push_back({x, y});
      rec.steps.push_back(j);
    }
  }
  return rec;
}

bool hits(const Subset& g, int c) {
  int d = 0;
  for (int j = 1; j <= g.ground_size(); ++j) {
    d += g.contains(j) ? 1 : -2;
    if (d == c) return true;
  }
  return false;
}

WalkClass classify(const Subset& g, int t) {
  if (t < 1) throw DomainError("t must be at least 1");
  if (hits(g, t + 1)) return WalkClass::Tilde;
  int count = 0, d = 0;
  for (int j = 1; j <= g.ground_size() && count < 2; ++j) {
    d += g.contains(j) ? 1 : -2;
    if (d == t) ++count;
  }
  if (count == 0) return WalkClass::Miss;
  return count == 1 ? WalkClass::Dot : WalkClass::Ddot;
}

Subset reflect_between_first_two_hits(const Subset& g, int t) {
  if (classify(g, t) != WalkClass::Ddot) throw DomainError("reflection needs a DDOT walk");
  const HitRecord rec = hits_line(g, t);
  const int a = rec.steps[0];
  const int b = rec.steps[1];
  std::uint64_t bits = g.bits();
  for (int j = a + 1; j <= b; ++j) {
    const int mirror = a + 1 + b - j;
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    if (g.contains(mirror)) bits |= bit;
    else bits &= ~bit;
  }
  return Subset(g.ground_size(), bits);
}

namespace {

std::uint64_t ballot_dfs(int ups_left, int rights_left, int d, int forbidden) {
  if (d == forbidden) return 0;
  if (ups_left == 0 && rights_left == 0) return 1;
  std::uint64_t total = 0;
  if (ups_left > 0) total += ballot_dfs(ups_left - 1, rights_left, d + 1, forbidden);
  if (rights_left > 0) total += ballot_dfs(ups_left, rights_left - 1, d - 2, forbidden);
  return total;
}

}  // namespace

BigInt count_walks_ballot(int s, int t) {
  if (s < 0 || t < 1) throw DomainError("ballot count needs s >= 0 and t >= 1");
  if (3 * s + t + 1 > kMaxBallotBruteForce) throw CapabilityError("ballot brute force limited to 3s+t+1 <= 40");
  return BigInt(static_cast<unsigned long>(ballot_dfs(2 * s + t, s, 0, t + 1)));
}

BigInt f_closed(int s, int t) {
  if (s < 0 || t < 1) throw DomainError("ballot count needs s >= 0 and t >= 1");
  const auto m = static_cast<unsigned long>(3 * s + t + 1);
  BigInt num = BigInt(t + 1) * binomial(m, static_cast<unsigned long>(s));
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), m);
  return out;
}

std::vector<Rational> truncated_hitting_series(int c, int n, const Rational& p) {
  if (c < 1 || n < 1) throw DomainError("truncated hitting measure needs c >= 1 and n >= 1");
  require_probability(p);
  const Rational q = 1 - p;
  // Offsets run from -2n to c; index = d + 2n.
  const int shift = 2 * n;
  std::vector<Rational> mass(static_cast<std::size_t>(shift + c + 1), Rational(0));
  mass[static_cast<std::size_t>(shift)] = 1;
  Rational absorbed = 0;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int step = 1; step <= n; ++step) {
    std::vector<Rational> next(mass.size(), Rational(0));
    for (int d = -2 * (step - 1); d < c; ++d) {
      const Rational& m = mass[static_cast<std::size_t>(d + shift)];
      if (m == 0) continue;
      if (d + 1 == c) absorbed += m * p;
      else next[static_cast<std::size_t>(d + 1 + shift)] += m * p;
      next[static_cast<std::size_t>(d - 2 + shift)] += m * q;
    }
    mass = std::move(next);
    out.push_back(absorbed);
  }
  return out;
}

Rational truncated_hitting_measure(int c, int n, const Rational& p) {
  return truncated_hitting_series(c, n, p).back();
}

int witness_min_ground(int s, int t, int i) {
  if (t < 1) throw DomainError("t must be at least 1");
  switch (s) {
    case 0: return t + i + 3;
    case 1: return t + i + 6;
    case 2: return t + 10;
    default: throw DomainError("witness walks exist for s in {0,1,2}");
  }
}

Subset witness_w(int s, int t, int i, int n) {
  if (s != 0 && s != 1) throw DomainError("W_i is defined for s in {0,1}");
  if (i < 1) throw DomainError("witness index must be at least 1");
  if (s == 0) {
    if (t + i + 1 > n) throw DomainError("ground set too small for W_i");
    return (Subset::prefix(n, t).with(t + i + 1)) | interval3(t + i + 3, n);
  }
  if (t + i + 4 > n) throw DomainError("ground set too small for W_i");
  return (Subset::prefix(n, t + 3).without(t).with(t + i + 4)) | interval3(t + i + 6, n);
}

WitnessWalks witness_walks(int s, int t, int i, int n) {
  if (s != 2 && i < 1) throw DomainError("witness index must be at least 1");
  if (n < witness_min_ground(s, t, i)) throw DomainError("ground set too small for the witness walks");
  if (n > kMaxGroundSize) throw DomainError("ground-set size out of range");
  WitnessWalks out;
  if (s == 0) {
    out.w = witness_w(0, t, i, n);
    out.w_prime = Subset::prefix(n, t).with(t + i).with(t + i + 2) | interval3(t + i + 4, n);
    out.e = Subset::prefix(n, t - 1) | Subset::range(n, t + 1, t + i + 3) | interval3(t + i + 5, n);
  } else if (s == 1) {
    out.w = witness_w(1, t, i, n);
    out.w_prime = Subset::prefix(n, t + 3).without(t + 1).with(t + i + 3).with(t + i + 5) | interval3(t + i + 7, n);
    out.e = Subset::prefix(n, t + 1) | Subset::range(n, t + 4, t + i + 6) | interval3(t + i + 8, n);
  } else {
    out.w = Subset::prefix(n, t + 8).without(t).without(t + 3).without(t + 7) | interval3(t + 10, n);
    out.w_prime = Subset::prefix(n, t + 9).without(t + 1).without(t + 4).without(t + 8) | interval3(t + 11, n);
    out.e = Subset::prefix(n, t + 10).without(t + 2).without(t + 5).without(t + 6) | interval3(t + 12, n);
  }
  return out;
}

}  // namespace triwise
