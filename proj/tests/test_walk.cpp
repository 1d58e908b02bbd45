#include <doctest.h>

#include <set>

#include "support.hpp"
#include "triwise/error.hpp"
#include "triwise/walk.hpp"

using namespace triwise;
using oracle::Mask;

TEST_CASE("hits and offsets follow the lattice walk") {
  for (int n = 1; n <= 10; ++n) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const Subset g(n, m);
      const auto pts = oracle::walk(m, n);
      int best = 0;
      for (int k = 1; k <= n; ++k) {
        const auto [x, y] = pts[static_cast<std::size_t>(k - 1)];
        CHECK(walk_offset_after(g, k) == y - 2 * x);
        best = std::max(best, y - 2 * x);
      }
      CHECK(max_offset(g) == best);
      for (int c = 1; c <= 4; ++c) {
        const HitRecord h = hits_line(g, c);
        CHECK(static_cast<int>(h.points.size()) == oracle::hit_count(m, n, c));
        CHECK(hits(g, c) == (oracle::hit_count(m, n, c) > 0));
        for (std::size_t k = 0; k < h.points.size(); ++k) {
          CHECK(h.points[k].y == 2 * h.points[k].x + c);
          CHECK(h.points[k].x + h.points[k].y == h.steps[k]);
        }
      }
    }
  }
  CHECK_THROWS_AS(hits_line(Subset::empty(3), 0), DomainError);
}

TEST_CASE("walk classes partition and respect precedence") {
  for (int n = 1; n <= 12; ++n) {
    for (int t = 1; t <= 3; ++t) {
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const Subset g(n, m);
        const int on_t = oracle::hit_count(m, n, t);
        const int on_t1 = oracle::hit_count(m, n, t + 1);
        WalkClass want = WalkClass::Miss;
        if (on_t1 > 0) want = WalkClass::Tilde;
        else if (on_t == 1) want = WalkClass::Dot;
        else if (on_t >= 2) want = WalkClass::Ddot;
        const WalkClass got = classify(g, t);
        CHECK(got == want);
        if (on_t1 > 0) CHECK(on_t > 0);
        if (got != WalkClass::Tilde) {
          for (int j = 1; j <= n; ++j) CHECK(3 * g.prefix_count(j) <= 2 * j + t);
        }
      }
    }
  }
  CHECK(to_string(WalkClass::Ddot) == "DDOT");
}

TEST_CASE("reflection between the first two hits") {
  for (int n = 1; n <= 12; ++n) {
    for (int t = 1; t <= 3; ++t) {
      std::set<Mask> images;
      std::size_t ddot = 0;
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const Subset g(n, m);
        if (classify(g, t) != WalkClass::Ddot) continue;
        ++ddot;
        const Subset r = reflect_between_first_two_hits(g, t);
        CHECK(r.size() == g.size());
        CHECK(oracle::hit_count(r.bits(), n, t + 2) > 0);
        images.insert(r.bits());
      }
      CHECK(images.size() == ddot);
    }
  }
  CHECK_THROWS_AS(reflect_between_first_two_hits(Subset::from_elements(4, {1}), 1), DomainError);
}

TEST_CASE("ballot counts") {
  for (int s = 0; s <= 7; ++s) {
    for (int t = 1; 3 * s + t + 1 <= 24; ++t) {
      const BigInt dp = oracle::ballot_dp(s, t);
      CHECK(count_walks_ballot(s, t) == dp);
      CHECK(f_closed(s, t) == dp);
      CHECK(dp * (3 * s + t + 1) == (t + 1) * oracle::binom(3 * s + t + 1, s));
    }
  }
  CHECK(f_closed(1, 1) == 2);
  CHECK(f_closed(3, 7) * 6 == 8 * 15 * 16);
  CHECK_THROWS_AS(count_walks_ballot(-1, 2), DomainError);
  CHECK_THROWS_AS(count_walks_ballot(20, 5), CapabilityError);
}

TEST_CASE("truncated hitting measure equals the walk sum") {
  for (const Rational& p : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 5)}) {
    for (int c = 1; c <= 3; ++c) {
      const auto series = truncated_hitting_series(c, 12, p);
      for (int n = 1; n <= 12; ++n) {
        std::vector<Mask> hitters;
        for (Mask m = 0; m < (Mask{1} << n); ++m) {
          if (oracle::hit_count(m, n, c) > 0) hitters.push_back(m);
        }
        CHECK(series[static_cast<std::size_t>(n - 1)] == oracle::measure(hitters, n, p));
        CHECK(truncated_hitting_measure(c, n, p) == series[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("witness walks") {
  for (int s = 0; s <= 2; ++s) {
    for (int t = 2; t <= 8; ++t) {
      for (int i = 1; i <= 3; ++i) {
        const int n = witness_min_ground(s, t, i);
        const WitnessWalks w = witness_walks(s, t, i, n);
        CHECK((w.w & w.w_prime & w.e).size() == t - 1);
        CHECK_THROWS_AS(witness_walks(s, t, i, n - 1), DomainError);
      }
    }
  }
  const Subset w1 = witness_w(0, 3, 1, 9);
  CHECK(w1.prefix_count(3) == 3);
  CHECK_FALSE(w1.contains(4));
  CHECK(w1.contains(5));
  CHECK_THROWS_AS(witness_w(2, 3, 1, 20), DomainError);
  CHECK_THROWS_AS(witness_min_ground(3, 3, 1), DomainError);
}
