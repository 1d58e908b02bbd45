#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "triwise/claims.hpp"
#include "triwise/error.hpp"
#include "triwise/family.hpp"
#include "triwise/thresholds.hpp"

using namespace triwise;

TEST_CASE("interval arithmetic encloses exact results") {
  const Rational third = make_rational(1, 3);
  const Interval x = Interval::from_rational(third, 64);
  CHECK(x.contains(third));
  CHECK(x.lower() < third);
  CHECK(x.upper() > third);
  CHECK((x * 3).contains(Rational(1)));
  CHECK((x - x).contains_zero());
  CHECK((1 / x).contains(Rational(3)));
  const Interval two = Interval::from_int(2, 200);
  const Interval r = sqrt(two);
  CHECK((r * r).contains(Rational(2)));
  CHECK(r.width() < make_rational(1, 1000000));
  CHECK(log(Interval::from_int(1)).contains_zero());
  CHECK(log(Interval::from_int(2)).lower_double() < 0.6931471805599454);
  CHECK(log(Interval::from_int(2)).upper_double() > 0.6931471805599452);
  CHECK(pow(Interval::from_rational(make_rational(-1, 2)), 3).contains(make_rational(-1, 8)));
  const Interval a = Interval::from_bounds(Rational(1), Rational(2));
  const Interval b = Interval::from_bounds(Rational(3), Rational(4));
  CHECK(a.certainly_less(b));
  CHECK_FALSE(b.certainly_less(a));
  CHECK_FALSE(intersect(a, b).has_value());
  CHECK(min(a, b).upper() == 2);
  CHECK(max(a, b).lower() == 3);
  CHECK((a * (-1 * b)).certainly_negative());
  CHECK_THROWS_AS(1 / Interval::from_bounds(Rational(-1), Rational(1)), DomainError);
  CHECK_THROWS_AS(sqrt(Interval::from_int(-1)), DomainError);
}

TEST_CASE("alpha enclosure") {
  for (int k = 1; k <= 60; ++k) {
    const Rational p = make_rational(k, 100);
    const Interval a = alpha(p);
    const long double ref = oracle::alpha_fixed_point(static_cast<long double>(k) / 100.0L);
    CHECK(a.lower_double() <= static_cast<double>(ref) + 1e-12);
    CHECK(a.upper_double() >= static_cast<double>(ref) - 1e-12);
    CHECK(a.width() < make_rational(1, 1) / (BigInt(1) << 100));
    const Interval pi = Interval::from_rational(p);
    CHECK((pi + (1 - pi) * pow(a, 3) - a).contains_zero());
    CHECK(a.certainly_positive());
    CHECK(a.certainly_less(Interval::from_int(1)));
  }
  CHECK(alpha(make_rational(1, 2)).overlaps(Interval::from_rational(make_rational(1, 2)) * (sqrt(Interval::from_int(5)) - 1)));
  CHECK_THROWS_AS(alpha(make_rational(2, 3)), DomainError);
  CHECK_THROWS_AS(alpha(make_rational(3, 2)), DomainError);
}

TEST_CASE("p0 threshold") {
  CHECK(p0_exact(10) == make_rational(1, 3));
  CHECK(p0_exact(4) == make_rational(1, 2));
  CHECK(p0_exact(18) == make_rational(1, 4));
  CHECK_FALSE(p0_exact(15).has_value());
  CHECK(p0(10).contains(make_rational(1, 3)));
  for (int t = 1; t <= 60; ++t) {
    const Interval v = p0(t);
    const long double ref = oracle::p0_float(t);
    CHECK(v.lower_double() <= static_cast<double>(ref) + 1e-15);
    CHECK(v.upper_double() >= static_cast<double>(ref) - 1e-15);
    CHECK(p0_surd(t).overlaps(p0_quadratic(t)));
    const Rational lo = p0_bracket_below(t), hi = p0_bracket_above(t);
    CHECK(compare_with_p0(lo, t) <= 0);
    CHECK(compare_with_p0(hi, t) >= 0);
    CHECK(hi - lo < make_rational(1, 1) / (BigInt(1) << 90));
    CHECK(t0(lo) >= t);
    if (!p0_exact(t)) CHECK(t0(hi) < t);
    if (t > 1) CHECK(beta(t).certainly_less(beta(t - 1)));
  }
  CHECK(compare_with_p0(make_rational(1, 3), 10) == 0);
  CHECK(compare_with_p0(make_rational(1, 4), 10) < 0);
  CHECK(compare_with_p0(make_rational(1, 2), 10) > 0);
  CHECK(threshold_params(10).t0_at_p0.contains(Rational(10)));
}

TEST_CASE("frontier gap equals the difference of frontier measures") {
  for (int t = 1; t <= 12; ++t) {
    for (const Rational& p : {make_rational(1, 5), make_rational(1, 3), make_rational(1, 2)}) {
      for (int n = t + 3; n <= t + 6; ++n) {
        CHECK(frontier_gap(t, p) == frontier_measure(0, t, p, n) - frontier_measure(1, t, p, n));
      }
      CHECK(frontier_gap(t, Interval::from_rational(p)).contains(frontier_gap(t, p)));
      CHECK((frontier_gap(t, p) >= 0) == (compare_with_p0(p, t) <= 0));
    }
  }
}

TEST_CASE("claim registry") {
  const auto ids = claim_ids();
  CHECK(ids == std::vector<std::string>{"A1", "A1.5", "A2", "A2.5", "A3", "A4", "A4-t6", "A5", "A6", "S0", "S1",
                                        "MONO-G", "THRESH"});
  CHECK(is_claim_id("A4-t6"));
  CHECK_FALSE(is_claim_id("A7"));
  CHECK_THROWS_AS(run_check("A7"), DomainError);

  CheckDomain small;
  small.t_max = 25;
  small.grid_points = 32;
  for (const auto& id : ids) {
    const ClaimReport r = run_check(id, small);
    CHECK_MESSAGE(r.verdict == Verdict::Holds, id);
    CHECK(r.fails == 0);
    CHECK(r.inconclusive == 0);
    CHECK(r.holds == r.points.size());
    CHECK(r.asserted == (id != "A4-t6"));
    for (const auto& pt : r.points) CHECK(pt.margin.certainly_positive());
  }

  ClaimReport ok, bad, open;
  ok.verdict = Verdict::Holds;
  bad.verdict = Verdict::Fails;
  open.verdict = Verdict::Inconclusive;
  CHECK(overall_verdict({ok, ok}) == Verdict::Holds);
  CHECK(overall_verdict({ok, open}) == Verdict::Inconclusive);
  CHECK(overall_verdict({open, bad}) == Verdict::Fails);
  bad.asserted = false;
  CHECK(overall_verdict({ok, bad}) == Verdict::Holds);
}

TEST_CASE("claim points escalate precision and stay stable") {
  CheckDomain d;
  d.t_min = 15;
  d.t_max = 18;
  d.grid_points = 16;
  const ClaimReport lo = run_check("A3", d, 4096, 64);
  const ClaimReport hi = run_check("A3", d, 4096, 512);
  REQUIRE(lo.points.size() == hi.points.size());
  for (std::size_t k = 0; k < lo.points.size(); ++k) {
    CHECK(lo.points[k].verdict == hi.points[k].verdict);
    CHECK(hi.points[k].precision >= 512);
  }
}
