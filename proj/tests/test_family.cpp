#include <doctest.h>

#include <random>

#include "support.hpp"
#include "triwise/error.hpp"
#include "triwise/family.hpp"
#include "triwise/family_io.hpp"
#include "triwise/report_json.hpp"

using namespace triwise;
using oracle::Mask;

TEST_CASE("rational parsing and canonical construction") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(to_string(parse_rational(" 2/4 ")) == "1/2");
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  const Rational r = make_rational(27, 513);
  CHECK(r.get_num() == 1);
  CHECK(r.get_den() == 19);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(require_probability(Rational(1)), DomainError);
  CHECK_THROWS_AS(require_probability(Rational(0)), DomainError);
  CHECK(binomial(10, 3) == 120);
  CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
}

TEST_CASE("subset basics") {
  const Subset g = Subset::from_elements(6, {1, 2, 5});
  CHECK(g.to_string() == "{1,2,5}");
  CHECK(Subset::empty(4).to_string() == "{}");
  CHECK(g.size() == 3);
  CHECK(g.prefix_count(2) == 2);
  CHECK(g.prefix_count(4) == 2);
  CHECK(g.prefix_count(6) == 3);
  CHECK(g.contains(5));
  CHECK_FALSE(g.contains(3));
  CHECK(g.elements() == std::vector<int>{1, 2, 5});
  CHECK(Subset::prefix(6, 3) == Subset::from_elements(6, {1, 2, 3}));
  CHECK(Subset::range(6, 2, 4) == Subset::from_elements(6, {2, 3, 4}));
  CHECK(interval3(2, 8) == Subset::from_elements(8, {2, 3, 5, 6, 8}));
  CHECK_THROWS_AS(Subset::from_elements(4, {5}), DomainError);
  CHECK_THROWS_AS(Subset::from_elements(4, {0}), DomainError);
}

TEST_CASE("p-measure matches the pointwise product measure") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    const auto ms = support::random_family(rng, n, 0.4);
    const SetFamily f(n, ms);
    for (const Rational& p : {make_rational(1, 4), make_rational(1, 3), make_rational(1, 2), make_rational(3, 5)}) {
      CHECK(p_measure(f, p) == oracle::measure(ms, n, p));
    }
  }
  CHECK(p_measure(SetFamily::power_set(5), make_rational(2, 7)) == 1);
  CHECK(p_measure(SetFamily(5), make_rational(2, 7)) == 0);
}

TEST_CASE("frontier family and closed-form measure agree with enumeration") {
  CHECK(frontier_measure(1, 1, make_rational(1, 2), 4) == make_rational(5, 16));
  for (int t = 1; t <= 4; ++t) {
    for (int s = 0; t + 3 * s <= 10; ++s) {
      for (int n = t + 3 * s; n <= 10; ++n) {
        const auto want = oracle::frontier(s, t, n);
        const SetFamily f = frontier_family(s, t, n);
        CHECK(support::masks(f) == want);
        for (const Rational& p : {make_rational(1, 4), make_rational(2, 5)}) {
          CHECK(frontier_measure(s, t, p, n) == oracle::measure(want, n, p));
        }
      }
    }
  }
  CHECK_THROWS_AS(frontier_family(1, 2, 4), DomainError);
  CHECK_THROWS_AS(frontier_measure(0, 1, make_rational(3, 2), 4), DomainError);
}

TEST_CASE("r-wise t-intersecting check agrees with the tuple oracle") {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    const auto sets = support::random_sets(rng, n, 1 + trial % 5, 0.75);
    const SetFamily f(n, sets);
    std::vector<Mask> dedup = support::masks(f);
    for (int r = 2; r <= 3; ++r) {
      for (int t = 1; t <= 2; ++t) {
        const bool want = oracle::r_wise_t_intersecting(dedup, r, t);
        const IntersectionCheck got = check_r_wise_t_intersecting(f, r, t);
        CHECK(got.holds == want);
        positives += want;
        if (!got.holds) {
          REQUIRE(got.witness.size() == static_cast<std::size_t>(r));
          Mask meet = ~Mask{0};
          for (const auto& g : got.witness) {
            CHECK(f.contains(g));
            meet &= g.bits();
          }
          CHECK(std::popcount(meet) < t);
        }
      }
    }
  }
  CHECK(positives > 100);
  CHECK(is_r_wise_t_intersecting(frontier_family(0, 3, 6), 3, 3));
  CHECK(is_r_wise_t_intersecting(frontier_family(1, 3, 7), 3, 3));
  CHECK_FALSE(is_r_wise_t_intersecting(frontier_family(1, 3, 7), 3, 4));
}

TEST_CASE("up-closure and minimal generators") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 6;
    const auto sets = support::random_sets(rng, n, 1 + trial % 4, 0.5);
    const SetFamily g(n, sets);
    const SetFamily up = up_closure(g);
    std::vector<Mask> want;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      for (Mask s : sets) {
        if ((s & m) == s) {
          want.push_back(m);
          break;
        }
      }
    }
    CHECK(support::masks(up) == want);
    CHECK(is_up_closed(up));
    CHECK(is_up_closed(up) == oracle::up_closed(want, n));
    CHECK(up_closure(minimal_generators(up)) == up);
    const SetFamily mins = minimal_generators(up);
    for (const auto& a : mins.members()) {
      for (const auto& b : mins.members()) {
        if (!(a == b)) CHECK_FALSE(a.is_subset_of(b));
      }
    }
  }
  CHECK_FALSE(is_up_closed(SetFamily(3, std::vector<Mask>{0b001})));
}

TEST_CASE("set operations and symmetric difference measure") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const auto a = support::random_family(rng, n, 0.5);
    const auto b = support::random_family(rng, n, 0.5);
    const SetFamily fa(n, a), fb(n, b);
    const Rational p = make_rational(1, 3);
    const SetFamily sd = symmetric_difference(fa, fb);
    std::vector<Mask> want;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(want));
    CHECK(oracle::measure(want, n, p) == p_measure(sd, p));
    CHECK(symmetric_difference_measure(fa, fb, p) == p_measure(sd, p));
    CHECK(p_measure(family_union(fa, fb), p) + p_measure(family_intersection(fa, fb), p) ==
          p_measure(fa, p) + p_measure(fb, p));
    CHECK(p_measure(family_difference(fa, fb), p) == p_measure(fa, p) - p_measure(family_intersection(fa, fb), p));
  }
  CHECK_THROWS_AS(family_union(SetFamily(3), SetFamily(4)), DomainError);
}

TEST_CASE("canonical form decides isomorphism") {
  std::mt19937_64 rng(17);
  int iso = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = support::random_sets(rng, n, 2, 0.5);
    auto b = support::random_sets(rng, n, 2, 0.5);
    if (trial % 2 == 0) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = support::masks(relabel(SetFamily(n, a), perm));
    }
    const SetFamily fa(n, a), fb(n, b);
    const bool want = oracle::isomorphic(support::masks(fa), support::masks(fb), n);
    CHECK(are_isomorphic(fa, fb) == want);
    CHECK((canonical_form(fa) == canonical_form(fb)) == want);
    iso += want;
  }
  CHECK(iso >= 75);
}

TEST_CASE("family text and JSON formats round-trip") {
  const SetFamily f = frontier_family(1, 1, 5);
  CHECK(parse_family_text(format_family_text(f)) == f);
  CHECK(family_from_json(family_to_json(f)) == f);
  CHECK(parse_family_document(family_to_json(f).dump()) == f);

  const SetFamily g = parse_family_text("# demo\nn=4\n1,2  # first\n\n3,4\n-\n");
  CHECK(g.size() == 3);
  CHECK(g.contains(Subset::empty(4)));
  CHECK(g.contains(Subset::from_elements(4, {3, 4})));

  const Json witness{{"max_measure", "1/4"}, {"witness", family_to_json(SetFamily(3, std::vector<Mask>{0b001}), true)}};
  CHECK(family_from_json_document(witness.dump()) == up_closure(SetFamily(3, std::vector<Mask>{0b001})));

  CHECK_THROWS_AS(parse_family_text("n=3\n1,4\n"), ParseError);
  CHECK_THROWS_AS(parse_family_text("1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_family_text("n=3\n1,x\n"), ParseError);
  CHECK_THROWS_AS(family_from_json_document("{\"n\": 3}"), ParseError);
  CHECK_THROWS_AS(family_from_json_document("{\"n\": 3, \"members\": [[4]]}"), ParseError);
  CHECK_THROWS_AS(family_from_json_document("{not json"), ParseError);
}
