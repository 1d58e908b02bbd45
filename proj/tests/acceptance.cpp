// One PASS/FAIL line per acceptance criterion. Arguments select criteria by
// number; with none, all run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "support.hpp"
#include "triwise/claims.hpp"
#include "triwise/error.hpp"
#include "triwise/family.hpp"
#include "triwise/search.hpp"
#include "triwise/shift.hpp"
#include "triwise/shifted_family.hpp"
#include "triwise/stability.hpp"
#include "triwise/thresholds.hpp"
#include "triwise/walk.hpp"

using namespace triwise;
using oracle::Mask;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Outcome fail(Outcome o, const std::string& why) {
  o.pass = false;
  if (o.detail.empty()) o.detail = why;
  return o;
}

Outcome exact_measure_identity() {
  Outcome o;
  std::size_t cases = 0;
  for (int t = 1; t <= 6; ++t) {
    for (int s = 0; t + 3 * s <= 12; ++s) {
      for (int n = t + 3 * s; n <= 12; ++n) {
        const SetFamily f = frontier_family(s, t, n);
        for (const Rational& p : {make_rational(1, 4), make_rational(1, 3), make_rational(1, 2)}) {
          ++cases;
          if (frontier_measure(s, t, p, n) != p_measure(f, p)) {
            return fail(o, "mismatch at s=" + std::to_string(s) + " t=" + std::to_string(t) + " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " (s,t,n,p) cases equal";
  return o;
}

Outcome threshold_algebra() {
  Outcome o;
  const Rational third = make_rational(1, 3);
  if (p0_exact(10) != third || compare_with_p0(third, 10) != 0 || !p0(10).contains(third)) {
    return fail(o, "p0(10) is not 1/3");
  }
  for (int n = 13; n <= 40; ++n) {
    if (frontier_measure(0, 10, third, n) != frontier_measure(1, 10, third, n)) return fail(o, "closed forms differ");
  }
  for (int n = 13; n <= 15; ++n) {
    if (p_measure(frontier_family(0, 10, n), third) != p_measure(frontier_family(1, 10, n), third)) {
      return fail(o, "enumerated measures differ at n=" + std::to_string(n));
    }
  }
  const Rational nudge(make_rational(1, 1) / Rational(BigInt(1) << 96));
  for (int t = 2; t <= 20; ++t) {
    Rational below = p0_bracket_below(t), above = p0_bracket_above(t);
    if (p0_exact(t)) {
      below -= nudge;
      above += nudge;
    }
    const int n = t + 3;
    const Rational d_below = frontier_measure(0, t, below, n) - frontier_measure(1, t, below, n);
    const Rational d_above = frontier_measure(0, t, above, n) - frontier_measure(1, t, above, n);
    if (!(d_below > 0 && d_above < 0)) return fail(o, "no sign flip at t=" + std::to_string(t));
  }
  o.detail = "p0(10)=1/3 exactly, F_0/F_1 tie at p=1/3 for n=13..40, sign flips for t=2..20";
  return o;
}

Outcome ballot_formula() {
  Outcome o;
  std::size_t cases = 0;
  for (int s = 0; 3 * s + 2 <= 24; ++s) {
    for (int t = 1; 3 * s + t + 1 <= 24; ++t) {
      ++cases;
      if (count_walks_ballot(s, t) != f_closed(s, t)) {
        return fail(o, "s=" + std::to_string(s) + " t=" + std::to_string(t));
      }
    }
  }
  o.detail = std::to_string(cases) + " (s,t) pairs agree";
  return o;
}

Outcome alpha_rigor() {
  Outcome o;
  const Rational lo = make_rational(1, 10), hi = make_rational(13, 20);
  const Rational tiny = make_rational(1, 1) / Rational(BigInt(1) << 64);
  for (int k = 0; k < 100; ++k) {
    const Rational p = lo + (hi - lo) * make_rational(k, 99);
    const Interval a = alpha(p);
    const Interval pi = Interval::from_rational(p, a.precision());
    const Interval residual = pi + (1 - pi) * pow(a, 3) - a;
    if (!residual.contains_zero()) return fail(o, "residual excludes 0 at p=" + to_string(p));
    if (!(a.width() < tiny)) return fail(o, "enclosure too wide at p=" + to_string(p));
    for (unsigned long c = 1; c <= 3; ++c) {
      const Rational top = pow(a, c).upper();
      const auto series = truncated_hitting_series(static_cast<int>(c), 30, p);
      for (std::size_t n = 0; n < series.size(); ++n) {
        if (n > 0 && series[n] < series[n - 1]) return fail(o, "decrease at p=" + to_string(p));
        if (!(series[n] < top)) return fail(o, "above alpha^c at p=" + to_string(p));
      }
    }
  }
  o.detail = "100 grid points: residual contains 0, width < 2^-64, truncated measures monotone below alpha^c";
  return o;
}

Outcome appendix_sweep() {
  Outcome o;
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const auto reports = run_all_checks(CheckDomain{}, 1024, kDefaultPrecision, static_cast<int>(hw));
  std::ostringstream os;
  std::size_t points = 0;
  for (const auto& r : reports) {
    points += r.points.size();
    if (r.inconclusive > 0) o = fail(o, r.id + " has inconclusive points");
    if (r.asserted && r.verdict != Verdict::Holds) o = fail(o, r.id + " does not hold");
    if (!r.asserted) os << r.id << " recorded as " << to_string(r.verdict) << "; ";
  }
  if (reports.size() != claim_ids().size()) o = fail(o, "registry incomplete");
  if (o.pass) o.detail = os.str() + std::to_string(reports.size()) + " entries, " + std::to_string(points) + " points, all asserted hold";
  return o;
}

Outcome exhaustive_t1() {
  Outcome o;
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  for (int n = 3; n <= 5; ++n) {
    SearchOptions opts;
    opts.p_list = {make_rational(1, 4), make_rational(1, 3), make_rational(1, 2), make_rational(3, 5)};
    opts.threads = static_cast<int>(hw);
    const SetFamily f0 = frontier_family(0, 1, n);
    for (const auto& r : search_max_measure(n, 1, 3, opts)) {
      if (r.max_measure != r.p) return fail(o, "max != p at n=" + std::to_string(n));
      if (r.maximizer_classes.empty()) return fail(o, "no maximizer");
      for (const auto& g : r.maximizer_classes) {
        if (!are_isomorphic(up_closure(g), f0)) return fail(o, "maximizer not isomorphic to F_0^1");
      }
    }
  }
  o.detail = "n=3..5, four p values: max = p, every maximizer is a copy of F_0^1";
  return o;
}

Outcome exploratory_t2() {
  Outcome o;
  std::ostringstream os;
  for (int n = 5; n <= 6; ++n) {
    SearchOptions opts;
    opts.p_list = {make_rational(1, 4), make_rational(1, 3)};
    for (const auto& r : search_max_measure(n, 2, 3, opts)) {
      os << "n=" << n << " p=" << to_string(r.p) << " max=" << to_string(r.max_measure)
         << (r.matches_reference ? " (= p^2)" : " (differs from p^2, flagged)") << "; ";
    }
  }
  o.detail = os.str() + "logged only";
  return o;
}

Outcome reflection_injection() {
  Outcome o;
  std::size_t total = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int n = 1; n <= 14; ++n) {
      std::set<Mask> images;
      std::vector<Mask> ddot;
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const Subset g(n, m);
        if (classify(g, t) != WalkClass::Ddot) continue;
        ddot.push_back(m);
        const Subset r = reflect_between_first_two_hits(g, t);
        if (oracle::hit_count(r.bits(), n, t + 2) == 0) return fail(o, "image misses y = 2x + t + 2");
        images.insert(r.bits());
      }
      if (images.size() != ddot.size()) return fail(o, "not injective at n=" + std::to_string(n));
      total += ddot.size();
      for (const Rational& p : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 5)}) {
        if (oracle::measure(ddot, n, p) > truncated_hitting_measure(t + 2, n, p)) return fail(o, "measure bound fails");
      }
    }
  }
  o.detail = std::to_string(total) + " DDOT walks mapped injectively into the t+2 hitters";
  return o;
}

Outcome witness_identities() {
  Outcome o;
  std::size_t cases = 0;
  for (int s = 0; s <= 2; ++s) {
    for (int t = 2; t <= 20; ++t) {
      for (int i = 1; i <= 5; ++i) {
        const int n = witness_min_ground(s, t, i);
        const WitnessWalks w = witness_walks(s, t, i, n);
        ++cases;
        if (std::popcount(w.w.bits() & w.w_prime.bits() & w.e.bits()) != t - 1) {
          return fail(o, "s=" + std::to_string(s) + " t=" + std::to_string(t) + " I=" + std::to_string(i));
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " (s,t,I) triples with |W ∩ W' ∩ E| = t-1";
  return o;
}

Outcome shifting_properties() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t intersecting_pairs = 0, saturations = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const int n = 3 + trial % 8;
    const int t = 1 + trial % 2;
    const int r = 2 + (trial / 2) % 2;
    std::vector<Mask> sets;
    switch (trial % 3) {
      case 0:
        sets = support::random_sets(rng, n, 2 + trial % 7, 0.6);
        break;
      case 1: {
        sets = support::random_sets(rng, n, 2 + trial % 7, 0.5);
        for (auto& m : sets) m |= (Mask{1} << t) - 1;
        break;
      }
      default: {
        if (n < t + 3) {
          sets = support::random_sets(rng, n, 3, 0.7);
          break;
        }
        const auto f1 = oracle::frontier(1, t, n);
        std::uniform_int_distribution<std::size_t> pick(0, f1.size() - 1);
        for (int k = 0; k < 2 + trial % 6; ++k) sets.push_back(f1[pick(rng)]);
      }
    }
    const SetFamily f(n, sets);
    const auto before = support::masks(f);
    std::uniform_int_distribution<int> el(1, n - 1);
    const int i = el(rng);
    std::uniform_int_distribution<int> el2(i + 1, n);
    const int j = el2(rng);
    const SetFamily g = shift_once(f, ShiftStep{i, j});
    const auto after = support::masks(g);
    if (oracle::size_profile(before, n) != oracle::size_profile(after, n)) return fail(o, "size profile changed");
    if (after != oracle::shift(before, i, j)) return fail(o, "shift differs from the direct definition");
    if (oracle::r_wise_t_intersecting(before, r, t)) {
      ++intersecting_pairs;
      if (!oracle::r_wise_t_intersecting(after, r, t)) return fail(o, "intersecting property lost");
    }
    if (trial % 50 == 0) {
      ++saturations;
      const SetFamily s = shift_saturate(f);
      if (!oracle::shifted(support::masks(s), n)) return fail(o, "saturation not shifted");
      if (oracle::size_profile(support::masks(s), n) != oracle::size_profile(before, n)) return fail(o, "saturation changed profile");
      if (oracle::r_wise_t_intersecting(before, r, t) && !oracle::r_wise_t_intersecting(support::masks(s), r, t)) {
        return fail(o, "saturation lost intersecting property");
      }
    }
  }
  o.detail = "100000 pairs (" + std::to_string(intersecting_pairs) + " intersecting), " + std::to_string(saturations) +
             " saturations shifted";
  return o;
}

/// Shifted up-sets with [t] ∉ G, 3-wise t-intersecting, built from subsets of
/// F_0^t and from W_I with sets of [t+I+4] missing one element of [t].
std::vector<ShiftedUpset> claim9_instances(int t, std::mt19937_64& rng, int want, int& rejected) {
  std::vector<ShiftedUpset> out;
  std::bernoulli_distribution coin(0.5);
  while (static_cast<int>(out.size()) < want) {
    std::uniform_int_distribution<int> pick_n(t + 3, t + 20);
    const int n = pick_n(rng);
    std::vector<Subset> gens;
    std::uniform_int_distribution<int> tail(t + 1, n);
    const int in_frontier = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < in_frontier; ++k) {
      Subset g = Subset::prefix(n, t).with(tail(rng));
      if (coin(rng)) g = g.with(tail(rng));
      gens.push_back(g);
    }
    ShiftedUpset g(n, gens);
    if (!g.is_r_wise_t_intersecting(3, t) || g.contains(Subset::prefix(n, t))) {
      ++rejected;
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

Outcome stability_pipeline() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  int rejected = 0;
  for (int t = 15; t <= 30; ++t) {
    const StabilityConstants k = compute_constants(t, p0_bracket_below(t));
    if (!(k.eps1.certainly_positive() && k.eps0.certainly_positive() && k.delta1.certainly_positive() &&
          k.delta1.certainly_less(Interval::from_int(1)) && k.delta2.certainly_positive() &&
          k.delta2.certainly_less(Interval::from_int(1)) && std::isfinite(k.c.upper_double()))) {
      return fail(o, "constants not separated at t=" + std::to_string(t));
    }
    const int per_t = t <= 22 ? 63 : 62;
    for (const auto& g : claim9_instances(t, rng, per_t, rejected)) {
      const Claim9Check c = claim9_chain(g, k);
      ++checked;
      if (c.a != 0) return fail(o, "instance leaves F_0^t at t=" + std::to_string(t));
      if (!c.holds) {
        std::ostringstream os;
        os << "chain fails at t=" << t << " n=" << g.ground_size() << " a=" << c.a.get_d() << " b=" << c.b.get_d();
        return fail(o, os.str());
      }
    }
  }
  o.detail = "constants separated for t=15..30; chain holds on " + std::to_string(checked) +
             " shifted subfamilies of F_0^t (" + std::to_string(rejected) + " candidates rejected)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "exact-measure identity", 10, exact_measure_identity},
      {2, "threshold algebra", 5, threshold_algebra},
      {3, "ballot formula", 60, ballot_formula},
      {4, "alpha rigor", 60, alpha_rigor},
      {5, "appendix sweep", 600, appendix_sweep},
      {6, "exhaustive extremal t=1", 300, exhaustive_t1},
      {7, "exploratory extremal t=2", 7200, exploratory_t2},
      {8, "reflection injection", 60, reflection_injection},
      {9, "witness identities", 1, witness_identities},
      {10, "shifting properties", 120, shifting_properties},
      {11, "stability pipeline", 120, stability_pipeline},
  };
  std::set<int> chosen;
  for (int k = 1; k < argc; ++k) chosen.insert(std::atoi(argv[k]));

  int failures = 0;
  for (const auto& c : all) {
    if (!chosen.empty() && !chosen.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.budget_seconds) {
      out.pass = false;
      out.detail += " (over the time budget)";
    }
    failures += !out.pass;
    std::printf("%s criterion %d: %s [%.2fs] %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
