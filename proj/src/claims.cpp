#include "triwise/claims.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "triwise/error.hpp"
#include "triwise/family.hpp"
#include "triwise/thresholds.hpp"
#include "triwise/walk.hpp"

namespace triwise {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Margin = std::function<Interval(mpfr_prec_t)>;
using PFunction = std::function<Interval(const Interval&)>;

struct PointSpec {
  std::string label;
  Margin margin;
};

struct Range {
  int lo;
  int hi;
  int grid;
};

struct ClaimDef {
  std::string id;
  std::string statement;
  int t_min;  // 0 when the claim has no t-sweep
  bool asserted;
  std::function<std::vector<PointSpec>(const Range&)> build;
};

Interval rat(const Rational& x, mpfr_prec_t prec) { return Interval::from_rational(x, prec); }
Interval exact_check(bool ok, mpfr_prec_t prec) { return Interval::from_int(ok ? 1 : -1, prec); }

Interval scale(const Interval& top, int k, int grid) { return top * rat(make_rational(k, grid), top.precision()); }

/// min over the grid top*k/grid, k = 1..grid, of f.
Interval grid_min(const Interval& top, int grid, const PFunction& f) {
  Interval best = f(top);
  for (int k = 1; k < grid; ++k) best = min(best, f(scale(top, k, grid)));
  return best;
}

/// min over consecutive grid points of f(p_{k+1}) - f(p_k), negated when
/// `increasing` is false.
Interval grid_monotone(const Interval& top, int grid, bool increasing, const PFunction& f) {
  Interval prev = f(scale(top, 1, grid));
  std::optional<Interval> best;
  for (int k = 2; k <= grid; ++k) {
    Interval cur = f(k == grid ? top : scale(top, k, grid));
    Interval diff = increasing ? cur - prev : prev - cur;
    best = best ? min(*best, diff) : diff;
    prev = std::move(cur);
  }
  return *best;
}

Interval alpha_i(const Interval& p) { return alpha_closed_form(p); }

/// α^{k}/p^{t} written as p^{k-t} (α/p)^{k} to keep the magnitudes moderate.
Interval alpha_over_pt(const Interval& p, int k, int t) {
  const Interval r = alpha_i(p) / p;
  const Interval head = pow(r, static_cast<unsigned long>(k));
  return k >= t ? head * pow(p, static_cast<unsigned long>(k - t)) : head / pow(p, static_cast<unsigned long>(t - k));
}

Interval binom_i(int n, int k, mpfr_prec_t prec) {
  if (k < 0 || k > n) return Interval::from_int(0, prec);
  return rat(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))), prec);
}

Interval min_of(std::vector<Interval> xs) {
  Interval best = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) best = min(best, xs[i]);
  return best;
}

template <typename F>
std::vector<PointSpec> sweep(const Range& r, const std::string& prefix, F per_t) {
  std::vector<PointSpec> out;
  for (int t = r.lo; t <= r.hi; ++t) {
    out.push_back({prefix + "t=" + std::to_string(t), [t, per_t](mpfr_prec_t prec) { return per_t(t, prec); }});
  }
  return out;
}

/// Σ_{i=0}^{2} C(m,i) p^{6-i} q^i, the s=2 frontier mass divided by p^t,
/// with m = t+2 or t+6.
Interval s2_mass_over_pt(const Interval& p, int m) {
  const mpfr_prec_t prec = p.precision();
  const Interval q = 1 - p;
  Interval total = Interval::from_int(0, prec);
  for (int i = 0; i <= 2; ++i) {
    total = total + binom_i(m, i, prec) * pow(p, static_cast<unsigned long>(6 - i)) * pow(q, static_cast<unsigned long>(i));
  }
  return total;
}

Rational g_closed(const Rational& p, const Rational& t) {
  const Rational q = 1 - p;
  return make_rational(1, 2) * pow(p, 4) * (q * q * t * t - (p - 3) * q * t + 2);
}

Rational g_tilde(const Rational& p) {
  return make_rational(1, 2) * (p * p * p - p * p + p + 1) * (2 * p * p * p - p * p - p + 1);
}

Interval g_tilde_i(const Interval& p) {
  return (pow(p, 3) - pow(p, 2) + p + 1) * (2 * pow(p, 3) - pow(p, 2) - p + 1) / 2;
}

Rational h5_tilde(const Rational& p) {
  return make_rational(1, 2) * (5 * pow(p, 5) - 4 * pow(p, 4) - 3 * pow(p, 3) + 3 * p * p + 2 * p + 1);
}

Interval h5_tilde_i(const Interval& p) {
  return (5 * pow(p, 5) - 4 * pow(p, 4) - 3 * pow(p, 3) + 3 * pow(p, 2) + 2 * p + 1) / 2;
}

Rational h6_tilde(const Rational& p) {
  const Rational q = 1 - p;
  return make_rational(1, 6) * pow(q, 3) * (1 + p * q) * (1 + p + 6 * p * p) * (1 + p + 7 * p * p);
}

Interval h6_tilde_i(const Interval& p) {
  const Interval q = 1 - p;
  const Interval p2 = pow(p, 2);
  return pow(q, 3) * (1 + p * q) * (1 + p + 6 * p2) * (1 + p + 7 * p2) / 6;
}

/// Rational sample points for symbolic identities.
std::vector<Rational> rational_samples() {
  std::vector<Rational> out;
  for (int den : {3, 7, 10, 13, 64}) {
    for (int num = 1; num < den; num += std::max(1, den / 6)) out.emplace_back(num, den);
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

// --- registry entries ------------------------------------------------------

std::vector<PointSpec> build_a1(const Range& r) {
  std::vector<PointSpec> out;
  const int grid = r.grid;
  // Open interval (0, 0.56): p_k = 0.56 k/(grid+1).
  out.push_back({"alpha<p+p^3 on (0,0.56)", [grid](mpfr_prec_t prec) {
                   std::vector<Interval> ms;
                   for (int k = 1; k <= grid; ++k) {
                     const Rational p = make_rational(14, 25) * make_rational(k, grid + 1);
                     const Interval pi = rat(p, prec);
                     ms.push_back((pi + pow(pi, 3)) - alpha_i(pi));
                   }
                   return min_of(std::move(ms));
                 }});
  out.push_back({"4p^4(1-2p+p^2-p^3)>0 on (0,0.56)", [grid](mpfr_prec_t prec) {
                   bool ok = true;
                   for (int k = 1; k <= grid; ++k) {
                     const Rational p = make_rational(14, 25) * make_rational(k, grid + 1);
                     const Rational lhs = (1 + 3 * p) / (1 - p);
                     const Rational rhs = (2 * (p + p * p * p) + 1) * (2 * (p + p * p * p) + 1);
                     const Rational poly = 4 * pow(p, 4) * (1 - 2 * p + p * p - p * p * p);
                     ok = ok && poly > 0 && (rhs - lhs == poly / (1 - p));
                   }
                   return exact_check(ok, prec);
                 }});
  return out;
}

std::vector<PointSpec> build_a15(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [](int t, mpfr_prec_t prec) {
    const Interval p = p0(t, prec);
    const Interval p2 = pow(p, 2);
    // log(1+p0^2) < p0^2; the A1 bound at p0; β(t) > β(t+1).
    const Interval m1 = p2 - log(1 + p2);
    const Interval m2 = p * pow(1 + p2, static_cast<unsigned long>(t + 1)) - p * pow(alpha_i(p) / p, static_cast<unsigned long>(t + 1));
    const Interval m3 = beta(t, prec) - beta(t + 1, prec);
    const Interval m4 = rat(make_rational(14, 25), prec) - p;
    return min_of({m1, m2, m3, m4});
  });
  out.push_back({"alpha/p increasing on (0,p0(3)]", [grid](mpfr_prec_t prec) {
                   return grid_monotone(p0(3, prec), grid, true, [](const Interval& p) { return alpha_i(p) / p; });
                 }});
  return out;
}

std::vector<PointSpec> build_a2(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    return grid_min(p0(t, prec), grid, [t](const Interval& p) { return 1 - alpha_over_pt(p, t + 1, t); });
  });
  out.push_back({"beta(13)<0", [](mpfr_prec_t prec) { return -beta(13, prec); }});
  return out;
}

std::vector<PointSpec> build_a25(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    const Interval k = rat(make_rational(129, 100), prec);
    return grid_min(p0(t, prec), grid, [t, &k](const Interval& p) { return 1 - k * alpha_over_pt(p, t + 1, t); });
  });
  out.push_back({"beta(20)<-log(1.29)", [](mpfr_prec_t prec) {
                   return -log(rat(make_rational(129, 100), prec)) - beta(20, prec);
                 }});
  return out;
}

std::vector<PointSpec> build_a3(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    return grid_min(p0(t, prec), grid,
                    [t](const Interval& p) { return 1 - alpha_over_pt(p, t + 2, t) - alpha_over_pt(p, t + 1, t); });
  });
  out.push_back({"p0(20)<0.24", [](mpfr_prec_t prec) { return rat(make_rational(6, 25), prec) - p0(20, prec); }});
  out.push_back({"1+p0(20)+p0(20)^3<1.29", [](mpfr_prec_t prec) {
                   const Interval p = p0(20, prec);
                   return rat(make_rational(129, 100), prec) - (1 + p + pow(p, 3));
                 }});
  return out;
}

std::vector<PointSpec> build_a4(const Range& r, bool wide) {
  const int grid = r.grid;
  const int extra = wide ? 6 : 2;
  auto out = sweep(r, "", [grid, extra](int t, mpfr_prec_t prec) {
    return grid_min(p0(t, prec), grid, [t, extra](const Interval& p) {
      return 1 - s2_mass_over_pt(p, t + extra) - alpha_over_pt(p, t + 1, t);
    });
  });
  if (wide) return out;
  out.push_back({"beta(43)<-log(2)", [](mpfr_prec_t prec) { return -log(Interval::from_int(2, prec)) - beta(43, prec); }});
  out.push_back({"p0(43)<0.161", [](mpfr_prec_t prec) { return rat(make_rational(161, 1000), prec) - p0(43, prec); }});
  out.push_back({"g~(p)<1/2 on (0,0.8]", [grid](mpfr_prec_t prec) {
                   const Interval half = rat(make_rational(1, 2), prec);
                   return grid_min(rat(make_rational(4, 5), prec), grid, [&half](const Interval& p) { return half - g_tilde_i(p); });
                 }});
  out.push_back({"g(p,t) closed form and g(p,t0(p))=g~(p)", [](mpfr_prec_t prec) {
                   bool ok = true;
                   for (const Rational& p : rational_samples()) {
                     const Rational q = 1 - p;
                     for (int t : {1, 2, 5, 43, 100, 500}) {
                       Rational direct = 0;
                       for (int i = 0; i <= 2; ++i) {
                         direct += Rational(binomial(static_cast<unsigned long>(t + 2), static_cast<unsigned long>(i))) *
                                   pow(p, static_cast<unsigned long>(6 - i)) * pow(q, static_cast<unsigned long>(i));
                       }
                       ok = ok && direct == g_closed(p, Rational(t));
                       // ∂g/∂t = ½ q p^4 (2qt + q + 2), checked as a finite difference of the quadratic in t.
                       const Rational dt = g_closed(p, Rational(t + 1)) - g_closed(p, Rational(t));
                       const Rational mid_slope = make_rational(1, 2) * q * pow(p, 4) * (2 * q * (Rational(t) + make_rational(1, 2)) + q + 2);
                       ok = ok && dt == mid_slope;
                     }
                     ok = ok && g_closed(p, t0(p)) == g_tilde(p);
                   }
                   return exact_check(ok, prec);
                 }});
  return out;
}

std::vector<PointSpec> build_a5(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    const Interval coef = rat(make_rational(t * t + 9 * t + 14, 2), prec);
    return grid_min(p0(t, prec), grid, [t, &coef](const Interval& p) {
      return 1 - alpha_over_pt(p, t + 2, t) - coef * pow(p, 4) * pow(1 - p, 2);
    });
  });
  out.push_back({"C(t+3,2)+2(t+2)=(t^2+9t+14)/2", [r](mpfr_prec_t prec) {
                   bool ok = true;
                   for (int t = std::max(1, r.lo); t <= r.hi; ++t) {
                     const BigInt lhs = binomial(static_cast<unsigned long>(t + 3), 2) + 2 * (t + 2);
                     ok = ok && 2 * lhs == BigInt(t * t + 9 * t + 14);
                   }
                   return exact_check(ok, prec);
                 }});
  out.push_back({"h~(p)<1 on (0,p0(9)]", [grid](mpfr_prec_t prec) {
                   return grid_min(p0(9, prec), grid, [](const Interval& p) { return 1 - h5_tilde_i(p); });
                 }});
  out.push_back({"h(p,t0(p))=h~(p)", [](mpfr_prec_t prec) {
                   bool ok = true;
                   for (const Rational& p : rational_samples()) {
                     const Rational t = t0(p);
                     const Rational q = 1 - p;
                     const Rational h = p + pow(p, 3) + make_rational(1, 2) * (t * t + 9 * t + 14) * pow(p, 4) * q * q;
                     ok = ok && h == h5_tilde(p);
                   }
                   return exact_check(ok, prec);
                 }});
  return out;
}

std::vector<PointSpec> build_a6(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    const Interval coef = rat(make_rational((t + 1) * (t + 8) * (t + 9), 6), prec);
    return grid_min(p0(t, prec), grid, [t, &coef](const Interval& p) {
      return 1 - alpha_over_pt(p, t + 1, t) - coef * pow(p, 6) * pow(1 - p, 3);
    });
  });
  out.push_back({"1/1.29<0.7752", [](mpfr_prec_t prec) {
                   return exact_check(make_rational(100, 129) < make_rational(7752, 10000), prec);
                 }});
  out.push_back({"h~(p0(20))<0.2244", [](mpfr_prec_t prec) {
                   return rat(make_rational(2244, 10000), prec) - h6_tilde_i(p0(20, prec));
                 }});
  out.push_back({"h~ increasing on (0,p0(20)]", [grid](mpfr_prec_t prec) {
                   return grid_monotone(p0(20, prec), grid, true, h6_tilde_i);
                 }});
  out.push_back({"0.7752+0.2244<1", [](mpfr_prec_t prec) {
                   return exact_check(make_rational(7752, 10000) + make_rational(2244, 10000) < 1, prec);
                 }});
  out.push_back({"h(p,t0(p))=h~(p)", [](mpfr_prec_t prec) {
                   bool ok = true;
                   for (const Rational& p : rational_samples()) {
                     const Rational t = t0(p);
                     const Rational h = make_rational(1, 6) * (t + 1) * (t + 8) * (t + 9) * pow(p, 6) * pow(1 - p, 3);
                     ok = ok && h == h6_tilde(p);
                   }
                   return exact_check(ok, prec);
                 }});
  return out;
}

Interval s0_h(const Interval& p) {
  const Interval a = alpha_i(p);
  return a * pow((1 - p) / a, 2) * (1 - pow(a, 2));
}

std::vector<PointSpec> build_s0(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "I=1 ", [grid](int t, mpfr_prec_t prec) {
    return grid_min(p0(t, prec), grid, [t](const Interval& p) {
      const Interval a = alpha_i(p);
      return pow(p / a, static_cast<unsigned long>(t)) * pow((1 - p) / a, 2) * (1 - pow(a, 2)) - 1;
    });
  });
  out.push_back({"h(p)>1 on (0,1/3]", [grid](mpfr_prec_t prec) {
                   return grid_min(rat(make_rational(1, 3), prec), grid, [](const Interval& p) { return s0_h(p) - 1; });
                 }});
  out.push_back({"h decreasing on (0,1/3]", [grid](mpfr_prec_t prec) {
                   return grid_monotone(rat(make_rational(1, 3), prec), grid, false, s0_h);
                 }});
  // The open range (0, 0.45) is sampled at 0.45 k/(grid+1).
  out.push_back({"alpha/q<1 on (0,0.45)", [grid](mpfr_prec_t prec) {
                   const Interval top = rat(make_rational(9, 20) * make_rational(grid, grid + 1), prec);
                   return grid_min(top, grid, [](const Interval& p) { return 1 - alpha_i(p) / (1 - p); });
                 }});
  out.push_back({"alpha/q increasing on (0,0.45)", [grid](mpfr_prec_t prec) {
                   const Interval top = rat(make_rational(9, 20) * make_rational(grid, grid + 1), prec);
                   return grid_monotone(top, grid, true, [](const Interval& p) { return alpha_i(p) / (1 - p); });
                 }});
  return out;
}

Interval s1_g(const Interval& p, int t) {
  return t * pow(1 - pow(p, 2), static_cast<unsigned long>(t + 2)) * (1 - 3 * p + 2 * pow(p, 2));
}

std::vector<PointSpec> build_s1(const Range& r) {
  const int grid = r.grid;
  auto out = sweep(r, "", [grid](int t, mpfr_prec_t prec) {
    const Interval top = p0(t, prec);
    Interval m = grid_min(top, grid, [t](const Interval& p) {
      const Interval a = alpha_i(p);
      return t * pow(p / a, static_cast<unsigned long>(t + 2)) * pow(1 - p, 3) * (1 - pow(a, 2)) - 1;
    });
    if (t >= 14) {
      // The g route: g(p0(t)) > 1, g decreasing on (0, p0(t)], and g(p0) increasing in t.
      m = min(m, s1_g(top, t) - 1);
      m = min(m, grid_monotone(top, grid, false, [t](const Interval& p) { return s1_g(p, t); }));
      m = min(m, s1_g(p0(t + 1, prec), t + 1) - s1_g(top, t));
    }
    return m;
  });
  out.push_back({"p0(14)<1/3", [](mpfr_prec_t prec) { return rat(make_rational(1, 3), prec) - p0(14, prec); }});
  out.push_back({"p/alpha>1-p^2 on (0,p0(14)]", [grid](mpfr_prec_t prec) {
                   return grid_min(p0(14, prec), grid, [](const Interval& p) { return p / alpha_i(p) - (1 - pow(p, 2)); });
                 }});
  out.push_back({"q^3(1-alpha^2)>1-3p+2p^2 on (0,p0(14)]", [grid](mpfr_prec_t prec) {
                   return grid_min(p0(14, prec), grid, [](const Interval& p) {
                     return pow(1 - p, 3) * (1 - pow(alpha_i(p), 2)) - (1 - 3 * p + 2 * pow(p, 2));
                   });
                 }});
  return out;
}

std::vector<PointSpec> build_mono_g(const Range& r) {
  auto out = sweep(r, "", [](int t, mpfr_prec_t prec) {
    const Interval p = p0(t, prec);
    const Interval p1 = p0(t + 1, prec);
    const Interval h = (t + 12) * pow(p, 2) * (1 - p);
    const Interval h_next = (t + 13) * pow(p1, 2) * (1 - p1);
    const Interval m1 = rat(make_rational(16, 9), prec) - h;
    const Interval m2 = h - h_next;
    // f(s,t)/f(s+1,t) > 16/(9(t+12)) for s >= 1, via the closed ratio.
    bool ok = true;
    for (int s = 1; s <= 200 && ok; ++s) {
      const BigInt num = BigInt(s + 1) * (2 * s + t + 3) * (2 * s + t + 2);
      const BigInt den = BigInt(3 * s + t + 3) * (3 * s + t + 2) * (3 * s + t + 1);
      ok = 9 * (t + 12) * num > 16 * den;
      if (s <= 30) {
        const Rational ratio = make_rational(f_closed(s, t), f_closed(s + 1, t));
        ok = ok && ratio == make_rational(num, den);
      }
    }
    const BigInt f3 = f_closed(3, t);
    ok = ok && 6 * f3 == BigInt(t + 1) * (t + 8) * (t + 9);
    return min_of({m1, m2, exact_check(ok, prec)});
  });
  return out;
}

std::vector<PointSpec> build_thresh(const Range& r) {
  auto out = sweep(r, "", [](int t, mpfr_prec_t prec) {
    bool ok = true;
    if (auto exact = p0_exact(t)) {
      ok = frontier_gap(t, *exact) == 0;
      const Rational eps(BigInt(1), BigInt(1) << 96);
      ok = ok && frontier_gap(t, *exact - eps) > 0 && frontier_gap(t, *exact + eps) < 0;
    } else {
      const Rational lo = p0_bracket_below(t);
      const Rational hi = p0_bracket_above(t);
      ok = frontier_gap(t, lo) > 0 && frontier_gap(t, hi) < 0;
    }
    if (t <= 40) {
      // The closed gap against the frontier measures themselves.
      for (const Rational& p : {make_rational(1, 4), make_rational(1, 3), p0_bracket_below(t)}) {
        const int n = t + 3;
        ok = ok && frontier_measure(0, t, p, n) - frontier_measure(1, t, p, n) == frontier_gap(t, p);
      }
    }
    return exact_check(ok, prec);
  });
  out.push_back({"mu(F0)=mu(F1) at t=10, p=1/3", [](mpfr_prec_t prec) {
                   bool ok = true;
                   for (int n = 13; n <= 16; ++n) {
                     ok = ok && frontier_measure(0, 10, make_rational(1, 3), n) == frontier_measure(1, 10, make_rational(1, 3), n);
                   }
                   return exact_check(ok, prec);
                 }});
  return out;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = {
      {"A1", "alpha < p + p^3 for 0 < p < 0.56", 0, true, build_a1},
      {"A1.5", "premises of the beta route: log(1+p0^2) < p0^2, p0(a/p0)^(t+1) < p0(1+p0^2)^(t+1), beta decreasing, alpha/p increasing",
       3, true, build_a15},
      {"A2", "alpha^(t+1) < p^t for 0 < p <= p0(t), t >= 9; beta(13) < 0", 9, true, build_a2},
      {"A2.5", "1.29 alpha^(t+1) < p^t for 0 < p <= p0(t), t >= 20; beta(20) < -log 1.29", 20, true, build_a25},
      {"A3", "alpha^(t+2) + alpha^(t+1) < p^t for 0 < p <= p0(t), t >= 15", 15, true, build_a3},
      {"A4", "sum_{i<=2} C(t+2,i) p^(t+6-i) q^i + alpha^(t+1) < p^t for 0 < p <= p0(t), t >= 43", 43, true,
       [](const Range& r) { return build_a4(r, false); }},
      {"A4-t6", "sum_{i<=2} C(t+6,i) p^(t+6-i) q^i + alpha^(t+1) < p^t for 0 < p <= p0(t), t >= 43 (reported only)", 43,
       false, [](const Range& r) { return build_a4(r, true); }},
      {"A5", "alpha^(t+2) + (C(t+3,2) + 2(t+2)) p^(t+4) q^2 < p^t for 0 < p <= p0(t), t >= 8", 8, true, build_a5},
      {"A6", "alpha^(t+1) + (t+1)(t+8)(t+9)/6 p^(t+6) q^3 < p^t for 0 < p <= p0(t), t >= 15", 15, true, build_a6},
      {"S0", "(p/alpha)^t (q/alpha)^2 (1-alpha^2) > 1 for p <= p0(t), t >= 10; h(p) > 1 on (0,1/3]; alpha/q < 1 and increasing on (0,0.45)",
       10, true, build_s0},
      {"S1", "t (p/alpha)^(t+2) q^3 (1-alpha^2) > 1 for p <= p0(t), t >= 11, with the g(p) route for t >= 14", 11, true,
       build_s1},
      {"MONO-G", "16/9 > (t+12) p0^2 q0 for t >= 8 and the f(s,t) ratio bound", 8, true, build_mono_g},
      {"THRESH", "mu_p(F_0^t) >= mu_p(F_1^t) iff p <= p0(t)", 1, true, build_thresh},
  };
  return defs;
}

ClaimPoint evaluate(const PointSpec& spec, mpfr_prec_t cap, mpfr_prec_t start) {
  ClaimPoint point{spec.label, Verdict::Inconclusive, Interval(start), start};
  for (mpfr_prec_t prec = start;; prec *= 2) {
    point.precision = prec;
    try {
      point.margin = spec.margin(prec);
    } catch (const DomainError&) {
      // An enclosure touched a singular point; more precision may help.
      if (prec * 2 > cap) return point;
      continue;
    }
    if (point.margin.certainly_positive()) {
      point.verdict = Verdict::Holds;
      return point;
    }
    if (point.margin.certainly_negative()) {
      point.verdict = Verdict::Fails;
      return point;
    }
    if (prec * 2 > cap) return point;
  }
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.id);
  return out;
}

bool is_claim_id(std::string_view id) {
  const auto& defs = registry();
  return std::any_of(defs.begin(), defs.end(), [&](const ClaimDef& d) { return d.id == id; });
}

ClaimReport run_check(std::string_view id, const CheckDomain& domain, mpfr_prec_t precision_cap,
                      mpfr_prec_t start_precision) {
  const auto& defs = registry();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const ClaimDef& d) { return d.id == id; });
  if (it == defs.end()) throw DomainError("unknown claim id: " + std::string(id));
  if (domain.grid_points < 2) throw DomainError("grid needs at least 2 points");
  if (start_precision < 2 || start_precision > precision_cap) throw DomainError("precision must not exceed the cap");

  Range range{std::max(it->t_min, domain.t_min.value_or(it->t_min)), domain.t_max.value_or(kDefaultSweepEnd),
              domain.grid_points};
  if (it->t_min == 0) range = {0, -1, domain.grid_points};

  ClaimReport report;
  report.id = it->id;
  report.statement = it->statement;
  report.asserted = it->asserted;
  report.domain = it->t_min == 0 ? "p-grid of " + std::to_string(range.grid) + " points"
                                 : "t in [" + std::to_string(range.lo) + "," + std::to_string(range.hi) +
                                       "], p-grid p0(t)*k/" + std::to_string(range.grid);
  for (const auto& spec : it->build(range)) {
    ClaimPoint point = evaluate(spec, precision_cap, start_precision);
    report.max_precision = std::max(report.max_precision, point.precision);
    switch (point.verdict) {
      case Verdict::Holds: ++report.holds; break;
      case Verdict::Fails: ++report.fails; break;
      case Verdict::Inconclusive: ++report.inconclusive; break;
    }
    report.points.push_back(std::move(point));
  }
  report.verdict = report.fails > 0           ? Verdict::Fails
                   : report.inconclusive > 0  ? Verdict::Inconclusive
                                              : Verdict::Holds;
  return report;
}

std::vector<ClaimReport> run_all_checks(const CheckDomain& domain, mpfr_prec_t precision_cap,
                                        mpfr_prec_t start_precision, int threads) {
  const auto ids = claim_ids();
  std::vector<ClaimReport> out(ids.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        out[i] = run_check(ids[i], domain, precision_cap, start_precision);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::clamp(threads, 1, static_cast<int>(ids.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

Verdict overall_verdict(const std::vector<ClaimReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (!r.asserted) continue;
    if (r.verdict == Verdict::Fails) return Verdict::Fails;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Holds;
}

}  // namespace triwise
