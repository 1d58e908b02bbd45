#include "triwise/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "triwise/error.hpp"
#include "triwise/shift.hpp"
#include "triwise/walk.hpp"

namespace triwise {

// --- antichains via monotone truth tables -----------------------------------

namespace {

constexpr std::array<std::uint64_t, 6> kElementMasks = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

std::uint64_t table_mask(int n) { return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1U << n)) - 1); }

std::vector<std::uint64_t> upset_tables(int n) {
  std::vector<std::uint64_t> cur{0, 1};
  for (int m = 1; m <= n; ++m) {
    const unsigned half = 1U << (m - 1);
    std::vector<std::uint64_t> next;
    for (auto f0 : cur) {
      for (auto f1 : cur) {
        if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << half));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

void check_antichain_ground(int n) {
  if (n < 0 || n > kMaxAntichainGround) {
    throw CapabilityError("antichain enumeration supports 0 <= n <= " + std::to_string(kMaxAntichainGround));
  }
}

}  // namespace

void for_each_upset_table(int n, const std::function<void(std::uint64_t)>& visit) {
  check_antichain_ground(n);
  if (n < 6) {
    for (auto f : upset_tables(n)) visit(f);
    return;
  }
  // The last doubling step is streamed rather than stored.
  const auto half = upset_tables(5);
  for (auto f0 : half) {
    for (auto f1 : half) {
      if ((f0 & ~f1) == 0) visit(f0 | (f1 << 32U));
    }
  }
}

std::uint64_t count_antichains(int n) {
  std::uint64_t count = 0;
  for_each_upset_table(n, [&](std::uint64_t) { ++count; });
  return count;
}

std::uint64_t minimal_elements_table(int n, std::uint64_t table) {
  check_antichain_ground(n);
  table &= table_mask(n);
  std::uint64_t has_lower = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t with_i = kElementMasks[static_cast<std::size_t>(i)];
    has_lower |= ((table & ~with_i) << (1U << i)) & with_i;
  }
  return table & ~has_lower & table_mask(n);
}

void enumerate_antichains(int n, const std::function<void(const SetFamily&)>& visit) {
  for_each_upset_table(n, [&](std::uint64_t table) {
    std::vector<std::uint64_t> gens;
    for (std::uint64_t m = minimal_elements_table(n, table); m != 0; m &= m - 1) {
      gens.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
    }
    visit(SetFamily(n, gens));
  });
}

// --- generator DFS -------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

struct Bits {
  std::array<std::uint64_t, 4> w{};
  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63U); }
  [[nodiscard]] bool test(unsigned i) const { return (w[i >> 6] >> (i & 63U)) & 1U; }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < 4; ++k) w[k] |= o.w[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  [[nodiscard]] int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < 4; ++k) c += std::popcount(w[k] & o.w[k]);
    return c;
  }
};

using Prefix = std::array<std::int8_t, 9>;

struct Node {
  std::vector<std::uint16_t> gens;
  Bits upset;
  Prefix mins;
};

/// Antichain DFS over either the inclusion order or the ⤳ order on 2^[n].
/// Candidates are visited along a linear extension, so choosing a candidate
/// only ever removes its up-set and everything before it.
class GeneratorSearch {
 public:
  GeneratorSearch(int n, int t, int r, bool shifted) : n_(n), t_(t), r_(r), shifted_(shifted) {
    const unsigned total = 1U << n;
    up_.resize(total);
    prefix_.resize(total);
    for (unsigned x = 0; x < total; ++x) {
      for (int i = 0; i <= n; ++i) {
        prefix_[x][static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(std::popcount(x & static_cast<unsigned>((1U << i) - 1)));
      }
    }
    for (unsigned g = 0; g < total; ++g) {
      for (unsigned h = 0; h < total; ++h) {
        const bool above = shifted ? dominates(g, h) : (g & ~h) == 0;
        if (above) up_[g].set(h);
      }
      layer_[static_cast<std::size_t>(std::popcount(g))].set(g);
    }
    std::vector<unsigned> all(total);
    for (unsigned x = 0; x < total; ++x) all[x] = x;
    // Inclusion: (popcount, value). ⤳: popcount ascending, value descending,
    // since g ⤳ h with |g| = |h| and g != h forces g > h as a bitmask.
    std::sort(all.begin(), all.end(), [shifted](unsigned a, unsigned b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      return shifted ? a > b : a < b;
    });
    Prefix full{};
    full.fill(127);
    for (unsigned x : all) {
      if (admissible_alone(x, full)) roots_.push_back(static_cast<std::uint16_t>(x));
    }
  }

  [[nodiscard]] const std::vector<std::uint16_t>& roots() const { return roots_; }
  [[nodiscard]] const Bits& up(unsigned x) const { return up_[x]; }
  [[nodiscard]] const Bits& layer(int k) const { return layer_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] int n() const { return n_; }

  /// Extends `node` by roots_[…] candidate `c`; fills the child's candidate
  /// list from `cands` entries after position `pos`.
  void child(const Node& node, const std::vector<std::uint16_t>& cands, std::size_t pos, Node& out,
             std::vector<std::uint16_t>& out_cands) const {
    const unsigned c = cands[pos];
    out.gens = node.gens;
    out.gens.push_back(static_cast<std::uint16_t>(c));
    out.upset = node.upset | up_[c];
    for (int i = 0; i <= n_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      out.mins[k] = std::min(node.mins[k], prefix_[c][k]);
    }
    out_cands.clear();
    for (std::size_t j = pos + 1; j < cands.size(); ++j) {
      const unsigned h = cands[j];
      if (up_[c].test(h)) continue;
      if (compatible(node.gens, c, h, out.mins)) out_cands.push_back(static_cast<std::uint16_t>(h));
    }
  }

 private:
  bool dominates(unsigned g, unsigned h) const {
    if (std::popcount(g) > std::popcount(h)) return false;
    for (int i = 1; i <= n_; ++i) {
      if (std::popcount(h & ((1U << i) - 1)) < std::popcount(g & ((1U << i) - 1))) return false;
    }
    return true;
  }

  bool prefix_ok(const Prefix& mins, unsigned h) const {
    for (int i = 0; i <= n_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const int m = std::min<int>(mins[k], prefix_[h][k]);
      if (r_ * m >= (r_ - 1) * i + t_) return true;
    }
    return false;
  }

  bool admissible_alone(unsigned x, const Prefix& full) const {
    if (shifted_) return prefix_ok(full, x);
    return std::popcount(x) >= t_;
  }

  bool tuples_ok(unsigned mask, const std::vector<std::uint16_t>& gens, std::size_t start, int room) const {
    if (std::popcount(mask) < t_) return false;
    if (room == 0) return true;
    for (std::size_t i = start; i < gens.size(); ++i) {
      if (!tuples_ok(mask & gens[i], gens, i + 1, room - 1)) return false;
    }
    return true;
  }

  bool compatible(const std::vector<std::uint16_t>& earlier, unsigned c, unsigned h, const Prefix& mins) const {
    if (shifted_) return prefix_ok(mins, h);
    return tuples_ok(c & h, earlier, 0, r_ - 2);
  }

  int n_, t_, r_;
  bool shifted_;
  std::vector<Bits> up_;
  std::vector<Prefix> prefix_;
  std::array<Bits, 9> layer_{};
  std::vector<std::uint16_t> roots_;
};

Node root_node() {
  Node node;
  node.mins.fill(127);
  return node;
}

struct Weights {
  std::array<u128, 9> w{};
  Rational denominator;
};

Weights make_weights(int n, const Rational& p) {
  const BigInt a = p.get_num();
  const BigInt b = p.get_den();
  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= BigInt(1) << static_cast<mp_bitcnt_t>(n + 1);
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 126) throw CapabilityError("denominator of p too large for the search");
  Weights out;
  for (int k = 0; k <= n; ++k) {
    BigInt v = 1;
    for (int i = 0; i < k; ++i) v *= a;
    for (int i = k; i < n; ++i) v *= (b - a);
    u128 x = 0;
    for (std::size_t limb = mpz_size(v.get_mpz_t()); limb-- > 0;) {
      x = (x << 64) | static_cast<u128>(mpz_getlimbn(v.get_mpz_t(), static_cast<mp_size_t>(limb)));
    }
    out.w[static_cast<std::size_t>(k)] = x;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  out.denominator = Rational(den);
  return out;
}

Rational u128_to_rational(u128 x) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(x));
  return Rational((hi << 64) + lo);
}

constexpr std::size_t kMaximizerCap = 256;

struct WorkerResult {
  u128 best = 0;
  bool any = false;
  std::vector<std::vector<std::uint16_t>> maximizers;
  std::uint64_t examined = 0;
  std::set<std::string> classes;
};

class MaxSearch {
 public:
  MaxSearch(const GeneratorSearch& engine, const Weights& weights, bool prune, bool count_classes)
      : engine_(engine), weights_(weights), prune_(prune), count_classes_(count_classes) {}

  void run_root(const std::vector<std::uint16_t>& roots, std::size_t pos, WorkerResult& res) const {
    Node child;
    std::vector<std::uint16_t> cands;
    engine_.child(root_node(), roots, pos, child, cands);
    descend(child, cands, res);
  }

 private:
  u128 measure(const Bits& u) const {
    u128 total = 0;
    for (int k = 0; k <= engine_.n(); ++k) {
      total += static_cast<u128>(u.count_and(engine_.layer(k))) * weights_.w[static_cast<std::size_t>(k)];
    }
    return total;
  }

  void record(const Node& node, WorkerResult& res) const {
    ++res.examined;
    if (count_classes_) res.classes.insert(canonical_form(generators(node)));
    const u128 value = measure(node.upset);
    if (!res.any || value > res.best) {
      res.any = true;
      res.best = value;
      res.maximizers.clear();
      res.maximizers.push_back(node.gens);
    } else if (value == res.best && res.maximizers.size() < kMaximizerCap) {
      res.maximizers.push_back(node.gens);
    }
  }

  void descend(const Node& node, const std::vector<std::uint16_t>& cands, WorkerResult& res) const {
    record(node, res);
    if (cands.empty()) return;
    if (prune_) {
      Bits reach = node.upset;
      for (auto c : cands) reach |= engine_.up(c);
      if (measure(reach) < res.best) return;
    }
    Node child;
    std::vector<std::uint16_t> next;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      engine_.child(node, cands, i, child, next);
      descend(child, next, res);
    }
  }

 public:
  SetFamily generators(const Node& node) const { return generators(node.gens); }
  SetFamily generators(const std::vector<std::uint16_t>& gens) const {
    std::vector<std::uint64_t> masks(gens.begin(), gens.end());
    return SetFamily(engine_.n(), masks);
  }

 private:
  const GeneratorSearch& engine_;
  const Weights& weights_;
  bool prune_;
  bool count_classes_;
};

void validate_search(int n, int t, int r, bool shifted) {
  if (t < 1 || r < 2) throw DomainError("search needs t >= 1 and r >= 2");
  const int cap = shifted ? kMaxShiftedSearchGround : kMaxSearchGround;
  if (n < 1 || n > cap) {
    throw CapabilityError(std::string(shifted ? "shifted" : "unrestricted") + " search supports 1 <= n <= " +
                          std::to_string(cap));
  }
}

std::string search_status(int t, const Rational& p) {
  if (t == 1) return p <= make_rational(2, 3) ? "known" : "outside-known-range";
  if (t <= 14) return "exploratory";
  return "theorem";
}

SearchReport search_one(const GeneratorSearch& engine, int n, int t, int r, const Rational& p,
                        const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Weights weights = make_weights(n, p);
  const bool iso = options.use_isomorphism_pruning && !options.restrict_to_shifted;
  const bool count_classes = n <= 5;
  MaxSearch search(engine, weights, options.measure_upper_bound_pruning, count_classes);

  // Up to relabelling the least generator of any family is a prefix [k].
  std::vector<std::size_t> root_positions;
  const auto& roots = engine.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const unsigned x = roots[i];
    if (!iso || (x & (x + 1)) == 0) root_positions.push_back(i);
  }

  const int threads = std::clamp(options.threads, 1, std::max<int>(1, static_cast<int>(root_positions.size())));
  std::vector<WorkerResult> results(static_cast<std::size_t>(threads));
  auto work = [&](int id) {
    for (std::size_t j = static_cast<std::size_t>(id); j < root_positions.size(); j += static_cast<std::size_t>(threads)) {
      search.run_root(roots, root_positions[j], results[static_cast<std::size_t>(id)]);
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();

  SearchReport rep;
  rep.n = n;
  rep.t = t;
  rep.r = r;
  rep.p = p;
  rep.restricted_to_shifted = options.restrict_to_shifted;
  rep.isomorphism_pruning = iso;
  u128 best = 0;
  bool any = false;
  std::set<std::string> classes;
  for (const auto& res : results) {
    rep.families_examined += res.examined;
    classes.insert(res.classes.begin(), res.classes.end());
    if (res.any && (!any || res.best > best)) {
      best = res.best;
      any = true;
    }
  }
  if (count_classes) rep.isomorphism_classes = classes.size();
  rep.max_measure = any ? Rational(u128_to_rational(best) / weights.denominator) : Rational(0);
  rep.witness = SetFamily(n);

  std::map<std::string, SetFamily> by_class;
  for (const auto& res : results) {
    if (!res.any || res.best != best) continue;
    for (const auto& gens : res.maximizers) {
      SetFamily fam = search.generators(gens);
      std::string key = canonical_form(fam);
      auto it = by_class.find(key);
      if (it == by_class.end()) by_class.emplace(std::move(key), std::move(fam));
      else {
        const auto a = fam.members();
        const auto b = it->second.members();
        if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) it->second = std::move(fam);
      }
    }
  }
  for (auto& [key, fam] : by_class) rep.maximizer_classes.push_back(fam);
  if (!rep.maximizer_classes.empty()) rep.witness = rep.maximizer_classes.front();

  rep.reference = pow(p, static_cast<unsigned long>(t));
  rep.status = search_status(t, p);
  rep.matches_reference = rep.max_measure == rep.reference;
  rep.flagged = rep.status == "exploratory" && !rep.matches_reference;
  if (t <= n && !rep.maximizer_classes.empty()) {
    const std::string f0 = canonical_form(SetFamily(n, std::vector<Subset>{Subset::prefix(n, t)}));
    rep.maximizers_isomorphic_to_f0 = std::all_of(by_class.begin(), by_class.end(),
                                                  [&](const auto& kv) { return kv.first == f0; });
  }
  rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void collect_families(const GeneratorSearch& engine, const Node& node, const std::vector<std::uint16_t>& cands,
                      const std::function<void(const Node&)>& visit) {
  visit(node);
  Node child;
  std::vector<std::uint16_t> next;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    engine.child(node, cands, i, child, next);
    collect_families(engine, child, next, visit);
  }
}

void for_each_shifted(int n, int t, int r, const std::function<void(const Node&)>& visit) {
  validate_search(n, t, r, true);
  const GeneratorSearch engine(n, t, r, true);
  const auto& roots = engine.roots();
  Node child;
  std::vector<std::uint16_t> cands;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    engine.child(root_node(), roots, i, child, cands);
    collect_families(engine, child, cands, visit);
  }
}

}  // namespace

std::vector<SearchReport> search_max_measure(int n, int t, int r, const SearchOptions& options) {
  validate_search(n, t, r, options.restrict_to_shifted);
  if (options.p_list.empty()) throw DomainError("search needs at least one p");
  for (const auto& p : options.p_list) require_probability(p);
  const GeneratorSearch engine(n, t, r, options.restrict_to_shifted);
  std::vector<SearchReport> out;
  for (const auto& p : options.p_list) out.push_back(search_one(engine, n, t, r, p, options));
  return out;
}

std::vector<SetFamily> enumerate_shifted_families(int n, int t, int r) {
  std::vector<SetFamily> out;
  for_each_shifted(n, t, r, [&](const Node& node) {
    std::vector<std::uint64_t> masks;
    for (unsigned x = 0; x < (1U << n); ++x) {
      if (node.upset.test(x)) masks.push_back(x);
    }
    out.push_back(SetFamily(n, masks).with_flags({true, true}));
  });
  return out;
}

std::uint64_t count_shifted_families(int n, int t, int r) {
  std::uint64_t count = 0;
  for_each_shifted(n, t, r, [&](const Node&) { ++count; });
  return count;
}

// --- lemma audit ---------------------------------------------------------------

LemmaAudit audit_lemmas(const SetFamily& family, int t) {
  if (t < 1) throw DomainError("t must be at least 1");
  LemmaAudit a;
  const int n = family.ground_size();
  a.shifted = is_shifted(family);
  a.up_closed = is_up_closed(family);
  a.intersecting = !family.empty() && is_r_wise_t_intersecting(family, 3, t);
  a.preconditions_hold = a.shifted && a.up_closed && a.intersecting;
  if (!a.shifted) a.failures.emplace_back("family is not shifted");
  if (!a.up_closed) a.failures.emplace_back("family is not up-closed");
  if (!a.intersecting) a.failures.emplace_back("family is not 3-wise " + std::to_string(t) + "-intersecting");

  a.lambda = n + 1;
  for (const auto& g : family.members()) a.lambda = std::min(a.lambda, max_offset(g));
  if (family.empty()) a.lambda = 0;
  a.lambda_at_least_t = a.lambda >= t;
  a.every_member_hits_t = std::all_of(family.members().begin(), family.members().end(),
                                      [t](const Subset& g) { return hits(g, t); });
  if (!a.every_member_hits_t) a.failures.emplace_back("some member misses y = 2x + t");
  if (!a.lambda_at_least_t) a.failures.emplace_back("lambda < t");

  for (int i = 0; i <= n && !family.empty(); ++i) {
    int m = n + 1;
    for (const auto& g : family.members()) m = std::min(m, g.prefix_count(i));
    if (3 * m >= 2 * i + t) {
      a.prefix_index = i;
      break;
    }
  }
  if (!a.prefix_index) a.failures.emplace_back("no prefix index i with 3 min |G cap [i]| >= 2i + t");

  std::vector<Subset> core;
  std::optional<Subset> first_dot;
  for (const auto& g : family.members()) {
    switch (classify(g, t)) {
      case WalkClass::Tilde: ++a.tilde; break;
      case WalkClass::Dot:
        ++a.dot;
        core.push_back(g);
        if (!first_dot) first_dot = g;
        break;
      case WalkClass::Ddot:
        ++a.ddot;
        core.push_back(g);
        break;
      case WalkClass::Miss: ++a.miss; break;
    }
  }
  if (first_dot) {
    const HitRecord rec = hits_line(*first_dot, t);
    const int s = rec.points.front().x;
    a.s = s;
    const int width = t + 3 * s;
    a.s_contains_core = width <= n && std::all_of(core.begin(), core.end(), [&](const Subset& g) {
                          return g.prefix_count(width) >= t + 2 * s;
                        });
    if (!a.s_contains_core) a.failures.emplace_back("DOT and DDOT members are not inside F_s^t");
  }
  a.passed = a.failures.empty();
  return a;
}

}  // namespace triwise
