#include "triwise/shift.hpp"

#include "triwise/error.hpp"

namespace triwise {

namespace {

void check_step(const SetFamily& family, ShiftStep step) {
  if (step.i < 1 || step.i >= step.j || step.j > family.ground_size()) {
    throw DomainError("shift step needs 1 <= i < j <= n (i=" + std::to_string(step.i) +
                      ", j=" + std::to_string(step.j) + ")");
  }
}

}  // namespace

SetFamily shift_once(const SetFamily& family, ShiftStep step) {
  check_step(family, step);
  const std::uint64_t bi = std::uint64_t{1} << (step.i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (step.j - 1);
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (const auto& m : family.members()) {
    const std::uint64_t g = m.bits();
    if ((g & bj) && !(g & bi)) {
      const std::uint64_t moved = (g & ~bj) | bi;
      out.push_back(family.contains_bits(moved) ? g : moved);
    } else {
      out.push_back(g);
    }
  }
  return SetFamily(family.ground_size(), out);
}

std::uint64_t shift_potential(const SetFamily& family) {
  std::uint64_t total = 0;
  for (const auto& m : family.members()) {
    for (int e : m.elements()) total += static_cast<std::uint64_t>(e);
  }
  return total;
}

SaturationTrace shift_saturate_traced(const SetFamily& family) {
  SaturationTrace trace{family, {}, {shift_potential(family)}};
  const int n = family.ground_size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n && !changed; ++i) {
      for (int j = i + 1; j <= n && !changed; ++j) {
        SetFamily next = shift_once(trace.family, {i, j});
        if (next != trace.family) {
          trace.family = std::move(next);
          trace.effective_steps.push_back({i, j});
          trace.potentials.push_back(shift_potential(trace.family));
          changed = true;
        }
      }
    }
  }
  FamilyFlags flags = family.flags();
  flags.shifted = true;
  trace.family = trace.family.with_flags(flags);
  return trace;
}

SetFamily shift_saturate(const SetFamily& family) { return shift_saturate_traced(family).family; }

std::optional<ShiftViolation> find_shift_violation(const SetFamily& family) {
  const int n = family.ground_size();
  for (const auto& m : family.members()) {
    const std::uint64_t g = m.bits();
    for (int i = 1; i < n; ++i) {
      if (g & (std::uint64_t{1} << (i - 1))) continue;
      for (int j = i + 1; j <= n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << (j - 1);
        if (!(g & bj)) continue;
        if (!family.contains_bits((g & ~bj) | (std::uint64_t{1} << (i - 1)))) {
          return ShiftViolation{m, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_shifted(const SetFamily& family) { return !find_shift_violation(family).has_value(); }

bool leadsto(const Subset& g, const Subset& h) {
  if (g.ground_size() != h.ground_size()) throw DomainError("leadsto needs subsets of the same [n]");
  if (g.size() > h.size()) return false;
  const auto ge = g.elements();
  const auto he = h.elements();
  for (std::size_t k = 0; k < ge.size(); ++k) {
    if (ge[k] < he[k]) return false;
  }
  return true;
}

std::optional<Subset> shift_end(const SetFamily& family) {
  for (const auto& h : family.members()) {
    bool all = true;
    for (const auto& g : family.members()) {
      if (!leadsto(g, h)) {
        all = false;
        break;
      }
    }
    if (all) return h;
  }
  return std::nullopt;
}

bool disjointness_check(const SetFamily& g_family, const SetFamily& h_family) {
  if (g_family.ground_size() != h_family.ground_size()) {
    throw DomainError("families over different ground sets");
  }
  if (!is_shifted(g_family) || !is_up_closed(g_family)) {
    throw PreconditionError("disjointness check needs a shifted, up-closed first family");
  }
  const auto end = shift_end(h_family);
  if (!end) throw PreconditionError("second family has no shift-end");
  if (g_family.contains(*end)) throw PreconditionError("shift-end of the second family lies in the first family");
  return family_intersection(g_family, h_family).empty();
}

}  // namespace triwise
