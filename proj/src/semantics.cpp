#include "vafw/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace vafw {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kHardArgumentCap = 64;

Mask bit(ArgIndex a) { return Mask{1} << a; }

void guard_size(std::size_t n, const EngineLimits& limits) {
  if (n > limits.max_oracle_arguments || n > kHardArgumentCap) {
    throw VafError(ErrorCode::InstanceTooLarge,
                   "exhaustive search over " + std::to_string(n) +
                       " arguments exceeds the limit of " +
                       std::to_string(std::min(limits.max_oracle_arguments, kHardArgumentCap)));
  }
}

struct Masks {
  std::size_t n = 0;
  std::vector<Mask> defeaters;  // who defeats i
  std::vector<Mask> targets;    // whom i defeats
  Mask all = 0;

  explicit Masks(const DefeatGraph& g) : n(g.size()), defeaters(n, 0), targets(n, 0) {
    for (auto [a, b] : g.defeats()) {
      defeaters[b] |= bit(a);
      targets[a] |= bit(b);
    }
    all = n == 64 ? ~Mask{0} : (bit(n) - 1);
  }

  Mask defeated_by(Mask s) const {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) out |= targets[std::countr_zero(rest)];
    return out;
  }

  bool conflict_free(Mask s) const { return (defeated_by(s) & s) == 0; }

  bool admissible(Mask s) const {
    if (!conflict_free(s)) return false;
    const Mask answered = defeated_by(s);
    for (Mask rest = s; rest; rest &= rest - 1) {
      if ((defeaters[std::countr_zero(rest)] & ~answered) != 0) return false;
    }
    return true;
  }

  Mask grounded() const {
    Mask in = 0;
    for (;;) {
      const Mask out = defeated_by(in);
      Mask next = in;
      for (ArgIndex a = 0; a < n; ++a)
        if ((defeaters[a] & ~out) == 0) next |= bit(a);
      if (next == in) return in;
      in = next;
    }
  }
};

Extension to_extension(const DefeatGraph& g, Mask s) {
  Extension out;
  for (Mask rest = s; rest; rest &= rest - 1)
    out.insert(g.arguments()[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

ExtensionSet to_sorted(const DefeatGraph& g, const std::vector<Mask>& sets) {
  ExtensionSet out;
  out.reserve(sets.size());
  for (Mask s : sets) out.push_back(to_extension(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

class PreferredSearch {
 public:
  explicit PreferredSearch(const Masks& m) : m_(m) {}

  std::vector<Mask> run() {
    const Mask grounded = m_.grounded();
    walk(0, grounded, m_.defeated_by(grounded));

    std::sort(found_.begin(), found_.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
    });
    std::vector<Mask> maximal;
    for (Mask s : found_) {
      bool covered = std::any_of(maximal.begin(), maximal.end(),
                                 [s](Mask t) { return (s & ~t) == 0; });
      if (!covered) maximal.push_back(s);
    }
    return maximal;
  }

 private:
  // A member stays defensible while each of its defeaters can still be
  // defeated by a member or an undecided argument.
  bool defensible(Mask in, Mask out) const {
    const Mask open = m_.all & ~out;
    for (Mask rest = in; rest; rest &= rest - 1) {
      Mask attackers = m_.defeaters[std::countr_zero(rest)];
      for (; attackers; attackers &= attackers - 1) {
        if ((m_.defeaters[std::countr_zero(attackers)] & open) == 0) return false;
      }
    }
    return true;
  }

  void walk(ArgIndex next, Mask in, Mask out) {
    while (next < m_.n && ((in | out) & bit(next))) ++next;
    if (next == m_.n) {
      if (!m_.admissible(in)) return;
      for (ArgIndex x = 0; x < m_.n; ++x) {
        if ((in & bit(x)) == 0 && m_.admissible(in | bit(x))) return;  // not maximal
      }
      found_.push_back(in);
      return;
    }
    const Mask with = in | bit(next);
    if ((m_.defeaters[next] & with) == 0 && (m_.targets[next] & with) == 0 &&
        defensible(with, out)) {
      walk(next + 1, with, out);
    }
    if (defensible(in, out | bit(next))) walk(next + 1, in, out | bit(next));
  }

  const Masks& m_;
  std::vector<Mask> found_;
};

class StableSearch {
 public:
  explicit StableSearch(const Masks& m) : m_(m) {}

  std::vector<Mask> run() {
    walk(0, 0, 0);
    return found_;
  }

 private:
  // Every excluded argument must still be defeatable by a member or an
  // undecided argument.
  bool coverable(Mask in, Mask out) const {
    const Mask open = m_.all & ~out;
    for (Mask rest = out; rest; rest &= rest - 1) {
      if ((m_.defeaters[std::countr_zero(rest)] & open) == 0) return false;
    }
    (void)in;
    return true;
  }

  void walk(ArgIndex next, Mask in, Mask out) {
    if (next == m_.n) {
      if ((m_.defeated_by(in) | in) == m_.all && m_.conflict_free(in)) found_.push_back(in);
      return;
    }
    const Mask with = in | bit(next);
    if ((m_.defeaters[next] & with) == 0 && (m_.targets[next] & with) == 0) {
      walk(next + 1, with, out);
    }
    const Mask without = out | bit(next);
    if (coverable(in, without)) walk(next + 1, in, without);
  }

  const Masks& m_;
  std::vector<Mask> found_;
};

}  // namespace

ExtensionSet preferred_extensions(const DefeatGraph& g, const EngineLimits& limits) {
  guard_size(g.size(), limits);
  const Masks masks(g);
  return to_sorted(g, PreferredSearch(masks).run());
}

ExtensionSet stable_extensions(const DefeatGraph& g, const EngineLimits& limits) {
  guard_size(g.size(), limits);
  const Masks masks(g);
  return to_sorted(g, StableSearch(masks).run());
}

SemanticsResult solve(const DefeatGraph& g, const EngineLimits& limits) {
  SemanticsResult result;
  result.preferred = preferred_extensions(g, limits);
  result.stable = stable_extensions(g, limits);
  result.unique = result.preferred.size() == 1;
  return result;
}

Extension extend_algorithm(const Vaf& vaf, const ValueOrder& order) {
  require_same_values(vaf, order);
  if (!order.is_total()) {
    throw VafError(ErrorCode::InvalidOrder, "EXTEND requires a total value order");
  }
  if (has_monochromatic_cycle(vaf)) {
    throw VafError(ErrorCode::MonochromaticCyclePresent,
                   "framework contains a monochromatic cycle; the preferred extension "
                   "need not be unique");
  }
  const DefeatGraph g = induced_defeat_graph(vaf, order);
  const std::size_t n = g.size();

  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  std::vector<ArgIndex> accepted;
  while (remaining > 0) {
    std::vector<ArgIndex> undefeated;
    for (ArgIndex a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      const auto& by = g.defeaters_of(a);
      if (std::none_of(by.begin(), by.end(), [&](ArgIndex x) { return alive[x]; }))
        undefeated.push_back(a);
    }
    if (undefeated.empty()) {
      throw VafError(ErrorCode::MonochromaticCyclePresent,
                     "no undefeated argument remains among " + std::to_string(remaining));
    }
    std::vector<ArgIndex> removed = undefeated;
    for (ArgIndex s : undefeated)
      for (ArgIndex r : g.defeated_by(s))
        if (alive[r]) removed.push_back(r);
    for (ArgIndex a : removed) {
      if (alive[a]) {
        alive[a] = false;
        --remaining;
      }
    }
    accepted.insert(accepted.end(), undefeated.begin(), undefeated.end());
  }
  return g.names(accepted);
}

bool is_resolvable(const Vaf& vaf, const ValueOrder& order, const EngineLimits& limits) {
  const DefeatGraph g = induced_defeat_graph(vaf, order);
  if (!limits.force_oracle && g.is_acyclic()) return true;
  return preferred_extensions(g, limits).size() == 1;
}

Acceptance acceptance(const DefeatGraph& g, std::string_view a, const EngineLimits& limits) {
  const ArgIndex target = g.index_of(a);
  const ExtensionSet preferred = preferred_extensions(g, limits);
  const ArgumentId& name = g.arguments()[target];
  Acceptance result;
  result.credulous = std::any_of(preferred.begin(), preferred.end(),
                                 [&](const Extension& e) { return e.contains(name); });
  result.sceptical = !preferred.empty() &&
                     std::all_of(preferred.begin(), preferred.end(),
                                 [&](const Extension& e) { return e.contains(name); });
  return result;
}

}  // namespace vafw
