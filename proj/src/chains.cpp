#include "vafw/chains.hpp"

#include <algorithm>
#include <functional>

namespace vafw {

std::string_view parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view rule_name(ClassificationRule rule) {
  switch (rule) {
    case ClassificationRule::EvenAfterEvenChains: return "even-member-after-even-chains";
    case ClassificationRule::EvenAndDirectOddAttack: return "even-member-directly-attacked-by-odd-chain";
    case ClassificationRule::OddAfterEvenChainsOnly: return "odd-member-after-even-chains-only";
    case ClassificationRule::Otherwise: return "otherwise";
  }
  return "?";
}

bool ChainDecomposition::preceded_only_by_even(std::size_t chain) const {
  const auto& preds = predecessors.at(chain);
  return std::all_of(preds.begin(), preds.end(),
                     [](const ChainPredecessor& p) { return p.parity == Parity::Even; });
}

namespace {

// Local structure of the attack graph that decides where chains run.
struct ChainLinks {
  const Vaf& vaf;
  std::vector<bool> multi;

  explicit ChainLinks(const Vaf& v) : vaf(v), multi(v.size()) {
    for (ArgIndex a = 0; a < v.size(); ++a) multi[a] = v.attackers_of(a).size() >= 2;
  }

  bool same_value(ArgIndex x, ArgIndex y) const { return vaf.value_of(x) == vaf.value_of(y); }

  // y carries x's chain forward.
  bool continues(ArgIndex x, ArgIndex y) const {
    return x != y && same_value(x, y) && !multi[x] && !multi[y];
  }

  // y has several attackers and closes the chain running through x.
  bool terminates(ArgIndex x, ArgIndex y) const {
    return x != y && same_value(x, y) && !multi[x] && multi[y];
  }

  // y belongs to chains only as the last member of its attackers' chains.
  bool pure_terminus(ArgIndex y) const {
    if (!multi[y]) return false;
    const auto& by = vaf.attackers_of(y);
    return std::all_of(by.begin(), by.end(), [&](ArgIndex x) { return terminates(x, y); });
  }

  bool has_continuation_in(ArgIndex y) const {
    const auto& by = vaf.attackers_of(y);
    return by.size() == 1 && continues(by.front(), y);
  }
};

}  // namespace

ChainDecomposition decompose_chains(const Vaf& vaf) {
  const ChainLinks links(vaf);
  const std::size_t n = vaf.size();

  std::vector<bool> is_head(n, false);
  for (ArgIndex a = 0; a < n; ++a)
    is_head[a] = !links.has_continuation_in(a) && !links.pure_terminus(a);

  std::vector<std::vector<ArgIndex>> paths;
  std::vector<bool> covered(n, false);
  std::vector<ArgIndex> path;
  std::function<void(ArgIndex)> extend = [&](ArgIndex x) {
    path.push_back(x);
    bool onward = false;
    for (ArgIndex y : vaf.targets_of(x)) {
      if (links.terminates(x, y)) {
        path.push_back(y);
        paths.push_back(path);
        path.pop_back();
        onward = true;
      } else if (links.continues(x, y) && !is_head[y]) {
        extend(y);
        onward = true;
      }
    }
    if (!onward) paths.push_back(path);
    path.pop_back();
  };
  auto run_from = [&](ArgIndex h) {
    const std::size_t before = paths.size();
    extend(h);
    for (std::size_t p = before; p < paths.size(); ++p)
      for (ArgIndex a : paths[p]) covered[a] = true;
  };

  for (ArgIndex h = 0; h < n; ++h)
    if (is_head[h]) run_from(h);

  // Same-valued cycles with no way in have no natural head. Break each at its
  // smallest member and at that member's attacker.
  for (;;) {
    ArgIndex start = n;
    for (ArgIndex a = 0; a < n && start == n; ++a)
      if (!covered[a] && !links.pure_terminus(a)) start = a;
    if (start == n) break;
    std::vector<bool> seen(n, false);
    ArgIndex cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = vaf.attackers_of(cur).front();
    }
    std::vector<ArgIndex> cycle{cur};
    for (ArgIndex a = vaf.attackers_of(cur).front(); a != cur; a = vaf.attackers_of(a).front())
      cycle.push_back(a);
    const ArgIndex lead = *std::min_element(cycle.begin(), cycle.end());
    const ArgIndex breaker = vaf.attackers_of(lead).front();
    is_head[lead] = true;
    is_head[breaker] = true;
    run_from(lead);
    if (breaker != lead) run_from(breaker);
  }

  ChainDecomposition out;
  for (const auto& p : paths) {
    Chain chain;
    for (ArgIndex a : p) chain.members.push_back(vaf.name(a));
    chain.value = vaf.value_name_of(p.front());
    out.chains.push_back(std::move(chain));
  }
  std::sort(out.chains.begin(), out.chains.end());
  out.chains.erase(std::unique(out.chains.begin(), out.chains.end()), out.chains.end());

  for (std::size_t c = 0; c < out.chains.size(); ++c) {
    const auto& members = out.chains[c].members;
    for (std::size_t i = 0; i < members.size(); ++i)
      out.positions[members[i]].push_back({c, i + 1});
  }
  for (const auto& [arg, places] : out.positions) {
    const bool even = std::any_of(places.begin(), places.end(),
                                  [](const ChainPosition& p) { return p.index % 2 == 0; });
    out.effective_parity[arg] = even ? Parity::Even : Parity::Odd;
  }

  for (const auto& chain : out.chains) {
    const ArgIndex head = vaf.index_of(chain.head());
    std::vector<ChainPredecessor> preds;
    for (ArgIndex z : vaf.attackers_of(head)) {
      const ArgumentId& name = vaf.name(z);
      if (std::find(chain.members.begin(), chain.members.end(), name) != chain.members.end())
        continue;
      if (links.terminates(z, head)) continue;
      preds.push_back({name, out.effective_parity.at(name)});
    }
    out.predecessors.push_back(std::move(preds));
  }

  for (std::size_t x = 0; x < out.chains.size(); ++x) {
    const ArgIndex last = vaf.index_of(out.chains[x].last());
    for (std::size_t y = 0; y < out.chains.size(); ++y)
      if (vaf.has_attack(last, vaf.index_of(out.chains[y].head()))) out.precedes.emplace_back(x, y);
  }
  return out;
}

DichromaticClassification classify_dichromatic(const Vaf& vaf) {
  return classify_dichromatic(vaf, decompose_chains(vaf));
}

DichromaticClassification classify_dichromatic(const Vaf& vaf, const ChainDecomposition& chains) {
  if (vaf.used_value_count() > 2) {
    throw VafError(ErrorCode::NotDichromatic,
                   "chain classification needs at most two values; the framework uses " +
                       std::to_string(vaf.used_value_count()));
  }
  DichromaticClassification out;
  for (const auto& [arg, places] : chains.positions) {
    bool even_after_even = false;
    bool even_after_odd = false;
    bool odd_only = true;
    bool direct_odd = false;
    for (const auto& p : places) {
      const bool even_pos = p.index % 2 == 0;
      const bool only_even = chains.preceded_only_by_even(p.chain);
      even_after_even = even_after_even || (even_pos && only_even);
      even_after_odd = even_after_odd || (even_pos && !only_even);
      odd_only = odd_only && !even_pos && only_even;
      if (p.index == 1 && !only_even) direct_odd = true;
    }
    ClassificationRule rule = ClassificationRule::Otherwise;
    ArgStatus status = ArgStatus::Subjective;
    if (even_after_even) {
      rule = ClassificationRule::EvenAfterEvenChains;
      status = ArgStatus::Indefensible;
    } else if (even_after_odd && direct_odd) {
      rule = ClassificationRule::EvenAndDirectOddAttack;
      status = ArgStatus::Indefensible;
    } else if (odd_only) {
      rule = ClassificationRule::OddAfterEvenChainsOnly;
      status = ArgStatus::Objective;
    }
    out.status[arg] = status;
    out.rule[arg] = rule;
  }
  return out;
}

std::vector<ChainDisagreement> diagnose_dichromatic(const Vaf& vaf, const EngineLimits& limits) {
  const auto predicted = classify_dichromatic(vaf);
  const auto actual = status_map(vaf, limits);
  std::vector<ChainDisagreement> out;
  for (const auto& [arg, status] : actual.statuses) {
    const ArgStatus guess = predicted.status.at(arg);
    if (guess != status) out.push_back({arg, guess, status});
  }
  return out;
}

bool is_simple_cycle(const Vaf& vaf) {
  const std::size_t n = vaf.size();
  if (n == 0) return false;
  for (ArgIndex a = 0; a < n; ++a)
    if (vaf.attackers_of(a).size() != 1 || vaf.targets_of(a).size() != 1) return false;
  std::size_t steps = 0;
  ArgIndex cur = 0;
  do {
    cur = vaf.targets_of(cur).front();
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

namespace {

ChainDecomposition cycle_chains(const Vaf& vaf) {
  if (!is_simple_cycle(vaf))
    throw VafError(ErrorCode::NotASimpleCycle, "the attack graph is not a single simple cycle");
  if (vaf.used_value_count() != 2)
    throw VafError(ErrorCode::NotDichromatic, "the cycle must use exactly two values");
  return decompose_chains(vaf);
}

void add_members(Extension& out, const Chain& chain, bool odd) {
  for (std::size_t i = odd ? 0 : 1; i < chain.members.size(); i += 2) out.insert(chain.members[i]);
}

}  // namespace

Extension dichromatic_cycle_extension(const Vaf& vaf, const ValueOrder& order) {
  const ChainDecomposition chains = cycle_chains(vaf);
  require_same_values(vaf, order);
  if (!order.is_total())
    throw VafError(ErrorCode::InvalidOrder, "a total value order is required");

  std::vector<ValueIndex> used;
  for (ArgIndex a = 0; a < vaf.size(); ++a) used.push_back(vaf.value_of(a));
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const ValueId& preferred =
      vaf.values()[order.prefers(used[0], used[1]) ? used[0] : used[1]];

  Extension out;
  for (std::size_t c = 0; c < chains.chains.size(); ++c) {
    const Chain& chain = chains.chains[c];
    if (chains.preceded_only_by_even(c) || chain.value == preferred)
      add_members(out, chain, true);
    else
      add_members(out, chain, false);
  }
  return out;
}

Extension objective_by_chain_theory(const Vaf& vaf) {
  const ChainDecomposition chains = cycle_chains(vaf);
  Extension out;
  for (std::size_t c = 0; c < chains.chains.size(); ++c)
    if (chains.preceded_only_by_even(c)) add_members(out, chains.chains[c], true);
  return out;
}

}  // namespace vafw
