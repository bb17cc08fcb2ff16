#include "vafw/framework.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace vafw {

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

template <typename T>
std::optional<std::size_t> sorted_find(const std::vector<T>& sorted,
                                       std::string_view key) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key,
                             [](const T& e, std::string_view k) { return e < k; });
  if (it == sorted.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

// Colour-marking DFS; returns true on the first back edge.
bool graph_has_cycle(std::size_t n,
                     const std::function<const std::vector<ArgIndex>&(ArgIndex)>& succ,
                     const std::function<bool(ArgIndex, ArgIndex)>& keep) {
  std::vector<int> mark(n, 0);
  std::vector<std::pair<ArgIndex, std::size_t>> stack;
  for (ArgIndex root = 0; root < n; ++root) {
    if (mark[root] != 0) continue;
    stack.emplace_back(root, 0);
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = succ(node);
      if (next == out.size()) {
        mark[node] = 2;
        stack.pop_back();
        continue;
      }
      ArgIndex to = out[next++];
      if (!keep(node, to)) continue;
      if (mark[to] == 1) return true;
      if (mark[to] == 0) {
        mark[to] = 1;
        stack.emplace_back(to, 0);
      }
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Vaf

Vaf Vaf::validate(const RawFramework& raw, std::vector<std::string>* warnings) {
  std::optional<ErrorCode> first;
  std::vector<std::string> problems;
  auto fail = [&](ErrorCode code, std::string message) {
    if (!first) first = code;
    problems.push_back(std::move(message));
  };

  if (raw.values.empty()) fail(ErrorCode::EmptyValueSet, "the value set is empty");

  std::vector<ValueId> values;
  for (const auto& v : raw.values) {
    if (v.empty()) {
      fail(ErrorCode::InvalidIdentifier, "empty value identifier");
      continue;
    }
    if (std::find(values.begin(), values.end(), v) != values.end()) {
      fail(ErrorCode::InvalidIdentifier, "value '" + v + "' is declared twice");
      continue;
    }
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());

  std::map<std::string, const RawArgument*> by_id;
  for (const auto& arg : raw.arguments) {
    if (arg.id.empty() || has_whitespace(arg.id)) {
      fail(ErrorCode::InvalidIdentifier,
           "argument identifier '" + arg.id + "' is empty or contains whitespace");
      continue;
    }
    if (!by_id.emplace(arg.id, &arg).second) {
      fail(ErrorCode::DuplicateArgumentId, "argument '" + arg.id + "' is declared twice");
      continue;
    }
    if (!std::binary_search(values.begin(), values.end(), arg.value)) {
      fail(ErrorCode::UnmappedArgumentValue,
           "argument '" + arg.id + "' relates to undeclared value '" + arg.value + "'");
    }
  }

  Vaf vaf;
  vaf.values_ = std::move(values);
  for (const auto& [id, arg] : by_id) {
    vaf.arguments_.push_back(id);
    vaf.value_of_.push_back(vaf.find_value(arg->value).value_or(0));
    vaf.labels_.push_back(arg->label);
  }

  std::vector<Edge> edges;
  for (const auto& [from, to] : raw.attacks) {
    auto a = vaf.find(from);
    auto b = vaf.find(to);
    if (!a) fail(ErrorCode::UnknownArgumentInAttack,
                 "attack (" + from + ", " + to + ") names undeclared argument '" + from + "'");
    if (!b) fail(ErrorCode::UnknownArgumentInAttack,
                 "attack (" + from + ", " + to + ") names undeclared argument '" + to + "'");
    if (a && b) edges.emplace_back(*a, *b);
  }

  if (first) {
    std::string message = problems.front();
    if (problems.size() > 1)
      message += " (and " + std::to_string(problems.size() - 1) + " more)";
    throw VafError(*first, message, problems);
  }

  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  if (last != edges.end() && warnings != nullptr) {
    warnings->push_back(std::to_string(edges.end() - last) +
                        " duplicate attack(s) ignored");
  }
  edges.erase(last, edges.end());

  vaf.attacks_ = std::move(edges);
  vaf.attackers_.assign(vaf.size(), {});
  vaf.targets_.assign(vaf.size(), {});
  for (auto [a, b] : vaf.attacks_) {
    vaf.targets_[a].push_back(b);
    vaf.attackers_[b].push_back(a);
  }
  for (auto& list : vaf.attackers_) std::sort(list.begin(), list.end());
  return vaf;
}

std::optional<ArgIndex> Vaf::find(std::string_view id) const {
  return sorted_find(arguments_, id);
}

ArgIndex Vaf::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw VafError(ErrorCode::UnknownArgument, "unknown argument '" + std::string(id) + "'");
}

std::optional<ValueIndex> Vaf::find_value(std::string_view value) const {
  return sorted_find(values_, value);
}

ValueIndex Vaf::value_index_of(std::string_view value) const {
  if (auto i = find_value(value)) return *i;
  throw VafError(ErrorCode::UnknownValue, "unknown value '" + std::string(value) + "'");
}

bool Vaf::has_attack(ArgIndex from, ArgIndex to) const {
  return std::binary_search(attacks_.begin(), attacks_.end(), Edge{from, to});
}

std::size_t Vaf::used_value_count() const {
  std::vector<ValueIndex> used(value_of_);
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

RawFramework Vaf::to_raw() const {
  RawFramework raw;
  raw.values = values_;
  for (ArgIndex a = 0; a < size(); ++a)
    raw.arguments.push_back({arguments_[a], values_[value_of_[a]], labels_[a]});
  for (auto [a, b] : attacks_) raw.attacks.emplace_back(arguments_[a], arguments_[b]);
  return raw;
}

Extension Vaf::names(std::span<const ArgIndex> members) const {
  Extension out;
  for (ArgIndex a : members) out.insert(arguments_[a]);
  return out;
}

// ---------------------------------------------------------------------------
// ValueOrder

ValueOrder ValueOrder::none(std::vector<ValueId> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ValueOrder order;
  order.closure_.assign(values.size() * values.size(), 0);
  order.values_ = std::move(values);
  return order;
}

ValueOrder ValueOrder::total(std::vector<ValueId> values,
                             std::span<const ValueId> ranking) {
  ValueOrder order = none(std::move(values));
  std::vector<ValueId> sorted(ranking.begin(), ranking.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != order.values_) {
    std::string listed;
    for (const auto& v : ranking) listed += (listed.empty() ? "" : ",") + v;
    throw VafError(ErrorCode::InvalidOrder,
                   "ranking [" + listed + "] is not a permutation of the framework's values");
  }
  const std::size_t n = order.values_.size();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      order.closure_[order.index_of(ranking[i]) * n + order.index_of(ranking[j])] = 1;
    }
    if (i + 1 < ranking.size()) order.declared_.emplace_back(ranking[i], ranking[i + 1]);
  }
  order.ranking_ = std::vector<ValueId>(ranking.begin(), ranking.end());
  return order;
}

ValueOrder ValueOrder::total(const Vaf& vaf, std::span<const ValueId> ranking) {
  return total(vaf.values(), ranking);
}

ValueOrder ValueOrder::partial(std::vector<ValueId> values,
                               std::span<const std::pair<ValueId, ValueId>> prefers) {
  ValueOrder order = none(std::move(values));
  const std::size_t n = order.values_.size();
  for (const auto& [v, w] : prefers) {
    order.closure_[order.index_of(v) * n + order.index_of(w)] = 1;
    order.declared_.emplace_back(v, w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (order.closure_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (order.closure_[k * n + j]) order.closure_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (order.closure_[i * n + i]) {
      throw VafError(ErrorCode::CyclicPreference,
                     "preferences around value '" + order.values_[i] +
                         "' form a cycle; valpref must be irreflexive and asymmetric");
    }
  }
  // A closure that ranks every pair is a total order; record its ranking.
  std::vector<std::size_t> beaten(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) beaten[j] += order.closure_[i * n + j];
  std::vector<ValueId> ranking(n);
  bool total = true;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (beaten[i] >= n || seen[beaten[i]]) {
      total = false;
      break;
    }
    seen[beaten[i]] = true;
    ranking[beaten[i]] = order.values_[i];
  }
  if (total && n > 0) order.ranking_ = std::move(ranking);
  return order;
}

ValueOrder ValueOrder::partial(const Vaf& vaf,
                               std::span<const std::pair<ValueId, ValueId>> prefers) {
  return partial(vaf.values(), prefers);
}

ValueIndex ValueOrder::index_of(std::string_view v) const {
  if (auto i = sorted_find(values_, v)) return *i;
  throw VafError(ErrorCode::UnknownValue, "unknown value '" + std::string(v) + "'");
}

bool ValueOrder::prefers(std::string_view v, std::string_view w) const {
  return prefers(index_of(v), index_of(w));
}

std::string ValueOrder::describe() const {
  std::string out;
  if (ranking_) {
    for (const auto& v : *ranking_) out += (out.empty() ? "" : " > ") + v;
    return out;
  }
  for (const auto& [v, w] : declared_) out += (out.empty() ? "" : ", ") + v + " > " + w;
  return out.empty() ? "(no preferences)" : out;
}

// ---------------------------------------------------------------------------
// DefeatGraph

DefeatGraph::DefeatGraph(std::vector<ArgumentId> arguments, std::vector<Edge> defeats)
    : arguments_(std::move(arguments)), defeats_(std::move(defeats)) {
  if (!std::is_sorted(arguments_.begin(), arguments_.end()) ||
      std::adjacent_find(arguments_.begin(), arguments_.end()) != arguments_.end()) {
    throw VafError(ErrorCode::DuplicateArgumentId,
                   "defeat graph arguments must be sorted and unique");
  }
  std::sort(defeats_.begin(), defeats_.end());
  defeats_.erase(std::unique(defeats_.begin(), defeats_.end()), defeats_.end());
  defeaters_.assign(size(), {});
  defeated_.assign(size(), {});
  for (auto [a, b] : defeats_) {
    if (a >= size() || b >= size())
      throw VafError(ErrorCode::UnknownArgument, "defeat edge outside the argument set");
    defeated_[a].push_back(b);
    defeaters_[b].push_back(a);
  }
  for (auto& list : defeaters_) std::sort(list.begin(), list.end());
}

DefeatGraph DefeatGraph::of_attacks(const Vaf& vaf) {
  return DefeatGraph(vaf.arguments(), vaf.attacks());
}

bool DefeatGraph::has_defeat(ArgIndex from, ArgIndex to) const {
  return std::binary_search(defeats_.begin(), defeats_.end(), Edge{from, to});
}

std::optional<ArgIndex> DefeatGraph::find(std::string_view id) const {
  return sorted_find(arguments_, id);
}

ArgIndex DefeatGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw VafError(ErrorCode::UnknownArgument, "unknown argument '" + std::string(id) + "'");
}

Extension DefeatGraph::names(std::span<const ArgIndex> members) const {
  Extension out;
  for (ArgIndex a : members) out.insert(arguments_[a]);
  return out;
}

bool DefeatGraph::is_acyclic() const {
  return !graph_has_cycle(
      size(), [this](ArgIndex a) -> const std::vector<ArgIndex>& { return defeated_[a]; },
      [](ArgIndex, ArgIndex) { return true; });
}

// ---------------------------------------------------------------------------
// Pointwise relations

void require_same_values(const Vaf& vaf, const ValueOrder& order) {
  if (order.values() != vaf.values()) {
    throw VafError(ErrorCode::UnknownValue,
                   "value order is defined over a different value set than the framework");
  }
}

bool value_pref(const ValueOrder& order, std::string_view v, std::string_view w) {
  return order.prefers(v, w);
}

bool defeats(const Vaf& vaf, const ValueOrder& order, ArgIndex a, ArgIndex b) {
  return vaf.has_attack(a, b) && !order.prefers(vaf.value_of(b), vaf.value_of(a));
}

bool defeats(const Vaf& vaf, const ValueOrder& order, std::string_view a,
             std::string_view b) {
  require_same_values(vaf, order);
  return defeats(vaf, order, vaf.index_of(a), vaf.index_of(b));
}

DefeatGraph induced_defeat_graph(const Vaf& vaf, const ValueOrder& order) {
  require_same_values(vaf, order);
  std::vector<Edge> kept;
  for (auto [a, b] : vaf.attacks())
    if (!order.prefers(vaf.value_of(b), vaf.value_of(a))) kept.emplace_back(a, b);
  return DefeatGraph(vaf.arguments(), std::move(kept));
}

namespace {

std::vector<ArgIndex> indices(const Vaf& vaf, const Extension& s) {
  std::vector<ArgIndex> out;
  out.reserve(s.size());
  for (const auto& id : s) out.push_back(vaf.index_of(id));
  return out;
}

}  // namespace

bool is_conflict_free(const Vaf& vaf, const ValueOrder& order, const Extension& s) {
  require_same_values(vaf, order);
  const auto members = indices(vaf, s);
  for (ArgIndex x : members)
    for (ArgIndex y : members)
      if (defeats(vaf, order, x, y)) return false;
  return true;
}

bool is_acceptable(const Vaf& vaf, const ValueOrder& order, std::string_view a,
                   const Extension& s) {
  require_same_values(vaf, order);
  const ArgIndex target = vaf.index_of(a);
  const auto members = indices(vaf, s);
  for (ArgIndex x : vaf.attackers_of(target)) {
    if (!defeats(vaf, order, x, target)) continue;
    bool answered = std::any_of(members.begin(), members.end(),
                                [&](ArgIndex y) { return defeats(vaf, order, y, x); });
    if (!answered) return false;
  }
  return true;
}

bool is_admissible(const Vaf& vaf, const ValueOrder& order, const Extension& s) {
  if (!is_conflict_free(vaf, order, s)) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](const ArgumentId& a) { return is_acceptable(vaf, order, a, s); });
}

// ---------------------------------------------------------------------------
// Monochromatic cycles

std::vector<std::vector<ArgumentId>> monochromatic_cycles(const Vaf& vaf) {
  std::vector<std::vector<ArgumentId>> cycles;
  const std::size_t n = vaf.size();
  std::vector<ArgIndex> path;
  std::vector<bool> on_path(n, false);

  // Every cycle is reported once, from its smallest index, which is also its
  // lexicographically smallest member since indices follow token order.
  std::function<void(ArgIndex, ArgIndex)> walk = [&](ArgIndex start, ArgIndex node) {
    for (ArgIndex next : vaf.targets_of(node)) {
      if (next < start || vaf.value_of(next) != vaf.value_of(start)) continue;
      if (next == start) {
        std::vector<ArgumentId> cycle;
        for (ArgIndex p : path) cycle.push_back(vaf.name(p));
        cycles.push_back(std::move(cycle));
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = true;
      path.push_back(next);
      walk(start, next);
      path.pop_back();
      on_path[next] = false;
    }
  };
  for (ArgIndex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    walk(s, s);
    on_path[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

bool has_monochromatic_cycle(const Vaf& vaf) {
  return graph_has_cycle(
      vaf.size(), [&](ArgIndex a) -> const std::vector<ArgIndex>& { return vaf.targets_of(a); },
      [&](ArgIndex a, ArgIndex b) { return vaf.value_of(a) == vaf.value_of(b); });
}

}  // namespace vafw
