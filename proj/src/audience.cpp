#include "vafw/audience.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "vafw/semantics.hpp"

namespace vafw {

std::string_view status_name(ArgStatus status) {
  switch (status) {
    case ArgStatus::Objective: return "Objective";
    case ArgStatus::Subjective: return "Subjective";
    case ArgStatus::Indefensible: return "Indefensible";
  }
  return "?";
}

ArgStatus parse_status(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "objective") return ArgStatus::Objective;
  if (lower == "subjective") return ArgStatus::Subjective;
  if (lower == "indefensible" || lower == "undefensible") return ArgStatus::Indefensible;
  throw VafError(ErrorCode::InvalidSpec, "unknown status '" + std::string(text) +
                                             "' (expected objective, subjective or indefensible)");
}

namespace {

void guard_values(std::size_t count, const EngineLimits& limits) {
  if (count > limits.max_values) {
    throw VafError(ErrorCode::TooManyValues,
                   std::to_string(count) + " values exceed the enumeration limit of " +
                       std::to_string(limits.max_values));
  }
}

}  // namespace

std::vector<ValueOrder> enumerate_total_orders(std::vector<ValueId> values,
                                               const EngineLimits& limits) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  guard_values(values.size(), limits);
  std::vector<ValueOrder> orders;
  std::vector<ValueId> ranking = values;
  do {
    orders.push_back(ValueOrder::total(values, ranking));
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return orders;
}

OrderOutcome evaluate_order(const Vaf& vaf, const ValueOrder& order,
                            const EngineLimits& limits) {
  require_same_values(vaf, order);
  OrderOutcome outcome;
  if (order.ranking()) outcome.ranking = *order.ranking();
  if (!limits.force_oracle && order.is_total() && !has_monochromatic_cycle(vaf)) {
    outcome.accepted = extend_algorithm(vaf, order);
    return outcome;
  }
  const ExtensionSet preferred = preferred_extensions(induced_defeat_graph(vaf, order), limits);
  outcome.sceptical_fallback = preferred.size() > 1;
  Extension common = preferred.front();
  for (const auto& e : preferred) {
    Extension kept;
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                          std::inserter(kept, kept.end()));
    common = std::move(kept);
  }
  outcome.accepted = std::move(common);
  return outcome;
}

Extension accepted_under(const Vaf& vaf, const ValueOrder& order, const EngineLimits& limits) {
  return evaluate_order(vaf, order, limits).accepted;
}

StatusReport status_map(const Vaf& vaf, const EngineLimits& limits) {
  StatusReport report;
  std::map<ArgumentId, std::size_t> hits;
  for (const auto& order : enumerate_total_orders(vaf.values(), limits)) {
    OrderOutcome outcome = evaluate_order(vaf, order, limits);
    for (const auto& a : outcome.accepted) ++hits[a];
    report.fallback_used = report.fallback_used || outcome.sceptical_fallback;
    report.per_order.push_back(std::move(outcome));
  }
  report.order_count = report.per_order.size();
  for (const auto& a : vaf.arguments()) {
    const std::size_t count = hits[a];
    report.statuses[a] = count == report.order_count ? ArgStatus::Objective
                         : count == 0                ? ArgStatus::Indefensible
                                                     : ArgStatus::Subjective;
  }
  return report;
}

ArgStatus status_of(const Vaf& vaf, std::string_view a, const EngineLimits& limits) {
  const ArgumentId& name = vaf.name(vaf.index_of(a));
  return status_map(vaf, limits).statuses.at(name);
}

std::vector<ValueOrder> linear_extensions(const ValueOrder& partial, const EngineLimits& limits) {
  const auto& values = partial.values();
  const std::size_t n = values.size();
  guard_values(n, limits);

  std::vector<ValueOrder> out;
  std::vector<ValueId> ranking;
  std::vector<bool> placed(n, false);
  // Values are tried in sorted order at each depth, so the output is sorted.
  std::function<void()> place = [&] {
    if (ranking.size() == n) {
      out.push_back(ValueOrder::total(values, ranking));
      return;
    }
    for (ValueIndex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool blocked = false;
      for (ValueIndex u = 0; u < n && !blocked; ++u)
        blocked = !placed[u] && u != v && partial.prefers(u, v);
      if (blocked) continue;
      placed[v] = true;
      ranking.push_back(values[v]);
      place();
      ranking.pop_back();
      placed[v] = false;
    }
  };
  place();
  return out;
}

bool accepted_under_partial(const Vaf& vaf, const ValueOrder& partial, std::string_view a,
                            const EngineLimits& limits) {
  require_same_values(vaf, partial);
  const ArgumentId& name = vaf.name(vaf.index_of(a));
  for (const auto& order : linear_extensions(partial, limits)) {
    if (!accepted_under(vaf, order, limits).contains(name)) return false;
  }
  return true;
}

}  // namespace vafw
