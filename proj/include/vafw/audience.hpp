#pragma once

#include <map>
#include <string_view>

#include "vafw/framework.hpp"

namespace vafw {

enum class ArgStatus { Objective, Subjective, Indefensible };

std::string_view status_name(ArgStatus status);
/// Accepts "Objective"/"objective" and the other two names. Throws InvalidSpec.
ArgStatus parse_status(std::string_view text);

/// What one audience accepts.
struct OrderOutcome {
  std::vector<ValueId> ranking;
  Extension accepted;
  /// Several preferred extensions existed; `accepted` is their intersection.
  bool sceptical_fallback = false;
};

struct StatusReport {
  std::map<ArgumentId, ArgStatus> statuses;
  std::vector<OrderOutcome> per_order;
  std::size_t order_count = 0;
  bool fallback_used = false;
};

/// Every ranking of `values`, in lexicographic order. TooManyValues above
/// `limits.max_values`.
std::vector<ValueOrder> enumerate_total_orders(std::vector<ValueId> values,
                                               const EngineLimits& limits = {});

/// Accepted set for one audience: the unique preferred extension (via EXTEND)
/// when there are no monochromatic cycles, otherwise the sceptically accepted
/// arguments.
OrderOutcome evaluate_order(const Vaf& vaf, const ValueOrder& order,
                            const EngineLimits& limits = {});
Extension accepted_under(const Vaf& vaf, const ValueOrder& order,
                         const EngineLimits& limits = {});

ArgStatus status_of(const Vaf& vaf, std::string_view a, const EngineLimits& limits = {});
StatusReport status_map(const Vaf& vaf, const EngineLimits& limits = {});

/// Total orders extending `partial`, found by backtracking over topological
/// orders of the preference relation. Lexicographic order.
std::vector<ValueOrder> linear_extensions(const ValueOrder& partial,
                                          const EngineLimits& limits = {});

/// `a` is accepted by every audience whose ranking extends `partial`.
bool accepted_under_partial(const Vaf& vaf, const ValueOrder& partial, std::string_view a,
                            const EngineLimits& limits = {});

}  // namespace vafw
