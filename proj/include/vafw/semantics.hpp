#pragma once

#include "vafw/framework.hpp"

namespace vafw {

struct SemanticsResult {
  ExtensionSet preferred;
  ExtensionSet stable;
  /// Exactly one preferred extension: the dispute is resolvable.
  bool unique = false;
};

struct Acceptance {
  bool credulous = false;
  bool sceptical = false;

  friend bool operator==(const Acceptance&, const Acceptance&) = default;
};

/// Maximal admissible sets, by depth-first search over inclusion decisions.
/// Throws InstanceTooLarge above `limits.max_oracle_arguments` (hard cap 64).
ExtensionSet preferred_extensions(const DefeatGraph& g, const EngineLimits& limits = {});

/// Conflict-free sets defeating every outside argument. Searched
/// independently of the preferred enumeration.
ExtensionSet stable_extensions(const DefeatGraph& g, const EngineLimits& limits = {});

SemanticsResult solve(const DefeatGraph& g, const EngineLimits& limits = {});

/// Repeatedly accepts the currently undefeated arguments, discards what they
/// defeat and continues on the remainder. Requires a total order and a
/// framework without monochromatic cycles (MonochromaticCyclePresent).
Extension extend_algorithm(const Vaf& vaf, const ValueOrder& order);

/// Unique preferred extension. Decided without search when the defeat graph
/// is acyclic, by the oracle otherwise.
bool is_resolvable(const Vaf& vaf, const ValueOrder& order, const EngineLimits& limits = {});

Acceptance acceptance(const DefeatGraph& g, std::string_view a, const EngineLimits& limits = {});

}  // namespace vafw
