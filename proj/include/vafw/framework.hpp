#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vafw/error.hpp"

namespace vafw {

using ArgumentId = std::string;
using ValueId = std::string;

/// A set of arguments. Ordered so that printing and comparison are stable.
using Extension = std::set<ArgumentId>;

/// Sorted, duplicate-free list of extensions.
using ExtensionSet = std::vector<Extension>;

using ArgIndex = std::size_t;
using ValueIndex = std::size_t;
using Edge = std::pair<ArgIndex, ArgIndex>;

/// Resource guards shared by the exhaustive parts of the engine.
struct EngineLimits {
  std::size_t max_oracle_arguments = 25;
  std::size_t max_values = 8;
  /// Skip the EXTEND fast path and always use exhaustive search.
  bool force_oracle = false;
};

struct RawArgument {
  std::string id;
  std::string value;
  std::optional<std::string> label;

  friend bool operator==(const RawArgument&, const RawArgument&) = default;
};

/// Unvalidated framework description, as read from a file or built by hand.
struct RawFramework {
  std::vector<RawArgument> arguments;
  std::vector<std::pair<std::string, std::string>> attacks;
  std::vector<std::string> values;

  friend bool operator==(const RawFramework&, const RawFramework&) = default;
};

/// A validated value-based argumentation framework: arguments, attacks, the
/// value set and the value assignment. Immutable once built. Arguments and
/// values are held in lexicographic order and addressed by index internally.
class Vaf {
 public:
  /// Checks every invariant and reports all violations at once. Duplicate
  /// attacks are dropped; a note is appended to `warnings` when given.
  static Vaf validate(const RawFramework& raw,
                      std::vector<std::string>* warnings = nullptr);

  std::size_t size() const noexcept { return arguments_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }

  const std::vector<ArgumentId>& arguments() const noexcept { return arguments_; }
  const std::vector<ValueId>& values() const noexcept { return values_; }
  const std::vector<Edge>& attacks() const noexcept { return attacks_; }

  std::optional<ArgIndex> find(std::string_view id) const;
  /// Throws UnknownArgument.
  ArgIndex index_of(std::string_view id) const;
  std::optional<ValueIndex> find_value(std::string_view value) const;
  /// Throws UnknownValue.
  ValueIndex value_index_of(std::string_view value) const;

  const ArgumentId& name(ArgIndex a) const { return arguments_[a]; }
  ValueIndex value_of(ArgIndex a) const { return value_of_[a]; }
  const ValueId& value_name_of(ArgIndex a) const { return values_[value_of_[a]]; }
  const std::optional<std::string>& label(ArgIndex a) const { return labels_[a]; }

  const std::vector<ArgIndex>& attackers_of(ArgIndex a) const { return attackers_[a]; }
  const std::vector<ArgIndex>& targets_of(ArgIndex a) const { return targets_[a]; }
  bool has_attack(ArgIndex from, ArgIndex to) const;

  /// Distinct values carried by at least one argument.
  std::size_t used_value_count() const;

  RawFramework to_raw() const;
  Extension names(std::span<const ArgIndex> members) const;

  friend bool operator==(const Vaf&, const Vaf&) = default;

 private:
  Vaf() = default;

  std::vector<ArgumentId> arguments_;
  std::vector<ValueId> values_;
  std::vector<ValueIndex> value_of_;
  std::vector<std::optional<std::string>> labels_;
  std::vector<Edge> attacks_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
};

/// An audience: a strict preference over a fixed, sorted value set. A total
/// order ranks every value; a partial order is given as preference pairs and
/// consulted through its transitive closure, computed once on construction.
class ValueOrder {
 public:
  /// `ranking` lists every value exactly once, most preferred first.
  static ValueOrder total(std::vector<ValueId> values,
                          std::span<const ValueId> ranking);
  static ValueOrder total(const Vaf& vaf, std::span<const ValueId> ranking);

  /// Each pair (v, w) states that v is strictly preferred to w. Throws
  /// CyclicPreference when the closure is not irreflexive.
  static ValueOrder partial(
      std::vector<ValueId> values,
      std::span<const std::pair<ValueId, ValueId>> prefers);
  static ValueOrder partial(
      const Vaf& vaf, std::span<const std::pair<ValueId, ValueId>> prefers);

  /// No preferences at all: every attack succeeds.
  static ValueOrder none(std::vector<ValueId> values);

  const std::vector<ValueId>& values() const noexcept { return values_; }
  bool is_total() const noexcept { return ranking_.has_value(); }
  const std::optional<std::vector<ValueId>>& ranking() const noexcept { return ranking_; }
  const std::vector<std::pair<ValueId, ValueId>>& declared() const noexcept { return declared_; }

  bool prefers(ValueIndex v, ValueIndex w) const {
    return closure_[v * values_.size() + w] != 0;
  }
  /// Throws UnknownValue.
  bool prefers(std::string_view v, std::string_view w) const;

  /// "life > property" for total orders, "green > red, red > blue" otherwise.
  std::string describe() const;

  friend bool operator==(const ValueOrder&, const ValueOrder&) = default;

 private:
  ValueOrder() = default;
  ValueIndex index_of(std::string_view v) const;

  std::vector<ValueId> values_;
  std::optional<std::vector<ValueId>> ranking_;
  std::vector<std::pair<ValueId, ValueId>> declared_;
  std::vector<unsigned char> closure_;
};

/// The arguments of a framework together with the attacks that succeed.
class DefeatGraph {
 public:
  /// `arguments` must be sorted and unique; edges index into it.
  DefeatGraph(std::vector<ArgumentId> arguments, std::vector<Edge> defeats);

  /// Every attack treated as a defeat (the plain attack graph).
  static DefeatGraph of_attacks(const Vaf& vaf);

  std::size_t size() const noexcept { return arguments_.size(); }
  const std::vector<ArgumentId>& arguments() const noexcept { return arguments_; }
  const std::vector<Edge>& defeats() const noexcept { return defeats_; }
  const std::vector<ArgIndex>& defeaters_of(ArgIndex a) const { return defeaters_[a]; }
  const std::vector<ArgIndex>& defeated_by(ArgIndex a) const { return defeated_[a]; }
  bool has_defeat(ArgIndex from, ArgIndex to) const;
  std::optional<ArgIndex> find(std::string_view id) const;
  ArgIndex index_of(std::string_view id) const;
  Extension names(std::span<const ArgIndex> members) const;

  /// True when the defeat relation has no directed cycle (self-loops count).
  bool is_acyclic() const;

  friend bool operator==(const DefeatGraph& l, const DefeatGraph& r) {
    return l.arguments_ == r.arguments_ && l.defeats_ == r.defeats_;
  }

 private:
  std::vector<ArgumentId> arguments_;
  std::vector<Edge> defeats_;
  std::vector<std::vector<ArgIndex>> defeaters_;
  std::vector<std::vector<ArgIndex>> defeated_;
};

bool value_pref(const ValueOrder& order, std::string_view v, std::string_view w);

/// `a` attacks `b` and `b`'s value is not strictly preferred to `a`'s.
bool defeats(const Vaf& vaf, const ValueOrder& order, std::string_view a,
             std::string_view b);
bool defeats(const Vaf& vaf, const ValueOrder& order, ArgIndex a, ArgIndex b);

DefeatGraph induced_defeat_graph(const Vaf& vaf, const ValueOrder& order);

bool is_conflict_free(const Vaf& vaf, const ValueOrder& order, const Extension& s);
bool is_acceptable(const Vaf& vaf, const ValueOrder& order, std::string_view a,
                   const Extension& s);
bool is_admissible(const Vaf& vaf, const ValueOrder& order, const Extension& s);

/// Simple directed attack cycles whose arguments all carry one value. Each
/// cycle starts at its lexicographically smallest member; the list is sorted.
std::vector<std::vector<ArgumentId>> monochromatic_cycles(const Vaf& vaf);
bool has_monochromatic_cycle(const Vaf& vaf);

/// Throws UnknownValue unless `order` is defined over exactly `vaf`'s values.
void require_same_values(const Vaf& vaf, const ValueOrder& order);

}  // namespace vafw
