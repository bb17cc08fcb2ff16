#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "vafw/framework.hpp"

namespace vafw {

enum class Family { RandomDigraph, SimpleCycle, ChainOfChains };

struct GeneratorSpec {
  Family family = Family::RandomDigraph;
  std::size_t min_arguments = 1;
  std::size_t max_arguments = 8;
  std::size_t min_values = 1;
  std::size_t max_values = 3;
  double min_density = 0.15;
  double max_density = 0.5;
  bool allow_self_attacks = false;
  /// Resample random digraphs until no monochromatic cycle remains.
  bool avoid_monochromatic_cycles = false;
  /// Simple-cycle family: chain lengths around the cycle and their values.
  /// Empty means random.
  std::vector<std::size_t> chain_lengths;
  std::vector<ValueId> colours;
  std::size_t count = 1;
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  std::uint64_t seed = 0;  // regenerates this instance alone with count = 1
  Vaf vaf;
};

/// Same spec, same sequence. InvalidSpec for inconsistent ranges.
std::vector<GeneratedInstance> generate(const GeneratorSpec& spec);

/// Every two-coloured simple cycle with 2..max_length arguments, one per
/// rotation class, over the values "blue" and "red".
std::vector<Vaf> dichromatic_cycles_up_to_rotation(std::size_t max_length);

struct CheckFailure {
  std::string property;
  std::string order;
  std::string detail;
  std::uint64_t seed = 0;
  std::string instance;  // canonical document text
};

struct CheckReport {
  std::size_t instances = 0;
  std::size_t orders_checked = 0;
  std::size_t checks = 0;
  std::size_t out_of_scope = 0;  // instances with monochromatic cycles
  std::vector<CheckFailure> failures;
  /// Chain-predictor disagreements on general two-valued frameworks.
  std::vector<CheckFailure> diagnostics;

  bool passed() const { return failures.empty(); }
  void merge(const CheckReport& other);
};

/// Runs every applicable engine cross-check on one framework, for every total
/// order. Failures are recorded, never thrown.
CheckReport cross_check(const Vaf& vaf, std::uint64_t seed = 0, const EngineLimits& limits = {});

/// Default corpus: `count` seeded random frameworks without monochromatic
/// cycles plus every dichromatic cycle up to eight arguments.
CheckReport run_verification(std::uint64_t seed = 1, std::size_t count = 500);

nlohmann::json to_json(const CheckReport& report);

}  // namespace vafw
