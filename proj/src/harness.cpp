#include "vafw/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "vafw/audience.hpp"
#include "vafw/chains.hpp"
#include "vafw/document.hpp"
#include "vafw/semantics.hpp"

namespace vafw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// std::mt19937_64 output is fixed by the standard; the distributions are
// not, so ranges are drawn by hand to keep sequences portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

std::string numbered(const std::string& prefix, std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n).size();
  return prefix + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::vector<ValueId> value_names(std::size_t k) {
  std::vector<ValueId> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

void check_spec(const GeneratorSpec& spec) {
  auto invalid = [](const std::string& what) { throw VafError(ErrorCode::InvalidSpec, what); };
  if (spec.min_arguments > spec.max_arguments) invalid("argument range is empty");
  if (spec.min_values == 0 || spec.min_values > spec.max_values) invalid("value range is invalid");
  if (spec.min_density < 0.0 || spec.max_density > 1.0 || spec.min_density > spec.max_density)
    invalid("density range must lie within [0, 1]");
  if (spec.family == Family::SimpleCycle) {
    if (!spec.chain_lengths.empty() && spec.chain_lengths.size() != spec.colours.size())
      invalid("chain layout needs one colour per chain");
    if (std::find(spec.chain_lengths.begin(), spec.chain_lengths.end(), 0u) !=
        spec.chain_lengths.end())
      invalid("chains must be non-empty");
    if (spec.chain_lengths.empty() && spec.max_arguments < 1) invalid("cycles need an argument");
  }
}

Vaf random_digraph(const GeneratorSpec& spec, Rng& rng) {
  const std::size_t n = rng.between(spec.min_arguments, spec.max_arguments);
  const std::size_t k = rng.between(spec.min_values, spec.max_values);
  const double density = rng.between(spec.min_density, spec.max_density);
  RawFramework raw;
  raw.values = value_names(k);
  for (std::size_t i = 1; i <= n; ++i)
    raw.arguments.push_back({numbered("a", i, n), raw.values[rng.between(0, k - 1)], {}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !spec.allow_self_attacks) continue;
      if (rng.unit() < density) raw.attacks.emplace_back(raw.arguments[i].id, raw.arguments[j].id);
    }
  return Vaf::validate(raw);
}

Vaf laid_out_cycle(const std::vector<std::size_t>& lengths, const std::vector<ValueId>& colours) {
  std::vector<ValueId> distinct(colours);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<char> initials;
  for (const auto& c : distinct) initials.push_back(c.empty() ? '?' : c.front());
  std::sort(initials.begin(), initials.end());
  const bool short_names =
      std::adjacent_find(initials.begin(), initials.end()) == initials.end();

  RawFramework raw;
  raw.values = distinct;
  std::map<ValueId, std::size_t> counter;
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    const std::string prefix = short_names ? colours[c].substr(0, 1) : colours[c];
    for (std::size_t i = 0; i < lengths[c]; ++i)
      raw.arguments.push_back({prefix + std::to_string(++counter[colours[c]]), colours[c], {}});
  }
  for (std::size_t i = 0; i < raw.arguments.size(); ++i)
    raw.attacks.emplace_back(raw.arguments[i].id,
                             raw.arguments[(i + 1) % raw.arguments.size()].id);
  return Vaf::validate(raw);
}

Vaf random_cycle(const GeneratorSpec& spec, Rng& rng) {
  const std::size_t n = rng.between(std::max<std::size_t>(spec.min_arguments, 1), spec.max_arguments);
  const std::size_t k = rng.between(spec.min_values, spec.max_values);
  RawFramework raw;
  raw.values = value_names(k);
  for (std::size_t i = 1; i <= n; ++i)
    raw.arguments.push_back({numbered("a", i, n), raw.values[rng.between(0, k - 1)], {}});
  for (std::size_t i = 0; i < n; ++i)
    raw.attacks.emplace_back(raw.arguments[i].id, raw.arguments[(i + 1) % n].id);
  return Vaf::validate(raw);
}

Vaf chain_of_chains(const GeneratorSpec& spec, Rng& rng) {
  const std::size_t n = rng.between(spec.min_arguments, spec.max_arguments);
  const std::size_t k = rng.between(spec.min_values, spec.max_values);
  RawFramework raw;
  raw.values = value_names(k);
  std::size_t made = 0;
  std::optional<std::string> previous;
  while (made < n) {
    const std::size_t length = std::min(rng.between(std::size_t{1}, std::size_t{3}), n - made);
    const ValueId& colour = raw.values[rng.between(0, k - 1)];
    for (std::size_t i = 0; i < length; ++i) {
      std::string id = numbered("a", ++made, n);
      raw.arguments.push_back({id, colour, {}});
      if (previous) raw.attacks.emplace_back(*previous, id);
      previous = id;
    }
  }
  return Vaf::validate(raw);
}

Vaf generate_from(const GeneratorSpec& spec, std::uint64_t instance_seed) {
  Rng rng(instance_seed);
  switch (spec.family) {
    case Family::RandomDigraph:
      for (;;) {
        Vaf vaf = random_digraph(spec, rng);
        if (!spec.avoid_monochromatic_cycles || !has_monochromatic_cycle(vaf)) return vaf;
      }
    case Family::SimpleCycle:
      if (!spec.chain_lengths.empty()) return laid_out_cycle(spec.chain_lengths, spec.colours);
      return random_cycle(spec, rng);
    case Family::ChainOfChains:
      return chain_of_chains(spec, rng);
  }
  throw VafError(ErrorCode::InvalidSpec, "unknown family");
}

}  // namespace

std::vector<GeneratedInstance> generate(const GeneratorSpec& spec) {
  check_spec(spec);
  std::vector<GeneratedInstance> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::uint64_t seed = spec.seed + i * 0x9E3779B97F4A7C15ULL;
    out.push_back({seed, generate_from(spec, seed)});
  }
  return out;
}

std::vector<Vaf> dichromatic_cycles_up_to_rotation(std::size_t max_length) {
  std::vector<Vaf> out;
  for (std::size_t n = 2; n <= max_length; ++n) {
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      bool smallest = true;
      for (std::size_t r = 1; r < n && smallest; ++r) {
        const std::uint32_t rotated = ((mask >> r) | (mask << (n - r))) & full;
        smallest = mask <= rotated;
      }
      if (!smallest) continue;
      RawFramework raw;
      raw.values = {"blue", "red"};
      for (std::size_t i = 0; i < n; ++i)
        raw.arguments.push_back({"a" + std::to_string(i + 1), (mask >> i) & 1u ? "red" : "blue", {}});
      for (std::size_t i = 0; i < n; ++i)
        raw.attacks.emplace_back(raw.arguments[i].id, raw.arguments[(i + 1) % n].id);
      out.push_back(Vaf::validate(raw));
    }
  }
  return out;
}

void CheckReport::merge(const CheckReport& other) {
  instances += other.instances;
  orders_checked += other.orders_checked;
  checks += other.checks;
  out_of_scope += other.out_of_scope;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
}

CheckReport cross_check(const Vaf& vaf, std::uint64_t seed, const EngineLimits& limits) {
  CheckReport report;
  report.instances = 1;
  const std::string instance = serialize_framework(to_document(vaf));
  auto expect = [&](bool ok, std::string property, const std::string& order, std::string detail) {
    ++report.checks;
    if (!ok) report.failures.push_back({std::move(property), order, std::move(detail), seed, instance});
  };

  const bool monochromatic = has_monochromatic_cycle(vaf);
  if (monochromatic) ++report.out_of_scope;
  const bool cycle = is_simple_cycle(vaf);
  const bool dichromatic_cycle = cycle && vaf.used_value_count() == 2;

  try {
    for (const auto& order : enumerate_total_orders(vaf.values(), limits)) {
      ++report.orders_checked;
      const std::string name = order.describe();
      const DefeatGraph g = induced_defeat_graph(vaf, order);
      const ExtensionSet preferred = preferred_extensions(g, limits);
      const ExtensionSet stable = stable_extensions(g, limits);

      for (const auto& e : preferred) {
        bool maximal = true;
        for (const auto& a : vaf.arguments()) {
          if (e.contains(a)) continue;
          Extension bigger = e;
          bigger.insert(a);
          if (is_admissible(vaf, order, bigger)) maximal = false;
        }
        expect(is_admissible(vaf, order, e) && maximal, "oracle-soundness", name,
               "preferred extension " + format_extension(e) + " is not maximal admissible");
      }
      for (const auto& e : stable) {
        expect(std::binary_search(preferred.begin(), preferred.end(), e), "stable-in-preferred",
               name, "stable extension " + format_extension(e) + " is not preferred");
      }
      if (monochromatic) continue;

      expect(preferred.size() == 1, "unique-preferred", name,
             std::to_string(preferred.size()) + " preferred extensions");
      if (preferred.size() != 1) continue;
      const Extension extended = extend_algorithm(vaf, order);
      expect(extended == preferred.front(), "extend-agrees", name,
             "EXTEND gave " + format_extension(extended) + ", oracle " +
                 format_extension(preferred.front()));
      if (cycle && vaf.used_value_count() >= 2) {
        expect(!preferred.front().empty(), "polychromatic-cycle-nonempty", name,
               "empty preferred extension");
      }
      if (dichromatic_cycle) {
        const Extension by_chains = dichromatic_cycle_extension(vaf, order);
        expect(by_chains == preferred.front(), "cycle-extension-by-chains", name,
               "chains gave " + format_extension(by_chains) + ", oracle " +
                   format_extension(preferred.front()));
      }
    }

    if (dichromatic_cycle) {
      EngineLimits oracle = limits;
      oracle.force_oracle = true;
      Extension objective;
      for (const auto& [arg, status] : status_map(vaf, oracle).statuses)
        if (status == ArgStatus::Objective) objective.insert(arg);
      const Extension predicted = objective_by_chain_theory(vaf);
      expect(predicted == objective, "cycle-objective-set", "all",
             "chains gave " + format_extension(predicted) + ", oracle " +
                 format_extension(objective));
    }

    if (!monochromatic && vaf.used_value_count() <= 2) {
      for (const auto& d : diagnose_dichromatic(vaf, limits)) {
        report.diagnostics.push_back(
            {"chain-classifier", "all",
             d.argument + ": predicted " + std::string(status_name(d.predicted)) + ", actual " +
                 std::string(status_name(d.actual)),
             seed, instance});
      }
    }
  } catch (const VafError& e) {
    expect(false, "engine-error", "", std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return report;
}

CheckReport run_verification(std::uint64_t seed, std::size_t count) {
  GeneratorSpec spec;
  spec.family = Family::RandomDigraph;
  spec.min_arguments = 1;
  spec.max_arguments = 8;
  spec.min_values = 1;
  spec.max_values = 3;
  spec.min_density = 0.15;
  spec.max_density = 0.5;
  spec.avoid_monochromatic_cycles = true;
  spec.count = count;
  spec.seed = seed;

  CheckReport report;
  for (const auto& instance : generate(spec)) report.merge(cross_check(instance.vaf, instance.seed));
  for (const auto& cycle : dichromatic_cycles_up_to_rotation(8)) report.merge(cross_check(cycle));
  return report;
}

nlohmann::json to_json(const CheckReport& report) {
  auto entries = [](const std::vector<CheckFailure>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : list)
      out.push_back({{"property", f.property},
                     {"order", f.order},
                     {"detail", f.detail},
                     {"seed", f.seed},
                     {"instance", f.instance}});
    return out;
  };
  return {{"instances", report.instances},
          {"ordersChecked", report.orders_checked},
          {"checks", report.checks},
          {"outOfScope", report.out_of_scope},
          {"passed", report.passed()},
          {"failures", entries(report.failures)},
          {"diagnostics", entries(report.diagnostics)}};
}

}  // namespace vafw
