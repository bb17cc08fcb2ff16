#include "doctest.h"

#include "support/builders.hpp"
#include "support/reference.hpp"
#include "vafw/chains.hpp"
#include "vafw/document.hpp"
#include "vafw/fixtures.hpp"
#include "vafw/harness.hpp"
#include "vafw/semantics.hpp"

using namespace vafw;

namespace {

using Members = std::vector<std::vector<ArgumentId>>;

Members members(const ChainDecomposition& d) {
  Members out;
  for (const auto& c : d.chains) out.push_back(c.members);
  return out;
}

ValueOrder rank(const Vaf& v, std::vector<ValueId> r) { return ValueOrder::total(v, r); }

Extension objective_by_reference(const Vaf& v) {
  Extension out;
  for (const auto& [a, s] : ref::statuses(ref::model_of(v)))
    if (s == ref::Status::Objective) out.insert(a);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const VafError& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("figure-2 decomposition") {
  const ChainDecomposition d = decompose_chains(load_fixture("figure-2").vaf());
  CHECK(members(d) == Members{{"a", "b", "c"}, {"d"}, {"e", "f", "g", "c"}});
  CHECK(d.effective_parity.at("c") == Parity::Even);
  CHECK(d.positions.at("c").size() == 2);
  const auto d_chain = static_cast<std::size_t>(1);
  for (std::size_t x : {std::size_t{0}, std::size_t{2}})
    CHECK(std::find(d.precedes.begin(), d.precedes.end(), std::pair{x, d_chain}) != d.precedes.end());
}

TEST_CASE("figure-3 decomposition") {
  const ChainDecomposition d = decompose_chains(load_fixture("figure-3").vaf());
  CHECK(members(d) == Members{{"a"}, {"b", "c"}, {"c"}, {"d", "e"}, {"f"}});
}

TEST_CASE("a lone argument is one chain") {
  const ChainDecomposition d = decompose_chains(build::vaf({{"a", "v"}}, {}));
  CHECK(members(d) == Members{{"a"}});
  CHECK(d.predecessors.front().empty());
  CHECK(d.preceded_only_by_even(0));
}

TEST_CASE("classification examples") {
  const Vaf tri = build::cycle({"r1", "r2", "b1"}, {"red", "red", "blue"});
  CHECK(classify_dichromatic(tri).status.at("b1") == ArgStatus::Objective);

  const auto fig3 = classify_dichromatic(load_fixture("figure-3").vaf());
  CHECK(fig3.status.at("d") == ArgStatus::Objective);
  CHECK(fig3.status.at("e") == ArgStatus::Indefensible);
  CHECK(fig3.status.at("c") == ArgStatus::Indefensible);
  CHECK(fig3.rule.at("c") == ClassificationRule::EvenAndDirectOddAttack);

  CHECK(classify_dichromatic(load_fixture("pharmacist").vaf()).status.at("b") ==
        ArgStatus::Subjective);
  CHECK(code_of([] { classify_dichromatic(load_fixture("seven-cycle").vaf()); }) ==
        ErrorCode::NotDichromatic);
}

TEST_CASE("cycle extension read off the chains") {
  const Vaf four = load_fixture("hal-carla-4cycle").vaf();
  CHECK(dichromatic_cycle_extension(four, rank(four, {"life", "property"})) == Extension{"a", "c"});

  const Vaf even = build::cycle({"r1", "r2", "b1", "b2"}, {"red", "red", "blue", "blue"});
  CHECK(dichromatic_cycle_extension(even, rank(even, {"red", "blue"})) == Extension{"r1", "b1"});
  CHECK(dichromatic_cycle_extension(even, rank(even, {"blue", "red"})) == Extension{"r1", "b1"});

  const Vaf five = load_fixture("hal-carla-5cycle").vaf();
  for (const auto& o : enumerate_total_orders(five.values()))
    CHECK(dichromatic_cycle_extension(five, o).contains("b"));
}

TEST_CASE("objective arguments read off the chains") {
  CHECK(objective_by_chain_theory(load_fixture("hal-carla-5cycle").vaf()) == Extension{"b"});
  CHECK(objective_by_chain_theory(load_fixture("hal-carla-4cycle").vaf()).empty());
  const Vaf tri = build::cycle({"r1", "r2", "b1"}, {"red", "red", "blue"});
  CHECK(objective_by_chain_theory(tri) == Extension{"b1"});
}

TEST_CASE("cycle theory preconditions") {
  const Vaf hc = load_fixture("hal-carla").vaf();
  CHECK(code_of([&] { dichromatic_cycle_extension(hc, rank(hc, {"life", "property"})); }) ==
        ErrorCode::NotASimpleCycle);
  const Vaf mono = build::cycle({"x", "y", "z"}, {"v", "v", "v"});
  CHECK(code_of([&] { objective_by_chain_theory(mono); }) == ErrorCode::NotDichromatic);
  const Vaf four = load_fixture("hal-carla-4cycle").vaf();
  CHECK(code_of([&] { dichromatic_cycle_extension(four, ValueOrder::none(four.values())); }) ==
        ErrorCode::InvalidOrder);
  CHECK(is_simple_cycle(four));
  CHECK_FALSE(is_simple_cycle(hc));
}

TEST_CASE("property: chains are well formed and cover every argument") {
  GeneratorSpec spec;
  spec.max_arguments = 8;
  spec.max_values = 2;
  spec.avoid_monochromatic_cycles = true;
  spec.count = 300;
  spec.seed = 12;
  for (const auto& g : generate(spec)) {
    const Vaf& v = g.vaf;
    const ChainDecomposition d = decompose_chains(v);
    for (const auto& a : v.arguments()) CHECK(d.positions.contains(a));
    for (const auto& c : d.chains) {
      REQUIRE_FALSE(c.members.empty());
      for (const auto& m : c.members) CHECK(v.value_name_of(v.index_of(m)) == c.value);
      auto in_chain_attackers = [&](std::size_t i) {
        std::vector<ArgumentId> out;
        for (std::size_t j = 0; j < c.members.size(); ++j)
          if (j != i && v.has_attack(v.index_of(c.members[j]), v.index_of(c.members[i])))
            out.push_back(c.members[j]);
        return out;
      };
      if (c.members.size() > 1) CHECK(in_chain_attackers(0).empty());
      for (std::size_t i = 1; i < c.members.size(); ++i) {
        INFO(serialize_framework(to_document(v)));
        const auto attackers = in_chain_attackers(i);
        const bool multi_terminus = i + 1 == c.members.size() &&
                                    v.attackers_of(v.index_of(c.members[i])).size() > 1;
        if (multi_terminus)
          CHECK(std::find(attackers.begin(), attackers.end(), c.members[i - 1]) != attackers.end());
        else
          CHECK(attackers == std::vector<ArgumentId>{c.members[i - 1]});
      }
    }
    CHECK(std::is_sorted(d.chains.begin(), d.chains.end()));
  }
}

TEST_CASE("property: simple dichromatic cycles up to ten arguments") {
  for (const Vaf& cycle : dichromatic_cycles_up_to_rotation(10)) {
    const ref::Model m = ref::model_of(cycle);
    for (const auto& o : enumerate_total_orders(cycle.values())) {
      const auto pref = ref::audience(m, *o.ranking()).preferred();
      REQUIRE(pref.size() == 1);
      CHECK(dichromatic_cycle_extension(cycle, o) == pref.front());
    }
    CHECK(objective_by_chain_theory(cycle) == objective_by_reference(cycle));
  }
}

TEST_CASE("property: the classifier agrees with the audience enumeration on the fixtures") {
  for (const char* name : {"figure-2", "figure-3", "hal-carla", "pharmacist"}) {
    const Vaf v = load_fixture(name).vaf();
    CHECK(classify_dichromatic(v).status == status_map(v).statuses);
    CHECK(diagnose_dichromatic(v).empty());
  }
}

TEST_CASE("property: classification does not depend on input order") {
  GeneratorSpec spec;
  spec.max_arguments = 8;
  spec.max_values = 2;
  spec.count = 150;
  spec.seed = 4;
  for (const auto& g : generate(spec)) {
    RawFramework raw = g.vaf.to_raw();
    std::reverse(raw.arguments.begin(), raw.arguments.end());
    std::reverse(raw.attacks.begin(), raw.attacks.end());
    const Vaf shuffled = Vaf::validate(raw);
    const auto a = classify_dichromatic(g.vaf);
    const auto b = classify_dichromatic(shuffled);
    CHECK(a.status == b.status);
    CHECK(a.rule == b.rule);
    CHECK(members(decompose_chains(g.vaf)) == members(decompose_chains(shuffled)));
  }
}

TEST_CASE("diagnostics are reported, not thrown") {
  GeneratorSpec spec;
  spec.max_arguments = 8;
  spec.max_values = 2;
  spec.avoid_monochromatic_cycles = true;
  spec.count = 200;
  spec.seed = 17;
  std::size_t disagreements = 0;
  for (const auto& g : generate(spec)) {
    const auto d = diagnose_dichromatic(g.vaf);
    const auto truth = status_map(g.vaf).statuses;
    for (const auto& x : d) {
      CHECK(truth.at(x.argument) == x.actual);
      CHECK(x.predicted != x.actual);
    }
    disagreements += d.size();
  }
  MESSAGE("classifier disagreements on random two-valued frameworks: " << disagreements);
}
