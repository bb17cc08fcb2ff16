#include "doctest.h"

#include "support/builders.hpp"
#include "support/reference.hpp"
#include "vafw/fixtures.hpp"
#include "vafw/harness.hpp"

using namespace vafw;

namespace {

using Prefs = std::vector<std::pair<ValueId, ValueId>>;

std::vector<std::vector<ValueId>> rankings(const std::vector<ValueOrder>& orders) {
  std::vector<std::vector<ValueId>> out;
  for (const auto& o : orders) out.push_back(*o.ranking());
  return out;
}

ArgStatus from_ref(ref::Status s) {
  switch (s) {
    case ref::Status::Objective: return ArgStatus::Objective;
    case ref::Status::Subjective: return ArgStatus::Subjective;
    case ref::Status::Indefensible: return ArgStatus::Indefensible;
  }
  return ArgStatus::Subjective;
}

}  // namespace

TEST_CASE("total orders are enumerated lexicographically") {
  CHECK(rankings(enumerate_total_orders({"V1", "V2"})) ==
        std::vector<std::vector<ValueId>>{{"V1", "V2"}, {"V2", "V1"}});
  const auto three = rankings(enumerate_total_orders({"r", "g", "b"}));
  CHECK(three.size() == 6);
  CHECK(std::is_sorted(three.begin(), three.end()));
  CHECK(std::adjacent_find(three.begin(), three.end()) == three.end());
  CHECK(rankings(enumerate_total_orders({"v"})) == std::vector<std::vector<ValueId>>{{"v"}});
  CHECK_THROWS_AS(enumerate_total_orders({"a", "b", "c", "d", "e", "f", "g", "h", "i"}), VafError);
}

TEST_CASE("accepted sets per audience") {
  const Vaf hc = load_fixture("hal-carla").vaf();
  CHECK(accepted_under(hc, ValueOrder::total(hc, std::vector<ValueId>{"life", "property"})) ==
        Extension{"e", "f", "d", "b"});
  const Vaf ph = load_fixture("pharmacist").vaf();
  CHECK(accepted_under(ph, ValueOrder::total(ph, std::vector<ValueId>{"life", "property"})) ==
        Extension{"a", "c"});
  CHECK(accepted_under(ph, ValueOrder::total(ph, std::vector<ValueId>{"property", "life"})) ==
        Extension{"b", "d", "f"});
}

TEST_CASE("statuses of the case study") {
  const Vaf hc = load_fixture("hal-carla").vaf();
  CHECK(status_of(hc, "b") == ArgStatus::Objective);
  CHECK(status_of(hc, "e") == ArgStatus::Subjective);
  CHECK(status_of(hc, "a") == ArgStatus::Indefensible);
  CHECK_THROWS_AS(status_of(hc, "zz"), VafError);

  const StatusReport r = status_map(hc);
  CHECK(r.order_count == 2);
  CHECK(r.per_order.size() == 2);
  CHECK_FALSE(r.fallback_used);
  CHECK(r.statuses == std::map<ArgumentId, ArgStatus>{{"a", ArgStatus::Indefensible},
                                                      {"b", ArgStatus::Objective},
                                                      {"c", ArgStatus::Indefensible},
                                                      {"d", ArgStatus::Objective},
                                                      {"e", ArgStatus::Subjective},
                                                      {"f", ArgStatus::Objective}});
}

TEST_CASE("figure-3 statuses") {
  const auto s = status_map(load_fixture("figure-3").vaf()).statuses;
  CHECK(s.at("a") == ArgStatus::Objective);
  CHECK(s.at("b") == ArgStatus::Subjective);
  CHECK(s.at("c") == ArgStatus::Indefensible);
  CHECK(s.at("d") == ArgStatus::Objective);
  CHECK(s.at("e") == ArgStatus::Indefensible);
  CHECK(s.at("f") == ArgStatus::Objective);
}

TEST_CASE("an unattacked argument is objective") {
  const Vaf lone = build::vaf({{"a", "v"}}, {});
  CHECK(status_of(lone, "a") == ArgStatus::Objective);
}

TEST_CASE("status names") {
  CHECK(parse_status("objective") == ArgStatus::Objective);
  CHECK(parse_status("Indefensible") == ArgStatus::Indefensible);
  CHECK(status_name(ArgStatus::Subjective) == "Subjective");
  CHECK_THROWS_AS(parse_status("maybe"), VafError);
}

TEST_CASE("monochromatic cycles fall back to sceptical acceptance") {
  const Vaf quad = build::cycle({"w", "x", "y", "z"}, {"v", "v", "v", "v"});
  const StatusReport r = status_map(quad);
  CHECK(r.fallback_used);
  for (const auto& [a, s] : r.statuses) CHECK(s == ArgStatus::Indefensible);
}

TEST_CASE("seven-cycle under partial orders") {
  const Vaf seven = load_fixture("seven-cycle").vaf();
  const Prefs green_red_blue{{"green", "red"}, {"red", "blue"}};
  const Prefs red_green_blue{{"red", "green"}, {"green", "blue"}};
  const Prefs blue_green{{"blue", "green"}};

  const auto grb = ValueOrder::partial(seven, green_red_blue);
  REQUIRE(linear_extensions(grb).size() == 1);
  CHECK(accepted_under_partial(seven, grb, "b1"));
  CHECK_FALSE(accepted_under_partial(seven, ValueOrder::partial(seven, red_green_blue), "b1"));

  CHECK(accepted_under_partial(seven, ValueOrder::partial(seven, Prefs{}), "r1"));
  CHECK(accepted_under_partial(seven, ValueOrder::partial(seven, blue_green), "b1"));

  int accepting = 0;
  for (const auto& o : enumerate_total_orders(seven.values())) {
    const bool in = accepted_under(seven, o).contains("b1");
    accepting += in;
    if (!in) CHECK(*o.ranking() == std::vector<ValueId>{"red", "green", "blue"});
  }
  CHECK(accepting == 5);
}

TEST_CASE("linear extensions") {
  const std::vector<ValueId> values{"a", "b", "c", "d"};
  CHECK(linear_extensions(ValueOrder::partial(values, Prefs{})).size() == 24);
  const auto some = linear_extensions(ValueOrder::partial(values, Prefs{{"a", "b"}, {"c", "d"}}));
  CHECK(some.size() == 6);
  for (const auto& o : some) {
    CHECK(o.prefers("a", "b"));
    CHECK(o.prefers("c", "d"));
  }
  CHECK(std::is_sorted(some.begin(), some.end(), [](const ValueOrder& l, const ValueOrder& r) {
    return *l.ranking() < *r.ranking();
  }));
}

TEST_CASE("property: statuses match the reference and partition the arguments") {
  GeneratorSpec spec;
  spec.max_arguments = 7;
  spec.max_values = 3;
  spec.allow_self_attacks = true;
  spec.count = 150;
  spec.seed = 2024;
  for (const auto& g : generate(spec)) {
    const StatusReport r = status_map(g.vaf);
    CHECK(r.statuses.size() == g.vaf.size());
    const auto expected = ref::statuses(ref::model_of(g.vaf));
    for (const auto& [a, s] : expected) CHECK(r.statuses.at(a) == from_ref(s));
    for (const auto& a : g.vaf.arguments())
      if (g.vaf.attackers_of(g.vaf.index_of(a)).empty())
        CHECK(r.statuses.at(a) == ArgStatus::Objective);

    const auto none = ValueOrder::partial(g.vaf, Prefs{});
    for (const auto& [a, s] : r.statuses)
      CHECK(accepted_under_partial(g.vaf, none, a) == (s == ArgStatus::Objective));

    if (g.vaf.values().size() == 1)
      for (const auto& [a, s] : r.statuses) CHECK(s != ArgStatus::Subjective);
  }
}

TEST_CASE("property: forcing the oracle does not change statuses") {
  GeneratorSpec spec;
  spec.max_arguments = 8;
  spec.avoid_monochromatic_cycles = true;
  spec.count = 100;
  spec.seed = 8;
  EngineLimits oracle;
  oracle.force_oracle = true;
  for (const auto& g : generate(spec))
    CHECK(status_map(g.vaf).statuses == status_map(g.vaf, oracle).statuses);
}

TEST_CASE("property: acceptance is monotone in the partial order") {
  GeneratorSpec spec;
  spec.max_arguments = 7;
  spec.min_values = 3;
  spec.max_values = 3;
  spec.count = 60;
  spec.seed = 99;
  const std::vector<Prefs> growing{{}, {{"v1", "v2"}}, {{"v1", "v2"}, {"v2", "v3"}}};
  const std::vector<Prefs> other{{}, {{"v3", "v1"}}, {{"v3", "v1"}, {"v2", "v1"}}};
  for (const auto& g : generate(spec)) {
    for (const auto& chain : {growing, other}) {
      for (const auto& a : g.vaf.arguments()) {
        bool before = false;
        for (const auto& prefs : chain) {
          const bool now = accepted_under_partial(g.vaf, ValueOrder::partial(g.vaf, prefs), a);
          if (before) CHECK(now);
          before = now;
        }
      }
    }
  }
}
