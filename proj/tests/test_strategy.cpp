#include "doctest.h"

#include "support/builders.hpp"
#include "support/reference.hpp"
#include "vafw/fixtures.hpp"
#include "vafw/harness.hpp"
#include "vafw/strategy.hpp"

using namespace vafw;

namespace {

bool has_move(const std::vector<Move>& moves, const std::string& target, const std::string& value) {
  return std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
    return m.attack_target == target && m.new_value == value;
  });
}

bool has_suggestion(const std::vector<MoveSuggestion>& list, const std::string& target,
                    const std::string& value) {
  return std::any_of(list.begin(), list.end(), [&](const MoveSuggestion& s) {
    return s.move.attack_target == target && s.move.new_value == value;
  });
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const VafError& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

const ArgStatus all_statuses[] = {ArgStatus::Objective, ArgStatus::Subjective,
                                  ArgStatus::Indefensible};

ArgStatus reference_status(const Vaf& v, const std::string& a) {
  switch (ref::statuses(ref::model_of(v)).at(a)) {
    case ref::Status::Objective: return ArgStatus::Objective;
    case ref::Status::Subjective: return ArgStatus::Subjective;
    case ref::Status::Indefensible: return ArgStatus::Indefensible;
  }
  return ArgStatus::Subjective;
}

}  // namespace

TEST_CASE("candidates for making b objective in the pharmacist case") {
  const Vaf ph = load_fixture("pharmacist").vaf();
  const auto moves = candidate_moves(ph, "b", ArgStatus::Objective);
  for (const char* target : {"a", "c"})
    for (const char* value : {"life", "property"}) CHECK(has_move(moves, target, value));
  for (const auto& m : moves) CHECK(m.new_argument == "n1");
}

TEST_CASE("candidates for an indefensible argument include its odd predecessor") {
  const auto moves = candidate_moves(load_fixture("figure-3").vaf(), "e", ArgStatus::Objective);
  CHECK(has_move(moves, "d", "blue"));
}

TEST_CASE("candidate preconditions") {
  const Vaf hc = load_fixture("hal-carla").vaf();
  CHECK(code_of([&] { candidate_moves(hc, "b", ArgStatus::Objective); }) ==
        ErrorCode::StatusAlreadyDesired);
  CHECK(code_of([&] { candidate_moves(hc, "zz", ArgStatus::Objective); }) ==
        ErrorCode::UnknownArgument);
  CHECK(code_of([] {
          candidate_moves(load_fixture("seven-cycle").vaf(), "b1", ArgStatus::Objective);
        }) == ErrorCode::NotDichromatic);
}

TEST_CASE("verified suggestions") {
  const Vaf ph = load_fixture("pharmacist").vaf();
  const auto found = suggest_moves(ph, "b", ArgStatus::Objective);
  CHECK_FALSE(found.empty());
  CHECK(has_suggestion(found, "a", "life"));
  for (const auto& s : found) {
    CHECK(s.verified);
    CHECK(s.resulting_status == ArgStatus::Objective);
  }

  const Vaf hc = load_fixture("hal-carla").vaf();
  CHECK(suggest_moves(hc, "a", ArgStatus::Objective).empty());
  SuggestOptions exhaustive;
  exhaustive.exhaustive = true;
  CHECK(suggest_moves(hc, "a", ArgStatus::Objective, exhaustive).empty());
}

TEST_CASE("applying a move") {
  const Vaf ph = load_fixture("pharmacist").vaf();
  const Move g{"g", "life", "a", "manual"};
  const Vaf more = apply_move(ph, g);
  CHECK(more.size() == 6);
  CHECK(more.attacks().size() == ph.attacks().size() + 1);
  CHECK(status_of(more, "a") == ArgStatus::Indefensible);
  CHECK(reference_status(more, "a") == ArgStatus::Indefensible);
  CHECK(ph.size() == 5);

  CHECK(code_of([&] { apply_move(more, g); }) == ErrorCode::DuplicateArgumentId);
  CHECK(code_of([&] { apply_move(ph, Move{"h", "honour", "a", ""}); }) == ErrorCode::UnknownValue);
  CHECK(code_of([&] { apply_move(ph, Move{"h", "life", "zz", ""}); }) == ErrorCode::UnknownArgument);
  CHECK(code_of([&] { apply_move(ph, Move{"", "life", "a", ""}); }) == ErrorCode::InvalidIdentifier);
}

TEST_CASE("fresh identifiers skip collisions") {
  CHECK(fresh_argument_id(load_fixture("hal-carla").vaf()) == "n1");
  const Vaf taken = build::vaf({{"n1", "v"}, {"n2", "v"}, {"n4", "v"}}, {});
  CHECK(fresh_argument_id(taken) == "n3");
}

TEST_CASE("property: every suggestion replays to the desired status") {
  std::size_t replayed = 0;
  for (const auto& name : fixture_names()) {
    const Vaf v = load_fixture(name).vaf();
    if (v.used_value_count() > 2) continue;
    const auto current = status_map(v).statuses;
    for (const auto& target : v.arguments())
      for (ArgStatus desired : all_statuses) {
        if (current.at(target) == desired) continue;
        for (const auto& s : suggest_moves(v, target, desired)) {
          const Vaf after = apply_move(v, s.move);
          CHECK(status_of(after, target) == desired);
          CHECK(reference_status(after, target) == desired);
          ++replayed;
        }
      }
  }
  CHECK(replayed > 0);
}

TEST_CASE("property: apply_move adds one argument and one attack") {
  GeneratorSpec spec;
  spec.max_arguments = 6;
  spec.max_values = 2;
  spec.min_arguments = 1;
  spec.count = 50;
  spec.seed = 3;
  for (const auto& g : generate(spec)) {
    const Vaf before = g.vaf;
    const Move m{fresh_argument_id(g.vaf), g.vaf.values().front(), g.vaf.arguments().front(), ""};
    const Vaf after = apply_move(g.vaf, m);
    CHECK(g.vaf == before);
    CHECK(after.size() == before.size() + 1);
    CHECK(after.attacks().size() == before.attacks().size() + 1);
    CHECK(after.has_attack(after.index_of(m.new_argument), after.index_of(m.attack_target)));
  }
}

TEST_CASE("property: exhaustive mode finds a move whenever one exists") {
  GeneratorSpec spec;
  spec.min_arguments = 2;
  spec.max_arguments = 6;
  spec.min_values = 2;
  spec.max_values = 2;
  spec.count = 40;
  spec.seed = 21;
  SuggestOptions exhaustive;
  exhaustive.exhaustive = true;
  std::size_t template_misses = 0, cases = 0;
  for (const auto& g : generate(spec)) {
    const Vaf& v = g.vaf;
    if (v.used_value_count() > 2) continue;
    const auto current = status_map(v).statuses;
    for (const auto& target : v.arguments())
      for (ArgStatus desired : all_statuses) {
        if (current.at(target) == desired) continue;
        bool achievable = false;
        for (const auto& attacked : v.arguments())
          for (const auto& value : v.values()) {
            const Vaf after = apply_move(v, Move{fresh_argument_id(v), value, attacked, ""});
            achievable = achievable || status_of(after, target) == desired;
          }
        const bool found = !suggest_moves(v, target, desired, exhaustive).empty();
        CHECK(found == achievable);
        if (achievable) {
          ++cases;
          template_misses += suggest_moves(v, target, desired).empty();
        }
      }
  }
  MESSAGE("template mode missed " << template_misses << " of " << cases << " achievable cases");
}
