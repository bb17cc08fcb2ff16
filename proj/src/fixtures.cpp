#include "vafw/fixtures.hpp"

#include <functional>

namespace vafw {

namespace {

using Statuses = std::map<ArgumentId, ArgStatus>;
constexpr auto Obj = ArgStatus::Objective;
constexpr auto Sub = ArgStatus::Subjective;
constexpr auto Ind = ArgStatus::Indefensible;

FrameworkDocument make_document(
    std::vector<std::string> values,
    std::vector<std::pair<std::string, std::string>> args,
    std::vector<std::pair<std::string, std::string>> attacks,
    std::map<std::string, std::string> labels = {}, std::vector<NamedOrder> orders = {}) {
  FrameworkDocument doc;
  doc.framework.values = std::move(values);
  for (auto& [id, value] : args) {
    RawArgument a{id, value, std::nullopt};
    if (auto it = labels.find(id); it != labels.end()) a.label = it->second;
    doc.framework.arguments.push_back(std::move(a));
  }
  doc.framework.attacks = std::move(attacks);
  doc.orders = std::move(orders);
  return canonicalize(std::move(doc));
}

std::vector<ArgumentId> letters(std::string_view s) {
  std::vector<ArgumentId> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

const std::vector<NamedOrder> kLifeProperty = {
    {"life-first", {"life", "property"}},
    {"property-first", {"property", "life"}},
};

const std::map<std::string, std::string> kHalCarlaLabels = {
    {"a", "Hal may use Carla's insulin to save his life"},
    {"b", "whoever infringes property rights must compensate"},
    {"c", "nobody should die because of poverty"},
    {"d", "starvation is no defence against theft"},
    {"e", "Hal endangers Carla's life"},
    {"f", "nobody may save their life at the cost of another's"},
};

const std::vector<std::pair<std::string, std::string>> kHalCarlaArgs = {
    {"a", "life"}, {"b", "property"}, {"c", "life"},
    {"d", "property"}, {"e", "life"}, {"f", "life"}};

const std::vector<std::pair<std::string, std::string>> kHalCarlaAttacks = {
    {"b", "a"}, {"b", "e"}, {"c", "b"}, {"d", "c"},
    {"a", "d"}, {"e", "a"}, {"f", "c"}, {"a", "f"}};

std::vector<std::pair<std::string, std::string>> without(
    const std::vector<std::pair<std::string, std::string>>& pairs, const std::string& id) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : pairs)
    if (p.first != id && p.second != id) out.push_back(p);
  return out;
}

Fixture hal_carla() {
  Fixture f;
  f.name = "hal-carla";
  f.description = "Hal takes Carla's insulin: six arguments over life and property";
  f.document = make_document({"life", "property"}, kHalCarlaArgs, kHalCarlaAttacks,
                             kHalCarlaLabels, kLifeProperty);
  f.positions = {{{"life", "property"}, {"b", "d", "e", "f"}},
                 {{"property", "life"}, {"b", "d", "f"}}};
  f.statuses = {{"a", Ind}, {"b", Obj}, {"c", Ind}, {"d", Obj}, {"e", Sub}, {"f", Obj}};
  f.chains = std::vector<std::vector<ArgumentId>>{
      {"a"}, {"b"}, {"c"}, {"d"}, {"e", "a"}, {"f", "c"}};
  f.notes = "Positions and statuses as worked through in the case study. Chains from "
            "the splitting rules: a and c each close a life chain and head their own.";
  return f;
}

Fixture hal_carla_4cycle() {
  Fixture f;
  f.name = "hal-carla-4cycle";
  f.description = "The alternating four cycle a, b, c, d of the insulin dispute";
  f.document = make_document({"life", "property"},
                             {{"a", "life"}, {"b", "property"}, {"c", "life"}, {"d", "property"}},
                             {{"b", "a"}, {"c", "b"}, {"d", "c"}, {"a", "d"}},
                             kHalCarlaLabels, kLifeProperty);
  f.positions = {{{"life", "property"}, {"a", "c"}}, {{"property", "life"}, {"b", "d"}}};
  f.statuses = {{"a", Sub}, {"b", Sub}, {"c", Sub}, {"d", Sub}};
  f.chains = std::vector<std::vector<ArgumentId>>{{"a"}, {"b"}, {"c"}, {"d"}};
  f.notes = "Valuing life rejects b and d; valuing property rejects a and c.";
  return f;
}

Fixture hal_carla_5cycle() {
  Fixture f;
  f.name = "hal-carla-5cycle";
  f.description = "The five cycle with a chain of four life arguments and one property argument";
  f.document = make_document(
      {"life", "property"},
      {{"a", "life"}, {"b", "property"}, {"c", "life"}, {"e", "life"}, {"f", "life"}},
      {{"e", "a"}, {"a", "f"}, {"f", "c"}, {"c", "b"}, {"b", "e"}}, kHalCarlaLabels,
      kLifeProperty);
  f.positions = {{{"life", "property"}, {"b", "e", "f"}},
                 {{"property", "life"}, {"a", "b", "c"}}};
  f.statuses = {{"a", Sub}, {"b", Obj}, {"c", Sub}, {"e", Sub}, {"f", Sub}};
  f.chains = std::vector<std::vector<ArgumentId>>{{"b"}, {"e", "a", "f", "c"}};
  f.notes = "b follows the even chain eafc and is objectively acceptable. The other "
            "positions were derived by brute force over both orders.";
  return f;
}

Fixture pharmacist() {
  Fixture f;
  f.name = "pharmacist";
  f.description = "Carla is a pharmacist: the insulin dispute without argument e";
  std::vector<std::pair<std::string, std::string>> args;
  for (const auto& a : kHalCarlaArgs)
    if (a.first != "e") args.push_back(a);
  f.document = make_document({"life", "property"}, args, without(kHalCarlaAttacks, "e"),
                             kHalCarlaLabels, kLifeProperty);
  f.positions = {{{"life", "property"}, {"a", "c"}}, {{"property", "life"}, {"b", "d", "f"}}};
  f.statuses = {{"a", Sub}, {"b", Sub}, {"c", Sub}, {"d", Sub}, {"f", Sub}};
  f.chains = std::vector<std::vector<ArgumentId>>{{"a", "f", "c"}, {"b"}, {"c"}, {"d"}};
  f.notes = "Removing e leaves two even cycles; b is no longer objectively acceptable.";
  return f;
}

Fixture pharmacist_extended() {
  Fixture f;
  f.name = "pharmacist-extended";
  f.description = "Pharmacist dispute extended with g, the factual h and k";
  std::vector<std::pair<std::string, std::string>> args;
  for (const auto& a : kHalCarlaArgs)
    if (a.first != "e") args.push_back(a);
  args.insert(args.end(), {{"g", "life"}, {"h", "life"}, {"k", "life"}});
  auto attacks = without(kHalCarlaAttacks, "e");
  attacks.insert(attacks.end(), {{"g", "a"}, {"h", "g"}, {"k", "h"}});
  auto labels = kHalCarlaLabels;
  labels["g"] = "another diabetic relies on Carla's stock";
  labels["h"] = "Carla is well stocked";
  labels["k"] = "Hal cannot know Carla's stock level";
  f.document = make_document({"life", "property"}, args, attacks, labels, kLifeProperty);
  f.positions = {{{"life", "property"}, {"b", "d", "f", "g", "k"}},
                 {{"property", "life"}, {"b", "d", "f", "g", "k"}}};
  f.statuses = {{"a", Ind}, {"b", Obj}, {"c", Ind}, {"d", Obj},
                {"f", Obj}, {"g", Obj}, {"h", Ind}, {"k", Obj}};
  f.chains = std::vector<std::vector<ArgumentId>>{
      {"a"}, {"b"}, {"c"}, {"d"}, {"f", "c"}, {"k", "h", "g", "a"}};
  f.notes = "h is held at the value life throughout. f, b, d objective and a, c "
            "indefensible as stated for this scenario; g, h and k recorded from brute "
            "force over both orders (g is objective once h is fixed to life).";
  return f;
}

Fixture figure_2() {
  Fixture f;
  f.name = "figure-2";
  f.description = "Single-valued framework where c is attacked twice";
  f.document = make_document(
      {"v"},
      {{"a", "v"}, {"b", "v"}, {"c", "v"}, {"d", "v"}, {"e", "v"}, {"f", "v"}, {"g", "v"}},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"e", "f"}, {"f", "g"}, {"g", "c"}});
  f.positions = {{{"v"}, {"a", "d", "e", "g"}}};
  f.statuses = {{"a", Obj}, {"b", Ind}, {"c", Ind}, {"d", Obj},
                {"e", Obj}, {"f", Ind}, {"g", Obj}};
  f.chains = std::vector<std::vector<ArgumentId>>{letters("abc"), letters("d"), letters("efgc")};
  f.notes = "Three chains abc, d and efgc; d is objectively acceptable.";
  return f;
}

Fixture figure_3() {
  Fixture f;
  f.name = "figure-3";
  f.description = "Two-valued framework where a red argument splits a blue chain";
  f.document = make_document(
      {"blue", "red"},
      {{"a", "red"}, {"b", "blue"}, {"c", "blue"}, {"d", "blue"}, {"e", "blue"}, {"f", "red"}},
      {{"a", "b"}, {"b", "c"}, {"f", "c"}, {"c", "d"}, {"d", "e"}},
      {}, {{"blue-first", {"blue", "red"}}, {"red-first", {"red", "blue"}}});
  f.positions = {{{"blue", "red"}, {"a", "b", "d", "f"}}, {{"red", "blue"}, {"a", "d", "f"}}};
  f.statuses = {{"a", Obj}, {"b", Sub}, {"c", Ind}, {"d", Obj}, {"e", Ind}, {"f", Obj}};
  f.chains = std::vector<std::vector<ArgumentId>>{
      letters("a"), letters("bc"), letters("c"), letters("de"), letters("f")};
  f.notes = "Chains a, bc, f, de plus c on its own. d objective, c and e indefensible "
            "as stated; a, f and b derived by brute force over both orders.";
  return f;
}

Fixture seven_cycle() {
  Fixture f;
  f.name = "seven-cycle";
  f.description = "Seven cycle of two blues, three reds and two greens";
  f.document = make_document(
      {"blue", "green", "red"},
      {{"b1", "blue"}, {"b2", "blue"}, {"r1", "red"}, {"r2", "red"},
       {"r3", "red"}, {"g1", "green"}, {"g2", "green"}},
      {{"b1", "b2"}, {"b2", "r1"}, {"r1", "r2"}, {"r2", "r3"},
       {"r3", "g1"}, {"g1", "g2"}, {"g2", "b1"}});
  f.positions = {
      {{"blue", "green", "red"}, {"b1", "g1", "r1", "r3"}},
      {{"blue", "red", "green"}, {"b1", "g2", "r1", "r3"}},
      {{"green", "blue", "red"}, {"b1", "g1", "r1", "r3"}},
      {{"green", "red", "blue"}, {"b1", "g1", "r1", "r3"}},
      {{"red", "blue", "green"}, {"b1", "g2", "r1", "r3"}},
      {{"red", "green", "blue"}, {"b2", "g2", "r1", "r3"}},
  };
  f.statuses = {{"b1", Sub}, {"b2", Sub}, {"g1", Sub}, {"g2", Sub},
                {"r1", Obj}, {"r2", Ind}, {"r3", Obj}};
  f.chains = std::vector<std::vector<ArgumentId>>{
      {"b1", "b2"}, {"g1", "g2"}, {"r1", "r2", "r3"}};
  f.notes = "r1 and r3 objective. b1 is accepted under five of the six orders; brute "
            "force places the exception at red > green > blue (g2 survives only when "
            "r3 defeats g1), not at green > red > blue as the prose example has it.";
  return f;
}

Fixture odd_cycle() {
  Fixture f;
  f.name = "odd-cycle";
  f.description = "Monochromatic three cycle: a paradox";
  f.document = make_document({"v"}, {{"x", "v"}, {"y", "v"}, {"z", "v"}},
                             {{"x", "y"}, {"y", "z"}, {"z", "x"}});
  f.positions = {{{"v"}, {}}};
  f.statuses = {{"x", Ind}, {"y", Ind}, {"z", Ind}};
  f.notes = "The only preferred extension is empty and there is no stable extension.";
  return f;
}

Fixture even_cycle() {
  Fixture f;
  f.name = "even-cycle";
  f.description = "Monochromatic four cycle: a dilemma";
  f.document = make_document({"v"}, {{"w", "v"}, {"x", "v"}, {"y", "v"}, {"z", "v"}},
                             {{"w", "x"}, {"x", "y"}, {"y", "z"}, {"z", "w"}});
  f.positions = {{{"v"}, {}}};
  f.statuses = {{"w", Ind}, {"x", Ind}, {"y", Ind}, {"z", Ind}};
  f.notes = "Two preferred extensions {w,y} and {x,z}, both stable. Nothing is "
            "sceptically accepted, so every argument is indefensible.";
  return f;
}

const std::vector<std::pair<std::string, std::function<Fixture()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Fixture()>>> all = {
      {"even-cycle", even_cycle},
      {"figure-2", figure_2},
      {"figure-3", figure_3},
      {"hal-carla", hal_carla},
      {"hal-carla-4cycle", hal_carla_4cycle},
      {"hal-carla-5cycle", hal_carla_5cycle},
      {"odd-cycle", odd_cycle},
      {"pharmacist", pharmacist},
      {"pharmacist-extended", pharmacist_extended},
      {"seven-cycle", seven_cycle},
  };
  return all;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

Fixture load_fixture(std::string_view name) {
  for (const auto& [known, make] : registry())
    if (known == name) return make();
  throw VafError(ErrorCode::UnknownFixture, "no bundled fixture named '" + std::string(name) + "'");
}

nlohmann::json to_json(const Fixture& f) {
  nlohmann::json positions = nlohmann::json::array();
  for (const auto& p : f.positions)
    positions.push_back({{"ranking", p.ranking}, {"accepted", to_json(p.accepted)}});
  nlohmann::json statuses = nlohmann::json::object();
  for (const auto& [arg, s] : f.statuses) statuses[arg] = status_name(s);
  nlohmann::json out = {{"name", f.name},
                        {"description", f.description},
                        {"document", document_to_json(canonicalize(f.document))},
                        {"positions", positions},
                        {"statuses", statuses},
                        {"notes", f.notes}};
  if (f.chains) out["chains"] = *f.chains;
  return out;
}

}  // namespace vafw
