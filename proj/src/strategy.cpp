#include "vafw/strategy.hpp"

#include <algorithm>

#include "vafw/chains.hpp"

namespace vafw {

ArgumentId fresh_argument_id(const Vaf& vaf) {
  for (std::size_t k = 1;; ++k) {
    ArgumentId id = "n" + std::to_string(k);
    if (!vaf.find(id)) return id;
  }
}

Vaf apply_move(const Vaf& vaf, const Move& move) {
  if (vaf.find(move.new_argument)) {
    throw VafError(ErrorCode::DuplicateArgumentId,
                   "argument '" + move.new_argument + "' already exists");
  }
  vaf.value_index_of(move.new_value);
  vaf.index_of(move.attack_target);
  RawFramework raw = vaf.to_raw();
  raw.arguments.push_back({move.new_argument, move.new_value, std::nullopt});
  raw.attacks.emplace_back(move.new_argument, move.attack_target);
  return Vaf::validate(raw);
}

namespace {

enum class Colour { Same, Different, Either };

class MoveBuilder {
 public:
  MoveBuilder(const Vaf& vaf, ArgumentId fresh) : vaf_(vaf), fresh_(std::move(fresh)) {}

  void add(const ArgumentId& target, Colour colour, const char* template_name) {
    const ValueId& own = vaf_.value_name_of(vaf_.index_of(target));
    for (const auto& value : vaf_.values()) {
      const bool same = value == own;
      if ((colour == Colour::Same && !same) || (colour == Colour::Different && same)) continue;
      const bool known = std::any_of(moves_.begin(), moves_.end(), [&](const Move& m) {
        return m.attack_target == target && m.new_value == value;
      });
      if (!known) moves_.push_back({fresh_, value, target, template_name});
    }
  }

  std::vector<Move> take() { return std::move(moves_); }

 private:
  const Vaf& vaf_;
  ArgumentId fresh_;
  std::vector<Move> moves_;
};

// Where the target sits and what attacks its chains, in argument names.
struct Surroundings {
  std::vector<ArgumentId> odd_predecessors;
  std::vector<ArgumentId> even_predecessors;
  std::vector<ArgumentId> heads;
  std::vector<ArgumentId> unattacked_heads;
  std::vector<ArgumentId> odd_members_of_own_chain;
  std::vector<ArgumentId> odd_members_of_attacking_chains;
  std::vector<ArgumentId> unattacked_attacking_heads;
  bool at_odd_position = false;
  bool at_even_position = false;
};

Surroundings survey(const ChainDecomposition& chains, const ArgumentId& target) {
  Surroundings s;
  for (const auto& pos : chains.positions.at(target)) {
    const Chain& chain = chains.chains[pos.chain];
    (pos.index % 2 == 0 ? s.at_even_position : s.at_odd_position) = true;
    for (std::size_t j = 1; j < pos.index; ++j)
      (j % 2 == 1 ? s.odd_predecessors : s.even_predecessors).push_back(chain.members[j - 1]);
    for (std::size_t j = 1; j <= chain.members.size(); j += 2)
      s.odd_members_of_own_chain.push_back(chain.members[j - 1]);
    s.heads.push_back(chain.head());
    if (chains.predecessors[pos.chain].empty()) s.unattacked_heads.push_back(chain.head());

    for (const auto& pred : chains.predecessors[pos.chain]) {
      for (const auto& attacker_pos : chains.positions.at(pred.attacker)) {
        const Chain& attacking = chains.chains[attacker_pos.chain];
        for (std::size_t j = 1; j <= attacker_pos.index; j += 2)
          s.odd_members_of_attacking_chains.push_back(attacking.members[j - 1]);
        if (chains.predecessors[attacker_pos.chain].empty())
          s.unattacked_attacking_heads.push_back(attacking.head());
      }
    }
  }
  return s;
}

}  // namespace

std::vector<Move> candidate_moves(const Vaf& vaf, std::string_view target, ArgStatus desired,
                                  const SuggestOptions& options) {
  const ArgumentId name = vaf.name(vaf.index_of(target));
  if (vaf.values().size() > 2) {
    throw VafError(ErrorCode::NotDichromatic,
                   "move heuristics are colour based and need at most two values");
  }
  const ArgStatus current = status_of(vaf, name, options.limits);
  if (current == desired) {
    throw VafError(ErrorCode::StatusAlreadyDesired,
                   "'" + name + "' is already " + std::string(status_name(desired)));
  }

  const Surroundings s = survey(decompose_chains(vaf), name);
  MoveBuilder b(vaf, fresh_argument_id(vaf));
  auto each = [&](const std::vector<ArgumentId>& targets, Colour colour, const char* label) {
    for (const auto& t : targets) b.add(t, colour, label);
  };

  const auto make_odd_predecessor_objective = [&] {
    each(s.odd_predecessors, Colour::Same, "attack-odd-predecessor-same-colour");
    each(s.unattacked_heads, Colour::Same, "extend-unattacked-chain");
  };
  const auto make_attackers_even = [&] {
    each(s.odd_members_of_attacking_chains, Colour::Either, "attack-odd-member-of-attacking-chain");
    each(s.unattacked_attacking_heads, Colour::Same, "extend-attacking-chain");
  };

  switch (current) {
    case ArgStatus::Objective:
      if (desired == ArgStatus::Indefensible) {
        b.add(name, Colour::Same, "attack-target-same-colour");
        each(s.odd_predecessors, Colour::Same, "attack-odd-predecessor-same-colour");
        each(s.unattacked_heads, Colour::Same, "extend-unattacked-chain");
      } else {
        make_attackers_even();
        each(s.heads, Colour::Different, "attack-chain-head-different-colour");
      }
      break;
    case ArgStatus::Indefensible:
      if (desired == ArgStatus::Objective) {
        make_odd_predecessor_objective();
      } else {
        each(s.odd_members_of_own_chain, Colour::Either, "attack-odd-member-of-chain");
        each(s.heads, Colour::Different, "attack-chain-head-different-colour");
      }
      break;
    case ArgStatus::Subjective:
      if (desired == ArgStatus::Objective) {
        if (s.at_even_position) make_odd_predecessor_objective();
        if (s.at_odd_position) make_attackers_even();
      } else {
        if (s.at_even_position) {
          make_attackers_even();
          b.add(name, Colour::Either, "attack-target-either-colour");
          each(s.even_predecessors, Colour::Either, "attack-even-predecessor-either-colour");
          // The rule's "it" may also mean the head of the target's chain.
          each(s.heads, Colour::Either, "attack-chain-head-either-colour");
        }
        if (s.at_odd_position) {
          b.add(name, Colour::Same, "attack-target-same-colour");
          each(s.odd_predecessors, Colour::Same, "attack-odd-predecessor-same-colour");
        }
      }
      break;
  }

  if (options.exhaustive) {
    for (const auto& t : vaf.arguments()) b.add(t, Colour::Either, "exhaustive");
  }
  return b.take();
}

std::vector<MoveSuggestion> suggest_moves(const Vaf& vaf, std::string_view target,
                                          ArgStatus desired, const SuggestOptions& options) {
  std::vector<MoveSuggestion> out;
  for (auto& move : candidate_moves(vaf, target, desired, options)) {
    const Vaf extended = apply_move(vaf, move);
    const ArgStatus status = status_of(extended, target, options.limits);
    if (status == desired) out.push_back({std::move(move), status, true});
  }
  return out;
}

}  // namespace vafw
