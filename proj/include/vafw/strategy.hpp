#pragma once

#include <string>

#include "vafw/audience.hpp"
#include "vafw/framework.hpp"

namespace vafw {

/// One dispute continuation: a fresh argument attacking one existing argument.
struct Move {
  ArgumentId new_argument;
  ValueId new_value;
  ArgumentId attack_target;
  /// Heuristic that proposed the move, e.g. "attack-odd-predecessor-same-colour".
  std::string template_name;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveSuggestion {
  Move move;
  ArgStatus resulting_status = ArgStatus::Subjective;
  bool verified = false;
};

struct SuggestOptions {
  /// Also try every attack target with every value.
  bool exhaustive = false;
  EngineLimits limits;
};

/// "n1", "n2", ... skipping identifiers already in use.
ArgumentId fresh_argument_id(const Vaf& vaf);

/// Moves proposed by the chain heuristics for moving `target` to `desired`.
/// Unverified. Errors: UnknownArgument, NotDichromatic, StatusAlreadyDesired.
std::vector<Move> candidate_moves(const Vaf& vaf, std::string_view target, ArgStatus desired,
                                  const SuggestOptions& options = {});

/// Candidates that, once applied, really give `target` the desired status.
std::vector<MoveSuggestion> suggest_moves(const Vaf& vaf, std::string_view target,
                                          ArgStatus desired, const SuggestOptions& options = {});

/// Adds the move's argument and its single attack. Errors: DuplicateArgumentId,
/// UnknownValue, UnknownArgument, InvalidIdentifier.
Vaf apply_move(const Vaf& vaf, const Move& move);

}  // namespace vafw
