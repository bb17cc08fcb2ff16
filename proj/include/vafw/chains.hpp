#pragma once

#include <map>
#include <string_view>

#include "vafw/audience.hpp"
#include "vafw/framework.hpp"

namespace vafw {

enum class Parity { Even, Odd };

std::string_view parity_name(Parity p);

/// Same-valued attack path: the head has no attacker inside the chain and
/// every later member is attacked by its predecessor alone.
struct Chain {
  std::vector<ArgumentId> members;
  ValueId value;

  Parity parity() const { return members.size() % 2 == 0 ? Parity::Even : Parity::Odd; }
  const ArgumentId& head() const { return members.front(); }
  const ArgumentId& last() const { return members.back(); }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

struct ChainPosition {
  std::size_t chain = 0;  // index into ChainDecomposition::chains
  std::size_t index = 1;  // 1-based position inside the chain

  friend bool operator==(const ChainPosition&, const ChainPosition&) = default;
};

/// An attacker of a chain's head standing for the chain that precedes it.
struct ChainPredecessor {
  ArgumentId attacker;
  Parity parity = Parity::Even;

  friend bool operator==(const ChainPredecessor&, const ChainPredecessor&) = default;
};

struct ChainDecomposition {
  std::vector<Chain> chains;  // sorted
  std::map<ArgumentId, std::vector<ChainPosition>> positions;
  /// Attackers of each chain's head that precede it. Empty for an unattacked
  /// head, which counts as preceded by a chain of length zero.
  std::vector<std::vector<ChainPredecessor>> predecessors;
  /// (X, Y): the last member of chain X attacks the head of chain Y.
  std::vector<std::pair<std::size_t, std::size_t>> precedes;
  /// Parity an argument lends to the chains it attacks: Even when it sits at
  /// an even position of any chain. For the last member of several chains
  /// this is Even as soon as one of them is even.
  std::map<ArgumentId, Parity> effective_parity;

  bool preceded_only_by_even(std::size_t chain) const;
};

enum class ClassificationRule {
  EvenAfterEvenChains,      // even member of a chain preceded only by even chains
  EvenAndDirectOddAttack,   // even member after an odd chain, also directly attacked by one
  OddAfterEvenChainsOnly,   // odd member only, of chains preceded only by even chains
  Otherwise,
};

std::string_view rule_name(ClassificationRule rule);

struct DichromaticClassification {
  std::map<ArgumentId, ArgStatus> status;
  std::map<ArgumentId, ClassificationRule> rule;
};

ChainDecomposition decompose_chains(const Vaf& vaf);

/// Chain-theoretic status of every argument. Arguments must use at most two
/// values (NotDichromatic).
DichromaticClassification classify_dichromatic(const Vaf& vaf);
DichromaticClassification classify_dichromatic(const Vaf& vaf, const ChainDecomposition& chains);

struct ChainDisagreement {
  ArgumentId argument;
  ArgStatus predicted;
  ArgStatus actual;
};

/// Compares classify_dichromatic with the audience enumeration. Disagreements
/// are reported, not thrown.
std::vector<ChainDisagreement> diagnose_dichromatic(const Vaf& vaf, const EngineLimits& limits = {});

/// Preferred extension of a framework that is a single simple attack cycle
/// over exactly two values, read off its chains. NotASimpleCycle,
/// NotDichromatic, InvalidOrder.
Extension dichromatic_cycle_extension(const Vaf& vaf, const ValueOrder& order);

/// Odd members of the cycle's chains that are preceded by an even chain.
Extension objective_by_chain_theory(const Vaf& vaf);

/// True when every argument has exactly one attacker and one target and the
/// attacks form one cycle through all of them.
bool is_simple_cycle(const Vaf& vaf);

}  // namespace vafw
