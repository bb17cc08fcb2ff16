#pragma once

#include <map>
#include <optional>
#include <string>

#include "vafw/audience.hpp"
#include "vafw/document.hpp"

namespace vafw {

struct ExpectedPosition {
  std::vector<ValueId> ranking;
  Extension accepted;
};

/// A bundled worked example with the results the engine must reproduce.
struct Fixture {
  std::string name;
  std::string description;
  FrameworkDocument document;
  std::vector<ExpectedPosition> positions;
  std::map<ArgumentId, ArgStatus> statuses;
  /// Chain member lists, each written as a string ("abc"), when recorded.
  std::optional<std::vector<std::vector<ArgumentId>>> chains;
  /// Where the expectations come from and what remains unverified.
  std::string notes;

  Vaf vaf() const { return to_vaf(document); }
};

std::vector<std::string> fixture_names();

/// UnknownFixture for names outside the bundled set.
Fixture load_fixture(std::string_view name);

/// Document, expected results and notes.
nlohmann::json to_json(const Fixture& f);

}  // namespace vafw
