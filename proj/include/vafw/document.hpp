#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "vafw/audience.hpp"
#include "vafw/chains.hpp"
#include "vafw/framework.hpp"
#include "vafw/strategy.hpp"

namespace vafw {

inline constexpr int kDocumentVersion = 1;
inline constexpr std::string_view kEngineVersion = "vafw/1.0.0";

struct NamedOrder {
  std::string name;
  std::vector<ValueId> ranking;

  friend bool operator==(const NamedOrder&, const NamedOrder&) = default;
};

/// On-disk form of a framework (`.vaf.json`).
struct FrameworkDocument {
  int version = kDocumentVersion;
  RawFramework framework;
  std::vector<NamedOrder> orders;

  friend bool operator==(const FrameworkDocument&, const FrameworkDocument&) = default;
};

/// SyntaxError (with line and column) or SchemaError (naming the field).
FrameworkDocument parse_framework(std::string_view text);
FrameworkDocument document_from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, arguments sorted by id, attacks sorted and
/// deduplicated, two-space indentation, trailing newline.
std::string serialize_framework(const FrameworkDocument& doc);
nlohmann::json document_to_json(const FrameworkDocument& doc);
FrameworkDocument canonicalize(FrameworkDocument doc);

Vaf to_vaf(const FrameworkDocument& doc, std::vector<std::string>* warnings = nullptr);
FrameworkDocument to_document(const Vaf& vaf, std::vector<NamedOrder> orders = {});

/// Reads `arg(x).` / `att(x,y).` facts. Every argument gets `default_value`
/// unless `assignments` names another; the value set is whatever is used.
RawFramework parse_facts(std::string_view text, const std::string& default_value,
                         const std::map<std::string, std::string>& assignments = {});

/// Graphviz digraph: nodes filled by value, optional status borders, one edge
/// per attack.
std::string export_dot(const Vaf& vaf,
                       const std::map<ArgumentId, ArgStatus>* statuses = nullptr);

/// Palette colour for each value, by first appearance.
std::map<ValueId, std::string> value_palette(const Vaf& vaf);

std::string format_extension(const Extension& e);

nlohmann::json to_json(const Extension& e);
nlohmann::json to_json(const ExtensionSet& s);
nlohmann::json to_json(const StatusReport& report);
nlohmann::json to_json(const ChainDecomposition& chains);
nlohmann::json to_json(const DichromaticClassification& c);
nlohmann::json to_json(const Move& move);
nlohmann::json to_json(const MoveSuggestion& s);
/// SchemaError on missing fields.
Move move_from_json(const nlohmann::json& j);

}  // namespace vafw
