#include "vafw/document.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace vafw {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw VafError(ErrorCode::SchemaError, "field '" + field + "': " + what);
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(where + key, "is required");
  return *it;
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) schema_error(field, "must be a string");
  return j.get<std::string>();
}

std::vector<std::string> require_strings(const json& j, const std::string& field) {
  if (!j.is_array()) schema_error(field, "must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(require_string(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

constexpr std::array<const char*, 12> kPalette = {
    "red", "blue", "green", "gold", "orange", "purple",
    "cyan", "magenta", "brown", "pink", "gray", "olivedrab"};

}  // namespace

FrameworkDocument document_from_json(const json& j) {
  if (!j.is_object()) schema_error("(root)", "must be an object");
  FrameworkDocument doc;

  const json& version = require(j, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion)
    schema_error("version", "must be " + std::to_string(kDocumentVersion));
  doc.version = version.get<int>();

  doc.framework.values = require_strings(require(j, "values", ""), "values");

  const json& args = require(j, "arguments", "");
  if (!args.is_array()) schema_error("arguments", "must be an array");
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string where = "arguments[" + std::to_string(i) + "].";
    const json& a = args[i];
    if (!a.is_object()) schema_error(where.substr(0, where.size() - 1), "must be an object");
    RawArgument arg;
    arg.id = require_string(require(a, "id", where), where + "id");
    arg.value = require_string(require(a, "value", where), where + "value");
    if (auto it = a.find("label"); it != a.end() && !it->is_null())
      arg.label = require_string(*it, where + "label");
    doc.framework.arguments.push_back(std::move(arg));
  }

  const json& attacks = require(j, "attacks", "");
  if (!attacks.is_array()) schema_error("attacks", "must be an array");
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    const std::string where = "attacks[" + std::to_string(i) + "]";
    const auto pair = require_strings(attacks[i], where);
    if (pair.size() != 2) schema_error(where, "must be [attacker, attacked]");
    doc.framework.attacks.emplace_back(pair[0], pair[1]);
  }

  if (auto it = j.find("orders"); it != j.end()) {
    if (!it->is_array()) schema_error("orders", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "orders[" + std::to_string(i) + "].";
      const json& o = (*it)[i];
      if (!o.is_object()) schema_error(where.substr(0, where.size() - 1), "must be an object");
      NamedOrder order;
      order.name = require_string(require(o, "name", where), where + "name");
      order.ranking = require_strings(require(o, "ranking", where), where + "ranking");
      doc.orders.push_back(std::move(order));
    }
  }
  return doc;
}

FrameworkDocument parse_framework(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw VafError(ErrorCode::SyntaxError, "syntax error at line " + std::to_string(line) +
                                               ", column " + std::to_string(column));
  }
  return document_from_json(j);
}

FrameworkDocument canonicalize(FrameworkDocument doc) {
  auto& fw = doc.framework;
  std::sort(fw.values.begin(), fw.values.end());
  fw.values.erase(std::unique(fw.values.begin(), fw.values.end()), fw.values.end());
  std::stable_sort(fw.arguments.begin(), fw.arguments.end(),
                   [](const RawArgument& a, const RawArgument& b) { return a.id < b.id; });
  std::sort(fw.attacks.begin(), fw.attacks.end());
  fw.attacks.erase(std::unique(fw.attacks.begin(), fw.attacks.end()), fw.attacks.end());
  return doc;
}

json document_to_json(const FrameworkDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["values"] = doc.framework.values;
  j["arguments"] = json::array();
  for (const auto& a : doc.framework.arguments) {
    json arg = {{"id", a.id}, {"value", a.value}};
    if (a.label) arg["label"] = *a.label;
    j["arguments"].push_back(std::move(arg));
  }
  j["attacks"] = json::array();
  for (const auto& [from, to] : doc.framework.attacks) j["attacks"].push_back({from, to});
  if (!doc.orders.empty()) {
    j["orders"] = json::array();
    for (const auto& o : doc.orders) j["orders"].push_back({{"name", o.name}, {"ranking", o.ranking}});
  }
  return j;
}

std::string serialize_framework(const FrameworkDocument& doc) {
  return document_to_json(canonicalize(doc)).dump(2) + "\n";
}

Vaf to_vaf(const FrameworkDocument& doc, std::vector<std::string>* warnings) {
  return Vaf::validate(doc.framework, warnings);
}

FrameworkDocument to_document(const Vaf& vaf, std::vector<NamedOrder> orders) {
  FrameworkDocument doc;
  doc.framework = vaf.to_raw();
  doc.orders = std::move(orders);
  return doc;
}

RawFramework parse_facts(std::string_view text, const std::string& default_value,
                         const std::map<std::string, std::string>& assignments) {
  RawFramework raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto syntax = [&](std::size_t column, const std::string& what) {
    throw VafError(ErrorCode::SyntaxError, what + " at line " + std::to_string(line_no) +
                                               ", column " + std::to_string(column));
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string compact;
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '%' || line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) continue;
      compact += line[i];
      columns.push_back(i + 1);
    }
    if (compact.empty()) continue;
    const bool is_arg = compact.rfind("arg(", 0) == 0;
    const bool is_att = compact.rfind("att(", 0) == 0;
    if (!is_arg && !is_att) syntax(columns.front(), "expected arg(...) or att(...)");
    if (compact.size() < 6 || compact.substr(compact.size() - 2) != ").")
      syntax(columns.back(), "expected ')' followed by '.'");
    const std::string inner = compact.substr(4, compact.size() - 6);
    if (is_arg) {
      if (inner.empty() || inner.find(',') != std::string::npos)
        syntax(columns[4 < columns.size() ? 4 : 0], "arg/1 takes one identifier");
      auto it = assignments.find(inner);
      raw.arguments.push_back({inner, it == assignments.end() ? default_value : it->second, {}});
    } else {
      const auto comma = inner.find(',');
      if (comma == std::string::npos || comma == 0 || comma + 1 == inner.size() ||
          inner.find(',', comma + 1) != std::string::npos)
        syntax(columns[4 < columns.size() ? 4 : 0], "att/2 takes two identifiers");
      raw.attacks.emplace_back(inner.substr(0, comma), inner.substr(comma + 1));
    }
  }
  for (const auto& a : raw.arguments)
    if (std::find(raw.values.begin(), raw.values.end(), a.value) == raw.values.end())
      raw.values.push_back(a.value);
  if (raw.values.empty() && !default_value.empty()) raw.values.push_back(default_value);
  return raw;
}

std::map<ValueId, std::string> value_palette(const Vaf& vaf) {
  std::map<ValueId, std::string> palette;
  std::size_t next = 0;
  auto assign = [&](const ValueId& v) {
    if (palette.emplace(v, kPalette[next % kPalette.size()]).second) ++next;
  };
  for (ArgIndex a = 0; a < vaf.size(); ++a) assign(vaf.value_name_of(a));
  for (const auto& v : vaf.values()) assign(v);
  return palette;
}

std::string export_dot(const Vaf& vaf, const std::map<ArgumentId, ArgStatus>* statuses) {
  std::ostringstream out;
  out << "digraph vaf {\n";
  if (!vaf.empty()) out << "  node [style=filled];\n";
  const auto palette = value_palette(vaf);
  for (ArgIndex a = 0; a < vaf.size(); ++a) {
    const auto& id = vaf.name(a);
    std::string label = vaf.label(a).value_or(id);
    out << "  " << dot_quote(id) << " [fillcolor=" << dot_quote(palette.at(vaf.value_name_of(a)))
        << ", value=" << dot_quote(vaf.value_name_of(a));
    if (statuses != nullptr) {
      if (auto it = statuses->find(id); it != statuses->end()) {
        label += "\n" + std::string(status_name(it->second));
        switch (it->second) {
          case ArgStatus::Objective: out << ", style=\"filled,bold\", penwidth=3"; break;
          case ArgStatus::Subjective: out << ", style=\"filled,dashed\""; break;
          case ArgStatus::Indefensible: out << ", style=\"filled,dotted\""; break;
        }
        out << ", status=" << dot_quote(status_name(it->second));
      }
    }
    out << ", label=" << dot_quote(label) << "];\n";
  }
  for (auto [from, to] : vaf.attacks())
    out << "  " << dot_quote(vaf.name(from)) << " -> " << dot_quote(vaf.name(to)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_extension(const Extension& e) {
  std::string out = "{";
  for (const auto& a : e) out += (out.size() > 1 ? "," : "") + a;
  return out + "}";
}

json to_json(const Extension& e) { return json(std::vector<std::string>(e.begin(), e.end())); }

json to_json(const ExtensionSet& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(to_json(e));
  return out;
}

json to_json(const StatusReport& report) {
  json statuses = json::object();
  for (const auto& [arg, status] : report.statuses) statuses[arg] = status_name(status);
  json orders = json::array();
  for (const auto& o : report.per_order)
    orders.push_back({{"ranking", o.ranking},
                      {"accepted", to_json(o.accepted)},
                      {"scepticalFallback", o.sceptical_fallback}});
  return {{"statuses", statuses},
          {"orders", orders},
          {"orderCount", report.order_count},
          {"fallbackUsed", report.fallback_used}};
}

json to_json(const ChainDecomposition& chains) {
  json list = json::array();
  for (std::size_t c = 0; c < chains.chains.size(); ++c) {
    json preds = json::array();
    for (const auto& p : chains.predecessors[c])
      preds.push_back({{"attacker", p.attacker}, {"parity", parity_name(p.parity)}});
    const auto& chain = chains.chains[c];
    list.push_back({{"members", chain.members},
                    {"value", chain.value},
                    {"parity", parity_name(chain.parity())},
                    {"predecessors", preds}});
  }
  return {{"chains", list}};
}

json to_json(const DichromaticClassification& c) {
  json out = json::object();
  for (const auto& [arg, status] : c.status)
    out[arg] = {{"status", status_name(status)}, {"rule", rule_name(c.rule.at(arg))}};
  return out;
}

json to_json(const Move& move) {
  return {{"newArgument", move.new_argument},
          {"newValue", move.new_value},
          {"attackTarget", move.attack_target},
          {"template", move.template_name}};
}

json to_json(const MoveSuggestion& s) {
  return {{"move", to_json(s.move)},
          {"resultingStatus", status_name(s.resulting_status)},
          {"verified", s.verified}};
}

Move move_from_json(const json& j) {
  if (!j.is_object()) schema_error("move", "must be an object");
  Move m;
  m.new_argument = require_string(require(j, "newArgument", "move."), "move.newArgument");
  m.new_value = require_string(require(j, "newValue", "move."), "move.newValue");
  m.attack_target = require_string(require(j, "attackTarget", "move."), "move.attackTarget");
  if (auto it = j.find("template"); it != j.end() && it->is_string()) m.template_name = *it;
  return m;
}

}  // namespace vafw
