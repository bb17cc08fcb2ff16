#include "vafw/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "vafw/chains.hpp"
#include "vafw/document.hpp"
#include "vafw/fixtures.hpp"
#include "vafw/harness.hpp"
#include "vafw/semantics.hpp"
#include "vafw/service.hpp"
#include "vafw/strategy.hpp"

namespace vafw {

namespace {

using nlohmann::json;

struct Settings {
  std::string output = "text";
  bool oracle = false;
  std::optional<std::size_t> limit;
  std::string default_value = "default";
  std::vector<std::string> assignments;

  bool structured() const { return output == "structured"; }
  EngineLimits limits() const {
    EngineLimits l;
    l.force_oracle = oracle;
    if (limit) l.max_oracle_arguments = *limit;
    return l;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw VafError(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_facts_file(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  return ext == ".apx" || ext == ".af" || ext == ".facts";
}

/// FILE is a path when one exists, otherwise a bundled fixture name.
FrameworkDocument load_document(const std::string& source, const Settings& s) {
  if (std::filesystem::exists(source)) {
    const std::string text = read_file(source);
    if (!is_facts_file(source)) return parse_framework(text);
    std::map<std::string, std::string> assign;
    for (const auto& a : s.assignments) {
      const auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == a.size())
        throw VafError(ErrorCode::InvalidSpec, "--assign expects ARG=VALUE, got '" + a + "'");
      assign[a.substr(0, eq)] = a.substr(eq + 1);
    }
    FrameworkDocument doc;
    doc.framework = parse_facts(text, s.default_value, assign);
    return doc;
  }
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), source) != names.end())
    return load_fixture(source).document;
  throw VafError(ErrorCode::IoError,
                 "file not found: '" + source + "' (and no bundled fixture has that name)");
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
  }
  return out;
}

/// "life>property,green>red" into preference pairs.
std::vector<std::pair<ValueId, ValueId>> parse_preferences(const std::string& text) {
  std::vector<std::pair<ValueId, ValueId>> pairs;
  for (const auto& item : split_list(text, ',')) {
    const auto parts = split_list(item, '>');
    if (parts.size() < 2)
      throw VafError(ErrorCode::InvalidOrder, "expected V>W in '" + item + "'");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) pairs.emplace_back(parts[i], parts[i + 1]);
  }
  return pairs;
}

std::vector<ValueOrder> orders_to_solve(const Vaf& vaf, const FrameworkDocument& doc,
                                        const std::optional<std::string>& order,
                                        const EngineLimits& limits) {
  if (order) return {ValueOrder::total(vaf, split_list(*order, ','))};
  if (!doc.orders.empty()) {
    std::vector<ValueOrder> out;
    for (const auto& named : doc.orders) out.push_back(ValueOrder::total(vaf, named.ranking));
    return out;
  }
  return enumerate_total_orders(vaf.values(), limits);
}

int cmd_check(const std::string& file, const Settings& s, std::ostream& out) {
  const FrameworkDocument doc = load_document(file, s);
  std::vector<std::string> warnings;
  const Vaf vaf = to_vaf(doc, &warnings);
  const auto cycles = monochromatic_cycles(vaf);
  if (s.structured()) {
    out << json{{"valid", true},
                {"arguments", vaf.size()},
                {"attacks", vaf.attacks().size()},
                {"values", vaf.values()},
                {"warnings", warnings},
                {"monochromaticCycles", cycles}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "valid: " << vaf.size() << " arguments, " << vaf.attacks().size() << " attacks, "
      << vaf.values().size() << " values\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& c : cycles) {
    out << "monochromatic cycle:";
    for (const auto& a : c) out << " " << a;
    out << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& file, const std::optional<std::string>& order, const Settings& s,
              std::ostream& out) {
  const FrameworkDocument doc = load_document(file, s);
  const Vaf vaf = to_vaf(doc);
  const EngineLimits limits = s.limits();
  const bool use_extend = !s.oracle && !has_monochromatic_cycle(vaf);
  json results = json::array();
  const auto orders = orders_to_solve(vaf, doc, order, limits);
  for (const auto& o : orders) {
    json entry{{"order", *o.ranking()}};
    std::vector<Extension> preferred;
    if (use_extend) {
      preferred.push_back(extend_algorithm(vaf, o));
      entry["method"] = "extend";
    } else {
      const SemanticsResult r = solve(induced_defeat_graph(vaf, o), limits);
      preferred = r.preferred;
      entry["method"] = "oracle";
      entry["stable"] = to_json(r.stable);
    }
    entry["preferred"] = json::array();
    for (const auto& e : preferred) entry["preferred"].push_back(to_json(e));
    entry["unique"] = preferred.size() == 1;
    results.push_back(entry);

    if (s.structured()) continue;
    const bool single = order.has_value();
    for (const auto& e : preferred)
      out << (single ? "" : o.describe() + ": ") << format_extension(e) << "\n";
  }
  if (s.structured()) out << json{{"results", results}}.dump(2) << "\n";
  return 0;
}

int cmd_status(const std::string& file, const std::optional<std::string>& given,
               const Settings& s, std::ostream& out) {
  const Vaf vaf = to_vaf(load_document(file, s));
  const EngineLimits limits = s.limits();
  if (given) {
    const ValueOrder partial = ValueOrder::partial(vaf, parse_preferences(*given));
    json accepted = json::object();
    for (const auto& a : vaf.arguments()) {
      const bool yes = accepted_under_partial(vaf, partial, a, limits);
      accepted[a] = yes;
      if (!s.structured()) out << a << ": " << (yes ? "accepted" : "not accepted") << "\n";
    }
    if (s.structured())
      out << json{{"given", partial.describe()}, {"accepted", accepted}}.dump(2) << "\n";
    return 0;
  }
  const StatusReport report = status_map(vaf, limits);
  if (s.structured()) {
    out << to_json(report).dump(2) << "\n";
    return 0;
  }
  for (const auto& [arg, status] : report.statuses) out << arg << ": " << status_name(status) << "\n";
  if (report.fallback_used)
    out << "note: monochromatic cycles present; accepted sets are sceptical\n";
  return 0;
}

int cmd_chains(const std::string& file, const Settings& s, std::ostream& out) {
  const Vaf vaf = to_vaf(load_document(file, s));
  const ChainDecomposition chains = decompose_chains(vaf);
  const DichromaticClassification classes = classify_dichromatic(vaf, chains);
  if (s.structured()) {
    json j = to_json(chains);
    j["classification"] = to_json(classes);
    out << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t c = 0; c < chains.chains.size(); ++c) {
    const Chain& chain = chains.chains[c];
    out << "chain";
    for (const auto& m : chain.members) out << " " << m;
    out << " [" << chain.value << ", " << parity_name(chain.parity()) << "]";
    if (chains.predecessors[c].empty()) {
      out << " unattacked";
    } else {
      out << " after";
      for (const auto& p : chains.predecessors[c]) out << " " << p.attacker << "(" << parity_name(p.parity) << ")";
    }
    out << "\n";
  }
  for (const auto& [arg, status] : classes.status)
    out << arg << ": " << status_name(status) << " (" << rule_name(classes.rule.at(arg)) << ")\n";
  return 0;
}

int cmd_suggest(const std::string& file, const std::string& target, const std::string& desired,
                bool exhaustive, const Settings& s, std::ostream& out) {
  const Vaf vaf = to_vaf(load_document(file, s));
  SuggestOptions options;
  options.exhaustive = exhaustive;
  options.limits = s.limits();
  const auto suggestions = suggest_moves(vaf, target, parse_status(desired), options);
  if (s.structured()) {
    json list = json::array();
    for (const auto& m : suggestions) list.push_back(to_json(m));
    out << json{{"target", target}, {"desired", desired}, {"suggestions", list}}.dump(2) << "\n";
    return 0;
  }
  if (suggestions.empty()) out << "no single-argument move gives " << target << " that status\n";
  for (const auto& m : suggestions)
    out << m.move.new_argument << " (" << m.move.new_value << ") attacks " << m.move.attack_target
        << " -> " << status_name(m.resulting_status) << "  [" << m.move.template_name << "]\n";
  return 0;
}

int cmd_export(const std::string& file, const std::string& format, bool with_status,
               const Settings& s, std::ostream& out) {
  const FrameworkDocument doc = load_document(file, s);
  const Vaf vaf = to_vaf(doc);
  if (format == "canonical") {
    out << serialize_framework(doc);
    return 0;
  }
  if (with_status) {
    const auto statuses = status_map(vaf, s.limits()).statuses;
    out << export_dot(vaf, &statuses);
  } else {
    out << export_dot(vaf);
  }
  return 0;
}

int cmd_fixtures(const std::optional<std::string>& name, const Settings& s, std::ostream& out) {
  if (name) {
    const Fixture f = load_fixture(*name);
    if (s.structured())
      out << to_json(f).dump(2) << "\n";
    else
      out << serialize_framework(f.document);
    return 0;
  }
  json list = json::array();
  for (const auto& n : fixture_names()) {
    const Fixture f = load_fixture(n);
    if (s.structured())
      list.push_back({{"name", n}, {"description", f.description}});
    else
      out << n << "  " << f.description << "\n";
  }
  if (s.structured()) out << list.dump(2) << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t count, const std::optional<std::string>& report_path,
               const Settings& s, std::ostream& out) {
  const CheckReport report = run_verification(seed, count);
  const json j = to_json(report);
  if (report_path) {
    std::ofstream file(*report_path);
    if (!file) throw VafError(ErrorCode::IoError, "cannot write '" + *report_path + "'");
    file << j.dump(2) << "\n";
  }
  if (s.structured()) {
    out << j.dump(2) << "\n";
  } else {
    out << report.instances << " instances, " << report.orders_checked << " orders, "
        << report.checks << " checks, " << report.failures.size() << " failures, "
        << report.out_of_scope << " out of scope\n";
    for (const auto& f : report.failures)
      out << "FAIL " << f.property << " [" << f.order << "] seed " << f.seed << ": " << f.detail
          << "\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Value-based argumentation: positions, statuses, chains and dispute moves", "vafw"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--output", s.output, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--oracle", s.oracle, "Use brute-force semantics everywhere");
  app.add_option("--limit", s.limit, "Largest argument count the brute-force search accepts")
      ->check(CLI::Range(1, 64));
  app.add_option("--default-value", s.default_value, "Value for facts-file arguments");
  app.add_option("--assign", s.assignments, "ARG=VALUE for facts-file arguments");

  std::string file, format = "dot", target, desired, host = "127.0.0.1";
  std::optional<std::string> order, given, fixture, report_path, snapshot;
  bool exhaustive = false, with_status = false;
  int port = 8080;
  double ttl_hours = 24;
  std::uint64_t seed = 1;
  std::size_t count = 500;

  auto* check = app.add_subcommand("check", "Validate a framework");
  check->add_option("FILE", file, "Framework file or fixture name")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Preferred extension(s) per audience");
  solve_cmd->add_option("FILE", file)->required();
  solve_cmd->add_option("--order", order, "Comma-separated ranking, most preferred first");

  auto* status = app.add_subcommand("status", "Objective / subjective / indefensible per argument");
  status->add_option("FILE", file)->required();
  status->add_option("--given", given, "Partial order such as life>property");

  auto* chains = app.add_subcommand("chains", "Chain decomposition of a two-valued framework");
  chains->add_option("FILE", file)->required();

  auto* suggest = app.add_subcommand("suggest", "Moves that change an argument's status");
  suggest->add_option("FILE", file)->required();
  suggest->add_option("--target", target)->required();
  suggest->add_option("--desired", desired)->required();
  suggest->add_flag("--exhaustive", exhaustive, "Try every target and value as well");

  auto* exp = app.add_subcommand("export", "Graphviz or canonical document");
  exp->add_option("FILE", file)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "canonical"}));
  exp->add_flag("--statuses", with_status, "Overlay argument statuses on the graph");

  auto* fixtures = app.add_subcommand("fixtures", "List bundled fixtures or print one");
  fixtures->add_option("NAME", fixture);

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP dispute service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--snapshot", snapshot, "Session snapshot file");
  serve_cmd->add_option("--ttl-hours", ttl_hours, "Idle session lifetime")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Cross-check the engine on generated frameworks");
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_option("--report", report_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "vafw: " << e.what() << "\n";
    err << "run 'vafw --help' for usage\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, s, out);
    if (solve_cmd->parsed()) return cmd_solve(file, order, s, out);
    if (status->parsed()) return cmd_status(file, given, s, out);
    if (chains->parsed()) return cmd_chains(file, s, out);
    if (suggest->parsed()) return cmd_suggest(file, target, desired, exhaustive, s, out);
    if (exp->parsed()) return cmd_export(file, format, with_status, s, out);
    if (fixtures->parsed()) return cmd_fixtures(fixture, s, out);
    if (verify->parsed()) return cmd_verify(seed, count, report_path, s, out);
    if (serve_cmd->parsed()) {
      ServiceOptions options;
      options.limits = s.limits();
      options.snapshot_path = snapshot;
      options.ttl = std::chrono::seconds(static_cast<long long>(ttl_hours * 3600));
      DisputeService service(options);
      service.load_snapshot();
      out << "serving on http://" << host << ":" << port << std::endl;
      if (!serve(service, host, port)) {
        err << "vafw: cannot listen on " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const VafError& e) {
    err << "vafw: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    for (const auto& d : e.details()) err << "  " << d << "\n";
    return 1;
  }
  return 2;
}

}  // namespace vafw
