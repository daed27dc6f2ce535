#include "votelab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "votelab/checker.hpp"
#include "votelab/graph.hpp"
#include "votelab/methods.hpp"
#include "votelab/profile_io.hpp"
#include "votelab/report.hpp"

namespace votelab {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string registered_method_ids() {
  std::string out;
  for (const auto& info : method_registry()) {
    if (!out.empty()) out += ", ";
    out += std::string(info.id);
  }
  return out;
}

std::string public_method_ids() {
  std::string out;
  for (MethodId id : kAllMethods) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(id));
  }
  return out;
}

std::string registered_axiom_ids() {
  std::string out;
  for (AxiomId id : kAllAxioms) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(id));
  }
  return out;
}

Profile load_profile(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    Profile p = format == "soc" ? parse_preflib(buffer.str())
                                : parse_profile(buffer.str());
    if (auto issue = validate_profile(p))
      throw std::runtime_error("invalid profile: " + issue->message(p));
    return p;
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void print_profile_block(std::ostream& out, const Profile& p,
                         const std::string& indent) {
  std::istringstream text(serialize_profile(p));
  std::string line;
  while (std::getline(text, line)) out << indent << line << "\n";
}

void print_counterexample(std::ostream& out, const Counterexample& cex) {
  out << "counterexample:\n  profile:\n";
  print_profile_block(out, cex.profile, "    ");
  out << "  witness: " << describe_witness(cex.witness, cex.profile) << "\n";
  const auto before = winner_set_to_json(cex.profile, cex.winners_base);
  out << "  winners before: " << before.dump() << "\n";
  if (cex.winners_after) {
    json doc = counterexample_to_json(cex);
    out << "  winners after: " << doc["winners_after"].dump() << "\n";
  }
  if (!cex.detail.empty()) out << "  detail: " << cex.detail << "\n";
}

void print_search_report(std::ostream& out, const SearchReport& report,
                         const std::string& output,
                         const json& header_fields) {
  if (output == "json") {
    json doc = search_report_to_json(report);
    doc.update(header_fields);
    out << doc.dump(2) << "\n";
    return;
  }
  const auto& b = report.bounds;
  out << "bounds: candidates<=" << b.max_candidates << " voters<="
      << b.max_voters << " ballots=" << to_string(b.ballot_class)
      << " anonymize=" << (b.anonymize ? "on" : "off") << "\n";
  out << "outcome: "
      << (report.outcome == SearchReport::Outcome::certified_holds
              ? "certified_holds"
              : "counterexample_found")
      << "\n";
  out << "profiles examined: " << report.profiles_examined << "\n";
  if (!report.note.empty()) out << "note: " << report.note << "\n";
  if (report.counterexample) print_counterexample(out, *report.counterexample);
  if (report.mismatch) {
    const auto& mm = *report.mismatch;
    out << "mismatch:\n  profile:\n";
    print_profile_block(out, mm.profile, "    ");
    out << "  " << mm.method_a << ": "
        << winner_set_to_json(mm.profile, mm.winners_a).dump() << "\n";
    out << "  " << mm.method_b << ": "
        << winner_set_to_json(mm.profile, mm.winners_b).dump() << "\n";
  }
}

int run_winners(std::ostream& out, const std::string& method,
                const std::string& path, const std::string& format,
                const std::string& output) {
  const MethodInfo* info = find_method(method);
  if (!info)
    throw std::runtime_error("unknown method '" + method +
                             "'; valid ids: " + registered_method_ids());
  const Profile p = load_profile(path, format);
  if (info->needs_linear && !p.linear())
    throw std::runtime_error(method + " needs a profile of full rankings");
  const WinnerSet w = info->compute(p);
  if (output == "json") {
    json doc{{"command", "winners"},
             {"method", method},
             {"winners", winner_set_to_json(p, w)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "method: " << method << "\nwinners:";
    for (int c : w) out << " " << p.candidate_name(c);
    out << "\n";
  }
  return kExitOk;
}

int run_margins(std::ostream& out, const std::string& path,
                const std::string& format, const std::string& output) {
  const Profile p = load_profile(path, format);
  const auto mat = margin_matrix(p);
  const int m = p.num_candidates();
  if (output == "json") {
    json rows = json::array();
    for (int x = 0; x < m; ++x) {
      json row = json::array();
      for (int y = 0; y < m; ++y) row.push_back(mat(x, y));
      rows.push_back(row);
    }
    json doc{{"command", "margins"},
             {"candidates", p.candidate_names()},
             {"margins", rows}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t width = 4;
  for (const auto& name : p.candidate_names())
    width = std::max(width, name.size() + 1);
  out << "margins (row over column):\n" << std::setw(static_cast<int>(width)) << "";
  for (int y = 0; y < m; ++y)
    out << std::setw(static_cast<int>(width)) << p.candidate_name(y);
  out << "\n";
  for (int x = 0; x < m; ++x) {
    out << std::setw(static_cast<int>(width)) << p.candidate_name(x);
    for (int y = 0; y < m; ++y)
      out << std::setw(static_cast<int>(width)) << mat(x, y);
    out << "\n";
  }
  return kExitOk;
}

int run_defeats(std::ostream& out, const std::string& path,
                const std::string& format, const std::string& output) {
  const Profile p = load_profile(path, format);
  const auto defeat = split_cycle_defeat_relation(p);
  if (output == "json") {
    json edges = json::array();
    for (auto [x, y] : defeat.edges())
      edges.push_back({p.candidate_name(x), p.candidate_name(y)});
    json doc{{"command", "defeats"},
             {"method", "split_cycle"},
             {"defeats", edges}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "method: split_cycle\ndefeats:\n";
  const auto edges = defeat.edges();
  if (edges.empty()) out << "  (none)\n";
  for (auto [x, y] : edges)
    out << "  " << p.candidate_name(x) << " -> " << p.candidate_name(y) << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"voting methods, margin graphs, and exhaustive axiom checking"};
  app.name("votelab");
  app.fallthrough();
  app.require_subcommand(1);

  std::string output = "text";
  app.add_option("--output", output, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string method;
  std::string axiom;
  std::string path;
  std::string format = "native";
  std::string ballots = "linear";
  std::string method_a;
  std::string method_b;
  int max_candidates = 0;
  int max_voters = 0;
  int jobs = 1;
  bool anonymize = false;

  auto* winners_cmd =
      app.add_subcommand("winners", "winner set of a method on a profile");
  winners_cmd->add_option("--method", method, "method id")->required();
  winners_cmd->add_option("--profile", path, "profile file")->required();
  winners_cmd->add_option("--format", format, "profile file format")
      ->check(CLI::IsMember({"native", "soc"}));

  auto* margins_cmd =
      app.add_subcommand("margins", "pairwise margin matrix of a profile");
  margins_cmd->add_option("--profile", path, "profile file")->required();
  margins_cmd->add_option("--format", format, "profile file format")
      ->check(CLI::IsMember({"native", "soc"}));

  auto* defeats_cmd =
      app.add_subcommand("defeats", "Split Cycle defeat edges of a profile");
  defeats_cmd->add_option("--profile", path, "profile file")->required();
  defeats_cmd->add_option("--format", format, "profile file format")
      ->check(CLI::IsMember({"native", "soc"}));

  auto* check_cmd = app.add_subcommand(
      "check", "exhaustively certify or refute an axiom for a method");
  check_cmd->add_option("--method", method, "method id")->required();
  check_cmd->add_option("--axiom", axiom, "axiom id")->required();
  check_cmd->add_option("--max-candidates", max_candidates, "largest candidate count")
      ->required();
  check_cmd->add_option("--max-voters", max_voters, "largest voter count")
      ->required();
  check_cmd->add_flag("--anonymize", anonymize,
                      "one representative per ballot multiset");
  check_cmd->add_option("--jobs", jobs, "parallel workers");
  check_cmd->add_option("--ballots", ballots, "ballot class")
      ->check(CLI::IsMember({"linear", "asymmetric"}));

  auto* equiv_cmd = app.add_subcommand(
      "equiv", "certify two methods pick identical winners in bounds");
  equiv_cmd->add_option("--a", method_a, "first method id")->required();
  equiv_cmd->add_option("--b", method_b, "second method id")->required();
  equiv_cmd->add_option("--max-candidates", max_candidates, "largest candidate count")
      ->required();
  equiv_cmd->add_option("--max-voters", max_voters, "largest voter count")
      ->required();
  equiv_cmd->add_flag("--anonymize", anonymize,
                      "one representative per ballot multiset");
  equiv_cmd->add_option("--jobs", jobs, "parallel workers");
  equiv_cmd->add_option("--ballots", ballots, "ballot class")
      ->check(CLI::IsMember({"linear", "asymmetric"}));

  std::vector<const char*> argv;
  argv.push_back("votelab");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (winners_cmd->parsed())
      return run_winners(out, method, path, format, output);
    if (margins_cmd->parsed()) return run_margins(out, path, format, output);
    if (defeats_cmd->parsed()) return run_defeats(out, path, format, output);

    SearchBounds bounds;
    bounds.max_candidates = max_candidates;
    bounds.max_voters = max_voters;
    bounds.anonymize = anonymize;
    if (auto cls = ballot_class_from_string(ballots)) bounds.ballot_class = *cls;

    if (check_cmd->parsed()) {
      const auto method_id = method_from_string(method);
      if (!method_id)
        throw std::runtime_error("unknown method '" + method +
                                 "'; valid ids for check: " +
                                 public_method_ids());
      const auto axiom_id = axiom_from_string(axiom);
      if (!axiom_id)
        throw std::runtime_error("unknown axiom '" + axiom +
                                 "'; valid ids: " + registered_axiom_ids());
      const auto report = find_counterexample(*method_id, *axiom_id, bounds, jobs);
      if (output == "text")
        out << "method: " << method << "\naxiom: " << axiom << "\n";
      print_search_report(out, report, output,
                          {{"command", "check"},
                           {"method", method},
                           {"axiom", axiom}});
      return report.outcome == SearchReport::Outcome::certified_holds
                 ? kExitOk
                 : kExitCounterexample;
    }

    if (equiv_cmd->parsed()) {
      const auto report =
          verify_method_equivalence(method_a, method_b, bounds, jobs);
      if (output == "text")
        out << "methods: " << method_a << " vs " << method_b << "\n";
      print_search_report(out, report, output,
                          {{"command", "equiv"},
                           {"method_a", method_a},
                           {"method_b", method_b}});
      return report.outcome == SearchReport::Outcome::certified_holds
                 ? kExitOk
                 : kExitCounterexample;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace votelab
