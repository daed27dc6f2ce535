#include "votelab/report.hpp"

#include <nlohmann/json.hpp>

#include "votelab/profile_io.hpp"

namespace votelab {

namespace {

using nlohmann::json;

json relation_to_json(const PreferenceRelation& rel, const Profile& context) {
  if (rel.is_linear_order()) {
    std::vector<int> ranking(rel.num_candidates());
    for (int c = 0; c < rel.num_candidates(); ++c)
      ranking[rel.num_candidates() - 1 - rel.outdegree(c)] = c;
    json names = json::array();
    for (int c : ranking) names.push_back(context.candidate_name(c));
    return json{{"ranking", names}};
  }
  json pairs = json::array();
  for (auto [x, y] : rel.pairs())
    pairs.push_back({context.candidate_name(x), context.candidate_name(y)});
  return json{{"pairs", pairs}};
}

PreferenceRelation relation_from_json(const json& doc, const Profile& context) {
  auto index_of = [&](const json& name) {
    auto id = context.candidate_index(name.get<std::string>());
    if (!id)
      throw std::invalid_argument("unknown candidate '" +
                                  name.get<std::string>() + "' in witness");
    return *id;
  };
  if (doc.contains("ranking")) {
    std::vector<int> ranking;
    for (const auto& name : doc.at("ranking")) ranking.push_back(index_of(name));
    if (static_cast<int>(ranking.size()) != context.num_candidates())
      throw std::invalid_argument("witness ranking must list every candidate");
    return PreferenceRelation::from_ranking(ranking);
  }
  PreferenceRelation rel(context.num_candidates());
  for (const auto& pair : doc.at("pairs"))
    rel.set(index_of(pair.at(0)), index_of(pair.at(1)), true);
  return rel;
}

}  // namespace

json winner_set_to_json(const Profile& p, const WinnerSet& w) {
  json out = json::array();
  for (int c : w) out.push_back(p.candidate_name(c));
  return out;
}

json witness_to_json(const AxiomWitness& w, const Profile& context) {
  json doc;
  doc["kind"] = std::string(witness_kind(w));
  if (const auto* lift = std::get_if<LiftWitness>(&w)) {
    doc["candidate"] = context.candidate_name(lift->candidate);
    doc["lifted"] = profile_to_json(lift->lifted);
  } else if (const auto* ballot = std::get_if<BallotWitness>(&w)) {
    doc["candidate"] = context.candidate_name(ballot->candidate);
    doc["ballot"] = relation_to_json(ballot->ballot, context);
  } else if (const auto* removal = std::get_if<RemovalWitness>(&w)) {
    doc["candidate"] = context.candidate_name(removal->candidate);
    doc["removed"] = context.candidate_name(removal->removed);
  } else if (const auto* clones = std::get_if<CloneWitness>(&w)) {
    doc["anchor"] = context.candidate_name(clones->clones.anchor);
    json list = json::array();
    for (int c : clones->clones.clones)
      list.push_back(context.candidate_name(c));
    doc["clones"] = list;
  }
  return doc;
}

AxiomWitness witness_from_json(const json& doc, const Profile& context) {
  const auto kind = doc.at("kind").get<std::string>();
  auto index_of = [&](const json& name) {
    auto id = context.candidate_index(name.get<std::string>());
    if (!id)
      throw std::invalid_argument("unknown candidate '" +
                                  name.get<std::string>() + "' in witness");
    return *id;
  };
  if (kind == "none") return NoWitness{};
  if (kind == "lift")
    return LiftWitness{profile_from_json(doc.at("lifted")),
                       index_of(doc.at("candidate"))};
  if (kind == "add_voter")
    return BallotWitness{relation_from_json(doc.at("ballot"), context),
                         index_of(doc.at("candidate"))};
  if (kind == "remove_candidate")
    return RemovalWitness{index_of(doc.at("candidate")),
                          index_of(doc.at("removed"))};
  if (kind == "clone_set") {
    CloneSet cs;
    cs.anchor = index_of(doc.at("anchor"));
    for (const auto& name : doc.at("clones"))
      cs.clones.push_back(index_of(name));
    std::sort(cs.clones.begin(), cs.clones.end());
    return CloneWitness{std::move(cs)};
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

json counterexample_to_json(const Counterexample& cex) {
  json doc;
  doc["method"] = std::string(to_string(cex.method));
  doc["axiom"] = std::string(to_string(cex.axiom));
  doc["profile"] = profile_to_json(cex.profile);
  doc["witness"] = witness_to_json(cex.witness, cex.profile);
  doc["winners_before"] = winner_set_to_json(cex.profile, cex.winners_base);
  if (cex.winners_after) {
    // The after side may live on a reduced candidate set.
    json after = json::array();
    const auto* removal = std::get_if<RemovalWitness>(&cex.witness);
    const auto* clones = std::get_if<CloneWitness>(&cex.witness);
    const int removed = removal ? removal->removed
                       : clones ? clones->clones.anchor
                                : -1;
    for (int c : *cex.winners_after) {
      const int original = removed >= 0 && c >= removed ? c + 1 : c;
      after.push_back(cex.profile.candidate_name(original));
    }
    doc["winners_after"] = after;
  } else {
    doc["winners_after"] = nullptr;
  }
  doc["detail"] = cex.detail;
  return doc;
}

Counterexample counterexample_from_json(const json& doc) {
  Profile profile = profile_from_json(doc.at("profile"));
  auto method = method_from_string(doc.at("method").get<std::string>());
  auto axiom = axiom_from_string(doc.at("axiom").get<std::string>());
  if (!method || !axiom)
    throw std::invalid_argument("unknown method or axiom in counterexample");
  AxiomWitness witness = witness_from_json(doc.at("witness"), profile);
  // Winner sets are recomputed over the stored witness so the replayed
  // counterexample is self-consistent even if the document was edited.
  auto verdict = check_axiom_instance(*method, *axiom, profile, witness);
  return Counterexample{*method,
                        *axiom,
                        std::move(profile),
                        std::move(witness),
                        std::move(verdict.winners_base),
                        std::move(verdict.winners_after),
                        std::move(verdict.detail)};
}

json search_bounds_to_json(const SearchBounds& bounds) {
  return json{{"max_candidates", bounds.max_candidates},
              {"max_voters", bounds.max_voters},
              {"ballot_class", std::string(to_string(bounds.ballot_class))},
              {"anonymize", bounds.anonymize}};
}

json search_report_to_json(const SearchReport& report) {
  json doc;
  doc["outcome"] = report.outcome == SearchReport::Outcome::certified_holds
                       ? "certified_holds"
                       : "counterexample_found";
  doc["profiles_examined"] = report.profiles_examined;
  doc["bounds"] = search_bounds_to_json(report.bounds);
  if (!report.note.empty()) doc["note"] = report.note;
  if (report.counterexample)
    doc["counterexample"] = counterexample_to_json(*report.counterexample);
  if (report.mismatch) {
    const auto& mm = *report.mismatch;
    doc["mismatch"] = json{
        {"method_a", mm.method_a},
        {"method_b", mm.method_b},
        {"profile", profile_to_json(mm.profile)},
        {"winners_a", winner_set_to_json(mm.profile, mm.winners_a)},
        {"winners_b", winner_set_to_json(mm.profile, mm.winners_b)}};
  }
  doc["meta"] = json{{"wall_seconds", report.wall_seconds}};
  return doc;
}

std::string describe_witness(const AxiomWitness& w, const Profile& context) {
  if (std::holds_alternative<NoWitness>(w)) return "the profile itself";
  if (const auto* lift = std::get_if<LiftWitness>(&w))
    return "lift of " + context.candidate_name(lift->candidate);
  if (const auto* ballot = std::get_if<BallotWitness>(&w)) {
    std::string out =
        "added voter tracking " + context.candidate_name(ballot->candidate) +
        " with ballot ";
    const auto pairs = ballot->ballot.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out += (i ? ", " : "") + context.candidate_name(pairs[i].first) + ">" +
             context.candidate_name(pairs[i].second);
    return out;
  }
  if (const auto* removal = std::get_if<RemovalWitness>(&w))
    return "remove " + context.candidate_name(removal->removed) +
           ", tracking " + context.candidate_name(removal->candidate);
  if (const auto* clones = std::get_if<CloneWitness>(&w)) {
    std::string out =
        "clone set anchored at " + context.candidate_name(clones->clones.anchor) +
        " with {";
    for (std::size_t i = 0; i < clones->clones.clones.size(); ++i)
      out += (i ? ", " : "") + context.candidate_name(clones->clones.clones[i]);
    return out + "}";
  }
  return "unknown";
}

}  // namespace votelab
