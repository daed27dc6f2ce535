#pragma once

#include <nlohmann/json_fwd.hpp>

#include "votelab/axioms.hpp"
#include "votelab/checker.hpp"

namespace votelab {

// JSON views of checker results. Keys are emitted sorted, and nothing
// time-dependent lands outside the "meta" object, so the same inputs always
// produce byte-identical payloads.

nlohmann::json winner_set_to_json(const Profile& p, const WinnerSet& w);

nlohmann::json witness_to_json(const AxiomWitness& w, const Profile& context);
AxiomWitness witness_from_json(const nlohmann::json& doc,
                               const Profile& context);

nlohmann::json counterexample_to_json(const Counterexample& cex);
Counterexample counterexample_from_json(const nlohmann::json& doc);

nlohmann::json search_bounds_to_json(const SearchBounds& bounds);

// Full report document: deterministic payload plus a "meta" object holding
// wall-clock time.
nlohmann::json search_report_to_json(const SearchReport& report);

std::string describe_witness(const AxiomWitness& w, const Profile& context);

}  // namespace votelab
