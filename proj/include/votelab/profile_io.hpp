#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "votelab/core.hpp"

namespace votelab {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Native profile format (UTF-8, line oriented, '#' starts a comment):
//
//   candidates: a b c
//   3: a > b > c          # count, then a full strict ranking
//   rel: a>b, b>c         # one voter with an arbitrary asymmetric relation
//   rel:                  # one voter with no expressed preferences
//
// The header must come first and at least one ballot line is required.
// Candidate names match [A-Za-z0-9_]+. The profile's linear flag is set iff
// every ballot line is a ranking line.
Profile parse_profile(std::string_view text);

// Inverse of parse_profile: ranking lines with run-length counts when the
// profile carries linear ballots, rel: lines otherwise.
std::string serialize_profile(const Profile& p);

// Import for the common strict-order ballot interchange format: optional
// '# ...' metadata lines ('# ALTERNATIVE NAME <i>: <label>' supplies names),
// then 'count: id1,id2,...' lines over 1-based integer candidate ids, each a
// complete strict order.
Profile parse_preflib(std::string_view text);

nlohmann::json profile_to_json(const Profile& p);
Profile profile_from_json(const nlohmann::json& doc);

}  // namespace votelab
