#include "votelab/profile_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace votelab {

namespace {

using nlohmann::json;

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

// Strip comments and return (line number, payload) for nonblank lines.
std::vector<std::pair<int, std::string_view>> logical_lines(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.emplace_back(number, raw);
  }
  return lines;
}

int resolve_candidate(const std::vector<std::string>& names,
                      std::string_view token, int line) {
  const auto it = std::find(names.begin(), names.end(), token);
  if (it == names.end())
    throw ParseError(line, "unknown candidate '" + std::string(token) + "'");
  return static_cast<int>(it - names.begin());
}

// A ballot line is either "rel: ..." or "<count>: ranking".
PreferenceRelation parse_relation_line(const std::vector<std::string>& names,
                                       std::string_view body, int line) {
  PreferenceRelation rel(static_cast<int>(names.size()));
  body = trim(body);
  if (body.empty()) return rel;  // voter with no expressed preferences
  for (std::string_view chunk : split(body, ',')) {
    chunk = trim(chunk);
    const auto gt = chunk.find('>');
    if (gt == std::string_view::npos)
      throw ParseError(line, "expected 'x>y' in relation ballot, got '" +
                                 std::string(chunk) + "'");
    const int x = resolve_candidate(names, trim(chunk.substr(0, gt)), line);
    const int y = resolve_candidate(names, trim(chunk.substr(gt + 1)), line);
    if (x == y)
      throw ParseError(line, "reflexive pair '" + names[x] + ">" + names[x] +
                                 "' violates asymmetry");
    if (rel.prefers(y, x))
      throw ParseError(line, "pair '" + names[x] + ">" + names[y] +
                                 "' contradicts an earlier pair (asymmetry)");
    rel.set(x, y, true);
  }
  return rel;
}

std::vector<int> parse_ranking(const std::vector<std::string>& names,
                               std::string_view body, int line) {
  std::vector<int> ranking;
  std::vector<bool> seen(names.size(), false);
  for (std::string_view token : split(body, '>')) {
    token = trim(token);
    const int c = resolve_candidate(names, token, line);
    if (seen[c])
      throw ParseError(line, "duplicate candidate '" + names[c] +
                                 "' in ranking");
    seen[c] = true;
    ranking.push_back(c);
  }
  if (ranking.size() != names.size())
    throw ParseError(line, "ranking must list all " +
                               std::to_string(names.size()) + " candidates");
  return ranking;
}

long parse_count(std::string_view token, int line) {
  long count = 0;
  const auto t = trim(token);
  if (t.empty()) throw ParseError(line, "missing ballot count");
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, "ballot count must be a positive integer, got '" +
                                 std::string(t) + "'");
    count = count * 10 + (c - '0');
    if (count > 1'000'000) throw ParseError(line, "ballot count too large");
  }
  if (count <= 0) throw ParseError(line, "ballot count must be positive");
  return count;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  const auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "empty profile document");

  auto [header_line, header] = lines.front();
  constexpr std::string_view kHeader = "candidates:";
  if (!header.starts_with(kHeader))
    throw ParseError(header_line, "expected 'candidates: <name>...' header");
  std::vector<std::string> names;
  {
    std::istringstream in{std::string(header.substr(kHeader.size()))};
    std::string token;
    while (in >> token) {
      if (!valid_name(token))
        throw ParseError(header_line, "candidate name '" + token +
                                          "' must match [A-Za-z0-9_]+");
      if (std::find(names.begin(), names.end(), token) != names.end())
        throw ParseError(header_line, "duplicate candidate '" + token + "'");
      names.push_back(token);
    }
  }
  if (names.empty()) throw ParseError(header_line, "no candidates declared");

  std::vector<PreferenceRelation> voters;
  bool all_rankings = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line, body] = lines[i];
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line, "expected '<count>:' or 'rel:' ballot line");
    const auto head = trim(body.substr(0, colon));
    const auto rest = body.substr(colon + 1);
    if (head == "rel") {
      voters.push_back(parse_relation_line(names, rest, line));
      all_rankings = false;
    } else {
      const long count = parse_count(head, line);
      const auto ranking = parse_ranking(names, rest, line);
      const auto rel = PreferenceRelation::from_ranking(ranking);
      for (long k = 0; k < count; ++k) voters.push_back(rel);
    }
    if (voters.size() > 1'000'000)
      throw ParseError(line, "profile exceeds 1000000 voters");
  }
  if (voters.empty())
    throw ParseError(lines.back().first, "at least one ballot line required");
  return Profile(std::move(names), std::move(voters), all_rankings);
}

std::string serialize_profile(const Profile& p) {
  for (const auto& name : p.candidate_names())
    if (!valid_name(name))
      throw std::invalid_argument("candidate name '" + name +
                                  "' not expressible in the profile format");
  std::string out = "candidates:";
  for (const auto& name : p.candidate_names()) out += " " + name;
  out += "\n";

  if (p.linear()) {
    // Run-length encode consecutive identical ballots so parsing restores
    // the exact voter sequence.
    for (int v = 0; v < p.num_voters();) {
      int run = 1;
      while (v + run < p.num_voters() &&
             p.relation(v + run) == p.relation(v))
        ++run;
      const auto& rel = p.relation(v);
      if (!rel.is_linear_order())
        throw std::invalid_argument(
            "profile claims linear ballots but voter " + std::to_string(v) +
            " does not hold a linear order");
      std::vector<int> ranking(p.num_candidates());
      std::iota(ranking.begin(), ranking.end(), 0);
      std::sort(ranking.begin(), ranking.end(), [&](int a, int b) {
        return rel.outdegree(a) > rel.outdegree(b);
      });
      out += std::to_string(run) + ":";
      for (std::size_t i = 0; i < ranking.size(); ++i)
        out += (i ? " > " : " ") + p.candidate_name(ranking[i]);
      out += "\n";
      v += run;
    }
    return out;
  }
  for (int v = 0; v < p.num_voters(); ++v) {
    out += "rel:";
    const auto pairs = p.relation(v).pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out += (i ? ", " : " ") + p.candidate_name(pairs[i].first) + ">" +
             p.candidate_name(pairs[i].second);
    out += "\n";
  }
  return out;
}

Profile parse_preflib(std::string_view text) {
  std::map<long, std::string> alt_names;
  std::vector<std::pair<long, std::vector<long>>> ballots;
  long max_id = 0;
  long total_voters = 0;
  int number = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++number;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kAltName = "# ALTERNATIVE NAME";
      if (line.starts_with(kAltName)) {
        auto rest = line.substr(kAltName.size());
        const auto colon = rest.find(':');
        if (colon != std::string_view::npos) {
          try {
            const long id = std::stol(std::string(trim(rest.substr(0, colon))));
            alt_names[id] = std::string(trim(rest.substr(colon + 1)));
          } catch (const std::exception&) {
            // tolerate malformed metadata
          }
        }
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(number, "expected 'count: id,id,...' ballot line");
    const long count = parse_count(line.substr(0, colon), number);
    std::vector<long> order;
    for (auto token : split(line.substr(colon + 1), ',')) {
      token = trim(token);
      long id = 0;
      try {
        id = std::stol(std::string(token));
      } catch (const std::exception&) {
        throw ParseError(number, "candidate ids must be integers, got '" +
                                     std::string(token) + "'");
      }
      if (id < 1) throw ParseError(number, "candidate ids are 1-based");
      max_id = std::max(max_id, id);
      order.push_back(id);
    }
    if (order.empty()) throw ParseError(number, "empty ranking");
    total_voters += count;
    if (total_voters > 1'000'000)
      throw ParseError(number, "profile exceeds 1000000 voters");
    ballots.emplace_back(count, std::move(order));
  }
  if (ballots.empty()) throw ParseError(number ? number : 1, "no ballots");

  std::vector<std::string> names;
  for (long id = 1; id <= max_id; ++id) {
    std::string name = "c" + std::to_string(id);
    if (auto it = alt_names.find(id); it != alt_names.end() &&
                                      valid_name(it->second) &&
                                      std::find(names.begin(), names.end(),
                                                it->second) == names.end())
      name = it->second;
    names.push_back(std::move(name));
  }

  std::vector<std::pair<int, std::vector<int>>> counted;
  for (const auto& [count, order] : ballots) {
    if (static_cast<long>(order.size()) != max_id)
      throw ParseError(1, "each ballot must rank all " +
                              std::to_string(max_id) + " candidates");
    std::vector<int> ranking;
    ranking.reserve(order.size());
    for (long id : order) ranking.push_back(static_cast<int>(id - 1));
    counted.emplace_back(static_cast<int>(count), std::move(ranking));
  }
  return Profile::from_ballots(std::move(names), counted);
}

json profile_to_json(const Profile& p) {
  json doc;
  doc["candidates"] = p.candidate_names();
  json ballots = json::array();
  if (p.linear()) {
    for (int v = 0; v < p.num_voters();) {
      int run = 1;
      while (v + run < p.num_voters() && p.relation(v + run) == p.relation(v))
        ++run;
      const auto& rel = p.relation(v);
      std::vector<int> ranking(p.num_candidates());
      std::iota(ranking.begin(), ranking.end(), 0);
      std::sort(ranking.begin(), ranking.end(), [&](int a, int b) {
        return rel.outdegree(a) > rel.outdegree(b);
      });
      json names = json::array();
      for (int c : ranking) names.push_back(p.candidate_name(c));
      ballots.push_back({{"count", run}, {"ranking", names}});
      v += run;
    }
  } else {
    for (int v = 0; v < p.num_voters(); ++v) {
      json pairs = json::array();
      for (auto [x, y] : p.relation(v).pairs())
        pairs.push_back({p.candidate_name(x), p.candidate_name(y)});
      ballots.push_back({{"pairs", pairs}});
    }
  }
  doc["ballots"] = ballots;
  return doc;
}

Profile profile_from_json(const json& doc) {
  std::vector<std::string> names =
      doc.at("candidates").get<std::vector<std::string>>();
  std::vector<PreferenceRelation> voters;
  bool all_rankings = true;
  const int m = static_cast<int>(names.size());
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("unknown candidate '" + name + "' in JSON");
    return static_cast<int>(it - names.begin());
  };
  for (const auto& ballot : doc.at("ballots")) {
    if (ballot.contains("ranking")) {
      std::vector<int> ranking;
      for (const auto& name : ballot.at("ranking"))
        ranking.push_back(index_of(name.get<std::string>()));
      const int count = ballot.value("count", 1);
      if (count <= 0) throw std::invalid_argument("ballot count must be positive");
      const auto rel = PreferenceRelation::from_ranking(ranking);
      for (int k = 0; k < count; ++k) voters.push_back(rel);
    } else {
      PreferenceRelation rel(m);
      for (const auto& pair : ballot.at("pairs")) {
        const int x = index_of(pair.at(0).get<std::string>());
        const int y = index_of(pair.at(1).get<std::string>());
        rel.set(x, y, true);
      }
      voters.push_back(std::move(rel));
      all_rankings = false;
    }
  }
  return Profile(std::move(names), std::move(voters), all_rankings);
}

}  // namespace votelab
