#include "votelab/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace votelab {

namespace {

void check_candidate(int c, int m, const char* what) {
  if (c < 0 || c >= m) {
    throw std::out_of_range(std::string(what) + " candidate id " +
                            std::to_string(c) + " out of range [0, " +
                            std::to_string(m) + ")");
  }
}

}  // namespace

PreferenceRelation::PreferenceRelation(int num_candidates) : m_(num_candidates) {
  if (m_ <= 0) throw std::invalid_argument("relation needs at least one candidate");
  table_.assign(static_cast<std::size_t>(m_) * m_, 0);
}

PreferenceRelation PreferenceRelation::from_pairs(
    int num_candidates, std::span<const std::pair<int, int>> pairs) {
  PreferenceRelation rel(num_candidates);
  for (auto [x, y] : pairs) {
    check_candidate(x, num_candidates, "pair");
    check_candidate(y, num_candidates, "pair");
    rel.set(x, y, true);
  }
  return rel;
}

PreferenceRelation PreferenceRelation::from_ranking(std::span<const int> ranking) {
  const int m = static_cast<int>(ranking.size());
  PreferenceRelation rel(m);
  std::vector<bool> seen(m, false);
  for (int c : ranking) {
    check_candidate(c, m, "ranking");
    if (seen[c]) throw std::invalid_argument("duplicate candidate in ranking");
    seen[c] = true;
  }
  for (std::size_t i = 0; i < ranking.size(); ++i)
    for (std::size_t j = i + 1; j < ranking.size(); ++j)
      rel.set(ranking[i], ranking[j], true);
  return rel;
}

void PreferenceRelation::set(int x, int y, bool value) {
  check_candidate(x, m_, "set");
  check_candidate(y, m_, "set");
  table_[static_cast<std::size_t>(x) * m_ + y] = value ? 1 : 0;
}

bool PreferenceRelation::is_asymmetric() const {
  for (int x = 0; x < m_; ++x) {
    if (prefers(x, x)) return false;
    for (int y = x + 1; y < m_; ++y)
      if (prefers(x, y) && prefers(y, x)) return false;
  }
  return true;
}

bool PreferenceRelation::is_linear_order() const {
  if (!is_asymmetric()) return false;
  for (int x = 0; x < m_; ++x)
    for (int y = x + 1; y < m_; ++y)
      if (!prefers(x, y) && !prefers(y, x)) return false;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y) {
      if (!prefers(x, y)) continue;
      for (int z = 0; z < m_; ++z)
        if (prefers(y, z) && !prefers(x, z)) return false;
    }
  return true;
}

PreferenceRelation PreferenceRelation::reversed() const {
  PreferenceRelation rel(m_);
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (prefers(x, y)) rel.set(y, x, true);
  return rel;
}

int PreferenceRelation::outdegree(int x) const {
  check_candidate(x, m_, "outdegree");
  int deg = 0;
  for (int y = 0; y < m_; ++y)
    if (prefers(x, y)) ++deg;
  return deg;
}

std::vector<std::pair<int, int>> PreferenceRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (prefers(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::string> default_candidate_names(int num_candidates) {
  std::vector<std::string> names;
  names.reserve(num_candidates);
  for (int c = 0; c < num_candidates; ++c) {
    if (num_candidates <= 26)
      names.push_back(std::string(1, static_cast<char>('a' + c)));
    else
      names.push_back("c" + std::to_string(c));
  }
  return names;
}

Profile::Profile(std::vector<std::string> candidate_names,
                 std::vector<PreferenceRelation> voters, bool linear)
    : names_(std::move(candidate_names)),
      voters_(std::move(voters)),
      linear_(linear) {
  if (names_.empty())
    throw std::invalid_argument("profile needs a nonempty candidate set");
  if (voters_.empty())
    throw std::invalid_argument("profile needs a nonempty voter set");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty())
      throw std::invalid_argument("empty candidate name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate candidate name '" + name + "'");
  }
  for (const auto& rel : voters_) {
    if (rel.num_candidates() != num_candidates())
      throw std::invalid_argument("voter relation has wrong candidate count");
  }
}

Profile Profile::from_rankings(std::vector<std::string> candidate_names,
                               const std::vector<std::vector<int>>& rankings) {
  std::vector<PreferenceRelation> voters;
  voters.reserve(rankings.size());
  const int m = static_cast<int>(candidate_names.size());
  for (const auto& r : rankings) {
    if (static_cast<int>(r.size()) != m)
      throw std::invalid_argument("ranking must list every candidate");
    voters.push_back(PreferenceRelation::from_ranking(r));
  }
  return Profile(std::move(candidate_names), std::move(voters), true);
}

Profile Profile::from_ballots(
    std::vector<std::string> candidate_names,
    const std::vector<std::pair<int, std::vector<int>>>& ballots) {
  std::vector<std::vector<int>> rankings;
  for (const auto& [count, ranking] : ballots) {
    if (count <= 0) throw std::invalid_argument("ballot count must be positive");
    for (int i = 0; i < count; ++i) rankings.push_back(ranking);
  }
  return from_rankings(std::move(candidate_names), rankings);
}

const std::string& Profile::candidate_name(int c) const {
  check_candidate(c, num_candidates(), "name");
  return names_[c];
}

std::optional<int> Profile::candidate_index(std::string_view name) const {
  for (int c = 0; c < num_candidates(); ++c)
    if (names_[c] == name) return c;
  return std::nullopt;
}

bool Profile::prefers(int voter, int x, int y) const {
  return relation(voter).prefers(x, y);
}

const PreferenceRelation& Profile::relation(int voter) const {
  if (voter < 0 || voter >= num_voters())
    throw std::out_of_range("voter id " + std::to_string(voter) +
                            " out of range");
  return voters_[voter];
}

std::string ValidationIssue::message(const Profile& p) const {
  const std::string a = p.candidate_name(first);
  const std::string b = p.candidate_name(second);
  const std::string v = "voter " + std::to_string(voter);
  switch (kind) {
    case Kind::symmetric_pair:
      return v + " holds both " + a + ">" + b + " and " + b + ">" + a;
    case Kind::reflexive_pair:
      return v + " holds reflexive pair " + a + ">" + a;
    case Kind::missing_comparison:
      return v + " compares neither " + a + " with " + b +
             " (profile claims linear orders)";
    case Kind::intransitive:
      return v + " is intransitive at " + a + ">...>" + b +
             " (profile claims linear orders)";
  }
  return "invalid";
}

std::optional<ValidationIssue> validate_profile(const Profile& p) {
  const int m = p.num_candidates();
  for (int v = 0; v < p.num_voters(); ++v) {
    const auto& rel = p.relation(v);
    for (int x = 0; x < m; ++x) {
      if (rel.prefers(x, x))
        return ValidationIssue{ValidationIssue::Kind::reflexive_pair, v, x, x};
      for (int y = x + 1; y < m; ++y)
        if (rel.prefers(x, y) && rel.prefers(y, x))
          return ValidationIssue{ValidationIssue::Kind::symmetric_pair, v, x, y};
    }
    if (p.linear()) {
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (!rel.prefers(x, y) && !rel.prefers(y, x))
            return ValidationIssue{ValidationIssue::Kind::missing_comparison,
                                   v, x, y};
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (!rel.prefers(x, y)) continue;
          for (int z = 0; z < m; ++z)
            if (rel.prefers(y, z) && !rel.prefers(x, z))
              return ValidationIssue{ValidationIssue::Kind::intransitive, v, x,
                                     z};
        }
    }
  }
  return std::nullopt;
}

MarginMatrix::MarginMatrix(int num_candidates) : m_(num_candidates) {
  if (m_ <= 0) throw std::invalid_argument("margin matrix needs candidates");
  cells_.assign(static_cast<std::size_t>(m_) * m_, 0);
}

int MarginMatrix::operator()(int x, int y) const {
  check_candidate(x, m_, "margin");
  check_candidate(y, m_, "margin");
  return cells_[static_cast<std::size_t>(x) * m_ + y];
}

void MarginMatrix::set(int x, int y, int value) {
  check_candidate(x, m_, "margin");
  check_candidate(y, m_, "margin");
  cells_[static_cast<std::size_t>(x) * m_ + y] = value;
}

bool MarginMatrix::is_skew_symmetric() const {
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if ((*this)(x, y) != -(*this)(y, x)) return false;
  return true;
}

int margin(const Profile& p, int x, int y) {
  check_candidate(x, p.num_candidates(), "margin");
  check_candidate(y, p.num_candidates(), "margin");
  int up = 0;
  int down = 0;
  for (int v = 0; v < p.num_voters(); ++v) {
    if (p.prefers(v, x, y)) ++up;
    if (p.prefers(v, y, x)) ++down;
  }
  return up - down;
}

MarginMatrix margin_matrix(const Profile& p) {
  const int m = p.num_candidates();
  MarginMatrix mat(m);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const int v = margin(p, x, y);
      mat.set(x, y, v);
      mat.set(y, x, -v);
    }
  return mat;
}

bool majority_preferred(const Profile& p, int x, int y) {
  return margin(p, x, y) > 0;
}

bool condorcet_winner(const Profile& p, int x) {
  check_candidate(x, p.num_candidates(), "condorcet_winner");
  for (int y = 0; y < p.num_candidates(); ++y)
    if (y != x && !majority_preferred(p, x, y)) return false;
  return true;
}

bool condorcet_loser(const Profile& p, int x) {
  check_candidate(x, p.num_candidates(), "condorcet_loser");
  for (int y = 0; y < p.num_candidates(); ++y)
    if (y != x && !majority_preferred(p, y, x)) return false;
  return true;
}

bool majority_winner(const Profile& p, int x) {
  check_candidate(x, p.num_candidates(), "majority_winner");
  int ranked_first = 0;
  int ranked_below = 0;
  for (int v = 0; v < p.num_voters(); ++v) {
    bool first = true;
    bool below = false;
    for (int y = 0; y < p.num_candidates(); ++y) {
      if (y == x) continue;
      if (!p.prefers(v, x, y)) first = false;
      if (p.prefers(v, y, x)) below = true;
    }
    if (first) ++ranked_first;
    if (below) ++ranked_below;
  }
  return ranked_first > ranked_below;
}

std::optional<int> find_condorcet_winner(const Profile& p) {
  for (int x = 0; x < p.num_candidates(); ++x)
    if (condorcet_winner(p, x)) return x;
  return std::nullopt;
}

std::optional<int> find_condorcet_loser(const Profile& p) {
  for (int x = 0; x < p.num_candidates(); ++x)
    if (condorcet_loser(p, x)) return x;
  return std::nullopt;
}

}  // namespace votelab
