#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace votelab {

// Candidates and voters are dense indices into the owning profile:
// 0..m-1 and 0..n-1. Display names live on the profile.
using CandidateId = int;
using VoterId = int;

// One voter's strict preference relation over candidates 0..m-1, stored as a
// dense m x m boolean table. prefers(x, y) means the voter strictly prefers
// x to y. The table makes no structural promises by itself; asymmetry and
// (optionally) linearity are checked by validate_profile.
class PreferenceRelation {
 public:
  explicit PreferenceRelation(int num_candidates);

  static PreferenceRelation from_pairs(
      int num_candidates, std::span<const std::pair<int, int>> pairs);
  // ranking[0] is the most preferred candidate; must be a permutation of
  // 0..m-1. Produces a strict linear order.
  static PreferenceRelation from_ranking(std::span<const int> ranking);

  int num_candidates() const { return m_; }
  bool prefers(int x, int y) const { return table_[x * m_ + y] != 0; }
  void set(int x, int y, bool value);

  bool is_asymmetric() const;  // includes irreflexivity
  bool is_linear_order() const;
  PreferenceRelation reversed() const;

  // Number of candidates this voter ranks strictly below x.
  int outdegree(int x) const;

  // All (x, y) with prefers(x, y), lexicographically sorted.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const PreferenceRelation&,
                         const PreferenceRelation&) = default;

 private:
  int m_;
  std::vector<std::uint8_t> table_;
};

// "a", "b", ... for small m, "c0", "c1", ... beyond 26.
std::vector<std::string> default_candidate_names(int num_candidates);

// An election profile: a finite nonempty set of voters, each with a strict
// (asymmetric) preference relation over a finite nonempty candidate set.
// Immutable after construction; all operations on profiles are pure.
//
// The linear flag is a claim recorded at construction ("every voter's
// relation is a strict linear order"); validate_profile verifies it.
// Methods that need full rankings (Borda, Plurality, IRV) require the flag.
class Profile {
 public:
  // Throws std::invalid_argument on an empty candidate or voter set,
  // duplicate/empty candidate names, or relation size mismatch.
  Profile(std::vector<std::string> candidate_names,
          std::vector<PreferenceRelation> voters, bool linear);

  static Profile from_rankings(std::vector<std::string> candidate_names,
                               const std::vector<std::vector<int>>& rankings);
  // (count, ranking) groups, expanded in order into `count` identical voters.
  static Profile from_ballots(
      std::vector<std::string> candidate_names,
      const std::vector<std::pair<int, std::vector<int>>>& ballots);

  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_voters() const { return static_cast<int>(voters_.size()); }

  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(int c) const;
  std::optional<int> candidate_index(std::string_view name) const;

  bool prefers(int voter, int x, int y) const;
  const PreferenceRelation& relation(int voter) const;
  const std::vector<PreferenceRelation>& relations() const { return voters_; }
  bool linear() const { return linear_; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<PreferenceRelation> voters_;
  bool linear_;
};

struct ValidationIssue {
  enum class Kind {
    symmetric_pair,     // both (x,y) and (y,x) held by one voter
    reflexive_pair,     // (x,x) held
    missing_comparison, // linear flag set but neither (x,y) nor (y,x)
    intransitive,       // linear flag set, x>y>z but not x>z
  };
  Kind kind;
  int voter;
  int first;
  int second;

  std::string message(const Profile& p) const;
};

// First violation of the profile invariants in scan order
// (voter, then candidate pair), or nullopt if the profile is valid.
std::optional<ValidationIssue> validate_profile(const Profile& p);

// Integer matrix of pairwise margins. Skew-symmetric with zero diagonal
// whenever it was computed from a profile.
class MarginMatrix {
 public:
  explicit MarginMatrix(int num_candidates);

  int num_candidates() const { return m_; }
  int operator()(int x, int y) const;
  void set(int x, int y, int value);

  bool is_skew_symmetric() const;

  friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;

 private:
  int m_;
  std::vector<int> cells_;
};

// Number of voters preferring x to y minus the number preferring y to x.
// Throws std::out_of_range for invalid candidate ids.
int margin(const Profile& p, int x, int y);

MarginMatrix margin_matrix(const Profile& p);

// margin(p, x, y) > 0
bool majority_preferred(const Profile& p, int x, int y);

// x beats every other candidate head-to-head.
bool condorcet_winner(const Profile& p, int x);

// x loses to every other candidate head-to-head.
bool condorcet_loser(const Profile& p, int x);

// More voters rank x (and only x) first than rank some other candidate
// above x. Quantifier shape follows the strict-preference reading, so it is
// meaningful for non-linear relations too; with a single candidate every
// voter vacuously ranks it first.
bool majority_winner(const Profile& p, int x);

// Unique Condorcet winner/loser if one exists.
std::optional<int> find_condorcet_winner(const Profile& p);
std::optional<int> find_condorcet_loser(const Profile& p);

}  // namespace votelab
