#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "votelab/axioms.hpp"
#include "votelab/core.hpp"
#include "votelab/methods.hpp"

namespace votelab {

enum class BallotClass { linear, asymmetric };

std::string_view to_string(BallotClass cls);
std::optional<BallotClass> ballot_class_from_string(std::string_view name);

// Bounds of an exhaustive search. Every election size 1..max_candidates x
// 1..max_voters is covered. Documented limits: at most 5 candidates for
// linear ballots, 3 for unrestricted asymmetric ballots, at most 64 voters,
// and at most 250 million profiles in total across all sizes; bounds beyond
// that are rejected up front.
struct SearchBounds {
  int max_candidates = 3;
  int max_voters = 3;
  BallotClass ballot_class = BallotClass::linear;
  bool anonymize = false;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

// Throws std::invalid_argument when the bounds exceed the documented limits.
void validate_search_bounds(const SearchBounds& bounds);

// Index-addressable stream of every profile with exactly `num_candidates`
// candidates and `num_voters` voters. The linear class runs over all
// assignments of the m! strict linear orders to voters; the asymmetric class
// over all assignments of arbitrary asymmetric relations. With anonymize set,
// one representative per multiset of ballots is produced (sound for the
// anonymous methods implemented here). Enumeration order is fixed, so
// at(i) is reproducible and ranges can be partitioned across workers.
class ProfileEnumerator {
 public:
  ProfileEnumerator(int num_candidates, int num_voters, BallotClass cls,
                    bool anonymize);

  std::uint64_t count() const { return count_; }
  Profile at(std::uint64_t index) const;

  int num_candidates() const { return m_; }
  int num_voters() const { return n_; }

 private:
  std::vector<int> ballot_indices(std::uint64_t index) const;

  int m_;
  int n_;
  BallotClass cls_;
  bool anonymize_;
  std::vector<std::vector<int>> orders_;          // linear class
  std::vector<PreferenceRelation> relations_;     // asymmetric class
  std::uint64_t per_voter_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint64_t>> choose_;  // saturating Pascal table
  std::vector<std::string> names_;
};

// A stored, replayable axiom violation.
struct Counterexample {
  MethodId method;
  AxiomId axiom;
  Profile profile;
  AxiomWitness witness;
  WinnerSet winners_base;
  std::optional<WinnerSet> winners_after;
  std::string detail;
};

// Re-runs the instance check on the stored witness.
AxiomVerdict replay(const Counterexample& cex);

struct EquivMismatch {
  std::string method_a;
  std::string method_b;
  Profile profile;
  WinnerSet winners_a;
  WinnerSet winners_b;
};

struct SearchReport {
  enum class Outcome { certified_holds, counterexample_found };

  Outcome outcome;
  // Profiles up to and including the counterexample in canonical enumeration
  // order, or every profile in bounds when certified. Independent of the
  // worker count.
  std::uint64_t profiles_examined = 0;
  double wall_seconds = 0.0;
  SearchBounds bounds;
  std::string note;  // e.g. empty witness space for these bounds
  std::optional<Counterexample> counterexample;
  std::optional<EquivMismatch> mismatch;
};

// Exhaustive counterexample search for one (method, axiom) pair. Scans
// profiles in canonical order — sizes ascending by (candidates, voters),
// then by profile index — and for each profile the axiom's witness space in
// a fixed order. Stops at the first violation. `jobs` workers partition each
// size block into contiguous index ranges; the minimal-index violation wins,
// so the result is identical for any worker count.
SearchReport find_counterexample(MethodId method, AxiomId axiom,
                                 const SearchBounds& bounds, int jobs = 1);

// Certifies that two registered methods (the Split Cycle definitional
// variants included) pick the same winners on every profile in bounds, or
// reports the first profile where they differ.
SearchReport verify_method_equivalence(std::string_view method_a,
                                       std::string_view method_b,
                                       const SearchBounds& bounds,
                                       int jobs = 1);

// Literal reading of the Split Cycle cycle condition, used as the reference
// oracle for both production definitions: enumerate every simple cycle of
// the margin graph at threshold t as an explicit vertex list and test it
// with is_cycle plus membership of x and y.
bool cycle_through_pair_bruteforce(const MarginMatrix& margins, int t, int x,
                                   int y);

// Reference Split Cycle verdict via cycle enumeration; at most 6 candidates.
bool brute_force_split_cycle(const Profile& p, int x, int y);

}  // namespace votelab
