#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "votelab/core.hpp"
#include "votelab/methods.hpp"

namespace votelab {

enum class AxiomId {
  finite_universal_domain,
  condorcet_criterion,
  condorcet_loser_criterion,
  pareto,
  monotonicity,
  reversal_symmetry,
  positive_involvement,
  negative_involvement,
  strong_stability_winners,
  ind_clones_nonclone,
  ind_clones_clone,
};

inline constexpr std::array<AxiomId, 11> kAllAxioms = {
    AxiomId::finite_universal_domain, AxiomId::condorcet_criterion,
    AxiomId::condorcet_loser_criterion, AxiomId::pareto,
    AxiomId::monotonicity, AxiomId::reversal_symmetry,
    AxiomId::positive_involvement, AxiomId::negative_involvement,
    AxiomId::strong_stability_winners, AxiomId::ind_clones_nonclone,
    AxiomId::ind_clones_clone};

std::string_view to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(std::string_view id);

// ---- profile transformations ----

// Every voter's relation turned around: prefers'(x, y) iff prefers(y, x).
Profile reverse_profile(const Profile& p);

// lifted is obtained from base by (possibly) moving x up: all comparisons not
// involving x are untouched, x never drops below anyone it beat, and nobody
// newly beats x. Throws std::invalid_argument if the two profiles disagree on
// voters or candidates.
bool is_simple_lift(const Profile& lifted, const Profile& base, int x);

// Append one voter with the given (asymmetric) relation.
Profile add_voter(const Profile& p, const PreferenceRelation& ballot);

// Drop voter i; at least one voter must remain.
Profile remove_voter(const Profile& p, int voter);

// Drop candidate b and reindex the survivors; margins between survivors are
// untouched. At least one candidate must remain.
Profile minus_candidate(const Profile& p, int candidate);

// Index of a surviving candidate after `removed` is deleted.
inline int reindex_after_removal(int candidate, int removed) {
  return candidate < removed ? candidate : candidate - 1;
}

// A nonempty set of clones of an anchor candidate: no voter ever ranks an
// outside candidate between the anchor and a clone (or between two clones).
struct CloneSet {
  int anchor;
  std::vector<int> clones;  // sorted, nonempty, anchor excluded
};

bool is_clone_set(const Profile& p, const CloneSet& cs);

// ---- per-instance axiom checks ----

// Witness shapes. A single profile carries intra-profile axioms; the others
// package the transformation side of an inter-profile axiom.
struct NoWitness {};
struct LiftWitness {
  Profile lifted;
  int candidate;  // the lifted candidate x
};
struct BallotWitness {
  PreferenceRelation ballot;  // the added voter
  int candidate;              // the candidate x the axiom tracks
};
struct RemovalWitness {
  int candidate;  // x, expected to keep/lose winning status
  int removed;    // y, the candidate removed from the profile
};
struct CloneWitness {
  CloneSet clones;
};

using AxiomWitness = std::variant<NoWitness, LiftWitness, BallotWitness,
                                  RemovalWitness, CloneWitness>;

std::string_view witness_kind(const AxiomWitness& w);

struct AxiomVerdict {
  bool holds;
  WinnerSet winners_base;
  // Winner set of the transformed profile, when the axiom compares two.
  std::optional<WinnerSet> winners_after;
  std::string detail;  // filled on violation
};

// Evaluate one axiom instance for one method. The witness must match the
// axiom's declared shape (std::invalid_argument otherwise):
//   finite_universal_domain, condorcet_criterion, condorcet_loser_criterion,
//   pareto, reversal_symmetry                      -> NoWitness
//   monotonicity                                   -> LiftWitness
//   positive_involvement, negative_involvement     -> BallotWitness
//   strong_stability_winners                       -> RemovalWitness
//   ind_clones_nonclone, ind_clones_clone          -> CloneWitness
// Implications whose premise fails (e.g. the witness is not actually a lift
// of a winner) hold vacuously.
AxiomVerdict check_axiom_instance(MethodId method, AxiomId axiom,
                                  const Profile& base,
                                  const AxiomWitness& witness);

}  // namespace votelab
