#include "votelab/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace votelab {

namespace {

struct AxiomName {
  AxiomId id;
  std::string_view name;
};

constexpr std::array<AxiomName, 11> kAxiomNames = {{
    {AxiomId::finite_universal_domain, "finite_universal_domain"},
    {AxiomId::condorcet_criterion, "condorcet_criterion"},
    {AxiomId::condorcet_loser_criterion, "condorcet_loser_criterion"},
    {AxiomId::pareto, "pareto"},
    {AxiomId::monotonicity, "monotonicity"},
    {AxiomId::reversal_symmetry, "reversal_symmetry"},
    {AxiomId::positive_involvement, "positive_involvement"},
    {AxiomId::negative_involvement, "negative_involvement"},
    {AxiomId::strong_stability_winners, "strong_stability_winners"},
    {AxiomId::ind_clones_nonclone, "ind_clones_nonclone"},
    {AxiomId::ind_clones_clone, "ind_clones_clone"},
}};

std::string format_winners(const Profile& p, const WinnerSet& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += p.candidate_name(w[i]);
  }
  return out + "}";
}

void check_candidate_range(const Profile& p, int c, const char* what) {
  if (c < 0 || c >= p.num_candidates())
    throw std::out_of_range(std::string(what) + ": candidate out of range");
}

// Ballot ranks x strictly above every other candidate.
bool ranks_unique_first(const PreferenceRelation& ballot, int x) {
  for (int y = 0; y < ballot.num_candidates(); ++y)
    if (y != x && !ballot.prefers(x, y)) return false;
  return true;
}

// Ballot ranks every other candidate strictly above x.
bool ranks_unique_last(const PreferenceRelation& ballot, int x) {
  for (int y = 0; y < ballot.num_candidates(); ++y)
    if (y != x && !ballot.prefers(y, x)) return false;
  return true;
}

template <typename T>
const T& expect_witness(const AxiomWitness& w, AxiomId axiom) {
  if (const T* value = std::get_if<T>(&w)) return *value;
  throw std::invalid_argument(std::string("axiom ") +
                              std::string(to_string(axiom)) +
                              " got a witness of the wrong shape (" +
                              std::string(witness_kind(w)) + ")");
}

}  // namespace

std::string_view to_string(AxiomId id) {
  for (const auto& entry : kAxiomNames)
    if (entry.id == id) return entry.name;
  throw std::invalid_argument("unknown axiom id");
}

std::optional<AxiomId> axiom_from_string(std::string_view id) {
  for (const auto& entry : kAxiomNames)
    if (entry.name == id) return entry.id;
  return std::nullopt;
}

Profile reverse_profile(const Profile& p) {
  std::vector<PreferenceRelation> voters;
  voters.reserve(p.num_voters());
  for (int v = 0; v < p.num_voters(); ++v)
    voters.push_back(p.relation(v).reversed());
  return Profile(p.candidate_names(), std::move(voters), p.linear());
}

bool is_simple_lift(const Profile& lifted, const Profile& base, int x) {
  if (lifted.num_candidates() != base.num_candidates() ||
      lifted.num_voters() != base.num_voters() ||
      lifted.candidate_names() != base.candidate_names())
    throw std::invalid_argument("simple lift needs matching voters/candidates");
  check_candidate_range(base, x, "is_simple_lift");
  const int m = base.num_candidates();
  for (int v = 0; v < base.num_voters(); ++v) {
    for (int a = 0; a < m; ++a) {
      if (a == x) continue;
      for (int b = 0; b < m; ++b) {
        if (b == x) continue;
        if (base.prefers(v, a, b) != lifted.prefers(v, a, b)) return false;
      }
      if (base.prefers(v, x, a) && !lifted.prefers(v, x, a)) return false;
      if (lifted.prefers(v, a, x) && !base.prefers(v, a, x)) return false;
    }
  }
  return true;
}

Profile add_voter(const Profile& p, const PreferenceRelation& ballot) {
  if (ballot.num_candidates() != p.num_candidates())
    throw std::invalid_argument("added ballot has wrong candidate count");
  if (!ballot.is_asymmetric())
    throw std::invalid_argument("added ballot violates asymmetry");
  auto voters = p.relations();
  voters.push_back(ballot);
  return Profile(p.candidate_names(), std::move(voters),
                 p.linear() && ballot.is_linear_order());
}

Profile remove_voter(const Profile& p, int voter) {
  if (voter < 0 || voter >= p.num_voters())
    throw std::out_of_range("remove_voter: voter out of range");
  if (p.num_voters() < 2)
    throw std::invalid_argument("cannot remove the last voter");
  auto voters = p.relations();
  voters.erase(voters.begin() + voter);
  return Profile(p.candidate_names(), std::move(voters), p.linear());
}

Profile minus_candidate(const Profile& p, int candidate) {
  check_candidate_range(p, candidate, "minus_candidate");
  const int m = p.num_candidates();
  if (m < 2) throw std::invalid_argument("cannot remove the last candidate");
  std::vector<std::string> names;
  names.reserve(m - 1);
  for (int c = 0; c < m; ++c)
    if (c != candidate) names.push_back(p.candidate_name(c));
  std::vector<PreferenceRelation> voters;
  voters.reserve(p.num_voters());
  for (int v = 0; v < p.num_voters(); ++v) {
    PreferenceRelation rel(m - 1);
    for (int x = 0; x < m; ++x) {
      if (x == candidate) continue;
      for (int y = 0; y < m; ++y) {
        if (y == candidate || !p.prefers(v, x, y)) continue;
        rel.set(reindex_after_removal(x, candidate),
                reindex_after_removal(y, candidate), true);
      }
    }
    voters.push_back(std::move(rel));
  }
  return Profile(std::move(names), std::move(voters), p.linear());
}

bool is_clone_set(const Profile& p, const CloneSet& cs) {
  check_candidate_range(p, cs.anchor, "is_clone_set");
  if (cs.clones.empty())
    throw std::invalid_argument("clone set needs a nonempty clone list");
  std::vector<bool> in_set(p.num_candidates(), false);
  in_set[cs.anchor] = true;
  for (int c : cs.clones) {
    check_candidate_range(p, c, "is_clone_set");
    if (c == cs.anchor)
      throw std::invalid_argument("anchor cannot be its own clone");
    in_set[c] = true;
  }
  for (int clone : cs.clones)
    for (int x = 0; x < p.num_candidates(); ++x) {
      if (in_set[x]) continue;
      for (int v = 0; v < p.num_voters(); ++v) {
        if (p.prefers(v, cs.anchor, x) != p.prefers(v, clone, x)) return false;
        if (p.prefers(v, x, cs.anchor) != p.prefers(v, x, clone)) return false;
      }
    }
  return true;
}

std::string_view witness_kind(const AxiomWitness& w) {
  switch (w.index()) {
    case 0: return "none";
    case 1: return "lift";
    case 2: return "add_voter";
    case 3: return "remove_candidate";
    case 4: return "clone_set";
  }
  return "unknown";
}

AxiomVerdict check_axiom_instance(MethodId method, AxiomId axiom,
                                  const Profile& base,
                                  const AxiomWitness& witness) {
  AxiomVerdict verdict;
  verdict.holds = true;
  verdict.winners_base = winners(method, base);
  const WinnerSet& before = verdict.winners_base;

  switch (axiom) {
    case AxiomId::finite_universal_domain: {
      expect_witness<NoWitness>(witness, axiom);
      if (before.empty()) {
        verdict.holds = false;
        verdict.detail = "empty winner set";
      }
      break;
    }

    case AxiomId::condorcet_criterion: {
      expect_witness<NoWitness>(witness, axiom);
      if (auto cw = find_condorcet_winner(base)) {
        if (before != WinnerSet{*cw}) {
          verdict.holds = false;
          verdict.detail = base.candidate_name(*cw) +
                           " is the Condorcet winner but the winners are " +
                           format_winners(base, before);
        }
      }
      break;
    }

    case AxiomId::condorcet_loser_criterion: {
      expect_witness<NoWitness>(witness, axiom);
      if (base.num_candidates() < 2) break;  // no head-to-head losses exist
      if (auto cl = find_condorcet_loser(base)) {
        if (winner_set_contains(before, *cl)) {
          verdict.holds = false;
          verdict.detail = base.candidate_name(*cl) +
                           " is the Condorcet loser yet wins: " +
                           format_winners(base, before);
        }
      }
      break;
    }

    case AxiomId::pareto: {
      expect_witness<NoWitness>(witness, axiom);
      const int m = base.num_candidates();
      for (int x = 0; x < m && verdict.holds; ++x)
        for (int y = 0; y < m && verdict.holds; ++y) {
          if (x == y || !winner_set_contains(before, y)) continue;
          bool unanimous = true;
          for (int v = 0; v < base.num_voters() && unanimous; ++v)
            if (!base.prefers(v, x, y)) unanimous = false;
          if (unanimous) {
            verdict.holds = false;
            verdict.detail = "every voter ranks " + base.candidate_name(x) +
                             " above " + base.candidate_name(y) + " yet " +
                             base.candidate_name(y) + " wins";
          }
        }
      break;
    }

    case AxiomId::monotonicity: {
      const auto& w = expect_witness<LiftWitness>(witness, axiom);
      if (!winner_set_contains(before, w.candidate)) break;
      if (!is_simple_lift(w.lifted, base, w.candidate)) break;
      const auto after = winners(method, w.lifted);
      verdict.winners_after = after;
      if (!winner_set_contains(after, w.candidate)) {
        verdict.holds = false;
        verdict.detail = base.candidate_name(w.candidate) +
                         " wins, then loses after being lifted: " +
                         format_winners(base, before) + " -> " +
                         format_winners(base, after);
      }
      break;
    }

    case AxiomId::reversal_symmetry: {
      expect_witness<NoWitness>(witness, axiom);
      if (base.num_candidates() < 2 || before.size() != 1) break;
      const int x = before[0];
      const auto after = winners(method, reverse_profile(base));
      verdict.winners_after = after;
      if (winner_set_contains(after, x)) {
        verdict.holds = false;
        verdict.detail = base.candidate_name(x) +
                         " wins uniquely and still wins after reversal";
      }
      break;
    }

    case AxiomId::positive_involvement: {
      const auto& w = expect_witness<BallotWitness>(witness, axiom);
      check_candidate_range(base, w.candidate, "positive_involvement");
      if (w.ballot.num_candidates() != base.num_candidates())
        throw std::invalid_argument("witness ballot has wrong candidate count");
      if (!winner_set_contains(before, w.candidate)) break;
      if (!ranks_unique_first(w.ballot, w.candidate)) break;
      const auto after = winners(method, add_voter(base, w.ballot));
      verdict.winners_after = after;
      if (!winner_set_contains(after, w.candidate)) {
        verdict.holds = false;
        verdict.detail = base.candidate_name(w.candidate) +
                         " wins, then loses after gaining a supporter: " +
                         format_winners(base, before) + " -> " +
                         format_winners(base, after);
      }
      break;
    }

    case AxiomId::negative_involvement: {
      const auto& w = expect_witness<BallotWitness>(witness, axiom);
      check_candidate_range(base, w.candidate, "negative_involvement");
      if (w.ballot.num_candidates() != base.num_candidates())
        throw std::invalid_argument("witness ballot has wrong candidate count");
      if (winner_set_contains(before, w.candidate)) break;
      if (!ranks_unique_last(w.ballot, w.candidate)) break;
      const auto after = winners(method, add_voter(base, w.ballot));
      verdict.winners_after = after;
      if (winner_set_contains(after, w.candidate)) {
        verdict.holds = false;
        verdict.detail = base.candidate_name(w.candidate) +
                         " loses, then wins after gaining an opponent: " +
                         format_winners(base, before) + " -> " +
                         format_winners(base, after);
      }
      break;
    }

    case AxiomId::strong_stability_winners: {
      const auto& w = expect_witness<RemovalWitness>(witness, axiom);
      check_candidate_range(base, w.candidate, "strong_stability_winners");
      check_candidate_range(base, w.removed, "strong_stability_winners");
      if (w.candidate == w.removed)
        throw std::invalid_argument(
            "strong_stability_winners: candidate equals the removed one");
      if (margin(base, w.removed, w.candidate) > 0) break;
      const auto reduced = minus_candidate(base, w.removed);
      const auto reduced_winners = winners(method, reduced);
      verdict.winners_after = reduced_winners;
      const int x_reduced = reindex_after_removal(w.candidate, w.removed);
      if (!winner_set_contains(reduced_winners, x_reduced)) break;
      if (!winner_set_contains(before, w.candidate)) {
        verdict.holds = false;
        verdict.detail = base.candidate_name(w.candidate) +
                         " wins without " + base.candidate_name(w.removed) +
                         " (who does not beat it) but loses with it: " +
                         format_winners(base, before);
      }
      break;
    }

    case AxiomId::ind_clones_nonclone:
    case AxiomId::ind_clones_clone: {
      const auto& w = expect_witness<CloneWitness>(witness, axiom);
      if (!is_clone_set(base, w.clones)) break;
      const int c = w.clones.anchor;
      const auto reduced = minus_candidate(base, c);
      const auto after = winners(method, reduced);
      verdict.winners_after = after;
      std::vector<bool> in_set(base.num_candidates(), false);
      in_set[c] = true;
      for (int clone : w.clones.clones) in_set[clone] = true;

      if (axiom == AxiomId::ind_clones_nonclone) {
        for (int a = 0; a < base.num_candidates() && verdict.holds; ++a) {
          if (in_set[a]) continue;
          const bool wins_full = winner_set_contains(before, a);
          const bool wins_reduced =
              winner_set_contains(after, reindex_after_removal(a, c));
          if (wins_full != wins_reduced) {
            verdict.holds = false;
            verdict.detail = "non-clone " + base.candidate_name(a) +
                             (wins_full ? " wins only with" : " wins only without") +
                             " the clone " + base.candidate_name(c) +
                             " present: " + format_winners(base, before) +
                             " vs " + format_winners(reduced, after);
          }
        }
      } else {
        bool clone_wins_full = winner_set_contains(before, c);
        for (int clone : w.clones.clones)
          clone_wins_full = clone_wins_full || winner_set_contains(before, clone);
        bool clone_wins_reduced = false;
        for (int clone : w.clones.clones)
          clone_wins_reduced =
              clone_wins_reduced ||
              winner_set_contains(after, reindex_after_removal(clone, c));
        if (clone_wins_full != clone_wins_reduced) {
          verdict.holds = false;
          verdict.detail =
              std::string("a clone wins ") +
              (clone_wins_full ? "with" : "only without") + " " +
              base.candidate_name(c) + " present: " +
              format_winners(base, before) + " vs " +
              format_winners(reduced, after);
        }
      }
      break;
    }
  }
  return verdict;
}

}  // namespace votelab
