#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "votelab/core.hpp"

namespace votelab {

enum class MethodId {
  split_cycle,
  condorcet,
  minimax,
  copeland,
  borda,
  plurality,
  irv_parallel,
  irv_simultaneous,
};

inline constexpr std::array<MethodId, 8> kAllMethods = {
    MethodId::split_cycle, MethodId::condorcet,    MethodId::minimax,
    MethodId::copeland,    MethodId::borda,        MethodId::plurality,
    MethodId::irv_parallel, MethodId::irv_simultaneous};

std::string_view to_string(MethodId id);
std::optional<MethodId> method_from_string(std::string_view id);
// Borda, Plurality and both IRV variants need full rankings.
bool method_needs_linear(MethodId id);

// Sorted candidate indices tied for winning. Nonempty for every total
// method on a valid profile.
using WinnerSet = std::vector<int>;

bool winner_set_contains(const WinnerSet& w, int c);

// Asymmetric "x defeats y" relation produced by a collective choice rule,
// tagged with the method that produced it.
class DefeatRelation {
 public:
  DefeatRelation(int num_candidates, std::string tag);

  int num_candidates() const { return m_; }
  const std::string& tag() const { return tag_; }
  bool defeats(int x, int y) const;
  void add(int x, int y);

  bool is_asymmetric() const;
  // All defeat edges, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int m_;
  std::string tag_;
  std::vector<std::uint8_t> table_;
};

// No cycle in the defeat relation (depth-first back-edge search).
bool is_acyclic(const DefeatRelation& d);

// Split Cycle defeat, cycle form: margin(x,y) is positive and no cycle of
// the margin graph at threshold margin(x,y) passes through both x and y.
bool split_cycle_defeats_cycle_def(const MarginMatrix& m, int x, int y);
bool split_cycle_defeats_cycle_def(const Profile& p, int x, int y);

// Split Cycle defeat, path form: margin(x,y) is positive and no path from y
// back to x survives at threshold margin(x,y).
bool split_cycle_defeats_path_def(const MarginMatrix& m, int x, int y);
bool split_cycle_defeats_path_def(const Profile& p, int x, int y);

DefeatRelation split_cycle_defeat_relation(const Profile& p);

// Candidates nobody defeats.
WinnerSet max_element_winners(const DefeatRelation& d);

// Undefeated candidates of the cycle-form defeat relation; agrees with the
// path form (covered by the test suite).
WinnerSet split_cycle_winners(const Profile& p);

// The Condorcet winner alone if there is one, otherwise every candidate.
WinnerSet condorcet_scc(const Profile& p);

WinnerSet minimax_winners(const Profile& p);
WinnerSet copeland_winners(const Profile& p);
// Margin-sum Borda: argmax of sum_y margin(x, y). Matches positional Borda
// on linear profiles, which it requires.
WinnerSet borda_winners(const Profile& p);
WinnerSet plurality_winners(const Profile& p);

// Parallel-universe Instant Runoff: x wins iff x is the sole candidate or
// some candidate y with the fewest first-place votes can be removed so that
// x wins the reduced election. Memoized on candidate subsets.
WinnerSet irv_parallel_winners(const Profile& p);

// Simultaneous-elimination Instant Runoff: drop all minimal-plurality
// candidates at once; if that would empty the field, everyone wins.
WinnerSet irv_simultaneous_winners(const Profile& p);

WinnerSet winners(MethodId id, const Profile& p);

// Registry for the CLI and the equivalence checker. Includes the two Split
// Cycle definitional variants as internal entries.
struct MethodInfo {
  std::string_view id;
  bool needs_linear;
  bool internal;
  WinnerSet (*compute)(const Profile&);
};

std::span<const MethodInfo> method_registry();
const MethodInfo* find_method(std::string_view id);

}  // namespace votelab
