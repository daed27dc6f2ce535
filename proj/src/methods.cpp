#include "votelab/methods.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "votelab/graph.hpp"

namespace votelab {

namespace {

constexpr int kMaxIrvCandidates = 32;  // subsets are tracked as uint32_t masks

struct MethodName {
  MethodId id;
  std::string_view name;
};

constexpr std::array<MethodName, 8> kMethodNames = {{
    {MethodId::split_cycle, "split_cycle"},
    {MethodId::condorcet, "condorcet"},
    {MethodId::minimax, "minimax"},
    {MethodId::copeland, "copeland"},
    {MethodId::borda, "borda"},
    {MethodId::plurality, "plurality"},
    {MethodId::irv_parallel, "irv_parallel"},
    {MethodId::irv_simultaneous, "irv_simultaneous"},
}};

void require_linear(const Profile& p, const char* method) {
  if (!p.linear())
    throw std::invalid_argument(std::string(method) +
                                " needs a profile of linear ballots");
}

WinnerSet all_candidates(int m) {
  WinnerSet w(m);
  for (int c = 0; c < m; ++c) w[c] = c;
  return w;
}

// argmax over candidates of an integer score.
WinnerSet best_by_score(std::span<const long long> score) {
  const long long best = *std::max_element(score.begin(), score.end());
  WinnerSet w;
  for (int c = 0; c < static_cast<int>(score.size()); ++c)
    if (score[c] == best) w.push_back(c);
  return w;
}

// First-place counts restricted to the candidates in `alive`: voter v scores
// for c iff c is alive and v prefers c to every other alive candidate.
std::vector<int> first_place_counts(const Profile& p, std::uint32_t alive) {
  const int m = p.num_candidates();
  std::vector<int> counts(m, 0);
  for (int v = 0; v < p.num_voters(); ++v) {
    for (int c = 0; c < m; ++c) {
      if (!(alive >> c & 1)) continue;
      bool top = true;
      for (int d = 0; d < m && top; ++d)
        if (d != c && (alive >> d & 1) && !p.prefers(v, c, d)) top = false;
      if (top) {
        ++counts[c];
        break;
      }
    }
  }
  return counts;
}

int min_alive_count(std::span<const int> counts, std::uint32_t alive) {
  int lo = std::numeric_limits<int>::max();
  for (int c = 0; c < static_cast<int>(counts.size()); ++c)
    if ((alive >> c & 1) && counts[c] < lo) lo = counts[c];
  return lo;
}

std::uint32_t irv_parallel_mask(const Profile& p, std::uint32_t alive,
                                std::unordered_map<std::uint32_t, std::uint32_t>& memo) {
  if (std::popcount(alive) == 1) return alive;
  if (auto it = memo.find(alive); it != memo.end()) return it->second;
  const auto counts = first_place_counts(p, alive);
  const int lo = min_alive_count(counts, alive);
  std::uint32_t result = 0;
  for (int y = 0; y < p.num_candidates(); ++y)
    if ((alive >> y & 1) && counts[y] == lo)
      result |= irv_parallel_mask(p, alive & ~(std::uint32_t{1} << y), memo);
  memo.emplace(alive, result);
  return result;
}

WinnerSet mask_to_winners(std::uint32_t mask, int m) {
  WinnerSet w;
  for (int c = 0; c < m; ++c)
    if (mask >> c & 1) w.push_back(c);
  return w;
}

WinnerSet split_cycle_winners_cycle_route(const Profile& p) {
  return max_element_winners(split_cycle_defeat_relation(p));
}

WinnerSet split_cycle_winners_path_route(const Profile& p) {
  const auto m = margin_matrix(p);
  DefeatRelation d(p.num_candidates(), "split_cycle_path_def");
  for (int x = 0; x < p.num_candidates(); ++x)
    for (int y = 0; y < p.num_candidates(); ++y)
      if (x != y && split_cycle_defeats_path_def(m, x, y)) d.add(x, y);
  return max_element_winners(d);
}

constexpr std::array<MethodInfo, 10> kRegistry = {{
    {"split_cycle", false, false, &split_cycle_winners},
    {"condorcet", false, false, &condorcet_scc},
    {"minimax", false, false, &minimax_winners},
    {"copeland", false, false, &copeland_winners},
    {"borda", true, false, &borda_winners},
    {"plurality", true, false, &plurality_winners},
    {"irv_parallel", true, false, &irv_parallel_winners},
    {"irv_simultaneous", true, false, &irv_simultaneous_winners},
    {"split_cycle_cycle_def", false, true, &split_cycle_winners_cycle_route},
    {"split_cycle_path_def", false, true, &split_cycle_winners_path_route},
}};

}  // namespace

std::string_view to_string(MethodId id) {
  for (const auto& entry : kMethodNames)
    if (entry.id == id) return entry.name;
  throw std::invalid_argument("unknown method id");
}

std::optional<MethodId> method_from_string(std::string_view id) {
  for (const auto& entry : kMethodNames)
    if (entry.name == id) return entry.id;
  return std::nullopt;
}

bool method_needs_linear(MethodId id) {
  return id == MethodId::borda || id == MethodId::plurality ||
         id == MethodId::irv_parallel || id == MethodId::irv_simultaneous;
}

bool winner_set_contains(const WinnerSet& w, int c) {
  return std::binary_search(w.begin(), w.end(), c);
}

DefeatRelation::DefeatRelation(int num_candidates, std::string tag)
    : m_(num_candidates), tag_(std::move(tag)) {
  if (m_ <= 0) throw std::invalid_argument("defeat relation needs candidates");
  table_.assign(static_cast<std::size_t>(m_) * m_, 0);
}

bool DefeatRelation::defeats(int x, int y) const {
  if (x < 0 || x >= m_ || y < 0 || y >= m_)
    throw std::out_of_range("defeat relation candidate out of range");
  return table_[static_cast<std::size_t>(x) * m_ + y] != 0;
}

void DefeatRelation::add(int x, int y) {
  if (x < 0 || x >= m_ || y < 0 || y >= m_)
    throw std::out_of_range("defeat relation candidate out of range");
  table_[static_cast<std::size_t>(x) * m_ + y] = 1;
}

bool DefeatRelation::is_asymmetric() const {
  for (int x = 0; x < m_; ++x) {
    if (defeats(x, x)) return false;
    for (int y = x + 1; y < m_; ++y)
      if (defeats(x, y) && defeats(y, x)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> DefeatRelation::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (defeats(x, y)) out.emplace_back(x, y);
  return out;
}

bool is_acyclic(const DefeatRelation& d) {
  const int m = d.num_candidates();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(m, 0);
  auto dfs = [&](auto&& self, int u) -> bool {
    state[u] = 1;
    for (int v = 0; v < m; ++v) {
      if (!d.defeats(u, v)) continue;
      if (state[v] == 1) return false;
      if (state[v] == 0 && !self(self, v)) return false;
    }
    state[u] = 2;
    return true;
  };
  for (int u = 0; u < m; ++u)
    if (state[u] == 0 && !dfs(dfs, u)) return false;
  return true;
}

bool split_cycle_defeats_cycle_def(const MarginMatrix& m, int x, int y) {
  const int t = m(x, y);
  return t > 0 && !exists_cycle_through(m, t, x, y);
}

bool split_cycle_defeats_cycle_def(const Profile& p, int x, int y) {
  return split_cycle_defeats_cycle_def(margin_matrix(p), x, y);
}

bool split_cycle_defeats_path_def(const MarginMatrix& m, int x, int y) {
  const int t = m(x, y);
  return t > 0 && !threshold_reachable(m, t, y, x);
}

bool split_cycle_defeats_path_def(const Profile& p, int x, int y) {
  return split_cycle_defeats_path_def(margin_matrix(p), x, y);
}

DefeatRelation split_cycle_defeat_relation(const Profile& p) {
  const auto m = margin_matrix(p);
  DefeatRelation d(p.num_candidates(), "split_cycle");
  for (int x = 0; x < p.num_candidates(); ++x)
    for (int y = 0; y < p.num_candidates(); ++y)
      if (x != y && split_cycle_defeats_cycle_def(m, x, y)) d.add(x, y);
  return d;
}

WinnerSet max_element_winners(const DefeatRelation& d) {
  WinnerSet w;
  for (int x = 0; x < d.num_candidates(); ++x) {
    bool defeated = false;
    for (int y = 0; y < d.num_candidates() && !defeated; ++y)
      if (d.defeats(y, x)) defeated = true;
    if (!defeated) w.push_back(x);
  }
  return w;
}

WinnerSet split_cycle_winners(const Profile& p) {
  return split_cycle_winners_cycle_route(p);
}

WinnerSet condorcet_scc(const Profile& p) {
  if (auto winner = find_condorcet_winner(p)) return {*winner};
  return all_candidates(p.num_candidates());
}

WinnerSet minimax_winners(const Profile& p) {
  const int m = p.num_candidates();
  const auto mat = margin_matrix(p);
  std::vector<long long> score(m, 0);
  for (int x = 0; x < m; ++x) {
    long long worst = std::numeric_limits<long long>::min();
    for (int y = 0; y < m; ++y)
      if (y != x) worst = std::max<long long>(worst, mat(y, x));
    if (m == 1) worst = 0;  // empty maximum
    score[x] = -worst;
  }
  return best_by_score(score);
}

WinnerSet copeland_winners(const Profile& p) {
  const int m = p.num_candidates();
  const auto mat = margin_matrix(p);
  std::vector<long long> score(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      if (mat(x, y) > 0) ++score[x];
      if (mat(x, y) < 0) --score[x];
    }
  return best_by_score(score);
}

WinnerSet borda_winners(const Profile& p) {
  require_linear(p, "borda");
  const int m = p.num_candidates();
  const auto mat = margin_matrix(p);
  std::vector<long long> score(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) score[x] += mat(x, y);
  return best_by_score(score);
}

WinnerSet plurality_winners(const Profile& p) {
  require_linear(p, "plurality");
  const int m = p.num_candidates();
  if (m > kMaxIrvCandidates)
    throw std::invalid_argument("plurality supports at most 32 candidates");
  const auto counts =
      first_place_counts(p, m == 32 ? ~std::uint32_t{0}
                                    : (std::uint32_t{1} << m) - 1);
  std::vector<long long> score(counts.begin(), counts.end());
  return best_by_score(score);
}

WinnerSet irv_parallel_winners(const Profile& p) {
  require_linear(p, "irv_parallel");
  const int m = p.num_candidates();
  if (m > kMaxIrvCandidates)
    throw std::invalid_argument("irv supports at most 32 candidates");
  const std::uint32_t full =
      m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  return mask_to_winners(irv_parallel_mask(p, full, memo), m);
}

WinnerSet irv_simultaneous_winners(const Profile& p) {
  require_linear(p, "irv_simultaneous");
  const int m = p.num_candidates();
  if (m > kMaxIrvCandidates)
    throw std::invalid_argument("irv supports at most 32 candidates");
  std::uint32_t alive = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  while (true) {
    const auto counts = first_place_counts(p, alive);
    const int lo = min_alive_count(counts, alive);
    std::uint32_t losers = 0;
    for (int c = 0; c < m; ++c)
      if ((alive >> c & 1) && counts[c] == lo) losers |= std::uint32_t{1} << c;
    if (losers == alive) return mask_to_winners(alive, m);
    alive &= ~losers;
  }
}

WinnerSet winners(MethodId id, const Profile& p) {
  switch (id) {
    case MethodId::split_cycle: return split_cycle_winners(p);
    case MethodId::condorcet: return condorcet_scc(p);
    case MethodId::minimax: return minimax_winners(p);
    case MethodId::copeland: return copeland_winners(p);
    case MethodId::borda: return borda_winners(p);
    case MethodId::plurality: return plurality_winners(p);
    case MethodId::irv_parallel: return irv_parallel_winners(p);
    case MethodId::irv_simultaneous: return irv_simultaneous_winners(p);
  }
  throw std::invalid_argument("unknown method id");
}

std::span<const MethodInfo> method_registry() { return kRegistry; }

const MethodInfo* find_method(std::string_view id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return &info;
  return nullptr;
}

}  // namespace votelab
