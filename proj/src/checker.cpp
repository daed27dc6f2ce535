#include "votelab/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "votelab/graph.hpp"

namespace votelab {

namespace {

constexpr std::uint64_t kCountCap = UINT64_MAX / 4;  // saturation for counting
constexpr std::uint64_t kMaxTotalProfiles = 250'000'000;
constexpr int kMaxVoterBound = 64;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kCountCap - b) ? kCountCap : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

int pair_count(int m) { return m * (m - 1) / 2; }

std::uint64_t ballots_per_voter(int m, BallotClass cls) {
  if (cls == BallotClass::linear) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f = sat_mul(f, i);
    return f;
  }
  return sat_pow(3, pair_count(m));
}

std::uint64_t profile_space_size(int m, int n, BallotClass cls,
                                 bool anonymize) {
  const std::uint64_t k = ballots_per_voter(m, cls);
  if (!anonymize) return sat_pow(k, n);
  // multisets of size n over k ballots: C(k + n - 1, n)
  std::uint64_t num = 1;
  for (int i = 0; i < n; ++i) {
    num = sat_mul(num, k + n - 1 - i);
    num /= (i + 1);  // product of i+1 consecutive integers divides evenly
  }
  return num;
}

std::chrono::steady_clock::time_point now() {
  return std::chrono::steady_clock::now();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(now() - t0).count();
}

}  // namespace

std::string_view to_string(BallotClass cls) {
  return cls == BallotClass::linear ? "linear" : "asymmetric";
}

std::optional<BallotClass> ballot_class_from_string(std::string_view name) {
  if (name == "linear") return BallotClass::linear;
  if (name == "asymmetric") return BallotClass::asymmetric;
  return std::nullopt;
}

void validate_search_bounds(const SearchBounds& b) {
  if (b.max_candidates < 1 || b.max_voters < 1)
    throw std::invalid_argument("search bounds must allow at least one "
                                "candidate and one voter");
  if (b.max_voters > kMaxVoterBound)
    throw std::invalid_argument("search bounds allow at most " +
                                std::to_string(kMaxVoterBound) + " voters");
  const int max_m = b.ballot_class == BallotClass::linear ? 5 : 3;
  if (b.max_candidates > max_m)
    throw std::invalid_argument(
        "search bounds allow at most " + std::to_string(max_m) + " candidates for " +
        std::string(to_string(b.ballot_class)) + " ballots");
  std::uint64_t total = 0;
  for (int m = 1; m <= b.max_candidates; ++m)
    for (int n = 1; n <= b.max_voters; ++n)
      total = sat_add(total,
                      profile_space_size(m, n, b.ballot_class, b.anonymize));
  if (total > kMaxTotalProfiles)
    throw std::invalid_argument(
        "search bounds cover too many profiles (limit " +
        std::to_string(kMaxTotalProfiles) + "); shrink the election sizes");
}

ProfileEnumerator::ProfileEnumerator(int num_candidates, int num_voters,
                                     BallotClass cls, bool anonymize)
    : m_(num_candidates), n_(num_voters), cls_(cls), anonymize_(anonymize) {
  if (m_ < 1 || n_ < 1)
    throw std::invalid_argument("enumeration needs candidates and voters");
  if (cls_ == BallotClass::linear && m_ > 6)
    throw std::invalid_argument("linear enumeration supports at most 6 candidates");
  if (cls_ == BallotClass::asymmetric && m_ > 4)
    throw std::invalid_argument(
        "asymmetric enumeration supports at most 4 candidates");
  if (n_ > kMaxVoterBound)
    throw std::invalid_argument("enumeration supports at most 64 voters");

  names_ = default_candidate_names(m_);
  if (cls_ == BallotClass::linear) {
    std::vector<int> order(m_);
    std::iota(order.begin(), order.end(), 0);
    do {
      orders_.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    per_voter_ = orders_.size();
  } else {
    const int pairs = pair_count(m_);
    const std::uint64_t total = sat_pow(3, pairs);
    for (std::uint64_t r = 0; r < total; ++r) {
      PreferenceRelation rel(m_);
      std::uint64_t rest = r;
      for (int x = 0; x < m_; ++x)
        for (int y = x + 1; y < m_; ++y) {
          const int state = static_cast<int>(rest % 3);
          rest /= 3;
          if (state == 1) rel.set(x, y, true);
          if (state == 2) rel.set(y, x, true);
        }
      relations_.push_back(std::move(rel));
    }
    per_voter_ = relations_.size();
  }

  // Guard before the multiset arithmetic so intermediates cannot overflow.
  if (sat_pow(per_voter_, n_) > 1'000'000'000'000'000ULL)
    throw std::invalid_argument("profile space too large to enumerate");
  count_ = profile_space_size(m_, n_, cls_, anonymize_);

  if (anonymize_) {
    // choose_[a][b] = C(a, b), saturating; enough rows for the unranking
    const int rows = static_cast<int>(per_voter_) + n_ + 1;
    choose_.assign(rows, std::vector<std::uint64_t>(n_ + 1, 0));
    for (int a = 0; a < rows; ++a) {
      choose_[a][0] = 1;
      for (int bcol = 1; bcol <= std::min(a, n_); ++bcol)
        choose_[a][bcol] =
            sat_add(choose_[a - 1][bcol - 1],
                    bcol <= a - 1 ? choose_[a - 1][bcol] : 0);
    }
  }
}

std::vector<int> ProfileEnumerator::ballot_indices(std::uint64_t index) const {
  std::vector<int> digits(n_);
  if (!anonymize_) {
    std::uint64_t rest = index;
    for (int v = n_ - 1; v >= 0; --v) {
      digits[v] = static_cast<int>(rest % per_voter_);
      rest /= per_voter_;
    }
    return digits;
  }
  // Unrank the index-th nondecreasing sequence of length n over
  // 0..per_voter_-1.
  const int k = static_cast<int>(per_voter_);
  std::uint64_t rest = index;
  int floor_value = 0;
  for (int pos = 0; pos < n_; ++pos) {
    const int remaining = n_ - pos - 1;
    for (int v = floor_value; v < k; ++v) {
      // sequences of the remaining length with values in [v, k)
      const std::uint64_t block = choose_[(k - v) + remaining - 1][remaining];
      if (rest < block) {
        digits[pos] = v;
        floor_value = v;
        break;
      }
      rest -= block;
    }
  }
  return digits;
}

Profile ProfileEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("profile index out of range");
  const auto digits = ballot_indices(index);
  std::vector<PreferenceRelation> voters;
  voters.reserve(n_);
  if (cls_ == BallotClass::linear) {
    for (int v = 0; v < n_; ++v)
      voters.push_back(PreferenceRelation::from_ranking(orders_[digits[v]]));
    return Profile(names_, std::move(voters), true);
  }
  for (int v = 0; v < n_; ++v) voters.push_back(relations_[digits[v]]);
  return Profile(names_, std::move(voters), false);
}

AxiomVerdict replay(const Counterexample& cex) {
  return check_axiom_instance(cex.method, cex.axiom, cex.profile, cex.witness);
}

namespace {

// ---- witness enumeration ----

// Ranking (top first) recovered from a linear relation.
std::vector<int> ranking_of(const PreferenceRelation& rel) {
  const int m = rel.num_candidates();
  std::vector<int> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(), [&](int a, int b) {
    return rel.outdegree(a) > rel.outdegree(b);
  });
  return ranking;
}

std::vector<int> lifted_ranking(std::span<const int> ranking, int x, int shift) {
  std::vector<int> out(ranking.begin(), ranking.end());
  auto pos = std::find(out.begin(), out.end(), x) - out.begin();
  for (int s = 0; s < shift; ++s) {
    std::swap(out[pos - 1], out[pos]);
    --pos;
  }
  return out;
}

// Allowed replacement states for the (x, a) comparison of one voter under a
// simple lift of x. State encoding: 0 = incomparable, 1 = x above a,
// 2 = a above x.
std::vector<int> lift_states(const PreferenceRelation& rel, int x, int a) {
  if (rel.prefers(x, a)) return {1};
  if (rel.prefers(a, x)) return {2, 0, 1};
  return {0, 1};
}

// Every simple lift of x, visited in a fixed order. Returns the first
// violation instead of materializing the profiles.
template <typename Visit>
bool for_each_lift(const Profile& p, int x, Visit visit) {
  const int m = p.num_candidates();
  const int n = p.num_voters();
  if (p.linear()) {
    std::vector<std::vector<int>> rankings;
    std::vector<int> radix(n);
    for (int v = 0; v < n; ++v) {
      rankings.push_back(ranking_of(p.relation(v)));
      radix[v] = static_cast<int>(std::find(rankings[v].begin(),
                                            rankings[v].end(), x) -
                                  rankings[v].begin()) +
                 1;
    }
    std::vector<int> shift(n, 0);
    while (true) {
      std::vector<std::vector<int>> lifted;
      lifted.reserve(n);
      for (int v = 0; v < n; ++v)
        lifted.push_back(lifted_ranking(rankings[v], x, shift[v]));
      if (visit(Profile::from_rankings(p.candidate_names(), lifted))) return true;
      int v = n - 1;
      while (v >= 0 && shift[v] + 1 == radix[v]) shift[v--] = 0;
      if (v < 0) break;
      ++shift[v];
    }
    return false;
  }
  // Asymmetric ballots: choose a permitted state for every (voter, a != x).
  struct Digit {
    int voter;
    int other;
    std::vector<int> states;
  };
  std::vector<Digit> digits;
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < m; ++a)
      if (a != x) digits.push_back({v, a, lift_states(p.relation(v), x, a)});
  std::vector<std::size_t> pick(digits.size(), 0);
  while (true) {
    auto voters = p.relations();
    for (std::size_t d = 0; d < digits.size(); ++d) {
      const auto& dig = digits[d];
      auto& rel = voters[dig.voter];
      const int state = dig.states[pick[d]];
      rel.set(x, dig.other, state == 1);
      rel.set(dig.other, x, state == 2);
    }
    if (visit(Profile(p.candidate_names(), std::move(voters), false)))
      return true;
    std::size_t d = digits.size();
    while (d > 0 && pick[d - 1] + 1 == digits[d - 1].states.size())
      pick[--d] = 0;
    if (d == 0) break;
    ++pick[d - 1];
  }
  return false;
}

// Ballots for a new voter who ranks x uniquely first (or last), in a fixed
// order. Linear class: full rankings. Asymmetric class: all asymmetric
// relations on the other candidates with x pinned at the chosen end.
template <typename Visit>
bool for_each_involvement_ballot(const Profile& p, int x, bool first,
                                 Visit visit) {
  const int m = p.num_candidates();
  std::vector<int> others;
  for (int c = 0; c < m; ++c)
    if (c != x) others.push_back(c);
  if (p.linear()) {
    std::vector<int> perm = others;
    do {
      std::vector<int> ranking;
      if (first) ranking.push_back(x);
      ranking.insert(ranking.end(), perm.begin(), perm.end());
      if (!first) ranking.push_back(x);
      if (visit(PreferenceRelation::from_ranking(ranking))) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }
  const int pairs = pair_count(m - 1);
  const std::uint64_t total = sat_pow(3, pairs);
  for (std::uint64_t r = 0; r < total; ++r) {
    PreferenceRelation rel(m);
    for (int c : others) {
      rel.set(first ? x : c, first ? c : x, true);
    }
    std::uint64_t rest = r;
    for (std::size_t i = 0; i < others.size(); ++i)
      for (std::size_t j = i + 1; j < others.size(); ++j) {
        const int state = static_cast<int>(rest % 3);
        rest /= 3;
        if (state == 1) rel.set(others[i], others[j], true);
        if (state == 2) rel.set(others[j], others[i], true);
      }
    if (visit(rel)) return true;
  }
  return false;
}

struct InstanceHit {
  AxiomWitness witness;
  AxiomVerdict verdict;
};

// Scan the witness space of one profile in canonical order; first violation
// wins. `witnesses` counts instances actually checked.
std::optional<InstanceHit> first_violation(MethodId method, AxiomId axiom,
                                           const Profile& p,
                                           std::uint64_t& witnesses) {
  std::optional<InstanceHit> hit;
  auto check = [&](AxiomWitness witness) -> bool {
    ++witnesses;
    auto verdict = check_axiom_instance(method, axiom, p, witness);
    if (!verdict.holds) {
      hit = InstanceHit{std::move(witness), std::move(verdict)};
      return true;
    }
    return false;
  };

  switch (axiom) {
    case AxiomId::finite_universal_domain:
    case AxiomId::condorcet_criterion:
    case AxiomId::condorcet_loser_criterion:
    case AxiomId::pareto:
    case AxiomId::reversal_symmetry:
      check(NoWitness{});
      break;

    case AxiomId::monotonicity: {
      for (int x : winners(method, p)) {
        if (for_each_lift(p, x, [&](Profile lifted) {
              return check(LiftWitness{std::move(lifted), x});
            }))
          break;
      }
      break;
    }

    case AxiomId::positive_involvement:
    case AxiomId::negative_involvement: {
      const bool positive = axiom == AxiomId::positive_involvement;
      const auto base_winners = winners(method, p);
      for (int x = 0; x < p.num_candidates(); ++x) {
        if (winner_set_contains(base_winners, x) != positive) continue;
        if (for_each_involvement_ballot(p, x, positive,
                                        [&](PreferenceRelation ballot) {
                                          return check(BallotWitness{
                                              std::move(ballot), x});
                                        }))
          break;
      }
      break;
    }

    case AxiomId::strong_stability_winners: {
      if (p.num_candidates() < 2) break;
      bool stop = false;
      for (int y = 0; y < p.num_candidates() && !stop; ++y)
        for (int x = 0; x < p.num_candidates() && !stop; ++x) {
          if (x == y || margin(p, y, x) > 0) continue;
          stop = check(RemovalWitness{x, y});
        }
      break;
    }

    case AxiomId::ind_clones_nonclone:
    case AxiomId::ind_clones_clone: {
      const int m = p.num_candidates();
      if (m < 2) break;
      bool stop = false;
      for (int c = 0; c < m && !stop; ++c) {
        std::vector<int> others;
        for (int a = 0; a < m; ++a)
          if (a != c) others.push_back(a);
        const std::uint32_t masks = std::uint32_t{1} << others.size();
        for (std::uint32_t mask = 1; mask < masks && !stop; ++mask) {
          CloneSet cs;
          cs.anchor = c;
          for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) cs.clones.push_back(others[i]);
          if (!is_clone_set(p, cs)) continue;
          stop = check(CloneWitness{std::move(cs)});
        }
      }
      break;
    }
  }
  return hit;
}

// ---- deterministic parallel block scan ----

template <typename Payload>
struct BlockHit {
  std::uint64_t index;
  Payload payload;
};

// Scan profiles [0, en.count()) with `jobs` workers over contiguous ranges.
// check(profile) returns a payload on violation. The minimal profile index
// wins regardless of scheduling; a worker stops early only when a violation
// below its current position is already recorded.
template <typename Payload, typename CheckFn>
std::optional<BlockHit<Payload>> scan_block(const ProfileEnumerator& en,
                                            int jobs, CheckFn check,
                                            std::uint64_t& witnesses) {
  const std::uint64_t total = en.count();
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(std::max(jobs, 1), total));
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::vector<std::optional<BlockHit<Payload>>> hits(workers);
  std::vector<std::uint64_t> counts(workers, 0);

  auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (best.load(std::memory_order_relaxed) < i) return;
      auto payload = check(en.at(i), counts[w]);
      if (payload) {
        hits[w] = BlockHit<Payload>{i, std::move(*payload)};
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur &&
               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  };

  if (workers <= 1) {
    run_range(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      pool.emplace_back(run_range, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  for (auto c : counts) witnesses += c;
  const std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  for (auto& hit : hits)
    if (hit && hit->index == found) return std::move(hit);
  return std::nullopt;  // unreachable
}

}  // namespace

SearchReport find_counterexample(MethodId method, AxiomId axiom,
                                 const SearchBounds& bounds, int jobs) {
  validate_search_bounds(bounds);
  if (method_needs_linear(method) &&
      bounds.ballot_class == BallotClass::asymmetric)
    throw std::invalid_argument(std::string(to_string(method)) +
                                " needs linear ballots; use the linear class");
  const auto t0 = now();
  SearchReport report;
  report.bounds = bounds;
  report.outcome = SearchReport::Outcome::certified_holds;

  std::uint64_t profiles_before = 0;
  std::uint64_t witnesses = 0;
  for (int m = 1; m <= bounds.max_candidates; ++m) {
    for (int n = 1; n <= bounds.max_voters; ++n) {
      ProfileEnumerator en(m, n, bounds.ballot_class, bounds.anonymize);
      auto hit = scan_block<InstanceHit>(
          en, jobs,
          [&](const Profile& p, std::uint64_t& count) {
            return first_violation(method, axiom, p, count);
          },
          witnesses);
      if (hit) {
        report.outcome = SearchReport::Outcome::counterexample_found;
        report.profiles_examined = profiles_before + hit->index + 1;
        Counterexample cex{method,
                           axiom,
                           en.at(hit->index),
                           std::move(hit->payload.witness),
                           std::move(hit->payload.verdict.winners_base),
                           std::move(hit->payload.verdict.winners_after),
                           std::move(hit->payload.verdict.detail)};
        report.counterexample = std::move(cex);
        report.wall_seconds = seconds_since(t0);
        return report;
      }
      profiles_before += en.count();
    }
  }
  report.profiles_examined = profiles_before;
  if (witnesses == 0)
    report.note = "witness space is empty within these bounds";
  report.wall_seconds = seconds_since(t0);
  return report;
}

SearchReport verify_method_equivalence(std::string_view method_a,
                                       std::string_view method_b,
                                       const SearchBounds& bounds, int jobs) {
  validate_search_bounds(bounds);
  const MethodInfo* a = find_method(method_a);
  const MethodInfo* b = find_method(method_b);
  if (!a || !b)
    throw std::invalid_argument("unknown method id for equivalence check");
  if ((a->needs_linear || b->needs_linear) &&
      bounds.ballot_class == BallotClass::asymmetric)
    throw std::invalid_argument(
        "both methods must accept asymmetric ballots for that class");

  const auto t0 = now();
  SearchReport report;
  report.bounds = bounds;
  report.outcome = SearchReport::Outcome::certified_holds;

  std::uint64_t profiles_before = 0;
  std::uint64_t witnesses = 0;
  for (int m = 1; m <= bounds.max_candidates; ++m) {
    for (int n = 1; n <= bounds.max_voters; ++n) {
      ProfileEnumerator en(m, n, bounds.ballot_class, bounds.anonymize);
      auto hit = scan_block<EquivMismatch>(
          en, jobs,
          [&](const Profile& p,
              std::uint64_t& count) -> std::optional<EquivMismatch> {
            ++count;
            auto wa = a->compute(p);
            auto wb = b->compute(p);
            if (wa == wb) return std::nullopt;
            return EquivMismatch{std::string(a->id), std::string(b->id), p,
                                 std::move(wa), std::move(wb)};
          },
          witnesses);
      if (hit) {
        report.outcome = SearchReport::Outcome::counterexample_found;
        report.profiles_examined = profiles_before + hit->index + 1;
        report.mismatch = std::move(hit->payload);
        report.wall_seconds = seconds_since(t0);
        return report;
      }
      profiles_before += en.count();
    }
  }
  report.profiles_examined = profiles_before;
  report.wall_seconds = seconds_since(t0);
  return report;
}

bool cycle_through_pair_bruteforce(const MarginMatrix& margins, int t, int x,
                                   int y) {
  const int m = margins.num_candidates();
  const EdgeRelation at_least_t = [&margins, t](int a, int b) {
    return margins(a, b) >= t;
  };
  auto is_witness = [&](const std::vector<int>& candidate) {
    return std::find(candidate.begin(), candidate.end(), x) !=
               candidate.end() &&
           std::find(candidate.begin(), candidate.end(), y) !=
               candidate.end() &&
           is_cycle(at_least_t, candidate);
  };

  // Enumerate every simple cycle once, rotated so its minimal vertex leads.
  std::vector<int> path;
  std::vector<bool> on_path(m, false);
  auto extend = [&](auto&& self, int start, int u) -> bool {
    for (int v = start; v < m; ++v) {
      if (margins(u, v) < t) continue;
      if (v == start && u != start) {
        if (is_witness(path)) return true;
        continue;
      }
      if (v == u || on_path[v]) continue;
      path.push_back(v);
      on_path[v] = true;
      const bool found = self(self, start, v);
      path.pop_back();
      on_path[v] = false;
      if (found) return true;
    }
    return false;
  };

  for (int s = 0; s < m; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    if (margins(s, s) >= t && is_witness(path)) return true;  // self-loop
    if (extend(extend, s, s)) return true;
  }
  return false;
}

bool brute_force_split_cycle(const Profile& p, int x, int y) {
  if (p.num_candidates() > 6)
    throw std::invalid_argument(
        "brute-force split cycle supports at most 6 candidates");
  if (x == y) throw std::invalid_argument("brute force needs x != y");
  const auto m = margin_matrix(p);
  const int t = m(x, y);
  return t > 0 && !cycle_through_pair_bruteforce(m, t, x, y);
}

}  // namespace votelab
