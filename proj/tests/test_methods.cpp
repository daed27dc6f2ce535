#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "votelab/axioms.hpp"
#include "votelab/checker.hpp"
#include "votelab/methods.hpp"

using namespace votelab;
using namespace votelab::fixtures;

namespace {

Profile solo() { return Profile({"a"}, {PreferenceRelation(1)}, true); }

// Independent positional Borda: score m-1 for a first place down to 0.
WinnerSet positional_borda(const Profile& p) {
  const int m = p.num_candidates();
  std::vector<long long> score(m, 0);
  for (int v = 0; v < p.num_voters(); ++v)
    for (int x = 0; x < m; ++x) score[x] += p.relation(v).outdegree(x);
  const long long best = *std::max_element(score.begin(), score.end());
  WinnerSet w;
  for (int x = 0; x < m; ++x)
    if (score[x] == best) w.push_back(x);
  return w;
}

}  // namespace

TEST_CASE("method id round trip") {
  for (MethodId id : kAllMethods)
    CHECK(method_from_string(to_string(id)) == id);
  CHECK_FALSE(method_from_string("nonsense").has_value());
  CHECK(find_method("split_cycle_cycle_def") != nullptr);
  CHECK(find_method("split_cycle_path_def") != nullptr);
  CHECK(find_method("split_cycle_cycle_def")->internal);
}

TEST_CASE("split cycle defeat, both definitions, on the fixtures") {
  // cyclic profile: nobody defeats anybody
  CHECK_FALSE(split_cycle_defeats_cycle_def(p1(), 0, 1));
  CHECK_FALSE(split_cycle_defeats_path_def(p1(), 0, 1));
  // p2: only b defeats c (margin 3 beats the cycle's weakest margin 1)
  CHECK(split_cycle_defeats_cycle_def(p2(), 1, 2));
  CHECK(split_cycle_defeats_path_def(p2(), 1, 2));
  CHECK_FALSE(split_cycle_defeats_cycle_def(p2(), 0, 1));
  CHECK_FALSE(split_cycle_defeats_path_def(p2(), 0, 1));
  CHECK_FALSE(split_cycle_defeats_path_def(p2(), 2, 0));
  // unanimous profile: every positive margin defeats
  CHECK(split_cycle_defeats_cycle_def(p3(), 0, 1));
  CHECK(split_cycle_defeats_path_def(p3(), 0, 1));
}

TEST_CASE("max_element_winners") {
  DefeatRelation empty(3, "test");
  CHECK(max_element_winners(empty) == WinnerSet{0, 1, 2});
  DefeatRelation d(3, "test");
  d.add(0, 1);
  d.add(0, 2);
  CHECK(max_element_winners(d) == WinnerSet{0});
  CHECK(max_element_winners(split_cycle_defeat_relation(p2())) ==
        WinnerSet{0, 1});
}

TEST_CASE("split_cycle_winners") {
  CHECK(split_cycle_winners(p1()) == WinnerSet{0, 1, 2});
  CHECK(split_cycle_winners(p2()) == WinnerSet{0, 1});
  CHECK(split_cycle_winners(p3()) == WinnerSet{0});
  CHECK(split_cycle_defeat_relation(p2()).edges() ==
        std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("condorcet_scc") {
  CHECK(condorcet_scc(p3()) == WinnerSet{0});
  CHECK(condorcet_scc(p1()) == WinnerSet{0, 1, 2});
  CHECK(condorcet_scc(p4()) == WinnerSet{1});
  CHECK(condorcet_scc(solo()) == WinnerSet{0});
}

TEST_CASE("minimax, copeland, borda, plurality") {
  CHECK(minimax_winners(p3()) == WinnerSet{0});
  CHECK(copeland_winners(p3()) == WinnerSet{0});
  CHECK(borda_winners(p3()) == WinnerSet{0});
  CHECK(plurality_winners(p3()) == WinnerSet{0});
  // p2 worst counter-margins: a 1, b 1, c 3
  CHECK(minimax_winners(p2()) == WinnerSet{0, 1});
  CHECK(plurality_winners(p4()) == WinnerSet{0});
  // borda fails the Condorcet criterion here: a is the Condorcet winner with
  // margin scores a 2, b 4, c -6
  const auto fixture = Profile::from_ballots(abc(), {{3, {0, 1, 2}},
                                                     {2, {1, 2, 0}}});
  CHECK(find_condorcet_winner(fixture) == 0);
  CHECK(borda_winners(fixture) == WinnerSet{1});
}

TEST_CASE("positional methods reject non-linear profiles") {
  const Profile loose({"a", "b"},
                      {PreferenceRelation::from_pairs(2, {{std::pair{0, 1}}})},
                      false);
  CHECK_THROWS_AS(borda_winners(loose), std::invalid_argument);
  CHECK_THROWS_AS(plurality_winners(loose), std::invalid_argument);
  CHECK_THROWS_AS(irv_parallel_winners(loose), std::invalid_argument);
  CHECK_THROWS_AS(irv_simultaneous_winners(loose), std::invalid_argument);
  // margin-based methods accept them
  CHECK(split_cycle_winners(loose) == WinnerSet{0});
  CHECK(minimax_winners(loose) == WinnerSet{0});
}

TEST_CASE("instant runoff") {
  CHECK(irv_parallel_winners(solo()) == WinnerSet{0});
  CHECK(irv_simultaneous_winners(solo()) == WinnerSet{0});
  // p5: c drops with 5 first places, then a beats b 11-6
  CHECK(irv_parallel_winners(p5()) == WinnerSet{0});
  CHECK(irv_simultaneous_winners(p5()) == WinnerSet{0});
  CHECK(irv_parallel_winners(p3()) == WinnerSet{0});
  // total first-place tie: simultaneous elimination keeps everyone
  CHECK(irv_simultaneous_winners(p1()) == WinnerSet{0, 1, 2});
  const Profile two = Profile::from_ballots({"a", "b"}, {{2, {0, 1}},
                                                         {1, {1, 0}}});
  CHECK(irv_simultaneous_winners(two) == WinnerSet{0});
  CHECK(irv_parallel_winners(two) == WinnerSet{0});
}

TEST_CASE("is_acyclic") {
  DefeatRelation empty(3, "test");
  CHECK(is_acyclic(empty));
  DefeatRelation two_cycle(2, "test");
  two_cycle.add(0, 1);
  two_cycle.add(1, 0);
  CHECK_FALSE(is_acyclic(two_cycle));
  CHECK(is_acyclic(split_cycle_defeat_relation(p1())));
}

TEST_CASE("split cycle: definitions agree, defeat is acyclic, winners nonempty") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const auto p = en.at(i);
        const auto mat = margin_matrix(p);
        DefeatRelation d(m, "split_cycle");
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            const bool cyc = split_cycle_defeats_cycle_def(mat, x, y);
            CHECK(cyc == split_cycle_defeats_path_def(mat, x, y));
            if (cyc) d.add(x, y);
          }
        CHECK(d.is_asymmetric());
        CHECK(is_acyclic(d));
        CHECK_FALSE(split_cycle_winners(p).empty());
      }
    }
}

TEST_CASE("margin-only methods ignore added opposite ballot pairs") {
  // Appending one sigma ballot and its reverse leaves all margins intact, so
  // C2 methods must not move.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> rankings;
    for (int v = 0; v < n; ++v) {
      std::vector<int> r(m);
      std::iota(r.begin(), r.end(), 0);
      std::shuffle(r.begin(), r.end(), rng);
      rankings.push_back(r);
    }
    auto padded = rankings;
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    padded.push_back(sigma);
    std::reverse(sigma.begin(), sigma.end());
    padded.push_back(sigma);

    const auto p = Profile::from_rankings(default_candidate_names(m), rankings);
    const auto q = Profile::from_rankings(default_candidate_names(m), padded);
    REQUIRE(margin_matrix(p) == margin_matrix(q));
    CHECK(split_cycle_winners(p) == split_cycle_winners(q));
    CHECK(minimax_winners(p) == minimax_winners(q));
    CHECK(copeland_winners(p) == copeland_winners(q));
    CHECK(borda_winners(p) == borda_winners(q));
  }
}

TEST_CASE("condorcet_scc is a singleton exactly when a Condorcet winner exists") {
  for (int n = 1; n <= 3; ++n) {
    ProfileEnumerator en(3, n, BallotClass::linear, false);
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const auto p = en.at(i);
      CHECK((condorcet_scc(p).size() == 1) ==
            find_condorcet_winner(p).has_value());
    }
  }
}

TEST_CASE("both IRV variants pick somebody on every small linear profile") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const auto p = en.at(i);
        CHECK_FALSE(irv_parallel_winners(p).empty());
        CHECK_FALSE(irv_simultaneous_winners(p).empty());
      }
    }
}

TEST_CASE("margin-sum borda equals positional borda on linear profiles") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const auto p = en.at(i);
        CHECK(borda_winners(p) == positional_borda(p));
      }
    }
}

TEST_CASE("winners dispatcher matches the registry") {
  for (MethodId id : kAllMethods) {
    const auto* info = find_method(to_string(id));
    REQUIRE(info != nullptr);
    CHECK_FALSE(info->internal);
    CHECK(info->needs_linear == method_needs_linear(id));
    CHECK(winners(id, p2()) == info->compute(p2()));
  }
}
