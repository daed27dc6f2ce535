#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "votelab/checker.hpp"
#include "votelab/core.hpp"

using namespace votelab;
using namespace votelab::fixtures;

namespace {

Profile pair_profile(int m, const std::vector<std::pair<int, int>>& pairs,
                     bool linear = false) {
  return Profile(default_candidate_names(m),
                 {PreferenceRelation::from_pairs(m, pairs)}, linear);
}

}  // namespace

TEST_CASE("profile construction rejects empty elections") {
  CHECK_THROWS_AS(Profile({}, {PreferenceRelation(1)}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(Profile({"a"}, {}, false), std::invalid_argument);
  CHECK_THROWS_AS(Profile({"a", "a"}, {PreferenceRelation(2)}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(Profile({"a", "b"}, {PreferenceRelation(1)}, false),
                  std::invalid_argument);
}

TEST_CASE("validate_profile") {
  SUBCASE("single asymmetric pair is valid") {
    CHECK_FALSE(validate_profile(pair_profile(2, {{0, 1}})).has_value());
  }
  SUBCASE("symmetric pair reported at voter 0") {
    auto issue = validate_profile(pair_profile(2, {{0, 1}, {1, 0}}));
    REQUIRE(issue.has_value());
    CHECK(issue->kind == ValidationIssue::Kind::symmetric_pair);
    CHECK(issue->voter == 0);
    CHECK(issue->first == 0);
    CHECK(issue->second == 1);
  }
  SUBCASE("reflexive pair reported") {
    auto rel = PreferenceRelation(2);
    rel.set(1, 1, true);
    auto issue = validate_profile(Profile({"a", "b"}, {rel}, false));
    REQUIRE(issue.has_value());
    CHECK(issue->kind == ValidationIssue::Kind::reflexive_pair);
  }
  SUBCASE("linear flag demands totality") {
    auto issue = validate_profile(pair_profile(3, {{0, 1}, {1, 2}}, true));
    REQUIRE(issue.has_value());
    CHECK(issue->kind == ValidationIssue::Kind::missing_comparison);
  }
  SUBCASE("linear flag demands transitivity") {
    // total but cyclic: a>b, b>c, c>a
    auto issue =
        validate_profile(pair_profile(3, {{0, 1}, {1, 2}, {2, 0}}, true));
    REQUIRE(issue.has_value());
    CHECK(issue->kind == ValidationIssue::Kind::intransitive);
  }
  SUBCASE("fixtures are valid") {
    for (const auto& p : {p1(), p2(), p3(), p4(), p5()})
      CHECK_FALSE(validate_profile(p).has_value());
  }
  SUBCASE("issue messages name the voter and candidates") {
    const auto p = pair_profile(2, {{0, 1}, {1, 0}});
    const auto issue = validate_profile(p);
    REQUIRE(issue.has_value());
    const auto text = issue->message(p);
    CHECK(text.find("voter 0") != std::string::npos);
    CHECK(text.find("a>b") != std::string::npos);
    CHECK(text.find("b>a") != std::string::npos);
  }
}

TEST_CASE("margin") {
  CHECK(margin(p1(), 0, 0) == 0);
  CHECK(margin(p1(), 0, 1) == 1);
  CHECK(margin(p1(), 1, 2) == 1);
  CHECK(margin(p1(), 2, 0) == 1);
  CHECK(margin(p3(), 0, 2) == 3);
  CHECK_THROWS_AS(margin(p1(), 0, 3), std::out_of_range);
  CHECK_THROWS_AS(margin(p1(), -1, 0), std::out_of_range);
}

TEST_CASE("margin_matrix") {
  SUBCASE("unanimous profile") {
    const auto m = margin_matrix(p3());
    const int expected[3][3] = {{0, 3, 3}, {-3, 0, 3}, {-3, -3, 0}};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(m(x, y) == expected[x][y]);
  }
  SUBCASE("cyclic profile") {
    const auto m = margin_matrix(p1());
    CHECK(m(0, 1) == 1);
    CHECK(m(1, 2) == 1);
    CHECK(m(2, 0) == 1);
    CHECK(m.is_skew_symmetric());
  }
  SUBCASE("empty relation gives the zero matrix") {
    const auto m = margin_matrix(pair_profile(3, {}));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(m(x, y) == 0);
  }
}

TEST_CASE("majority_preferred") {
  CHECK(majority_preferred(p3(), 0, 1));
  CHECK_FALSE(majority_preferred(p1(), 1, 0));
  CHECK_FALSE(majority_preferred(p1(), 0, 0));
}

TEST_CASE("condorcet_winner") {
  const Profile solo({"a"}, {PreferenceRelation(1)}, false);
  CHECK(condorcet_winner(solo, 0));
  CHECK(condorcet_winner(p3(), 0));
  for (int x = 0; x < 3; ++x) CHECK_FALSE(condorcet_winner(p1(), x));
  CHECK(find_condorcet_winner(p4()) == 1);
}

TEST_CASE("condorcet_loser") {
  CHECK(condorcet_loser(p3(), 2));
  for (int x = 0; x < 3; ++x) CHECK_FALSE(condorcet_loser(p1(), x));
  const Profile solo({"a"}, {PreferenceRelation(1)}, false);
  CHECK(condorcet_loser(solo, 0));
}

TEST_CASE("majority_winner") {
  CHECK(majority_winner(p3(), 0));
  CHECK_FALSE(majority_winner(p1(), 0));  // one first place, two rank others higher
  // With a single candidate the first-place condition is vacuous, so the
  // sole voter counts toward it and nobody ranks anyone above.
  const Profile solo({"a"}, {PreferenceRelation(1)}, false);
  CHECK(majority_winner(solo, 0));
}

TEST_CASE("margin matrix is skew-symmetric on every small linear profile") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i)
        CHECK(margin_matrix(en.at(i)).is_skew_symmetric());
    }
}

TEST_CASE("majority winner is a Condorcet winner (exhaustive small domain)") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const auto p = en.at(i);
        for (int x = 0; x < m; ++x)
          if (majority_winner(p, x)) CHECK(condorcet_winner(p, x));
      }
    }
}

TEST_CASE("majority winner implies Condorcet winner on random larger profiles") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<int>> rankings;
    for (int v = 0; v < n; ++v) {
      std::vector<int> r(m);
      std::iota(r.begin(), r.end(), 0);
      std::shuffle(r.begin(), r.end(), rng);
      rankings.push_back(r);
    }
    const auto p = Profile::from_rankings(default_candidate_names(m), rankings);
    for (int x = 0; x < m; ++x)
      if (majority_winner(p, x)) CHECK(condorcet_winner(p, x));
  }
}

TEST_CASE("at most one Condorcet winner") {
  for (int n = 1; n <= 3; ++n) {
    ProfileEnumerator en(3, n, BallotClass::linear, false);
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const auto p = en.at(i);
      int winners_found = 0;
      for (int x = 0; x < 3; ++x)
        if (condorcet_winner(p, x)) ++winners_found;
      CHECK(winners_found <= 1);
    }
  }
}

TEST_CASE("margins are anonymous: voter permutations leave the matrix alone") {
  std::mt19937 rng(7);
  const auto p = p2();
  std::vector<int> order(p.num_voters());
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<PreferenceRelation> shuffled;
    for (int v : order) shuffled.push_back(p.relation(v));
    const Profile q(p.candidate_names(), shuffled, p.linear());
    CHECK(margin_matrix(q) == margin_matrix(p));
  }
}
