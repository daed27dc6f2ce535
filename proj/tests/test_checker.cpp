#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "votelab/checker.hpp"
#include "votelab/report.hpp"

#include <nlohmann/json.hpp>

using namespace votelab;
using namespace votelab::fixtures;

TEST_CASE("enumeration counts") {
  CHECK(ProfileEnumerator(2, 1, BallotClass::linear, false).count() == 2);
  CHECK(ProfileEnumerator(3, 2, BallotClass::linear, false).count() == 36);
  CHECK(ProfileEnumerator(3, 2, BallotClass::linear, true).count() == 21);
  CHECK(ProfileEnumerator(2, 1, BallotClass::asymmetric, false).count() == 3);
  CHECK(ProfileEnumerator(3, 1, BallotClass::asymmetric, false).count() == 27);
  CHECK(ProfileEnumerator(3, 2, BallotClass::asymmetric, false).count() ==
        27 * 27);
  CHECK(ProfileEnumerator(2, 3, BallotClass::asymmetric, true).count() == 10);
  CHECK(ProfileEnumerator(1, 4, BallotClass::linear, false).count() == 1);
}

TEST_CASE("enumeration is reproducible, valid, and duplicate-free") {
  ProfileEnumerator en(3, 2, BallotClass::linear, false);
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const auto p = en.at(i);
    CHECK(p.linear());
    CHECK_FALSE(validate_profile(p).has_value());
    CHECK(p == en.at(i));
    std::string key;
    for (int v = 0; v < p.num_voters(); ++v)
      for (auto [x, y] : p.relation(v).pairs())
        key += std::to_string(v) + ":" + std::to_string(x) + ">" +
               std::to_string(y) + ";";
    CHECK(seen.insert(key).second);
  }
  CHECK(seen.size() == 36);
}

TEST_CASE("anonymized enumeration produces sorted ballot multisets") {
  ProfileEnumerator en(3, 3, BallotClass::linear, true);
  CHECK(en.count() == 56);  // C(8,3)
  for (std::uint64_t i = 0; i < en.count(); ++i)
    CHECK_FALSE(validate_profile(en.at(i)).has_value());
}

TEST_CASE("asymmetric enumeration includes partial ballots") {
  ProfileEnumerator en(2, 1, BallotClass::asymmetric, false);
  bool saw_empty = false;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const auto p = en.at(i);
    CHECK_FALSE(p.linear());
    CHECK_FALSE(validate_profile(p).has_value());
    if (p.relation(0).pairs().empty()) saw_empty = true;
  }
  CHECK(saw_empty);
}

TEST_CASE("bounds validation") {
  CHECK_THROWS_AS(validate_search_bounds(SearchBounds{0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_search_bounds(SearchBounds{6, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate_search_bounds(SearchBounds{4, 2, BallotClass::asymmetric}),
      std::invalid_argument);
  CHECK_THROWS_AS(validate_search_bounds(SearchBounds{5, 8}),
                  std::invalid_argument);  // 120^8 blows the profile budget
  CHECK_THROWS_AS(
      validate_search_bounds(SearchBounds{5, 8, BallotClass::linear, true}),
      std::invalid_argument);  // ~1.3e12 ballot multisets
  CHECK_NOTHROW(validate_search_bounds(SearchBounds{3, 9}));
  CHECK_NOTHROW(validate_search_bounds(SearchBounds{4, 8, BallotClass::linear,
                                                    true}));
  CHECK_NOTHROW(validate_search_bounds(SearchBounds{5, 4, BallotClass::linear,
                                                    true}));
}

TEST_CASE("brute force split cycle on the fixtures") {
  CHECK_FALSE(brute_force_split_cycle(p1(), 0, 1));
  CHECK(brute_force_split_cycle(p2(), 1, 2));
  CHECK_FALSE(brute_force_split_cycle(p2(), 0, 1));
  CHECK(brute_force_split_cycle(p3(), 0, 1));
  CHECK_THROWS_AS(brute_force_split_cycle(p1(), 0, 0), std::invalid_argument);
}

TEST_CASE("production split cycle matches the brute-force oracle (small)") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 2; ++n) {
      ProfileEnumerator en(m, n, BallotClass::linear, false);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const auto p = en.at(i);
        const auto mat = margin_matrix(p);
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            const bool oracle = brute_force_split_cycle(p, x, y);
            CHECK(oracle == split_cycle_defeats_cycle_def(mat, x, y));
            CHECK(oracle == split_cycle_defeats_path_def(mat, x, y));
          }
      }
    }
}

TEST_CASE("find_counterexample certifies split cycle on a small domain") {
  const auto report = find_counterexample(
      MethodId::split_cycle, AxiomId::condorcet_criterion, SearchBounds{3, 3});
  CHECK(report.outcome == SearchReport::Outcome::certified_holds);
  CHECK(report.profiles_examined == (6 + 36 + 216) + (2 + 4 + 8) + 3);
  CHECK_FALSE(report.counterexample.has_value());
}

TEST_CASE("find_counterexample finds the plurality/Condorcet violation") {
  const auto report = find_counterexample(
      MethodId::plurality, AxiomId::condorcet_criterion, SearchBounds{3, 9});
  REQUIRE(report.outcome == SearchReport::Outcome::counterexample_found);
  REQUIRE(report.counterexample.has_value());
  const auto& cex = *report.counterexample;
  CHECK(cex.profile.num_candidates() == 3);
  CHECK(cex.profile.num_voters() == 3);  // earliest size with a violation
  CHECK_FALSE(replay(cex).holds);
}

TEST_CASE("find_counterexample finds the borda/Condorcet violation") {
  const auto report = find_counterexample(
      MethodId::borda, AxiomId::condorcet_criterion, SearchBounds{3, 5});
  REQUIRE(report.outcome == SearchReport::Outcome::counterexample_found);
  CHECK_FALSE(replay(*report.counterexample).holds);
}

TEST_CASE("find_counterexample finds the IRV monotonicity failure") {
  const auto report = find_counterexample(
      MethodId::irv_parallel, AxiomId::monotonicity,
      SearchBounds{3, 9, BallotClass::linear, true}, 2);
  REQUIRE(report.outcome == SearchReport::Outcome::counterexample_found);
  const auto& cex = *report.counterexample;
  CHECK(std::holds_alternative<LiftWitness>(cex.witness));
  CHECK_FALSE(replay(cex).holds);
}

TEST_CASE("searches are deterministic across worker counts") {
  for (int jobs : {1, 4}) {
    CAPTURE(jobs);
    auto violated = find_counterexample(MethodId::plurality,
                                        AxiomId::condorcet_criterion,
                                        SearchBounds{3, 4}, jobs);
    auto reference = find_counterexample(MethodId::plurality,
                                         AxiomId::condorcet_criterion,
                                         SearchBounds{3, 4}, 1);
    auto scrub = [](SearchReport r) {
      auto doc = search_report_to_json(r);
      doc.erase("meta");
      return doc.dump(2);
    };
    CHECK(scrub(violated) == scrub(reference));
  }
}

TEST_CASE("empty witness space is reported, not an error") {
  const auto report = find_counterexample(MethodId::split_cycle,
                                          AxiomId::ind_clones_clone,
                                          SearchBounds{1, 2});
  CHECK(report.outcome == SearchReport::Outcome::certified_holds);
  CHECK(report.note == "witness space is empty within these bounds");
}

TEST_CASE("verify_method_equivalence") {
  SUBCASE("the two split cycle definitions agree up to 4 candidates") {
    const auto report = verify_method_equivalence(
        "split_cycle_cycle_def", "split_cycle_path_def", SearchBounds{4, 3}, 2);
    CHECK(report.outcome == SearchReport::Outcome::certified_holds);
    CHECK(report.profiles_examined ==
          (1 + 1 + 1) + (2 + 4 + 8) + (6 + 36 + 216) + (24 + 576 + 13824));
  }
  SUBCASE("a method is equivalent to itself") {
    const auto report =
        verify_method_equivalence("plurality", "plurality", SearchBounds{3, 2});
    CHECK(report.outcome == SearchReport::Outcome::certified_holds);
  }
  SUBCASE("plurality and borda differ") {
    const auto report =
        verify_method_equivalence("plurality", "borda", SearchBounds{3, 5});
    REQUIRE(report.outcome == SearchReport::Outcome::counterexample_found);
    REQUIRE(report.mismatch.has_value());
    const auto* a = find_method("plurality");
    const auto* b = find_method("borda");
    CHECK(a->compute(report.mismatch->profile) == report.mismatch->winners_a);
    CHECK(b->compute(report.mismatch->profile) == report.mismatch->winners_b);
    CHECK(report.mismatch->winners_a != report.mismatch->winners_b);
  }
  SUBCASE("unknown ids are rejected") {
    CHECK_THROWS_AS(verify_method_equivalence("x", "borda", SearchBounds{2, 2}),
                    std::invalid_argument);
  }
  SUBCASE("positional methods refuse the asymmetric class") {
    CHECK_THROWS_AS(
        verify_method_equivalence("plurality", "borda",
                                  SearchBounds{2, 2, BallotClass::asymmetric}),
        std::invalid_argument);
  }
}

TEST_CASE("anonymization is sound: winners ignore voter order") {
  ProfileEnumerator en(3, 3, BallotClass::linear, false);
  // spot-check a deterministic slice
  for (std::uint64_t i = 0; i < en.count(); i += 17) {
    const auto p = en.at(i);
    std::vector<PreferenceRelation> reversed_voters(p.relations().rbegin(),
                                                    p.relations().rend());
    const Profile q(p.candidate_names(), reversed_voters, p.linear());
    for (MethodId id : kAllMethods) CHECK(winners(id, p) == winners(id, q));
  }
}

TEST_CASE("counterexamples survive a JSON round trip and still replay") {
  // one search per witness shape
  const std::vector<std::pair<std::pair<MethodId, AxiomId>, SearchBounds>>
      searches = {
          {{MethodId::irv_parallel, AxiomId::monotonicity},
           SearchBounds{3, 9, BallotClass::linear, true}},  // lift
          {{MethodId::plurality, AxiomId::condorcet_criterion},
           SearchBounds{3, 4}},  // none
          {{MethodId::plurality, AxiomId::strong_stability_winners},
           SearchBounds{3, 5}},  // remove_candidate
          {{MethodId::plurality, AxiomId::ind_clones_nonclone},
           SearchBounds{3, 7, BallotClass::linear, true}},  // clone_set
          {{MethodId::irv_parallel, AxiomId::negative_involvement},
           SearchBounds{3, 7, BallotClass::linear, true}},  // add_voter
      };
  for (const auto& [pair, bounds] : searches) {
    CAPTURE(to_string(pair.first));
    CAPTURE(to_string(pair.second));
    const auto report =
        find_counterexample(pair.first, pair.second, bounds, 2);
    REQUIRE(report.counterexample.has_value());
    const auto doc = counterexample_to_json(*report.counterexample);
    const auto restored = counterexample_from_json(doc);
    CHECK(restored.profile == report.counterexample->profile);
    CHECK_FALSE(replay(restored).holds);
    CHECK(counterexample_to_json(restored) == doc);
  }
}

TEST_CASE("no-show paradoxes surface at three candidates") {
  // adding a voter who ranks b last makes b win under parallel IRV
  const auto negative = find_counterexample(
      MethodId::irv_parallel, AxiomId::negative_involvement,
      SearchBounds{3, 7, BallotClass::linear, true});
  REQUIRE(negative.outcome == SearchReport::Outcome::counterexample_found);
  CHECK(std::holds_alternative<BallotWitness>(negative.counterexample->witness));
  // copeland fails positive involvement in the same range
  const auto positive = find_counterexample(
      MethodId::copeland, AxiomId::positive_involvement,
      SearchBounds{3, 7, BallotClass::linear, true});
  CHECK(positive.outcome == SearchReport::Outcome::counterexample_found);
  // while split cycle is certified there (also covered by acceptance)
  const auto sc = find_counterexample(
      MethodId::split_cycle, AxiomId::negative_involvement,
      SearchBounds{3, 7, BallotClass::linear, true});
  CHECK(sc.outcome == SearchReport::Outcome::certified_holds);
}

TEST_CASE("asymmetric-class search works for margin-based methods") {
  const auto report = find_counterexample(
      MethodId::split_cycle, AxiomId::condorcet_criterion,
      SearchBounds{2, 2, BallotClass::asymmetric});
  CHECK(report.outcome == SearchReport::Outcome::certified_holds);
  CHECK(report.profiles_examined == 1 + 1 + 3 + 9);
  CHECK_THROWS_AS(
      find_counterexample(MethodId::plurality, AxiomId::condorcet_criterion,
                          SearchBounds{2, 2, BallotClass::asymmetric}),
      std::invalid_argument);
}
