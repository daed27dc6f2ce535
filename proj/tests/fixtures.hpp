#pragma once

#include <string>
#include <vector>

#include "votelab/core.hpp"

namespace votelab::fixtures {

inline std::vector<std::string> abc() { return {"a", "b", "c"}; }

// Three-voter Condorcet cycle: every margin on the cycle is 1.
inline Profile p1() {
  return Profile::from_ballots(abc(), {{1, {0, 1, 2}},
                                       {1, {1, 2, 0}},
                                       {1, {2, 0, 1}}});
}

// Margins: a->b 1, b->c 3, c->a 1. Split Cycle defeat is exactly {(b, c)}.
inline Profile p2() {
  return Profile::from_ballots(abc(), {{2, {0, 1, 2}},
                                       {2, {1, 2, 0}},
                                       {1, {2, 0, 1}}});
}

// Unanimous a > b > c.
inline Profile p3() {
  return Profile::from_ballots(abc(), {{3, {0, 1, 2}}});
}

// Plurality picks a (4/3/2 first places) while b is the Condorcet winner.
inline Profile p4() {
  return Profile::from_ballots(abc(), {{4, {0, 1, 2}},
                                       {3, {1, 2, 0}},
                                       {2, {2, 1, 0}}});
}

// Instant Runoff monotonicity fixture: winner {a}; first places a 6, b 6,
// c 5, so c leaves and a beats b 11-6.
inline Profile p5() {
  return Profile::from_ballots(abc(), {{6, {0, 1, 2}},
                                       {5, {2, 0, 1}},
                                       {4, {1, 2, 0}},
                                       {2, {1, 0, 2}}});
}

// p5 with the two b > a > c voters switched to a > b > c: a simple lift of a
// after which b leaves first and c beats a 9-8, so the winner flips to {c}.
inline Profile p5_lifted() {
  return Profile::from_ballots(abc(), {{6, {0, 1, 2}},
                                       {5, {2, 0, 1}},
                                       {4, {1, 2, 0}},
                                       {2, {0, 1, 2}}});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(VOTELAB_FIXTURE_DIR) + "/" + name;
}

}  // namespace votelab::fixtures
