#pragma once

#include <functional>
#include <span>
#include <vector>

#include "votelab/core.hpp"

namespace votelab {

// Abstract directed relation over candidate indices.
using EdgeRelation = std::function<bool(int, int)>;

// A walk is a vertex sequence; repeats allowed. Nonempty wherever the walk
// is meant to stand on its own (is_cycle enforces this).
using Walk = std::vector<int>;

// r(a, walk[0]) and r(walk[k], walk[k+1]) for every consecutive pair.
// An empty walk chains vacuously.
bool is_chain(const EdgeRelation& r, int a, std::span<const int> walk);

// walk is nonempty and chains from its own last element, i.e. the sequence
// closes into a cycle under r. A singleton [x] is a cycle iff r(x, x); margin
// graphs are loop-free by skew-symmetry at positive thresholds, so that case
// only arises for thresholds <= 0.
bool is_cycle(const EdgeRelation& r, std::span<const int> walk);

// Collapse a walk to a duplicate-free path over the same edges: working from
// the tail, a vertex already present truncates the accumulated path to its
// first occurrence, otherwise it is prepended. Preserves both endpoints of a
// nonempty walk and uses only consecutive pairs of the input.
std::vector<int> to_path(std::span<const int> walk);

// True iff there is a path src = v0, ..., vk = dst (k >= 1, vertices
// distinct) with margins(v_j, v_{j+1}) >= threshold on every step. For
// src == dst this asks for a cycle through src, so a bare vertex does not
// reach itself.
bool threshold_reachable(const MarginMatrix& margins, int threshold, int src,
                         int dst);

// True iff some simple cycle of {(a,b) : margins(a,b) >= threshold} contains
// both x and y. Requires x != y. Backtracking search over simple paths;
// deterministic vertex-index order.
bool exists_cycle_through(const MarginMatrix& margins, int threshold, int x,
                          int y);

}  // namespace votelab
