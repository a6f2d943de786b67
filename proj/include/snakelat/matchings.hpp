#pragma once

#include <vector>

#include "snakelat/lattice.hpp"
#include "snakelat/snake.hpp"

namespace snakelat {

struct PerfectMatching {
  std::vector<Edge> edges;  // sorted

  PerfectMatching() = default;
  explicit PerfectMatching(std::vector<Edge> e);
  bool contains(const Edge& e) const;
  auto operator<=>(const PerfectMatching&) const = default;
};

bool is_perfect_matching(const SnakeGraph& g, const std::vector<Edge>& edges);

// All perfect matchings in lexicographic order of their edge lists.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);

PerfectMatching minimal_matching(const SnakeGraph& g);
PerfectMatching maximal_matching(const SnakeGraph& g);

// Both arguments must be perfect matchings of g.
std::vector<Edge> symmetric_difference(const SnakeGraph& g, const PerfectMatching& p,
                                       const PerfectMatching& q);

// enclosed[k-1] is true when tile k lies inside p (+) P_min.
std::vector<bool> enclosed_mask(const SnakeGraph& g, const PerfectMatching& p);
std::vector<OverlapWindow> enclosed_tiles(const SnakeGraph& g, const PerfectMatching& p);

bool rotatable(const SnakeGraph& g, const PerfectMatching& p, std::size_t tile);
PerfectMatching rotate_tile(const SnakeGraph& g, const PerfectMatching& p, std::size_t tile);

struct MatchingLattice {
  std::vector<PerfectMatching> nodes;
  CoverLattice lattice;
};

// Covers rotate one tile into the enclosed region; labels are tile positions.
MatchingLattice matching_lattice(const SnakeGraph& g);

}  // namespace snakelat
