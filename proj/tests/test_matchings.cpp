#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "snakelat/modules.hpp"

using namespace snakelat;
using testing_support::letters;

namespace {

Edge seg(int x1, int y1, int x2, int y2) { return Edge({x1, y1}, {x2, y2}); }

bool boundary_only(const SnakeGraph& g, const PerfectMatching& p) {
  return std::all_of(p.edges.begin(), p.edges.end(), [&](const Edge& e) { return g.is_boundary(e); });
}

}  // namespace

TEST_CASE("matching counts") {
  CHECK(enumerate_matchings(build_snake(ArrowWord{})).size() == 2);
  SnakeGraph straight(std::vector<Direction>{Direction::Right, Direction::Right}, {1, 2, 3});
  CHECK(enumerate_matchings(straight).size() == 5);
  SnakeGraph zigzag(std::vector<Direction>{Direction::Up, Direction::Right}, {1, 2, 3}, Sign::Minus);
  CHECK(enumerate_matchings(zigzag).size() == 4);
}

TEST_CASE("single tile extremes") {
  SnakeGraph g = build_snake(ArrowWord{});
  PerfectMatching low = minimal_matching(g);
  CHECK(low.edges == std::vector<Edge>{seg(0, 0, 1, 0), seg(0, 1, 1, 1)});
  CHECK(maximal_matching(g).edges == std::vector<Edge>{seg(0, 0, 0, 1), seg(1, 0, 1, 1)});
  PerfectMatching up = rotate_tile(g, low, 1);
  CHECK(up == maximal_matching(g));
  CHECK(rotate_tile(g, up, 1) == low);
}

TEST_CASE("one direct letter doubles up on the socle tile") {
  SnakeGraph g = build_snake(parse_word("1>2"));
  // Vertex 2 is the socle, so tile 2 carries both horizontal edges.
  CHECK(minimal_matching(g).edges ==
        PerfectMatching({seg(0, 0, 0, 1), seg(1, 0, 2, 0), seg(1, 1, 2, 1)}).edges);
  CHECK(maximal_matching(g).edges ==
        PerfectMatching({seg(0, 0, 1, 0), seg(0, 1, 1, 1), seg(2, 0, 2, 1)}).edges);
}

TEST_CASE("minimal matching of a longer word") {
  SnakeGraph g = build_snake(parse_word("1>2>3>4<5"));
  PerfectMatching expected({seg(1, 0, 2, 0), seg(2, 1, 3, 1), seg(4, 1, 4, 2), seg(2, 2, 3, 2),
                            seg(1, 1, 1, 2), seg(0, 0, 0, 1)});
  CHECK(minimal_matching(g) == expected);
}

TEST_CASE("displayed matchings enclose the expected tiles") {
  SnakeGraph g = build_snake(parse_word("1>2>3>4<5"));
  PerfectMatching first({seg(0, 0, 0, 1), seg(1, 0, 2, 0), seg(1, 1, 2, 1), seg(1, 2, 2, 2),
                         seg(3, 1, 3, 2), seg(4, 1, 4, 2)});
  REQUIRE(is_perfect_matching(g, first.edges));
  CHECK(enclosed_tiles(g, first) == std::vector<OverlapWindow>{{3, 4}});
  auto diff = symmetric_difference(g, first, minimal_matching(g));
  PerfectMatching box({seg(1, 1, 1, 2), seg(1, 2, 2, 2), seg(2, 2, 3, 2), seg(3, 1, 3, 2),
                       seg(2, 1, 3, 1), seg(1, 1, 2, 1)});
  CHECK(diff == box.edges);
}

TEST_CASE("symmetric differences") {
  SnakeGraph g = build_snake(parse_word("1>2<3"));
  PerfectMatching low = minimal_matching(g), high = maximal_matching(g);
  CHECK(symmetric_difference(g, low, low).empty());
  CHECK(symmetric_difference(g, low, high) == g.boundary_edges());
  SnakeGraph other = build_snake(parse_word("1>2>3"));
  CHECK_THROWS_AS(symmetric_difference(other, low, high), std::invalid_argument);
}

TEST_CASE("enclosed tiles at the extremes") {
  SnakeGraph g = build_snake(parse_word("1>2>3>4<5>6"));
  CHECK(enclosed_tiles(g, minimal_matching(g)).empty());
  CHECK(enclosed_tiles(g, maximal_matching(g)) == std::vector<OverlapWindow>{{1, 6}});
}

TEST_CASE("rotation errors") {
  SnakeGraph g = build_snake(parse_word("1>2<3"));
  PerfectMatching low = minimal_matching(g);
  CHECK_THROWS_AS(rotate_tile(g, low, 1), std::invalid_argument);
  CHECK_THROWS_AS(rotate_tile(g, low, 4), std::out_of_range);
}

TEST_CASE("straight three tiles give the five element lattice") {
  SnakeGraph g = build_snake(parse_word("1>2<3"));
  MatchingLattice ml = matching_lattice(g);
  const CoverLattice& l = ml.lattice;
  REQUIRE(l.size() == 5);
  CHECK(ml.nodes[l.bottom()] == minimal_matching(g));
  CHECK(ml.nodes[l.top()] == maximal_matching(g));
  REQUIRE(l.up(l.bottom()).size() == 1);
  const Cover& first = l.covers()[l.up(l.bottom())[0]];
  CHECK(first.label == 2);
  std::multiset<int> second, third;
  for (std::size_t ci : l.up(first.hi)) {
    const Cover& c = l.covers()[ci];
    second.insert(c.label);
    for (std::size_t cj : l.up(c.hi)) {
      CHECK(l.covers()[cj].hi == l.top());
      third.insert(l.covers()[cj].label);
      CHECK(l.covers()[cj].label != c.label);
    }
  }
  CHECK(second == std::multiset<int>{1, 3});
  CHECK(third == std::multiset<int>{1, 3});
}

TEST_CASE("zigzag chains") {
  CHECK(matching_lattice(build_snake(parse_word("1>2>3"))).lattice.first_maximal_chain() ==
        std::vector<int>{3, 2, 1});
  CHECK(matching_lattice(build_snake(parse_word("1<2<3"))).lattice.first_maximal_chain() ==
        std::vector<int>{1, 2, 3});
  CoverLattice one = matching_lattice(build_snake(ArrowWord{})).lattice;
  CHECK(one.size() == 2);
  CHECK(one.covers().front().label == 1);
}

TEST_CASE("matching properties over all short words") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : all_words(n)) {
      SnakeGraph g = build_snake(testing_support::numbered(w));
      auto all = enumerate_matchings(g);
      PerfectMatching low = minimal_matching(g), high = maximal_matching(g);
      std::vector<PerfectMatching> boundary;
      for (const auto& p : all) {
        REQUIRE(is_perfect_matching(g, p.edges));
        if (boundary_only(g, p)) boundary.push_back(p);
      }
      REQUIRE(boundary.size() == 2);
      CHECK(std::set<PerfectMatching>(boundary.begin(), boundary.end()) ==
            std::set<PerfectMatching>{low, high});
      std::vector<Edge> both;
      std::set_union(low.edges.begin(), low.edges.end(), high.edges.begin(), high.edges.end(),
                     std::back_inserter(both));
      CHECK(both == g.boundary_edges());
      CHECK(both.size() == low.edges.size() + high.edges.size());
      // The maximal matching encloses every tile exactly once.
      CHECK(matching_to_submodule(g, high).support.size() == g.tile_count());

      // Rotating a tile toggles that tile only.
      for (const auto& p : all) {
        auto mask = enclosed_mask(g, p);
        for (std::size_t t = 1; t <= g.tile_count(); ++t) {
          if (!rotatable(g, p, t)) continue;
          auto after = enclosed_mask(g, rotate_tile(g, p, t));
          auto expect = mask;
          expect[t - 1] = !expect[t - 1];
          CHECK(after == expect);
          CHECK(rotate_tile(g, rotate_tile(g, p, t), t) == p);
        }
      }
    }
}

TEST_CASE("matching lattices are graded, distributive and label chains by permutations") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& w : all_words(n)) {
      SnakeGraph g = build_snake(w);
      MatchingLattice ml = matching_lattice(g);
      const CoverLattice& l = ml.lattice;
      CHECK(l.is_graded());
      CHECK(l.height() == g.tile_count());
      CHECK(ml.nodes[l.bottom()] == minimal_matching(g));
      CHECK(ml.nodes[l.top()] == maximal_matching(g));
      for (std::size_t v = 0; v < l.size(); ++v)
        CHECK(l.rank(v) == matching_to_submodule(g, ml.nodes[v]).support.size());
      CHECK(is_distributive(l));
      // Walk every maximal chain.
      auto walk = [&](auto&& self, std::size_t v, std::vector<int>& seen) -> void {
        if (v == l.top()) {
          auto sorted = seen;
          std::sort(sorted.begin(), sorted.end());
          for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i + 1));
          return;
        }
        for (std::size_t ci : l.up(v)) {
          seen.push_back(l.covers()[ci].label);
          self(self, l.covers()[ci].hi, seen);
          seen.pop_back();
        }
      };
      std::vector<int> seen;
      walk(walk, l.bottom(), seen);
    }
}
