#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "snakelat/modules.hpp"

using namespace snakelat;

namespace {

Edge seg(int x1, int y1, int x2, int y2) { return Edge({x1, y1}, {x2, y2}); }

ArrowWord with_labels(const ArrowWord& w, std::vector<int> labels) {
  return ArrowWord(w.letters, std::move(labels));
}

}  // namespace

TEST_CASE("closure predicate") {
  ArrowWord w = parse_word("1>2<3");
  CHECK(is_submodule(w, {}));
  CHECK(is_submodule(w, {2}));
  CHECK(is_submodule(w, {1, 2}));
  CHECK_FALSE(is_submodule(w, {1}));
  CHECK_FALSE(is_submodule(w, {3}));
  CHECK(successor_closure(w, {1}) == Support{1, 2});
  CHECK_THROWS_AS(is_submodule(w, {4}), std::out_of_range);
}

TEST_CASE("displayed matchings give their submodules") {
  SnakeGraph g = build_snake(parse_word("1>2>3>4<5"));
  PerfectMatching first({seg(0, 0, 0, 1), seg(1, 0, 2, 0), seg(1, 1, 2, 1), seg(1, 2, 2, 2),
                         seg(3, 1, 3, 2), seg(4, 1, 4, 2)});
  CanonicalSubmodule n = matching_to_submodule(g, first);
  CHECK(n.support == Support{3, 4});
  CHECK(n.dimension == DimensionVector{{3, 1}, {4, 1}});
  CHECK(submodule_to_matching(g, {3, 4}) == first);

  PerfectMatching second = submodule_to_matching(g, {4});
  CHECK(is_perfect_matching(g, second.edges));
  CanonicalSubmodule simple = matching_to_submodule(g, second);
  CHECK(simple.support == Support{4});
  CHECK(simple.dimension == DimensionVector{{4, 1}});

  CHECK(matching_to_submodule(g, minimal_matching(g)).support.empty());
  CHECK(submodule_to_matching(g, {}) == minimal_matching(g));
  CHECK(submodule_to_matching(g, {1, 2, 3, 4, 5}) == maximal_matching(g));
  CHECK_THROWS_AS(submodule_to_matching(g, {3}), std::invalid_argument);
}

TEST_CASE("submodule lattices") {
  SubmoduleLattice a = submodule_lattice(StringModule(parse_word("1>2<3")));
  CHECK(a.nodes == std::vector<Support>{{}, {2}, {1, 2}, {2, 3}, {1, 2, 3}});
  SubmoduleLattice b = submodule_lattice(StringModule(parse_word("1>2>3")));
  CHECK(b.nodes == std::vector<Support>{{}, {3}, {2, 3}, {1, 2, 3}});
  CHECK(b.lattice.first_maximal_chain() == std::vector<int>{3, 2, 1});
  SubmoduleLattice c = submodule_lattice(StringModule(parse_word("%")));
  CHECK(c.nodes.size() == 2);
}

TEST_CASE("counting submodules by dimension vector") {
  StringModule m(parse_word("1>2<3"));
  CHECK(count_submodules(m, {{2, 1}}) == 1);
  CHECK(count_submodules(m, {}) == 1);
  CHECK(count_submodules(m, {{1, 0}}) == 1);
  // Both copies of vertex 1 are tops, so neither is a submodule alone.
  StringModule r(parse_word("1>2<1"));
  CHECK(count_submodules(r, {{1, 1}}) == 0);
  CHECK(count_submodules(r, {{2, 1}}) == 1);
  CHECK(count_submodules(r, {{1, 1}, {2, 1}}) == 2);
  CHECK(count_submodules(r, {{1, 2}, {2, 1}}) == 1);
  SnakeGraph g = build_snake(r.word());
  for (const DimensionVector& e : std::vector<DimensionVector>{{}, {{1, 1}}, {{2, 1}}, {{1, 1}, {2, 1}}})
    CHECK(count_submodules_by_matchings(g, e) == count_submodules(r, e));
}

TEST_CASE("join irreducibles read off the string") {
  // Relabeled type A zigzag: P1 < P2 > P3 > P4 < P5 with vertices 1,2,3,1,2.
  StringModule m(parse_word("1<2>3>1<2"));
  Poset p = join_irreducible_poset_from_string(m);
  REQUIRE(p.size() == 5);
  auto rel = p.hasse();
  std::sort(rel.begin(), rel.end());
  CHECK(rel == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 1}, {3, 2}, {3, 4}});
  CHECK(p.name(3) == "P4[1]");
  CHECK(p.name(4) == "P5[2]");
  CHECK(same_labeled_poset(p, join_irreducibles(submodule_lattice(m).lattice)));

  Poset u = join_irreducible_poset_from_string(StringModule(parse_word("1>2>3")));
  CHECK(u.hasse().size() == 2);
  CHECK(u.less(2, 0));
  CHECK(join_irreducible_poset_from_string(StringModule(parse_word("%"))).size() == 1);
}

TEST_CASE("matchings and submodules correspond over all short words") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& bare : all_words(n)) {
      std::vector<int> up, down;
      for (std::size_t p = 1; p <= n + 1; ++p) {
        up.push_back(static_cast<int>(p));
        down.push_back(static_cast<int>(n + 2 - p));
      }
      for (const ArrowWord& w : {with_labels(bare, up), with_labels(bare, down)}) {
        SnakeGraph g = build_snake(w);
        StringModule m(w);
        auto supports = enumerate_submodules(w);
        auto all = enumerate_matchings(g);
        REQUIRE(all.size() == supports.size());
        for (const auto& p : all) {
          CanonicalSubmodule s = matching_to_submodule(g, p);
          REQUIRE(is_submodule(w, s.support));
          CHECK(s.dimension == dimension_vector(w, s.support));
          CHECK(submodule_to_matching(g, s.support) == p);
        }
        for (const auto& s : supports) {
          PerfectMatching p = submodule_to_matching(g, s);
          REQUIRE(is_perfect_matching(g, p.edges));
          CHECK(matching_to_submodule(g, p).support == s);
        }
        if (n <= 6)
          CHECK(labeled_isomorphic(matching_lattice(g).lattice, submodule_lattice(m).lattice));
      }
    }
}

TEST_CASE("repeated face weights") {
  for (const char* text : {"1>2<1", "1<2>3>1<2", "2>2>2", "1>1<1>1", "3<1<3>1>3", "5>4<5<4>5<4"}) {
    ArrowWord w = parse_word(text);
    SnakeGraph g = build_snake(w);
    StringModule m(w);
    CHECK(labeled_isomorphic(matching_lattice(g).lattice, submodule_lattice(m).lattice));
    for (const auto& p : enumerate_matchings(g))
      CHECK(submodule_to_matching(g, matching_to_submodule(g, p).support) == p);
  }
}

TEST_CASE("lattice-derived and string-derived join irreducibles agree") {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& w : all_words(n)) {
      StringModule m(w);
      SubmoduleLattice sl = submodule_lattice(m);
      Poset from_string = join_irreducible_poset_from_string(m);
      CHECK(same_labeled_poset(from_string, join_irreducibles(sl.lattice)));
      CHECK(labeled_isomorphic(order_ideals(from_string), sl.lattice));
      // A join irreducible has a simple top.
      for (std::size_t v : join_irreducible_nodes(sl.lattice)) {
        const Support& s = sl.nodes[v];
        auto iv = intervals(s);
        REQUIRE(iv.size() == 1);
        ArrowWord piece = subword(w, iv[0].start, iv[0].end);
        std::size_t tops = 0;
        for (std::size_t p = 1; p <= piece.vertex_count(); ++p) tops += is_top(piece, p);
        CHECK(tops == 1);
      }
      for (std::size_t v = 0; v < sl.lattice.size(); ++v)
        CHECK(sl.lattice.rank(v) == sl.nodes[v].size());
    }
}

TEST_CASE("support intervals end at socles or at their own tops") {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& w : all_words(n))
      for (const auto& s : enumerate_submodules(w))
        for (const auto& iv : intervals(s)) {
          ArrowWord piece = subword(w, iv.start, iv.end);
          for (std::size_t p : {iv.start, iv.end})
            CHECK((is_socle(w, p) || is_top(piece, p - iv.start + 1)));
        }
}
