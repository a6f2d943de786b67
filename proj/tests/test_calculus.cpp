#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "suites.hpp"

using namespace snakelat;

namespace {

std::string show(const std::optional<ArrowWord>& w) { return w ? render(*w) : "EMPTY"; }

SkeinCase example_case() {
  auto xs = find_crossings(parse_word("1>2>3>4<5>6"), parse_word("7<3>4>8"));
  REQUIRE(xs.size() == 1);
  return SkeinCase(xs.front());
}

}  // namespace

TEST_CASE("finding the worked crossing") {
  auto xs = find_crossings(parse_word("1>2>3>4<5>6"), parse_word("7<3>4>8"));
  REQUIRE(xs.size() == 1);
  const Crossing& x = xs.front();
  CHECK_FALSE(x.w2_inverted);
  CHECK(x.s == 3);
  CHECK(x.t == 4);
  CHECK(x.s2 == 2);
  CHECK(x.t2 == 3);
  // Inverting the second word finds the same crossing.
  auto ys = find_crossings(parse_word("1>2>3>4<5>6"), parse_word("8<4<3>7"));
  REQUIRE(ys.size() == 1);
  CHECK(ys.front().w2_inverted);
  CHECK(render(ys.front().w2) == "7<3>4>8");
}

TEST_CASE("crossing patterns") {
  CHECK(find_crossings(parse_word("1>2"), parse_word("1>2")).empty());
  CHECK(find_crossings(parse_word("1>2<3"), parse_word("4>2<5")).empty());
  auto xs = find_crossings(parse_word("1>2<3"), parse_word("4<2>5"));
  REQUIRE(xs.size() == 2);
  CHECK(xs[0].s == 2);
  CHECK(xs[0].t == 2);
  CHECK_THROWS_AS(find_crossings(parse_word(">"), parse_word("<")), std::invalid_argument);
  CHECK_THROWS_AS(make_crossing(parse_word("1>2"), parse_word("3<1"), false, 2, 2, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("worked resolution") {
  SkeinCase c = example_case();
  CHECK(show(c.word(3)) == "1>2>3>4>8");
  CHECK(show(c.word(4)) == "7<3>4<5>6");
  CHECK(show(c.word(5)) == "1>2<7");
  CHECK(show(c.word(6)) == "6<5<8");
  CHECK(c.matchings(5).size() == 5);
  CHECK(c.matchings(6).size() == 4);
  PhiReport r = verify_phi(c);
  CHECK(r.counting_identity);
  CHECK(r.counts[0] * r.counts[1] == r.counts[2] * r.counts[3] + r.counts[4] * r.counts[5]);
  CHECK(r.ok());
  CHECK(r.pairs == r.routed_34 + r.routed_56);
}

TEST_CASE("missing left parts strip runs") {
  auto xs = find_crossings(parse_word("3>4<5"), parse_word("1<2>7<3>4>8"));
  REQUIRE(xs.size() == 1);
  Resolution r = resolve_crossing(xs.front());
  CHECK(show(r.w5) == "1");
  CHECK(show(r.w3) == "3>4>8");
  CHECK(show(r.w4) == "1<2>7<3>4<5");
  CHECK(show(r.w6) == "5<8");
  auto ys = find_crossings(parse_word("3>4<5"), parse_word("1>2>7<3>4>8"));
  REQUIRE(ys.size() == 1);
  CHECK(show(resolve_crossing(ys.front()).w5) == "EMPTY");
}

TEST_CASE("doubly empty ends give an empty summand") {
  Crossing x{parse_word("3>4<5"), parse_word("3>4>8"), false, 1, 2, 1, 2};
  CHECK_FALSE(resolve_crossing(x).w5.has_value());
  CHECK_THROWS_AS(make_crossing(x.w1, x.w2, false, 1, 2, 1, 2), std::invalid_argument);
}

TEST_CASE("inverting the first word swaps the resolution pairs") {
  for (const Crossing& x : testing_support::crossing_suite(1)) {
    Resolution r = resolve_crossing(x);
    auto ys = find_crossings(inverse(x.w1), x.w2);
    bool found = false;
    for (const Crossing& y : ys) {
      Resolution q = resolve_crossing(y);
      auto inv = [](const std::optional<ArrowWord>& w) {
        return w ? std::optional<ArrowWord>(inverse(*w)) : std::nullopt;
      };
      if (q.w3 == inv(r.w4) && q.w4 == inv(r.w3) && (q.w5 == r.w6 || q.w5 == inv(r.w6)) &&
          (q.w6 == r.w5 || q.w6 == inv(r.w5)))
        found = true;
    }
    CHECK_MESSAGE(found, render(x.w1) << " / " << render(x.w2));
  }
}

TEST_CASE("counting identity over generated crossings") {
  auto suite = testing_support::crossing_suite(1);
  CHECK(suite.size() == 675);
  for (const Crossing& x : suite) {
    SkeinCase c(x);
    std::size_t n[6];
    for (int i = 1; i <= 6; ++i) n[i - 1] = c.matchings(i).size();
    CHECK(n[0] * n[1] == n[2] * n[3] + n[4] * n[5]);
    // Lattice sizes agree with matching counts.
    for (int i = 1; i <= 6; ++i)
      if (c.word(i)) CHECK(enumerate_submodules(*c.word(i)).size() == n[i - 1]);
  }
}

TEST_CASE("phi is a bijection on generated crossings") {
  for (const Crossing& x : testing_support::crossing_suite(1)) {
    PhiReport r = verify_phi(SkeinCase(x));
    CHECK_MESSAGE(r.ok(), render(x.w1) << " / " << render(x.w2));
  }
}

TEST_CASE("grafting resolutions") {
  Grafting g = make_grafting(parse_word("1>2"), 2, Letter::Inverse, parse_word("3>4"));
  CHECK_FALSE(g.a.has_value());
  Resolution r = resolve_grafting(g);
  CHECK(show(r.w3) == "1>2<3>4");
  CHECK(show(r.w4) == "EMPTY");
  CHECK(show(r.w5) == "EMPTY");
  // The connector's opposite strips 3>4 entirely.
  CHECK(show(r.w6) == "EMPTY");
  CHECK(verify_phi(SkeinCase(g)).ok());
  Grafting k = make_grafting(parse_word("1>2"), 2, Letter::Inverse, parse_word("3<4>5"));
  CHECK(show(resolve_grafting(k).w6) == "4>5");

  Grafting h = make_grafting(parse_word("1>2>3"), 1, Letter::Inverse, parse_word("5"));
  Resolution q = resolve_grafting(h);
  CHECK(show(q.w3) == "1<5");
  CHECK(show(q.w4) == "EMPTY");
  CHECK(show(q.w5) == "EMPTY");
  CHECK(show(q.w6) == "3<2>5");

  CHECK_THROWS_AS(make_grafting(parse_word("1>2"), 1, Letter::Direct, parse_word("3")),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_grafting(parse_word("1>2"), 3, Letter::Direct, parse_word("3")),
                  std::invalid_argument);
}

TEST_CASE("phi is a bijection on generated graftings") {
  auto suite = testing_support::grafting_suite(4, 3);
  CHECK(suite.size() > 100);
  for (const Grafting& g : suite) {
    PhiReport r = verify_phi(SkeinCase(g));
    CHECK_MESSAGE(r.ok(), render(g.w1) << " @" << g.position << " " << symbol(g.e) << " "
                                       << render(g.w2));
  }
}

TEST_CASE("extension check on the worked crossing") {
  SkeinCase c = example_case();
  auto m1 = c.matchings(1), m2 = c.matchings(2);
  SnakeGraph g1 = *c.graph(1), g2 = *c.graph(2);
  ExtensionCheck top = extension_dimension_check(c, maximal_matching(g1), maximal_matching(g2));
  if (top.applicable) {
    CHECK(top.ok);
    int total = 0;
    for (auto [k, v] : top.rhs) total += v;
    CHECK(total == 10);
  }
  for (const auto& p1 : m1) {
    ExtensionCheck e = extension_dimension_check(c, p1, minimal_matching(g2));
    if (e.applicable) CHECK(e.ok);
  }
}

TEST_CASE("phi on the extremes of the worked crossing") {
  SkeinCase c = example_case();
  PhiImage img = phi(c, minimal_matching(*c.graph(1)), minimal_matching(*c.graph(2)));
  CHECK(img.route == Route::ThreeFour);
  CHECK(img.first == minimal_matching(*c.graph(3)));
  CHECK(img.second == minimal_matching(*c.graph(4)));
}

TEST_CASE("extension check only applies to crossings") {
  Grafting g = make_grafting(parse_word("1>2"), 1, Letter::Inverse, parse_word("101"));
  SkeinCase c(g);
  for (const auto& p1 : c.matchings(1))
    for (const auto& p2 : c.matchings(2)) CHECK_FALSE(extension_dimension_check(c, p1, p2).applicable);
}
