#include "doctest.h"
#include "helpers.hpp"

using namespace snakelat;
using testing_support::letters;

TEST_CASE("parse labeled word") {
  ArrowWord w = parse_word("1>2>3>4<5>6");
  CHECK(w.letters == letters(">>><>"));
  CHECK(w.labels == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("parse empty and unlabeled words") {
  ArrowWord e = parse_word("%");
  CHECK(e.empty());
  CHECK_FALSE(e.labeled());
  ArrowWord w = parse_word(">><");
  CHECK(w.letters == letters(">><"));
  CHECK_FALSE(w.labeled());
}

TEST_CASE("a lone label is a labeled single vertex") {
  ArrowWord w = parse_word("7");
  CHECK(w.empty());
  CHECK(w.labels == std::vector<int>{7});
  CHECK(render(w) == "7");
}

TEST_CASE("parse errors report a position") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1>") == 2);
  CHECK(position_of("1>>2") == 2);
  CHECK(position_of("0>1") == 0);
  CHECK(position_of("1>02") == 2);
  CHECK(position_of(">x") == 1);
  CHECK(position_of("1 > 2") == 1);
  CHECK(position_of("%%") == 0);
}

TEST_CASE("label count must match") {
  CHECK_THROWS_AS(ArrowWord(letters(">"), {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ArrowWord(letters(">"), {1, 0}), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(ArrowWord(letters(">><"))).letters == letters("><<"));
  CHECK(inverse(ArrowWord{}).empty());
  CHECK(render(inverse(parse_word("7<3>4>8"))) == "8<4<3>7");
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : all_words(n)) {
      CHECK(inverse(inverse(w)) == w);
      auto lw = testing_support::numbered(w);
      CHECK(inverse(inverse(lw)) == lw);
    }
}

TEST_CASE("run decomposition") {
  using R = Run;
  CHECK(decompose_runs(ArrowWord(letters(">>><>"))) ==
        std::vector<R>{{Letter::Direct, 3}, {Letter::Inverse, 1}, {Letter::Direct, 1}});
  CHECK(decompose_runs(ArrowWord(letters("<"))) == std::vector<R>{{Letter::Inverse, 1}});
  CHECK(decompose_runs(ArrowWord(letters("><><"))).size() == 4);
  CHECK_THROWS_AS(decompose_runs(ArrowWord{}), std::invalid_argument);
}

TEST_CASE("runs partition every word and alternate") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& w : all_words(n)) {
      auto runs = decompose_runs(w);
      std::vector<Letter> back;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        CHECK(runs[i].length >= 1);
        if (i > 0) CHECK(runs[i].direction != runs[i - 1].direction);
        back.insert(back.end(), runs[i].length, runs[i].direction);
      }
      CHECK(back == w.letters);
    }
}

TEST_CASE("render then parse is the identity") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : all_words(n)) {
      CHECK(parse_word(render(w)) == w);
      auto lw = testing_support::numbered(w);
      CHECK(parse_word(render(lw)) == lw);
    }
  CHECK(render(parse_word("12<3>12")) == "12<3>12");
}

TEST_CASE("subword and join") {
  ArrowWord w = parse_word("1>2>3>4<5>6");
  CHECK(render(subword(w, 3, 4)) == "3>4");
  CHECK(render(subword(w, 2, 2)) == "2");
  CHECK(render(join(subword(w, 1, 2), Letter::Inverse, parse_word("7"))) == "1>2<7");
  CHECK_THROWS(subword(w, 0, 2));
  CHECK_THROWS(subword(w, 4, 3));
  CHECK_THROWS(subword(w, 5, 7));
  CHECK_THROWS(join(w, Letter::Direct, parse_word(">")));
}

TEST_CASE("tops and socles") {
  ArrowWord w = parse_word("1>2<3");
  CHECK(is_top(w, 1));
  CHECK(is_socle(w, 2));
  CHECK(is_top(w, 3));
  CHECK_FALSE(is_socle(w, 1));
  ArrowWord u = parse_word("1>2>3");
  CHECK(is_top(u, 1));
  CHECK_FALSE(is_top(u, 2));
  CHECK_FALSE(is_socle(u, 2));
  CHECK(is_socle(u, 3));
  ArrowWord single = parse_word("%");
  CHECK(is_top(single, 1));
  CHECK(is_socle(single, 1));
}
