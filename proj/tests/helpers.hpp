#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snakelat/matchings.hpp"
#include "snakelat/strings.hpp"

namespace testing_support {

using namespace snakelat;

inline std::vector<Letter> letters(const std::string& syms) {
  std::vector<Letter> out;
  for (char c : syms) out.push_back(c == '>' ? Letter::Direct : Letter::Inverse);
  return out;
}

// Same letters with labels 1..n+1.
inline ArrowWord numbered(const ArrowWord& w) {
  std::vector<int> labels;
  for (std::size_t p = 1; p <= w.vertex_count(); ++p) labels.push_back(static_cast<int>(p));
  return ArrowWord(w.letters, labels);
}

// Words of every length up to max_length.
inline std::vector<ArrowWord> words_up_to(std::size_t max_length) {
  std::vector<ArrowWord> out;
  for (std::size_t n = 0; n <= max_length; ++n)
    for (auto& w : all_words(n)) out.push_back(w);
  return out;
}

inline Edge side(const SnakeGraph& g, std::size_t tile, Side s) { return g.edge(tile, s); }

}  // namespace testing_support
