#pragma once

#include <string>
#include <vector>

#include "snakelat/strings.hpp"

namespace snakelat {

struct Falsification {
  std::string property;
  std::string input;
  std::string detail;
};

// Every structural check on one word: recovery, the matching/submodule
// correspondence, distributivity, join irreducibles and the weak-order interval.
std::vector<Falsification> verify_word(const ArrowWord& w);

// verify_word on every word of length <= max_length, numbered 1..n+1.
std::vector<Falsification> verify_sweep(std::size_t max_length, std::size_t* words_checked = nullptr);

}  // namespace snakelat
