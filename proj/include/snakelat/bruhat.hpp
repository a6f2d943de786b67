#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "snakelat/lattice.hpp"
#include "snakelat/modules.hpp"

namespace snakelat {

// One-line notation on 1..N.
using Permutation = std::vector<int>;
// Generator indices; generator i swaps positions i and i+1.
using ReducedWord = std::vector<int>;

Permutation identity_permutation(std::size_t n);
// u * s_i1 * s_i2 * ..., the first generator applied first.
Permutation evaluate(const ReducedWord& word, std::size_t n);
Permutation compose(const Permutation& u, const Permutation& v);  // (u v)(k) = u(v(k))
Permutation invert(const Permutation& u);
std::size_t inversions(const Permutation& u);
bool is_reduced(const ReducedWord& word, std::size_t n);

struct CoxeterElement {
  Permutation sigma;
  ReducedWord witness;
};

// Reads any maximal chain of a position-labeled lattice; every chain must agree.
CoxeterElement coxeter_element(const CoverLattice& l);

std::vector<ReducedWord> reduced_words(const Permutation& sigma);
std::uint64_t reduced_word_count(const Permutation& sigma);
// Connected under swapping adjacent commuting generators.
bool commutation_connected(const std::vector<ReducedWord>& words);
bool uses_each_generator_once(const ReducedWord& word);

struct WeakInterval {
  std::vector<Permutation> nodes;
  CoverLattice lattice;
};

// [e, sigma] in the right weak order; covers u -> u s_i labeled i.
WeakInterval weak_interval(const Permutation& sigma);

struct ThreeWayReport {
  std::size_t matching_nodes = 0;
  std::size_t submodule_nodes = 0;
  std::size_t interval_nodes = 0;
  CoxeterElement coxeter;
  std::uint64_t maximal_chains = 0;
  std::uint64_t reduced_words = 0;
  bool matchings_vs_submodules = false;
  bool submodules_vs_interval = false;
  bool chain_products_agree = false;
  bool ok() const {
    return matchings_vs_submodules && submodules_vs_interval && chain_products_agree &&
           maximal_chains == reduced_words;
  }
};

ThreeWayReport verify_three_way(const StringModule& m);

}  // namespace snakelat
