#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "snakelat/lattice.hpp"
#include "snakelat/matchings.hpp"
#include "snakelat/strings.hpp"

namespace snakelat {

// Sorted 1-based positions of a string.
using Support = std::vector<std::size_t>;
// Vertex label -> multiplicity.
using DimensionVector = std::map<int, int>;

class StringModule {
 public:
  explicit StringModule(ArrowWord w) : word_(std::move(w)) {}
  const ArrowWord& word() const { return word_; }
  std::size_t dimension() const { return word_.vertex_count(); }
  int vertex_label(std::size_t p) const { return word_.label(p); }
  bool is_top(std::size_t p) const { return snakelat::is_top(word_, p); }
  bool is_socle(std::size_t p) const { return snakelat::is_socle(word_, p); }

 private:
  ArrowWord word_;
};

struct CanonicalSubmodule {
  Support support;
  DimensionVector dimension;
  bool operator==(const CanonicalSubmodule&) const = default;
};

// Closed under following arrows: a Direct letter p -> p+1 drags p+1 along, Inverse drags p.
bool is_submodule(const ArrowWord& w, const Support& s);
Support successor_closure(const ArrowWord& w, const Support& s);
DimensionVector dimension_vector(const ArrowWord& w, const Support& s);
// Maximal runs of consecutive positions.
std::vector<OverlapWindow> intervals(const Support& s);

CanonicalSubmodule matching_to_submodule(const SnakeGraph& g, const PerfectMatching& p);
// Maximal matching on each support interval, minimal matching elsewhere.
PerfectMatching submodule_to_matching(const SnakeGraph& g, const Support& s);

// All submodule supports, ordered by size and then lexicographically.
std::vector<Support> enumerate_submodules(const ArrowWord& w);

struct SubmoduleLattice {
  std::vector<Support> nodes;
  CoverLattice lattice;
};

// Covers add one position and are labeled by it.
SubmoduleLattice submodule_lattice(const StringModule& m);

std::size_t count_submodules(const StringModule& m, const DimensionVector& e);
std::size_t count_submodules_by_matchings(const SnakeGraph& g, const DimensionVector& e);

// Submodules generated by one position, ordered by inclusion, labeled by that position.
Poset join_irreducible_poset_from_string(const StringModule& m);

}  // namespace snakelat
