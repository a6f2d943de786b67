#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace snakelat {

// Dense set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const;
  NodeSet& operator|=(const NodeSet& o);
  NodeSet& operator&=(const NodeSet& o);
  bool subset_of(const NodeSet& o) const;
  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct Cover {
  std::size_t lo;
  std::size_t hi;
  int label;
  auto operator<=>(const Cover&) const = default;
};

// A finite bounded poset given by labeled covers; meets and joins are derived.
class CoverLattice {
 public:
  CoverLattice() = default;
  CoverLattice(std::size_t node_count, std::vector<Cover> covers);

  std::size_t size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& up(std::size_t v) const { return up_[v]; }
  const std::vector<std::size_t>& down(std::size_t v) const { return down_[v]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  // Length of the longest chain from the bottom.
  std::size_t rank(std::size_t v) const { return rank_[v]; }
  std::size_t height() const { return rank_[top_]; }

  bool leq(std::size_t a, std::size_t b) const { return below_[b].contains(a); }
  std::optional<std::size_t> try_meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> try_join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  bool is_lattice() const;
  bool is_graded() const;
  std::uint64_t maximal_chain_count() const;
  // Cover labels along the chain that always takes the smallest label.
  std::vector<int> first_maximal_chain() const;

 private:
  std::size_t n_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> rank_;
  std::vector<NodeSet> below_;
  std::vector<NodeSet> above_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

class Poset {
 public:
  Poset() = default;
  // relations are strict pairs (lo, hi); the order is their transitive closure.
  Poset(std::vector<int> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
        std::vector<std::string> names = {});

  std::size_t size() const { return labels_.size(); }
  int label(std::size_t i) const { return labels_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;

 private:
  std::vector<int> labels_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> less_;
};

struct Law {
  std::size_t x, y, z;
};

bool is_distributive(const CoverLattice& l);
// First triple violating either distributive law, if any.
std::optional<Law> distributivity_violation(const CoverLattice& l);

// Elements with exactly one lower cover, labeled by that cover.
Poset join_irreducibles(const CoverLattice& l);
std::vector<std::size_t> join_irreducible_nodes(const CoverLattice& l);

// Down-closed subsets ordered by inclusion; covers labeled by the added element.
// Node i's ideal is ideals[i] when the out-parameter is given.
CoverLattice order_ideals(const Poset& p, std::vector<std::uint64_t>* ideals = nullptr);

// Node map a -> b preserving covers and labels. Out-labels at each node must be distinct.
std::optional<std::vector<std::size_t>> labeled_isomorphic(const CoverLattice& a,
                                                           const CoverLattice& b);

// Same labels and the same order between equally labeled elements.
bool same_labeled_poset(const Poset& a, const Poset& b);

CoverLattice chain(const std::vector<int>& labels);

}  // namespace snakelat
