#include "snakelat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace snakelat {

std::size_t NodeSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

NodeSet& NodeSet::operator|=(const NodeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool NodeSet::subset_of(const NodeSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

CoverLattice::CoverLattice(std::size_t node_count, std::vector<Cover> covers)
    : n_(node_count), covers_(std::move(covers)), up_(n_), down_(n_) {
  if (n_ == 0) throw std::invalid_argument("a lattice needs at least one node");
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  for (std::size_t i = 0; i < covers_.size(); ++i) {
    const Cover& c = covers_[i];
    if (c.lo >= n_ || c.hi >= n_ || c.lo == c.hi)
      throw std::invalid_argument("cover refers to an invalid node");
    up_[c.lo].push_back(i);
    down_[c.hi].push_back(i);
  }

  std::vector<std::size_t> indegree(n_);
  for (std::size_t v = 0; v < n_; ++v) indegree[v] = down_[v].size();
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n_; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  if (ready.size() != 1) throw std::invalid_argument("a lattice needs a unique bottom");
  bottom_ = ready.front();
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    topo_.push_back(v);
    for (std::size_t ci : up_[v])
      if (--indegree[covers_[ci].hi] == 0) ready.push_back(covers_[ci].hi);
  }
  if (topo_.size() != n_) throw std::invalid_argument("cover relation has a cycle");
  std::size_t sinks = 0;
  for (std::size_t v = 0; v < n_; ++v)
    if (up_[v].empty()) {
      top_ = v;
      ++sinks;
    }
  if (sinks != 1) throw std::invalid_argument("a lattice needs a unique top");

  rank_.assign(n_, 0);
  below_.assign(n_, NodeSet(n_));
  for (std::size_t v : topo_) {
    below_[v].insert(v);
    for (std::size_t ci : down_[v]) {
      const Cover& c = covers_[ci];
      rank_[v] = std::max(rank_[v], rank_[c.lo] + 1);
      below_[v] |= below_[c.lo];
    }
  }
  above_.assign(n_, NodeSet(n_));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    std::size_t v = *it;
    above_[v].insert(v);
    for (std::size_t ci : up_[v]) above_[v] |= above_[covers_[ci].hi];
  }
}

std::optional<std::size_t> CoverLattice::try_meet(std::size_t a, std::size_t b) const {
  NodeSet common = below_[a];
  common &= below_[b];
  std::size_t want = common.count();
  for (std::size_t v = 0; v < n_; ++v)
    if (common.contains(v) && below_[v].count() == want && below_[v] == common) return v;
  return std::nullopt;
}

std::optional<std::size_t> CoverLattice::try_join(std::size_t a, std::size_t b) const {
  NodeSet common = above_[a];
  common &= above_[b];
  std::size_t want = common.count();
  for (std::size_t v = 0; v < n_; ++v)
    if (common.contains(v) && above_[v].count() == want && above_[v] == common) return v;
  return std::nullopt;
}

std::size_t CoverLattice::meet(std::size_t a, std::size_t b) const {
  if (auto m = try_meet(a, b)) return *m;
  throw std::domain_error("pair has no meet");
}

std::size_t CoverLattice::join(std::size_t a, std::size_t b) const {
  if (auto j = try_join(a, b)) return *j;
  throw std::domain_error("pair has no join");
}

bool CoverLattice::is_lattice() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (!try_meet(a, b) || !try_join(a, b)) return false;
  return true;
}

bool CoverLattice::is_graded() const {
  for (const Cover& c : covers_)
    if (rank_[c.hi] != rank_[c.lo] + 1) return false;
  return true;
}

std::uint64_t CoverLattice::maximal_chain_count() const {
  std::vector<std::uint64_t> ways(n_, 0);
  ways[bottom_] = 1;
  for (std::size_t v : topo_)
    for (std::size_t ci : up_[v]) ways[covers_[ci].hi] += ways[v];
  return ways[top_];
}

std::vector<int> CoverLattice::first_maximal_chain() const {
  std::vector<int> labels;
  std::size_t v = bottom_;
  while (!up_[v].empty()) {
    const Cover* best = nullptr;
    for (std::size_t ci : up_[v])
      if (!best || covers_[ci].label < best->label) best = &covers_[ci];
    labels.push_back(best->label);
    v = best->hi;
  }
  return labels;
}

Poset::Poset(std::vector<int> labels,
             const std::vector<std::pair<std::size_t, std::size_t>>& relations,
             std::vector<std::string> names)
    : labels_(std::move(labels)), names_(std::move(names)) {
  const std::size_t n = labels_.size();
  if (names_.empty())
    for (int l : labels_) names_.push_back(std::to_string(l));
  if (names_.size() != n) throw std::invalid_argument("one name per poset element");
  less_.assign(n, std::vector<bool>(n, false));
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw std::invalid_argument("relation out of range");
    less_[lo][hi] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (less_[i][i]) throw std::invalid_argument("relations contain a cycle");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less_[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (less_[i][k] && less_[k][j]) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

namespace {

struct Tables {
  std::size_t n;
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
};

std::optional<Tables> operation_tables(const CoverLattice& l) {
  const std::size_t n = l.size();
  Tables t{n, std::vector<std::size_t>(n * n), std::vector<std::size_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto m = l.try_meet(a, b);
      auto j = l.try_join(a, b);
      if (!m || !j) return std::nullopt;
      t.meet[a * n + b] = t.meet[b * n + a] = *m;
      t.join[a * n + b] = t.join[b * n + a] = *j;
    }
  return t;
}

}  // namespace

std::optional<Law> distributivity_violation(const CoverLattice& l) {
  auto t = operation_tables(l);
  if (!t) return Law{0, 0, 0};
  const std::size_t n = t->n;
  auto M = [&](std::size_t a, std::size_t b) { return t->meet[a * n + b]; };
  auto J = [&](std::size_t a, std::size_t b) { return t->join[a * n + b]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y; z < n; ++z) {
        if (M(x, J(y, z)) != J(M(x, y), M(x, z))) return Law{x, y, z};
        if (J(x, M(y, z)) != M(J(x, y), J(x, z))) return Law{x, y, z};
      }
  return std::nullopt;
}

bool is_distributive(const CoverLattice& l) { return !distributivity_violation(l); }

std::vector<std::size_t> join_irreducible_nodes(const CoverLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < l.size(); ++v)
    if (l.down(v).size() == 1) out.push_back(v);
  return out;
}

Poset join_irreducibles(const CoverLattice& l) {
  auto nodes = join_irreducible_nodes(l);
  std::vector<int> labels;
  for (std::size_t v : nodes) labels.push_back(l.covers()[l.down(v).front()].label);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (i != j && l.leq(nodes[i], nodes[j])) rel.emplace_back(i, j);
  return Poset(std::move(labels), rel);
}

CoverLattice order_ideals(const Poset& p, std::vector<std::uint64_t>* ideals) {
  const std::size_t n = p.size();
  if (n > 64) throw std::invalid_argument("order_ideals supports at most 64 elements");
  std::vector<std::uint64_t> down(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(j, i)) down[i] |= std::uint64_t{1} << j;

  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::uint64_t> order{0};
  index[0] = 0;
  std::vector<Cover> covers;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::uint64_t ideal = order[k];
    for (std::size_t e = 0; e < n; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if ((ideal & bit) || (down[e] & ~ideal)) continue;
      std::uint64_t next = ideal | bit;
      auto [it, fresh] = index.emplace(next, order.size());
      if (fresh) order.push_back(next);
      covers.push_back({k, it->second, p.label(e)});
    }
  }
  if (ideals) *ideals = order;
  return CoverLattice(order.size(), std::move(covers));
}

std::optional<std::vector<std::size_t>> labeled_isomorphic(const CoverLattice& a,
                                                           const CoverLattice& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(a.size(), unset);
  std::vector<bool> used(b.size(), false);

  auto out_labels = [](const CoverLattice& l, std::size_t v) {
    std::map<int, std::size_t> m;
    for (std::size_t ci : l.up(v))
      if (!m.emplace(l.covers()[ci].label, l.covers()[ci].hi).second)
        throw std::invalid_argument("cover labels out of a node must be distinct");
    return m;
  };

  std::deque<std::size_t> queue{a.bottom()};
  map[a.bottom()] = b.bottom();
  used[b.bottom()] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    auto la = out_labels(a, u);
    auto lb = out_labels(b, map[u]);
    if (la.size() != lb.size()) return std::nullopt;
    for (auto [label, hi] : la) {
      auto it = lb.find(label);
      if (it == lb.end()) return std::nullopt;
      if (map[hi] == unset) {
        if (used[it->second]) return std::nullopt;
        map[hi] = it->second;
        used[it->second] = true;
        queue.push_back(hi);
      } else if (map[hi] != it->second) {
        return std::nullopt;
      }
    }
  }
  for (std::size_t v : map)
    if (v == unset) return std::nullopt;
  return map;
}

bool same_labeled_poset(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::map<int, std::size_t> ib;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!ib.emplace(b.label(j), j).second)
      throw std::invalid_argument("poset labels must be distinct");
  std::vector<std::size_t> to(a.size());
  std::map<int, std::size_t> ia;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ia.emplace(a.label(i), i).second)
      throw std::invalid_argument("poset labels must be distinct");
    auto it = ib.find(a.label(i));
    if (it == ib.end()) return false;
    to[i] = it->second;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.less(i, j) != b.less(to[i], to[j])) return false;
  return true;
}

CoverLattice chain(const std::vector<int>& labels) {
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < labels.size(); ++i) covers.push_back({i, i + 1, labels[i]});
  return CoverLattice(labels.size() + 1, std::move(covers));
}

}  // namespace snakelat
