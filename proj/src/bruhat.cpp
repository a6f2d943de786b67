#include "snakelat/bruhat.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "snakelat/snake.hpp"

namespace snakelat {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i + 1);
  return p;
}

Permutation evaluate(const ReducedWord& word, std::size_t n) {
  Permutation p = identity_permutation(n);
  for (int i : word) {
    if (i < 1 || static_cast<std::size_t>(i) >= n) throw std::out_of_range("generator out of range");
    std::swap(p[i - 1], p[i]);
  }
  return p;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  Permutation r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = u[v[k] - 1];
  return r;
}

Permutation invert(const Permutation& u) {
  Permutation r(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) r[u[k] - 1] = static_cast<int>(k + 1);
  return r;
}

std::size_t inversions(const Permutation& u) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] > u[j]) ++c;
  return c;
}

bool is_reduced(const ReducedWord& word, std::size_t n) {
  return inversions(evaluate(word, n)) == word.size();
}

CoxeterElement coxeter_element(const CoverLattice& l) {
  int top_label = 0;
  for (const Cover& c : l.covers()) top_label = std::max(top_label, c.label);
  const std::size_t n = static_cast<std::size_t>(top_label) + 1;

  // Each node's product is forced by any chain reaching it; all must agree.
  std::vector<Permutation> at(l.size());
  std::vector<bool> known(l.size(), false);
  at[l.bottom()] = identity_permutation(n);
  known[l.bottom()] = true;
  std::deque<std::size_t> queue{l.bottom()};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t ci : l.up(v)) {
      const Cover& c = l.covers()[ci];
      Permutation next = at[v];
      std::swap(next[c.label - 1], next[c.label]);
      if (!known[c.hi]) {
        at[c.hi] = std::move(next);
        known[c.hi] = true;
        queue.push_back(c.hi);
      } else if (at[c.hi] != next) {
        throw std::logic_error("maximal chains evaluate to different permutations");
      }
    }
  }
  return {at[l.top()], l.first_maximal_chain()};
}

namespace {

void collect_words(const Permutation& u, ReducedWord& suffix, std::vector<ReducedWord>& out) {
  if (inversions(u) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i - 1] < u[i]) continue;
    Permutation v = u;
    std::swap(v[i - 1], v[i]);
    suffix.push_back(static_cast<int>(i));
    collect_words(v, suffix, out);
    suffix.pop_back();
  }
}

std::uint64_t count_words(const Permutation& u, std::map<Permutation, std::uint64_t>& memo) {
  if (inversions(u) == 0) return 1;
  if (auto it = memo.find(u); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i - 1] < u[i]) continue;
    Permutation v = u;
    std::swap(v[i - 1], v[i]);
    total += count_words(v, memo);
  }
  memo[u] = total;
  return total;
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& sigma) {
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_words(sigma, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t reduced_word_count(const Permutation& sigma) {
  std::map<Permutation, std::uint64_t> memo;
  return count_words(sigma, memo);
}

bool commutation_connected(const std::vector<ReducedWord>& words) {
  if (words.empty()) return true;
  std::set<ReducedWord> pool(words.begin(), words.end());
  std::set<ReducedWord> seen{words.front()};
  std::deque<ReducedWord> queue{words.front()};
  while (!queue.empty()) {
    ReducedWord w = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (std::abs(w[k] - w[k + 1]) <= 1) continue;
      ReducedWord v = w;
      std::swap(v[k], v[k + 1]);
      if (pool.count(v) && seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == pool.size();
}

bool uses_each_generator_once(const ReducedWord& word) {
  std::set<int> s(word.begin(), word.end());
  return s.size() == word.size();
}

WeakInterval weak_interval(const Permutation& sigma) {
  const std::size_t target = inversions(sigma);
  auto inside = [&](const Permutation& v) {
    // l(v) + l(v^-1 sigma) = l(sigma)
    return inversions(v) + inversions(compose(invert(v), sigma)) == target;
  };
  WeakInterval wi;
  std::map<Permutation, std::size_t> index;
  wi.nodes.push_back(identity_permutation(sigma.size()));
  index[wi.nodes[0]] = 0;
  std::vector<Cover> covers;
  for (std::size_t k = 0; k < wi.nodes.size(); ++k) {
    for (std::size_t i = 1; i < sigma.size(); ++i) {
      const Permutation& u = wi.nodes[k];
      if (u[i - 1] > u[i]) continue;
      Permutation v = u;
      std::swap(v[i - 1], v[i]);
      if (!inside(v)) continue;
      auto [it, fresh] = index.emplace(v, wi.nodes.size());
      if (fresh) wi.nodes.push_back(v);
      covers.push_back({k, it->second, static_cast<int>(i)});
    }
  }
  wi.lattice = CoverLattice(wi.nodes.size(), std::move(covers));
  return wi;
}

ThreeWayReport verify_three_way(const StringModule& m) {
  ThreeWayReport r;
  SnakeGraph g = build_snake(m.word());
  MatchingLattice ml = matching_lattice(g);
  SubmoduleLattice sl = submodule_lattice(m);
  r.matching_nodes = ml.nodes.size();
  r.submodule_nodes = sl.nodes.size();
  r.matchings_vs_submodules = labeled_isomorphic(ml.lattice, sl.lattice).has_value();
  try {
    r.coxeter = coxeter_element(sl.lattice);
    r.chain_products_agree = true;
  } catch (const std::logic_error&) {
    r.chain_products_agree = false;
    return r;
  }
  WeakInterval wi = weak_interval(r.coxeter.sigma);
  r.interval_nodes = wi.nodes.size();
  r.submodules_vs_interval = labeled_isomorphic(sl.lattice, wi.lattice).has_value();
  r.maximal_chains = sl.lattice.maximal_chain_count();
  r.reduced_words = reduced_word_count(r.coxeter.sigma);
  return r;
}

}  // namespace snakelat
