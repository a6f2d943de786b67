#include "snakelat/modules.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace snakelat {

namespace {

std::vector<bool> as_mask(const ArrowWord& w, const Support& s) {
  std::vector<bool> in(w.vertex_count() + 2, false);
  for (std::size_t p : s) {
    if (p == 0 || p > w.vertex_count()) throw std::out_of_range("support position out of range");
    in[p] = true;
  }
  return in;
}

Support from_mask(const std::vector<bool>& in) {
  Support s;
  for (std::size_t p = 1; p < in.size(); ++p)
    if (in[p]) s.push_back(p);
  return s;
}

bool letter_ok(Letter a, bool left, bool right) {
  return a == Letter::Direct ? (!left || right) : (!right || left);
}

}  // namespace

bool is_submodule(const ArrowWord& w, const Support& s) {
  auto in = as_mask(w, s);
  for (std::size_t i = 1; i <= w.length(); ++i)
    if (!letter_ok(w.letter(i), in[i], in[i + 1])) return false;
  return true;
}

Support successor_closure(const ArrowWord& w, const Support& s) {
  auto in = as_mask(w, s);
  in.resize(w.vertex_count() + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i <= w.length(); ++i) {
      if (w.letter(i) == Letter::Direct && in[i] && !in[i + 1]) in[i + 1] = changed = true;
      if (w.letter(i) == Letter::Inverse && in[i + 1] && !in[i]) in[i] = changed = true;
    }
  }
  return from_mask(in);
}

DimensionVector dimension_vector(const ArrowWord& w, const Support& s) {
  DimensionVector d;
  for (std::size_t p : s) ++d[w.label(p)];
  return d;
}

std::vector<OverlapWindow> intervals(const Support& s) {
  std::vector<OverlapWindow> out;
  for (std::size_t p : s) {
    if (!out.empty() && out.back().end + 1 == p)
      out.back().end = p;
    else
      out.push_back({p, p});
  }
  return out;
}

CanonicalSubmodule matching_to_submodule(const SnakeGraph& g, const PerfectMatching& p) {
  auto mask = enclosed_mask(g, p);
  CanonicalSubmodule n;
  for (std::size_t k = 1; k <= mask.size(); ++k)
    if (mask[k - 1]) {
      n.support.push_back(k);
      ++n.dimension[g.weights()[k - 1]];
    }
  return n;
}

PerfectMatching submodule_to_matching(const SnakeGraph& g, const Support& s) {
  ArrowWord w = reading_word(g);
  if (!is_submodule(w, s)) throw std::invalid_argument("support is not closed under arrows");
  auto in = as_mask(w, s);
  PerfectMatching low = minimal_matching(g);
  // The maximal matching of a support interval is its boundary minus the host's
  // minimal matching, so each edge is decided locally.
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    std::size_t k = g.owner(e);
    bool keep;
    if (k != 0) {
      keep = low.contains(e) != in[k];
    } else {
      std::size_t lo = 0;
      for (std::size_t t = 1; t < g.tile_count(); ++t)
        if (g.edge(t, g.directions()[t - 1] == Direction::Right ? Side::Right : Side::Top) == e)
          lo = t;
      keep = in[lo] != in[lo + 1];
    }
    if (keep) out.push_back(e);
  }
  return PerfectMatching(std::move(out));
}

std::vector<Support> enumerate_submodules(const ArrowWord& w) {
  std::vector<Support> out;
  const std::size_t n = w.vertex_count();
  std::vector<bool> in(n + 1, false);
  auto extend = [&](auto&& self, std::size_t p) -> void {
    if (p > n) {
      out.push_back(from_mask(in));
      return;
    }
    for (bool choice : {false, true}) {
      in[p] = choice;
      if (p == 1 || letter_ok(w.letter(p - 1), in[p - 1], in[p])) self(self, p + 1);
    }
    in[p] = false;
  };
  extend(extend, 1);
  std::sort(out.begin(), out.end(), [](const Support& a, const Support& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SubmoduleLattice submodule_lattice(const StringModule& m) {
  SubmoduleLattice sl{enumerate_submodules(m.word()), {}};
  std::map<Support, std::size_t> index;
  for (std::size_t i = 0; i < sl.nodes.size(); ++i) index[sl.nodes[i]] = i;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < sl.nodes.size(); ++i) {
    const Support& s = sl.nodes[i];
    for (std::size_t p = 1; p <= m.dimension(); ++p) {
      if (std::binary_search(s.begin(), s.end(), p)) continue;
      Support t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), p), p);
      auto it = index.find(t);
      if (it != index.end()) covers.push_back({i, it->second, static_cast<int>(p)});
    }
  }
  sl.lattice = CoverLattice(sl.nodes.size(), std::move(covers));
  return sl;
}

std::size_t count_submodules(const StringModule& m, const DimensionVector& e) {
  DimensionVector want;
  for (auto [k, v] : e)
    if (v != 0) want[k] = v;
  std::size_t c = 0;
  for (const Support& s : enumerate_submodules(m.word()))
    if (dimension_vector(m.word(), s) == want) ++c;
  return c;
}

std::size_t count_submodules_by_matchings(const SnakeGraph& g, const DimensionVector& e) {
  DimensionVector want;
  for (auto [k, v] : e)
    if (v != 0) want[k] = v;
  std::size_t c = 0;
  for (const PerfectMatching& p : enumerate_matchings(g))
    if (matching_to_submodule(g, p).dimension == want) ++c;
  return c;
}

Poset join_irreducible_poset_from_string(const StringModule& m) {
  const std::size_t n = m.dimension();
  std::vector<Support> generated;
  std::vector<int> labels;
  std::vector<std::string> names;
  for (std::size_t p = 1; p <= n; ++p) {
    generated.push_back(successor_closure(m.word(), {p}));
    labels.push_back(static_cast<int>(p));
    names.push_back("P" + std::to_string(p) + "[" + std::to_string(m.vertex_label(p)) + "]");
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::binary_search(generated[j].begin(), generated[j].end(), i + 1))
        rel.emplace_back(i, j);
  return Poset(std::move(labels), rel, std::move(names));
}

}  // namespace snakelat
