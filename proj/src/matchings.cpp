#include "snakelat/matchings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace snakelat {

PerfectMatching::PerfectMatching(std::vector<Edge> e) : edges(std::move(e)) {
  std::sort(edges.begin(), edges.end());
}

bool PerfectMatching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool is_perfect_matching(const SnakeGraph& g, const std::vector<Edge>& edges) {
  std::map<Point, int> seen;
  for (const Edge& e : edges) {
    if (!std::binary_search(g.edges().begin(), g.edges().end(), e)) return false;
    if (++seen[e.a] > 1 || ++seen[e.b] > 1) return false;
  }
  return seen.size() == g.vertices().size();
}

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
  const auto& verts = g.vertices();
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::vector<std::vector<std::size_t>> incident(verts.size());
  for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
    incident[index[g.edges()[ei].a]].push_back(ei);
    incident[index[g.edges()[ei].b]].push_back(ei);
  }

  std::vector<PerfectMatching> out;
  std::vector<bool> covered(verts.size(), false);
  std::vector<Edge> current;
  // Always extend at the smallest uncovered vertex.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    while (from < verts.size() && covered[from]) ++from;
    if (from == verts.size()) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t ei : incident[from]) {
      const Edge& e = g.edges()[ei];
      std::size_t other = index[e.a] == from ? index[e.b] : index[e.a];
      if (covered[other]) continue;
      covered[from] = covered[other] = true;
      current.push_back(e);
      self(self, from + 1);
      current.pop_back();
      covered[from] = covered[other] = false;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The boundary is a single cycle; split it into its two alternating halves.
std::pair<std::vector<Edge>, std::vector<Edge>> boundary_alternations(const SnakeGraph& g) {
  const auto& bd = g.boundary_edges();
  std::map<Point, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < bd.size(); ++i) {
    at[bd[i].a].push_back(i);
    at[bd[i].b].push_back(i);
  }
  std::vector<Edge> halves[2];
  std::vector<bool> used(bd.size(), false);
  std::size_t cur = 0;
  Point tip = bd[0].b;
  for (std::size_t step = 0; step < bd.size(); ++step) {
    used[cur] = true;
    halves[step % 2].push_back(bd[cur]);
    const auto& nb = at[tip];
    std::size_t next = nb[0] == cur ? nb[1] : nb[0];
    if (used[next]) break;
    tip = bd[next].a == tip ? bd[next].b : bd[next].a;
    cur = next;
  }
  std::sort(halves[0].begin(), halves[0].end());
  std::sort(halves[1].begin(), halves[1].end());
  return {halves[0], halves[1]};
}

std::vector<std::size_t> doubly_matched_tiles(const SnakeGraph& g, const std::vector<Edge>& m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= g.tile_count(); ++k) {
    int c = 0;
    for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left})
      if (std::binary_search(m.begin(), m.end(), g.edge(k, s))) ++c;
    if (c >= 2) out.push_back(k);
  }
  return out;
}

}  // namespace

PerfectMatching minimal_matching(const SnakeGraph& g) {
  auto [first, second] = boundary_alternations(g);
  if (g.tile_count() == 1) {
    Edge bottom = g.edge(1, Side::Bottom);
    return PerfectMatching(std::binary_search(first.begin(), first.end(), bottom) ? first : second);
  }
  // The minimal matching doubles up exactly on the socle tiles of the reading word.
  ArrowWord w = reading_word(g);
  std::vector<std::size_t> socles;
  for (std::size_t p = 1; p <= w.vertex_count(); ++p)
    if (is_socle(w, p)) socles.push_back(p);
  if (doubly_matched_tiles(g, first) == socles) return PerfectMatching(first);
  if (doubly_matched_tiles(g, second) == socles) return PerfectMatching(second);
  throw std::logic_error("no boundary matching fits the socle pattern");
}

PerfectMatching maximal_matching(const SnakeGraph& g) {
  PerfectMatching low = minimal_matching(g);
  std::vector<Edge> rest;
  for (const Edge& e : g.boundary_edges())
    if (!low.contains(e)) rest.push_back(e);
  return PerfectMatching(std::move(rest));
}

std::vector<Edge> symmetric_difference(const SnakeGraph& g, const PerfectMatching& p,
                                       const PerfectMatching& q) {
  if (!is_perfect_matching(g, p.edges) || !is_perfect_matching(g, q.edges))
    throw std::invalid_argument("matchings do not belong to this graph");
  std::vector<Edge> out;
  std::set_symmetric_difference(p.edges.begin(), p.edges.end(), q.edges.begin(), q.edges.end(),
                                std::back_inserter(out));
  return out;
}

std::vector<bool> enclosed_mask(const SnakeGraph& g, const PerfectMatching& p) {
  PerfectMatching low = minimal_matching(g);
  std::vector<Edge> diff;
  std::set_symmetric_difference(p.edges.begin(), p.edges.end(), low.edges.begin(),
                                low.edges.end(), std::back_inserter(diff));
  // Even-odd rule: count vertical difference edges at or left of the tile's left side.
  std::vector<bool> mask(g.tile_count(), false);
  for (std::size_t k = 1; k <= g.tile_count(); ++k) {
    Point t = g.tile(k);
    int crossings = 0;
    for (const Edge& e : diff)
      if (e.vertical() && e.a.x <= t.x && e.a.y == t.y) ++crossings;
    mask[k - 1] = crossings % 2 == 1;
  }
  return mask;
}

std::vector<OverlapWindow> enclosed_tiles(const SnakeGraph& g, const PerfectMatching& p) {
  auto mask = enclosed_mask(g, p);
  std::vector<OverlapWindow> out;
  for (std::size_t k = 1; k <= mask.size(); ++k) {
    if (!mask[k - 1]) continue;
    if (!out.empty() && out.back().end == k - 1)
      out.back().end = k;
    else
      out.push_back({k, k});
  }
  return out;
}

bool rotatable(const SnakeGraph& g, const PerfectMatching& p, std::size_t tile) {
  bool horizontal = p.contains(g.edge(tile, Side::Bottom)) && p.contains(g.edge(tile, Side::Top));
  bool vertical = p.contains(g.edge(tile, Side::Left)) && p.contains(g.edge(tile, Side::Right));
  return horizontal || vertical;
}

PerfectMatching rotate_tile(const SnakeGraph& g, const PerfectMatching& p, std::size_t tile) {
  if (tile == 0 || tile > g.tile_count()) throw std::out_of_range("tile out of range");
  Edge b = g.edge(tile, Side::Bottom), t = g.edge(tile, Side::Top);
  Edge l = g.edge(tile, Side::Left), r = g.edge(tile, Side::Right);
  std::vector<Edge> out;
  if (p.contains(b) && p.contains(t)) {
    for (const Edge& e : p.edges)
      if (e != b && e != t) out.push_back(e);
    out.push_back(l);
    out.push_back(r);
  } else if (p.contains(l) && p.contains(r)) {
    for (const Edge& e : p.edges)
      if (e != l && e != r) out.push_back(e);
    out.push_back(b);
    out.push_back(t);
  } else {
    throw std::invalid_argument("tile " + std::to_string(tile) + " is not rotatable");
  }
  return PerfectMatching(std::move(out));
}

MatchingLattice matching_lattice(const SnakeGraph& g) {
  MatchingLattice ml{enumerate_matchings(g), {}};
  std::map<PerfectMatching, std::size_t> index;
  for (std::size_t i = 0; i < ml.nodes.size(); ++i) index[ml.nodes[i]] = i;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < ml.nodes.size(); ++i) {
    auto mask = enclosed_mask(g, ml.nodes[i]);
    for (std::size_t t = 1; t <= g.tile_count(); ++t) {
      if (mask[t - 1] || !rotatable(g, ml.nodes[i], t)) continue;
      covers.push_back({i, index.at(rotate_tile(g, ml.nodes[i], t)), static_cast<int>(t)});
    }
  }
  ml.lattice = CoverLattice(ml.nodes.size(), std::move(covers));
  return ml;
}

}  // namespace snakelat
