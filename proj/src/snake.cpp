#include "snakelat/snake.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace snakelat {

Edge::Edge(Point p, Point q) : a(std::min(p, q)), b(std::max(p, q)) {}

SnakeGraph::SnakeGraph(std::vector<Direction> directions, std::vector<int> weights,
                       Sign reading, Point origin)
    : directions_(std::move(directions)), weights_(std::move(weights)), reading_(reading) {
  if (weights_.size() != directions_.size() + 1)
    throw std::invalid_argument("a snake graph needs one weight per tile");
  tiles_.push_back(origin);
  for (Direction d : directions_) {
    Point p = tiles_.back();
    if (d == Direction::Right)
      ++p.x;
    else
      ++p.y;
    tiles_.push_back(p);
  }

  std::map<Edge, std::size_t> count;
  std::map<Edge, std::size_t> first_owner;
  for (std::size_t k = 1; k <= tiles_.size(); ++k) {
    for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left}) {
      Edge e = edge(k, s);
      if (count[e]++ == 0) first_owner[e] = k;
    }
  }
  for (const auto& [e, c] : count) {
    edges_.push_back(e);
    if (c == 1) {
      boundary_.push_back(e);
      boundary_owner_.push_back(first_owner[e]);
    }
    vertices_.push_back(e.a);
    vertices_.push_back(e.b);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Edge SnakeGraph::edge(std::size_t k, Side side) const {
  Point p = tile(k);
  switch (side) {
    case Side::Bottom: return {p, {p.x + 1, p.y}};
    case Side::Right: return {{p.x + 1, p.y}, {p.x + 1, p.y + 1}};
    case Side::Top: return {{p.x, p.y + 1}, {p.x + 1, p.y + 1}};
    case Side::Left: return {p, {p.x, p.y + 1}};
  }
  throw std::logic_error("unknown side");
}

bool SnakeGraph::is_boundary(const Edge& e) const {
  return std::binary_search(boundary_.begin(), boundary_.end(), e);
}

std::size_t SnakeGraph::owner(const Edge& e) const {
  auto it = std::lower_bound(boundary_.begin(), boundary_.end(), e);
  if (it == boundary_.end() || *it != e) return 0;
  return boundary_owner_[static_cast<std::size_t>(it - boundary_.begin())];
}

SnakeGraph build_snake(const ArrowWord& w) {
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i == 0)
      dirs.push_back(w.letters[0] == Letter::Direct ? Direction::Right : Direction::Up);
    else if (w.letters[i] == w.letters[i - 1])
      dirs.push_back(dirs.back() == Direction::Right ? Direction::Up : Direction::Right);
    else
      dirs.push_back(dirs.back());
  }
  std::vector<int> weights;
  for (std::size_t p = 1; p <= w.vertex_count(); ++p) weights.push_back(w.label(p));
  Sign reading = !w.empty() && w.letters[0] == Letter::Inverse ? Sign::Minus : Sign::Plus;
  return SnakeGraph(std::move(dirs), std::move(weights), reading);
}

std::vector<Letter> arrow_function(const SnakeGraph& g, Sign sign) {
  std::vector<Letter> f;
  const auto& d = g.directions();
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == 0)
      f.push_back(sign == Sign::Plus ? Letter::Direct : Letter::Inverse);
    else
      f.push_back(d[j] != d[j - 1] ? f.back() : flip(f.back()));
  }
  return f;
}

ArrowWord recover_word(const SnakeGraph& g, Sign sign) {
  return ArrowWord(arrow_function(g, sign), g.weights());
}

ArrowWord reading_word(const SnakeGraph& g) { return recover_word(g, g.reading()); }

SnakeGraph restrict(const SnakeGraph& g, OverlapWindow win) {
  if (win.start == 0 || win.start > win.end || win.end > g.tile_count())
    throw std::out_of_range("overlap window out of range");
  std::vector<Direction> dirs(g.directions().begin() + (win.start - 1),
                              g.directions().begin() + (win.end - 1));
  std::vector<int> weights(g.weights().begin() + (win.start - 1),
                           g.weights().begin() + win.end);
  // The window keeps the host's letters, so it reads Plus iff its first one is Direct.
  Sign reading = Sign::Plus;
  if (win.end > win.start && arrow_function(g, g.reading())[win.start - 1] == Letter::Inverse)
    reading = Sign::Minus;
  return SnakeGraph(std::move(dirs), std::move(weights), reading, g.tile(win.start));
}

}  // namespace snakelat
