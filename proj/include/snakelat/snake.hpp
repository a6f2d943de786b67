#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "snakelat/strings.hpp"

namespace snakelat {

enum class Direction : std::uint8_t { Right, Up };
enum class Sign : std::uint8_t { Plus, Minus };

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

// Unit segment with endpoints stored in increasing order.
struct Edge {
  Point a;
  Point b;
  Edge() = default;
  Edge(Point p, Point q);
  bool vertical() const { return a.x == b.x; }
  auto operator<=>(const Edge&) const = default;
};

enum class Side : std::uint8_t { Bottom, Right, Top, Left };

struct OverlapWindow {
  std::size_t start = 1;
  std::size_t end = 1;
  bool operator==(const OverlapWindow&) const = default;
};

class SnakeGraph {
 public:
  // reading selects which arrow function recovers the source word; it matters
  // for graphs whose first gluing does not determine it (one tile, windows).
  SnakeGraph(std::vector<Direction> directions, std::vector<int> weights,
             Sign reading = Sign::Plus, Point origin = {});

  std::size_t tile_count() const { return tiles_.size(); }
  const std::vector<Direction>& directions() const { return directions_; }
  const std::vector<int>& weights() const { return weights_; }
  Sign reading() const { return reading_; }

  // Lower-left corner of tile k (1-based).
  Point tile(std::size_t k) const { return tiles_.at(k - 1); }
  Edge edge(std::size_t k, Side side) const;

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Edge>& boundary_edges() const { return boundary_; }
  bool is_boundary(const Edge& e) const;
  // Tile owning a boundary edge, or 0 for interior edges.
  std::size_t owner(const Edge& e) const;

  bool operator==(const SnakeGraph& o) const {
    return directions_ == o.directions_ && weights_ == o.weights_ &&
           reading_ == o.reading_ && tiles_ == o.tiles_;
  }

 private:
  std::vector<Direction> directions_;
  std::vector<int> weights_;
  Sign reading_;
  std::vector<Point> tiles_;
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<Edge> boundary_;
  std::vector<std::size_t> boundary_owner_;
};

SnakeGraph build_snake(const ArrowWord& w);

// Values stay across a zigzag triple and flip across a straight one.
std::vector<Letter> arrow_function(const SnakeGraph& g, Sign sign);

ArrowWord recover_word(const SnakeGraph& g, Sign sign);
// The word the graph was built from.
ArrowWord reading_word(const SnakeGraph& g);

// Tiles start..end in the host's coordinates.
SnakeGraph restrict(const SnakeGraph& g, OverlapWindow window);

}  // namespace snakelat
