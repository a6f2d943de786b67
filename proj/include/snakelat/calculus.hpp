#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snakelat/matchings.hpp"
#include "snakelat/modules.hpp"
#include "snakelat/snake.hpp"
#include "snakelat/strings.hpp"

namespace snakelat {

// w1 = u1 a m b v1 and w2 = u2 c m d v2 with a, d Direct and b, c Inverse.
// The overlap m is vertices s..t of w1 and s2..t2 of w2; w2 is stored in the
// orientation that makes the overlap read identically.
struct Crossing {
  ArrowWord w1;
  ArrowWord w2;
  bool w2_inverted = false;
  std::size_t s = 1, t = 1;
  std::size_t s2 = 1, t2 = 1;
};

// Throws std::invalid_argument unless the positions describe a crossing.
Crossing make_crossing(const ArrowWord& w1, const ArrowWord& w2, bool w2_inverted, std::size_t s,
                       std::size_t t, std::size_t s2, std::size_t t2);

// Both orientations of w2, ordered by orientation then overlap start.
// Overlaps touching the start (or the end) of both words are not crossings.
std::vector<Crossing> find_crossings(const ArrowWord& w1, const ArrowWord& w2);

// w2 glued after vertex `position` of w1 by the letter e. When position is not
// the last vertex, a is the letter leaving it and e must be its opposite.
struct Grafting {
  ArrowWord w1;
  std::size_t position = 1;
  std::optional<Letter> a;
  Letter e = Letter::Direct;
  ArrowWord w2;
};

Grafting make_grafting(const ArrowWord& w1, std::size_t position, Letter e, const ArrowWord& w2);

// nullopt marks an empty summand: no graph, exactly one (empty) matching.
struct Resolution {
  std::optional<ArrowWord> w3, w4, w5, w6;
};

Resolution resolve_crossing(const Crossing& x);
Resolution resolve_grafting(const Grafting& g);

// Vertices kept after dropping a leading run of `run` letters and the letter after it.
std::optional<ArrowWord> drop_prefix_run(const ArrowWord& w, Letter run);
// Vertices kept after dropping a trailing run of `run` letters and the letter before it.
std::optional<ArrowWord> drop_suffix_run(const ArrowWord& w, Letter run);

enum class Route { ThreeFour, FiveSix };

// The six words and graphs of one crossing or grafting, indexed 1..6.
class SkeinCase {
 public:
  explicit SkeinCase(Crossing x);
  explicit SkeinCase(Grafting g);

  bool is_crossing() const { return std::holds_alternative<Crossing>(source_); }
  const Crossing& crossing() const { return std::get<Crossing>(source_); }
  const Grafting& grafting() const { return std::get<Grafting>(source_); }

  const std::optional<ArrowWord>& word(int i) const { return words_.at(i - 1); }
  const std::optional<SnakeGraph>& graph(int i) const { return graphs_.at(i - 1); }
  std::vector<PerfectMatching> matchings(int i) const;

 private:
  void build();
  std::variant<Crossing, Grafting> source_;
  std::array<std::optional<ArrowWord>, 6> words_;
  std::array<std::optional<SnakeGraph>, 6> graphs_;
};

struct SupportImage {
  Route route;
  Support first;
  Support second;
};

// Splice the two submodules at the first cut where both halves stay closed;
// without such a cut the pair goes to (w5, w6) by restriction.
SupportImage phi_supports(const SkeinCase& c, const Support& s1, const Support& s2);

struct PhiImage {
  Route route;
  PerfectMatching first;
  PerfectMatching second;
  auto operator<=>(const PhiImage&) const = default;
};

PhiImage phi(const SkeinCase& c, const PerfectMatching& p1, const PerfectMatching& p2);

struct ExtensionCheck {
  bool applicable = false;
  bool ok = true;
  DimensionVector lhs;
  DimensionVector rhs;
};

// h(N1) + h(N2) = h(N3) + h(N4) when a crossing pair lands in (w3, w4).
// Graftings drop the stripped runs from w4, so they are never applicable.
ExtensionCheck extension_dimension_check(const SkeinCase& c, const PerfectMatching& p1,
                                         const PerfectMatching& p2);

struct PhiReport {
  std::array<std::size_t, 6> counts{};
  bool counting_identity = false;
  std::size_t pairs = 0;
  std::size_t routed_34 = 0;
  std::size_t routed_56 = 0;
  std::size_t extension_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return counting_identity && failures.empty(); }
};

// Runs phi on every pair and checks validity, injectivity and additivity.
PhiReport verify_phi(const SkeinCase& c);

}  // namespace snakelat
