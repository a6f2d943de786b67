#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "snakelat/bruhat.hpp"
#include "snakelat/calculus.hpp"
#include "snakelat/matchings.hpp"
#include "snakelat/modules.hpp"
#include "snakelat/snake.hpp"
#include "snakelat/verify.hpp"

namespace report {

using nlohmann::ordered_json;
using namespace snakelat;

ordered_json edges_json(const std::vector<Edge>& edges);
ordered_json dimension_json(const DimensionVector& d);
ordered_json covers_json(const CoverLattice& l);
ordered_json falsifications_json(const std::vector<Falsification>& f);
std::string optional_word(const std::optional<ArrowWord>& w);

ordered_json snake_json(const ArrowWord& w, const SnakeGraph& g);
ordered_json matchings_json(const ArrowWord& w, const SnakeGraph& g);
ordered_json matching_lattice_json(const ArrowWord& w, const SnakeGraph& g, const MatchingLattice& ml);
ordered_json submodules_json(const ArrowWord& w, const SubmoduleLattice& sl);
ordered_json bruhat_json(const ArrowWord& w, const ThreeWayReport& r, const WeakInterval& wi);
ordered_json resolution_json(const SkeinCase& c);
ordered_json phi_json(const SkeinCase& c, const PhiReport& r);

std::string snake_dot(const SnakeGraph& g);
// Hasse diagram with node captions supplied by the caller.
std::string lattice_dot(const CoverLattice& l, const std::vector<std::string>& captions);

std::string support_text(const Support& s);
std::string permutation_text(const std::vector<int>& p);

}  // namespace report
