#include "report.hpp"

#include <sstream>

namespace report {

namespace {

std::string direction_name(Direction d) { return d == Direction::Right ? "R" : "U"; }

ordered_json support_json(const Support& s) {
  ordered_json a = ordered_json::array();
  for (std::size_t p : s) a.push_back(p);
  return a;
}

}  // namespace

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json a = ordered_json::array();
  for (const Edge& e : edges) a.push_back({e.a.x, e.a.y, e.b.x, e.b.y});
  return a;
}

ordered_json dimension_json(const DimensionVector& d) {
  ordered_json o = ordered_json::object();
  for (auto [k, v] : d) o[std::to_string(k)] = v;
  return o;
}

ordered_json covers_json(const CoverLattice& l) {
  ordered_json a = ordered_json::array();
  for (const Cover& c : l.covers()) a.push_back({c.lo, c.hi, c.label});
  return a;
}

ordered_json falsifications_json(const std::vector<Falsification>& f) {
  ordered_json a = ordered_json::array();
  for (const auto& x : f) a.push_back({{"property", x.property}, {"input", x.input}, {"detail", x.detail}});
  return a;
}

std::string optional_word(const std::optional<ArrowWord>& w) { return w ? render(*w) : "EMPTY"; }

ordered_json snake_json(const ArrowWord& w, const SnakeGraph& g) {
  ordered_json dirs = ordered_json::array(), tiles = ordered_json::array();
  for (Direction d : g.directions()) dirs.push_back(direction_name(d));
  for (std::size_t k = 1; k <= g.tile_count(); ++k) tiles.push_back({g.tile(k).x, g.tile(k).y});
  return {{"word", render(w)}, {"directions", dirs}, {"weights", g.weights()}, {"tiles", tiles}};
}

ordered_json matchings_json(const ArrowWord& w, const SnakeGraph& g) {
  ordered_json list = ordered_json::array();
  for (const PerfectMatching& p : enumerate_matchings(g))
    list.push_back({{"edges", edges_json(p.edges)},
                    {"support", support_json(matching_to_submodule(g, p).support)}});
  return {{"word", render(w)},
          {"count", list.size()},
          {"minimal", edges_json(minimal_matching(g).edges)},
          {"maximal", edges_json(maximal_matching(g).edges)},
          {"matchings", list}};
}

ordered_json matching_lattice_json(const ArrowWord& w, const SnakeGraph& g, const MatchingLattice& ml) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t v = 0; v < ml.nodes.size(); ++v)
    nodes.push_back({{"edges", edges_json(ml.nodes[v].edges)},
                     {"support", support_json(matching_to_submodule(g, ml.nodes[v]).support)},
                     {"rank", ml.lattice.rank(v)}});
  ordered_json weights = ordered_json::array();
  for (const Cover& c : ml.lattice.covers()) weights.push_back(g.weights()[c.label - 1]);
  return {{"word", render(w)},
          {"nodes", nodes},
          {"covers", covers_json(ml.lattice)},
          {"cover_weights", weights},
          {"bottom", ml.lattice.bottom()},
          {"top", ml.lattice.top()}};
}

ordered_json submodules_json(const ArrowWord& w, const SubmoduleLattice& sl) {
  ordered_json nodes = ordered_json::array();
  std::map<DimensionVector, std::size_t> census;
  for (const Support& s : sl.nodes) {
    DimensionVector d = dimension_vector(w, s);
    ++census[d];
    nodes.push_back({{"support", support_json(s)}, {"dimension", dimension_json(d)}});
  }
  ordered_json counts = ordered_json::array();
  for (const auto& [d, c] : census) counts.push_back({{"dimension", dimension_json(d)}, {"count", c}});
  return {{"word", render(w)},
          {"nodes", nodes},
          {"covers", covers_json(sl.lattice)},
          {"bottom", sl.lattice.bottom()},
          {"top", sl.lattice.top()},
          {"census", counts}};
}

ordered_json bruhat_json(const ArrowWord& w, const ThreeWayReport& r, const WeakInterval& wi) {
  ordered_json nodes = ordered_json::array();
  for (const Permutation& p : wi.nodes) nodes.push_back(p);
  return {{"word", render(w)},
          {"sigma", r.coxeter.sigma},
          {"witness", r.coxeter.witness},
          {"reduced_words", reduced_words(r.coxeter.sigma)},
          {"interval", {{"nodes", nodes}, {"covers", covers_json(wi.lattice)}}},
          {"counts",
           {{"matchings", r.matching_nodes},
            {"submodules", r.submodule_nodes},
            {"interval", r.interval_nodes}}},
          {"maximal_chains", r.maximal_chains},
          {"reduced_word_count", r.reduced_words},
          {"verified", r.ok()}};
}

ordered_json resolution_json(const SkeinCase& c) {
  ordered_json o;
  if (c.is_crossing()) {
    const Crossing& x = c.crossing();
    o["kind"] = "crossing";
    o["w1"] = render(x.w1);
    o["w2"] = render(x.w2);
    o["w2_inverted"] = x.w2_inverted;
    o["overlap"] = render(subword(x.w1, x.s, x.t));
    o["positions"] = {{"w1", {x.s, x.t}}, {"w2", {x.s2, x.t2}}};
  } else {
    const Grafting& g = c.grafting();
    o["kind"] = "grafting";
    o["w1"] = render(g.w1);
    o["w2"] = render(g.w2);
    o["position"] = g.position;
    o["a"] = g.a ? std::string(1, symbol(*g.a)) : std::string("EMPTY");
    o["e"] = std::string(1, symbol(g.e));
  }
  ordered_json counts = ordered_json::array();
  for (int i = 3; i <= 6; ++i) o["w" + std::to_string(i)] = optional_word(c.word(i));
  for (int i = 1; i <= 6; ++i) counts.push_back(c.matchings(i).size());
  o["counts"] = counts;
  o["counting_identity"] = counts[0].get<std::size_t>() * counts[1].get<std::size_t>() ==
                           counts[2].get<std::size_t>() * counts[3].get<std::size_t>() +
                               counts[4].get<std::size_t>() * counts[5].get<std::size_t>();
  return o;
}

ordered_json phi_json(const SkeinCase& c, const PhiReport& r) {
  ordered_json o = resolution_json(c);
  o["counting_identity"] = r.counting_identity;
  o["pairs"] = r.pairs;
  o["routed_34"] = r.routed_34;
  o["routed_56"] = r.routed_56;
  o["extension_checks"] = r.extension_checks;
  ordered_json images = ordered_json::array();
  auto m1 = c.matchings(1), m2 = c.matchings(2);
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j) {
      Support s1 = c.graph(1) ? matching_to_submodule(*c.graph(1), m1[i]).support : Support{};
      Support s2 = c.graph(2) ? matching_to_submodule(*c.graph(2), m2[j]).support : Support{};
      SupportImage img = phi_supports(c, s1, s2);
      images.push_back({{"n1", support_json(s1)},
                        {"n2", support_json(s2)},
                        {"route", img.route == Route::ThreeFour ? "34" : "56"},
                        {"first", support_json(img.first)},
                        {"second", support_json(img.second)}});
    }
  o["images"] = images;
  o["failures"] = r.failures;
  o["ok"] = r.ok();
  return o;
}

std::string snake_dot(const SnakeGraph& g) {
  std::ostringstream os;
  os << "graph snake {\n  node [shape=point];\n";
  auto name = [](Point p) { return "\"" + std::to_string(p.x) + "," + std::to_string(p.y) + "\""; };
  for (const Point& p : g.vertices())
    os << "  " << name(p) << " [pos=\"" << p.x << "," << p.y << "!\"];\n";
  for (std::size_t k = 1; k <= g.tile_count(); ++k) {
    os << "  subgraph cluster_" << k << " {\n    label=\"" << g.weights()[k - 1] << "\";\n";
    for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left}) {
      Edge e = g.edge(k, s);
      os << "    " << name(e.a) << " -- " << name(e.b) << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string lattice_dot(const CoverLattice& l, const std::vector<std::string>& captions) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < l.size(); ++v)
    os << "  n" << v << " [label=\"" << (v < captions.size() ? captions[v] : std::to_string(v)) << "\"];\n";
  for (const Cover& c : l.covers())
    os << "  n" << c.lo << " -> n" << c.hi << " [label=\"" << c.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string support_text(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string permutation_text(const std::vector<int>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

}  // namespace report
