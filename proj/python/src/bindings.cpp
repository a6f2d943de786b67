#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "snakelat/bruhat.hpp"
#include "snakelat/calculus.hpp"
#include "snakelat/verify.hpp"

namespace py = pybind11;
using namespace snakelat;

namespace {

py::object word_or_none(const std::optional<ArrowWord>& w) {
  if (!w) return py::none();
  return py::str(render(*w));
}

py::dict resolution(const SkeinCase& c) {
  py::dict d;
  for (int i = 3; i <= 6; ++i) d[("w" + std::to_string(i)).c_str()] = word_or_none(c.word(i));
  return d;
}

py::dict phi_report(const SkeinCase& c) {
  PhiReport r = verify_phi(c);
  py::dict d;
  d["counts"] = std::vector<std::size_t>(r.counts.begin(), r.counts.end());
  d["counting_identity"] = r.counting_identity;
  d["pairs"] = r.pairs;
  d["routed_34"] = r.routed_34;
  d["routed_56"] = r.routed_56;
  d["failures"] = r.failures;
  d["ok"] = r.ok();
  return d;
}

Letter connector(const std::string& e) {
  if (e == ">") return Letter::Direct;
  if (e == "<") return Letter::Inverse;
  throw std::invalid_argument("connector must be '>' or '<'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Snake graphs, string modules and weak Bruhat intervals";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string& w) { return render(parse_word(w)); },
        "Parse a word and render it in canonical form");
  m.def("inverse", [](const std::string& w) { return render(inverse(parse_word(w))); });

  m.def("snake_directions", [](const std::string& w) {
    SnakeGraph g = build_snake(parse_word(w));
    std::string out;
    for (Direction d : g.directions()) out += d == Direction::Right ? 'R' : 'U';
    return out;
  });
  m.def("matching_count", [](const std::string& w) {
    return enumerate_matchings(build_snake(parse_word(w))).size();
  });
  m.def("submodules", [](const std::string& w) { return enumerate_submodules(parse_word(w)); },
        "Supports of canonical submodules, smallest first");
  m.def("matching_supports", [](const std::string& w) {
    SnakeGraph g = build_snake(parse_word(w));
    std::vector<Support> out;
    for (const PerfectMatching& p : enumerate_matchings(g)) out.push_back(matching_to_submodule(g, p).support);
    return out;
  });
  m.def("coxeter_element", [](const std::string& w) {
    CoxeterElement c = coxeter_element(submodule_lattice(StringModule(parse_word(w))).lattice);
    return py::make_tuple(c.sigma, c.witness);
  });
  m.def("reduced_words", [](const Permutation& sigma) { return reduced_words(sigma); });
  m.def("three_way", [](const std::string& w) {
    ThreeWayReport r = verify_three_way(StringModule(parse_word(w)));
    py::dict d;
    d["nodes"] = py::make_tuple(r.matching_nodes, r.submodule_nodes, r.interval_nodes);
    d["sigma"] = r.coxeter.sigma;
    d["maximal_chains"] = r.maximal_chains;
    d["reduced_words"] = r.reduced_words;
    d["ok"] = r.ok();
    return d;
  });

  m.def("resolve_crossings", [](const std::string& w1, const std::string& w2) {
    py::list out;
    for (const Crossing& x : find_crossings(parse_word(w1), parse_word(w2))) out.append(resolution(SkeinCase(x)));
    return out;
  });
  m.def("resolve_grafting", [](const std::string& w1, std::size_t pos, const std::string& e, const std::string& w2) {
    return resolution(SkeinCase(make_grafting(parse_word(w1), pos, connector(e), parse_word(w2))));
  });
  m.def("phi_crossings", [](const std::string& w1, const std::string& w2) {
    py::list out;
    for (const Crossing& x : find_crossings(parse_word(w1), parse_word(w2))) out.append(phi_report(SkeinCase(x)));
    return out;
  });
  m.def("phi_grafting", [](const std::string& w1, std::size_t pos, const std::string& e, const std::string& w2) {
    return phi_report(SkeinCase(make_grafting(parse_word(w1), pos, connector(e), parse_word(w2))));
  });

  m.def("verify", [](const std::string& w) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const Falsification& f : verify_word(parse_word(w))) out.emplace_back(f.property, f.input, f.detail);
    return out;
  }, "Falsifications found on one word; empty when every check passes");
  m.def("verify_sweep", [](std::size_t n) {
    std::size_t count = 0;
    std::size_t found = 0;
    {
      py::gil_scoped_release release;
      found = verify_sweep(n, &count).size();
    }
    return py::make_tuple(count, found);
  }, "Check every word up to length n; returns (words checked, falsifications)");
}
