#include "snakelat/verify.hpp"

#include <map>
#include <set>

#include "snakelat/bruhat.hpp"
#include "snakelat/matchings.hpp"
#include "snakelat/modules.hpp"
#include "snakelat/snake.hpp"

namespace snakelat {

namespace {

ArrowWord numbered(const ArrowWord& w) {
  if (w.labeled()) return w;
  std::vector<int> labels;
  for (std::size_t p = 1; p <= w.vertex_count(); ++p) labels.push_back(static_cast<int>(p));
  return ArrowWord(w.letters, labels);
}

}  // namespace

std::vector<Falsification> verify_word(const ArrowWord& input) {
  std::vector<Falsification> out;
  const ArrowWord w = numbered(input);
  const std::string name = render(w);
  auto fail = [&](const char* property, std::string detail) {
    out.push_back({property, name, std::move(detail)});
  };

  SnakeGraph g = build_snake(w);
  if (!w.empty()) {
    Sign sign = w.letters[0] == Letter::Direct ? Sign::Plus : Sign::Minus;
    if (recover_word(g, sign) != w) fail("word-recovery", render(recover_word(g, sign)));
  }

  StringModule m(w);
  MatchingLattice ml = matching_lattice(g);
  SubmoduleLattice sl = submodule_lattice(m);
  std::set<Support> seen;
  for (const PerfectMatching& p : ml.nodes) {
    CanonicalSubmodule n = matching_to_submodule(g, p);
    if (!is_submodule(w, n.support)) {
      fail("matching-gives-submodule", "support is not closed");
      continue;
    }
    if (submodule_to_matching(g, n.support) != p)
      fail("matching-submodule-inverse", "matching not recovered from its support");
    seen.insert(n.support);
  }
  if (seen != std::set<Support>(sl.nodes.begin(), sl.nodes.end()))
    fail("matching-submodule-inverse", "supports differ from the submodule list");

  if (!labeled_isomorphic(ml.lattice, sl.lattice)) fail("lattice-correspondence", "no labeled isomorphism");
  if (!ml.lattice.is_graded()) fail("graded-lattice", "cover ranks are uneven");
  if (auto bad = distributivity_violation(ml.lattice))
    fail("distributivity", "triple " + std::to_string(bad->x) + "," + std::to_string(bad->y) + "," +
                               std::to_string(bad->z));
  Poset ji = join_irreducibles(sl.lattice);
  if (!labeled_isomorphic(order_ideals(ji), sl.lattice)) fail("birkhoff", "ideal lattice differs");
  if (!same_labeled_poset(join_irreducible_poset_from_string(m), ji))
    fail("join-irreducible-poset", "string poset differs from the lattice poset");

  std::map<DimensionVector, std::size_t> census;
  for (const Support& s : sl.nodes) ++census[dimension_vector(w, s)];
  for (const auto& [e, c] : census)
    if (count_submodules_by_matchings(g, e) != c) fail("submodule-count", "matching count differs");

  ThreeWayReport r = verify_three_way(m);
  if (!r.chain_products_agree) fail("chain-product-invariance", "maximal chains disagree");
  if (!r.matchings_vs_submodules) fail("three-way-isomorphism", "matchings vs submodules");
  if (!r.submodules_vs_interval) fail("three-way-isomorphism", "submodules vs weak interval");
  if (r.chain_products_agree && r.maximal_chains != r.reduced_words)
    fail("reduced-words-are-chains", std::to_string(r.maximal_chains) + " chains, " +
                                         std::to_string(r.reduced_words) + " reduced words");
  if (r.chain_products_agree && !uses_each_generator_once(r.coxeter.witness))
    fail("coxeter-element", "witness repeats a generator");
  return out;
}

std::vector<Falsification> verify_sweep(std::size_t max_length, std::size_t* words_checked) {
  std::vector<Falsification> out;
  std::size_t count = 0;
  for (std::size_t n = 0; n <= max_length; ++n)
    for (const ArrowWord& w : all_words(n)) {
      ++count;
      auto f = verify_word(w);
      out.insert(out.end(), f.begin(), f.end());
    }
  if (words_checked) *words_checked = count;
  return out;
}

}  // namespace snakelat
