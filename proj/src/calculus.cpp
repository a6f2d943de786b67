#include "snakelat/calculus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace snakelat {

namespace {

constexpr Letter D = Letter::Direct;
constexpr Letter I = Letter::Inverse;

// First kept vertex, or nothing when the whole word is consumed.
std::optional<std::size_t> prefix_cut(const ArrowWord& w, Letter run) {
  std::size_t j = 0;
  while (j < w.length() && w.letters[j] == run) ++j;
  if (j == w.length()) return std::nullopt;
  return j + 2;
}

// Last kept vertex, or nothing when the whole word is consumed.
std::optional<std::size_t> suffix_cut(const ArrowWord& w, Letter run) {
  std::size_t j = w.length();
  while (j > 0 && w.letters[j - 1] == run) --j;
  if (j == 0) return std::nullopt;
  return j;
}

bool contains(const Support& s, std::size_t p) { return std::binary_search(s.begin(), s.end(), p); }

void add_dimensions(DimensionVector& into, const DimensionVector& d) {
  for (auto [k, v] : d) into[k] += v;
}

}  // namespace

std::optional<ArrowWord> drop_prefix_run(const ArrowWord& w, Letter run) {
  auto first = prefix_cut(w, run);
  if (!first) return std::nullopt;
  return subword(w, *first, w.vertex_count());
}

std::optional<ArrowWord> drop_suffix_run(const ArrowWord& w, Letter run) {
  auto last = suffix_cut(w, run);
  if (!last) return std::nullopt;
  return subword(w, 1, *last);
}

Crossing make_crossing(const ArrowWord& w1, const ArrowWord& w2, bool w2_inverted, std::size_t s,
                       std::size_t t, std::size_t s2, std::size_t t2) {
  const std::size_t n1 = w1.vertex_count(), n2 = w2.vertex_count();
  if (s == 0 || s > t || t > n1 || s2 == 0 || s2 > t2 || t2 > n2 || t - s != t2 - s2)
    throw std::invalid_argument("overlap positions out of range");
  for (std::size_t k = 0; k <= t - s; ++k) {
    if (w1.label(s + k) != w2.label(s2 + k))
      throw std::invalid_argument("overlap labels differ");
    if (k < t - s && w1.letter(s + k) != w2.letter(s2 + k))
      throw std::invalid_argument("overlap letters differ");
  }
  if (s > 1 && w1.letter(s - 1) != D) throw std::invalid_argument("a must be direct");
  if (t < n1 && w1.letter(t) != I) throw std::invalid_argument("b must be inverse");
  if (s2 > 1 && w2.letter(s2 - 1) != I) throw std::invalid_argument("c must be inverse");
  if (t2 < n2 && w2.letter(t2) != D) throw std::invalid_argument("d must be direct");
  if ((s == 1 && s2 == 1) || (t == n1 && t2 == n2))
    throw std::invalid_argument("overlap reaches the same end of both words");
  return Crossing{w1, w2, w2_inverted, s, t, s2, t2};
}

std::vector<Crossing> find_crossings(const ArrowWord& w1, const ArrowWord& w2) {
  if (!w1.labeled() || !w2.labeled())
    throw std::invalid_argument("crossings need labeled words");
  std::vector<Crossing> out;
  ArrowWord w2i = inverse(w2);
  for (bool inverted : {false, true}) {
    if (inverted && w2i == w2) break;
    const ArrowWord& v = inverted ? w2i : w2;
    for (std::size_t s = 1; s <= w1.vertex_count(); ++s)
      for (std::size_t s2 = 1; s2 <= v.vertex_count(); ++s2) {
        std::size_t t = s, t2 = s2;
        if (w1.label(s) != v.label(s2)) continue;
        while (t < w1.vertex_count() && t2 < v.vertex_count() &&
               w1.letter(t) == v.letter(t2) && w1.label(t + 1) == v.label(t2 + 1)) {
          ++t;
          ++t2;
        }
        // Only the maximal common stretch can satisfy the pattern, since a and c differ.
        try {
          out.push_back(make_crossing(w1, v, inverted, s, t, s2, t2));
        } catch (const std::invalid_argument&) {
        }
      }
  }
  return out;
}

Grafting make_grafting(const ArrowWord& w1, std::size_t position, Letter e, const ArrowWord& w2) {
  if (position == 0 || position > w1.vertex_count())
    throw std::invalid_argument("grafting position out of range");
  if (w1.labeled() != w2.labeled())
    throw std::invalid_argument("cannot graft labeled and unlabeled words");
  Grafting g{w1, position, std::nullopt, e, w2};
  if (position < w1.vertex_count()) {
    g.a = w1.letter(position);
    if (e != flip(*g.a)) throw std::invalid_argument("connector must oppose the letter at the graft");
  }
  return g;
}

Resolution resolve_crossing(const Crossing& x) {
  const ArrowWord& w1 = x.w1;
  const ArrowWord& w2 = x.w2;
  const std::size_t n1 = w1.vertex_count(), n2 = w2.vertex_count();
  std::optional<ArrowWord> u1, v1, u2, v2;
  if (x.s > 1) u1 = subword(w1, 1, x.s - 1);
  if (x.t < n1) v1 = subword(w1, x.t + 1, n1);
  if (x.s2 > 1) u2 = subword(w2, 1, x.s2 - 1);
  if (x.t2 < n2) v2 = subword(w2, x.t2 + 1, n2);

  Resolution r;
  r.w3 = v2 ? join(subword(w1, 1, x.t), D, *v2) : subword(w1, 1, x.t);
  r.w4 = v1 ? join(subword(w2, 1, x.t2), I, *v1) : subword(w2, 1, x.t2);
  if (u1 && u2)
    r.w5 = join(*u1, I, inverse(*u2));
  else if (u2)
    r.w5 = drop_suffix_run(*u2, D);
  else if (u1)
    r.w5 = drop_suffix_run(*u1, I);
  if (v1 && v2)
    r.w6 = join(inverse(*v1), I, *v2);
  else if (v2)
    r.w6 = drop_prefix_run(*v2, I);
  else if (v1)
    r.w6 = drop_prefix_run(*v1, D);
  return r;
}

Resolution resolve_grafting(const Grafting& g) {
  const std::size_t n1 = g.w1.vertex_count();
  ArrowWord u1 = subword(g.w1, 1, g.position);
  Resolution r;
  r.w3 = join(u1, g.e, g.w2);
  // With no letter at the graft the connector's opposite plays its role.
  Letter a = g.a ? *g.a : flip(g.e);
  r.w5 = drop_suffix_run(u1, a);
  if (g.a) {
    ArrowWord v1 = subword(g.w1, g.position + 1, n1);
    r.w4 = drop_prefix_run(v1, a);
    r.w6 = join(inverse(v1), a, g.w2);
  } else {
    r.w6 = drop_prefix_run(g.w2, a);
  }
  return r;
}

SkeinCase::SkeinCase(Crossing x) : source_(std::move(x)) { build(); }
SkeinCase::SkeinCase(Grafting g) : source_(std::move(g)) { build(); }

void SkeinCase::build() {
  Resolution r;
  if (is_crossing()) {
    words_[0] = crossing().w1;
    words_[1] = crossing().w2;
    r = resolve_crossing(crossing());
  } else {
    words_[0] = grafting().w1;
    words_[1] = grafting().w2;
    r = resolve_grafting(grafting());
  }
  words_[2] = r.w3;
  words_[3] = r.w4;
  words_[4] = r.w5;
  words_[5] = r.w6;
  for (std::size_t i = 0; i < 6; ++i)
    if (words_[i]) graphs_[i] = build_snake(*words_[i]);
}

std::vector<PerfectMatching> SkeinCase::matchings(int i) const {
  const auto& g = graph(i);
  if (!g) return {PerfectMatching{}};
  return enumerate_matchings(*g);
}

namespace {

SupportImage phi_crossing(const SkeinCase& c, const Support& s1, const Support& s2) {
  const Crossing& x = c.crossing();
  const std::size_t n1 = x.w1.vertex_count(), n2 = x.w2.vertex_count();
  const ArrowWord& w3 = *c.word(3);
  const ArrowWord& w4 = *c.word(4);

  // Cut after vertex h of w1 (h2 of w2) anywhere from just before the overlap to its end.
  for (std::size_t h = x.s - 1; h <= x.t; ++h) {
    std::size_t h2 = h - x.s + x.s2;
    Support a, b;
    for (std::size_t p : s1)
      if (p <= h) a.push_back(p);
    for (std::size_t p : s2)
      if (p > h2) a.push_back(p - x.s2 + x.s);
    for (std::size_t p : s2)
      if (p <= h2) b.push_back(p);
    for (std::size_t p : s1)
      if (p > h) b.push_back(p - x.s + x.s2);
    if (is_submodule(w3, a) && is_submodule(w4, b)) return {Route::ThreeFour, a, b};
  }

  SupportImage img{Route::FiveSix, {}, {}};
  if (const auto& w5 = c.word(5)) {
    const std::size_t len = w5->vertex_count();
    if (x.s > 1 && x.s2 > 1) {
      for (std::size_t p : s1)
        if (p < x.s) img.first.push_back(p);
      for (std::size_t p : s2)
        if (p < x.s2) img.first.push_back(x.s + (x.s2 - 1 - p));
    } else {
      for (std::size_t p : x.s == 1 ? s2 : s1)
        if (p <= len) img.first.push_back(p);
    }
  }
  if (const auto& w6 = c.word(6)) {
    const std::size_t len = w6->vertex_count();
    if (x.t < n1 && x.t2 < n2) {
      for (std::size_t p : s1)
        if (p > x.t) img.second.push_back(n1 + 1 - p);
      for (std::size_t p : s2)
        if (p > x.t2) img.second.push_back((n1 - x.t) + (p - x.t2));
    } else {
      std::size_t n = x.t == n1 ? n2 : n1;
      for (std::size_t p : x.t == n1 ? s2 : s1)
        if (p > n - len) img.second.push_back(p - (n - len));
    }
  }
  std::sort(img.first.begin(), img.first.end());
  std::sort(img.second.begin(), img.second.end());
  return img;
}

SupportImage phi_grafting(const SkeinCase& c, const Support& s1, const Support& s2) {
  const Grafting& g = c.grafting();
  const std::size_t n1 = g.w1.vertex_count(), x = g.position;

  Support a;
  for (std::size_t p : s1)
    if (p <= x) a.push_back(p);
  for (std::size_t p : s2) a.push_back(p + x);
  bool fits = is_submodule(*c.word(3), a);
  // The vertex after the graft must sit on the side that w4 keeps.
  if (g.a) fits = fits && (contains(s1, x + 1) == (*g.a == D));
  if (fits) {
    Support b;
    if (const auto& w4 = c.word(4)) {
      std::size_t offset = n1 - w4->vertex_count();
      for (std::size_t p : s1)
        if (p > offset) b.push_back(p - offset);
    }
    return {Route::ThreeFour, a, b};
  }

  SupportImage img{Route::FiveSix, {}, {}};
  if (const auto& w5 = c.word(5))
    for (std::size_t p : s1)
      if (p <= w5->vertex_count()) img.first.push_back(p);
  if (const auto& w6 = c.word(6)) {
    if (g.a) {
      for (std::size_t p : s1)
        if (p > x) img.second.push_back(n1 + 1 - p);
      for (std::size_t p : s2) img.second.push_back(n1 - x + p);
    } else {
      std::size_t offset = g.w2.vertex_count() - w6->vertex_count();
      for (std::size_t p : s2)
        if (p > offset) img.second.push_back(p - offset);
    }
  }
  std::sort(img.second.begin(), img.second.end());
  return img;
}

Support support_of(const std::optional<SnakeGraph>& g, const PerfectMatching& p) {
  if (!g) {
    if (!p.edges.empty()) throw std::invalid_argument("an empty summand has only the empty matching");
    return {};
  }
  return matching_to_submodule(*g, p).support;
}

PerfectMatching matching_of(const std::optional<SnakeGraph>& g, const Support& s) {
  if (!g) return {};
  return submodule_to_matching(*g, s);
}

DimensionVector dimension_of(const std::optional<SnakeGraph>& g, const PerfectMatching& p) {
  if (!g) return {};
  return matching_to_submodule(*g, p).dimension;
}

}  // namespace

SupportImage phi_supports(const SkeinCase& c, const Support& s1, const Support& s2) {
  return c.is_crossing() ? phi_crossing(c, s1, s2) : phi_grafting(c, s1, s2);
}

PhiImage phi(const SkeinCase& c, const PerfectMatching& p1, const PerfectMatching& p2) {
  SupportImage img = phi_supports(c, support_of(c.graph(1), p1), support_of(c.graph(2), p2));
  int i = img.route == Route::ThreeFour ? 3 : 5;
  return {img.route, matching_of(c.graph(i), img.first), matching_of(c.graph(i + 1), img.second)};
}

ExtensionCheck extension_dimension_check(const SkeinCase& c, const PerfectMatching& p1,
                                         const PerfectMatching& p2) {
  ExtensionCheck r;
  if (!c.is_crossing()) return r;
  PhiImage img = phi(c, p1, p2);
  if (img.route != Route::ThreeFour) return r;
  r.applicable = true;
  add_dimensions(r.lhs, dimension_of(c.graph(1), p1));
  add_dimensions(r.lhs, dimension_of(c.graph(2), p2));
  add_dimensions(r.rhs, dimension_of(c.graph(3), img.first));
  add_dimensions(r.rhs, dimension_of(c.graph(4), img.second));
  r.ok = r.lhs == r.rhs;
  return r;
}

PhiReport verify_phi(const SkeinCase& c) {
  PhiReport r;
  std::array<std::vector<PerfectMatching>, 6> m;
  for (int i = 1; i <= 6; ++i) {
    m[i - 1] = c.matchings(i);
    r.counts[i - 1] = m[i - 1].size();
  }
  r.counting_identity =
      r.counts[0] * r.counts[1] == r.counts[2] * r.counts[3] + r.counts[4] * r.counts[5];

  auto valid = [&](int i, const PerfectMatching& p) {
    const auto& g = c.graph(i);
    return g ? is_perfect_matching(*g, p.edges) : p.edges.empty();
  };
  auto fail = [&](std::string what, std::size_t i, std::size_t j) {
    if (r.failures.size() < 20)
      r.failures.push_back(what + " for pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  };

  std::set<PhiImage> seen;
  for (std::size_t i = 0; i < m[0].size(); ++i)
    for (std::size_t j = 0; j < m[1].size(); ++j) {
      ++r.pairs;
      PhiImage img;
      try {
        img = phi(c, m[0][i], m[1][j]);
      } catch (const std::exception& ex) {
        fail(std::string("phi raised: ") + ex.what(), i, j);
        continue;
      }
      int k = img.route == Route::ThreeFour ? 3 : 5;
      (img.route == Route::ThreeFour ? r.routed_34 : r.routed_56)++;
      if (!valid(k, img.first) || !valid(k + 1, img.second)) fail("invalid perfect matching", i, j);
      if (!seen.insert(img).second) fail("image repeated", i, j);
      if (c.is_crossing() && img.route == Route::ThreeFour) {
        ++r.extension_checks;
        if (!extension_dimension_check(c, m[0][i], m[1][j]).ok) fail("dimension vectors differ", i, j);
      }
    }
  return r;
}

}  // namespace snakelat
