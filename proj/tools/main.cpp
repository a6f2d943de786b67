#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"

using namespace snakelat;
using report::ordered_json;

namespace {

enum class Format { Json, Dot, Text };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Letter parse_connector(const std::string& text) {
  if (text == ">") return Letter::Direct;
  if (text == "<") return Letter::Inverse;
  throw UsageError("connector must be '>' or '<', got '" + text + "'");
}

std::size_t parse_position(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0) throw UsageError("position must be a positive integer");
  return value;
}

std::vector<SkeinCase> skein_cases(const std::vector<std::string>& cross,
                                   const std::vector<std::string>& graft) {
  std::vector<SkeinCase> out;
  if (cross.empty() == graft.empty()) throw UsageError("give exactly one of --cross or --graft");
  if (!cross.empty()) {
    for (const Crossing& x : find_crossings(parse_word(cross[0]), parse_word(cross[1])))
      out.emplace_back(x);
  } else {
    out.emplace_back(make_grafting(parse_word(graft[0]), parse_position(graft[1]),
                                   parse_connector(graft[2]), parse_word(graft[3])));
  }
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> support_captions(const std::vector<Support>& nodes) {
  std::vector<std::string> out;
  for (const Support& s : nodes) out.push_back(report::support_text(s));
  return out;
}

int run_build(const ArrowWord& w, Format f) {
  SnakeGraph g = build_snake(w);
  if (f == Format::Dot) {
    std::cout << report::snake_dot(g);
  } else if (f == Format::Text) {
    ordered_json j = report::snake_json(w, g);
    std::cout << "word: " << render(w) << "\ntiles: " << g.tile_count() << "\ndirections:";
    for (const auto& d : j["directions"]) std::cout << " " << d.get<std::string>();
    std::cout << "\nweights:";
    for (int x : g.weights()) std::cout << " " << x;
    std::cout << "\n";
  } else {
    emit(report::snake_json(w, g));
  }
  return 0;
}

int run_matchings(const ArrowWord& w, Format f, bool as_lattice) {
  SnakeGraph g = build_snake(w);
  MatchingLattice ml = matching_lattice(g);
  if (f == Format::Dot) {
    std::vector<std::string> captions;
    for (const auto& p : ml.nodes) captions.push_back(report::support_text(matching_to_submodule(g, p).support));
    std::cout << report::lattice_dot(ml.lattice, captions);
  } else if (f == Format::Text) {
    std::cout << "word: " << render(w) << "\nmatchings: " << ml.nodes.size() << "\n";
    for (std::size_t v = 0; v < ml.nodes.size(); ++v)
      std::cout << "  " << v << ": rank " << ml.lattice.rank(v) << " encloses "
                << report::support_text(matching_to_submodule(g, ml.nodes[v]).support) << "\n";
    if (as_lattice)
      for (const Cover& c : ml.lattice.covers())
        std::cout << "  " << c.lo << " -> " << c.hi << " rotating tile " << c.label << "\n";
  } else {
    emit(as_lattice ? report::matching_lattice_json(w, g, ml) : report::matchings_json(w, g));
  }
  return 0;
}

int run_submodules(const ArrowWord& w, Format f) {
  SubmoduleLattice sl = submodule_lattice(StringModule(w));
  if (f == Format::Dot) {
    std::cout << report::lattice_dot(sl.lattice, support_captions(sl.nodes));
  } else if (f == Format::Text) {
    std::cout << "word: " << render(w) << "\nsubmodules: " << sl.nodes.size() << "\n";
    for (const Support& s : sl.nodes) std::cout << "  " << report::support_text(s) << "\n";
  } else {
    emit(report::submodules_json(w, sl));
  }
  return 0;
}

int run_bruhat(const ArrowWord& w, Format f) {
  ThreeWayReport r = verify_three_way(StringModule(w));
  if (!r.chain_products_agree) {
    emit({{"word", render(w)},
          {"verified", false},
          {"falsifications",
           report::falsifications_json({{"chain-product-invariance", render(w), "maximal chains disagree"}})}});
    return 2;
  }
  WeakInterval wi = weak_interval(r.coxeter.sigma);
  if (f == Format::Dot) {
    std::vector<std::string> captions;
    for (const Permutation& p : wi.nodes) captions.push_back(report::permutation_text(p));
    std::cout << report::lattice_dot(wi.lattice, captions);
  } else if (f == Format::Text) {
    std::cout << "word: " << render(w) << "\nnodes: " << r.matching_nodes << "/" << r.submodule_nodes
              << "/" << r.interval_nodes << "\nsigma: " << report::permutation_text(r.coxeter.sigma)
              << "\nwitness: " << report::permutation_text(r.coxeter.witness)
              << "\nreduced words: " << r.reduced_words << "\nmaximal chains: " << r.maximal_chains
              << "\nverified: " << (r.ok() ? "yes" : "no") << "\n";
  } else {
    emit(report::bruhat_json(w, r, wi));
  }
  return r.ok() ? 0 : 2;
}

int run_verify(const std::optional<std::string>& word, std::optional<std::size_t> sweep, Format f) {
  if (word.has_value() == sweep.has_value()) throw UsageError("give either a word or --sweep N");
  ordered_json j;
  std::vector<Falsification> found;
  if (word) {
    ArrowWord w = parse_word(*word);
    found = verify_word(w);
    j["word"] = render(w);
  } else {
    std::size_t count = 0;
    found = verify_sweep(*sweep, &count);
    j["sweep"] = *sweep;
    j["words"] = count;
  }
  j["ok"] = found.empty();
  j["falsifications"] = report::falsifications_json(found);
  if (f == Format::Text)
    std::cout << (found.empty() ? "ok" : "FAILED") << " (" << found.size() << " falsifications)\n";
  else
    emit(j);
  return found.empty() ? 0 : 2;
}

int run_resolve(const std::vector<SkeinCase>& cases, Format f) {
  ordered_json list = ordered_json::array();
  for (const SkeinCase& c : cases) list.push_back(report::resolution_json(c));
  if (f == Format::Text) {
    for (const auto& c : list)
      std::cout << c["w1"].get<std::string>() << " / " << c["w2"].get<std::string>() << ": w3="
                << c["w3"].get<std::string>() << " w4=" << c["w4"].get<std::string>()
                << " w5=" << c["w5"].get<std::string>() << " w6=" << c["w6"].get<std::string>() << "\n";
  } else {
    emit({{"cases", list}});
  }
  return 0;
}

int run_phi(const std::vector<SkeinCase>& cases, Format f) {
  ordered_json list = ordered_json::array();
  bool ok = true;
  for (const SkeinCase& c : cases) {
    PhiReport r = verify_phi(c);
    ok = ok && r.ok();
    list.push_back(report::phi_json(c, r));
  }
  if (f == Format::Text) {
    for (const auto& c : list)
      std::cout << c["w1"].get<std::string>() << " / " << c["w2"].get<std::string>() << ": "
                << c["pairs"].get<std::size_t>() << " pairs, " << c["routed_34"].get<std::size_t>()
                << " to (3,4), " << c["routed_56"].get<std::size_t>() << " to (5,6), "
                << (c["ok"].get<bool>() ? "bijective" : "FAILED") << "\n";
  } else {
    emit({{"cases", list}, {"ok", ok}});
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Snake graphs, string modules and weak Bruhat intervals"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();

  std::string word;
  auto with_word = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", word, "Word such as 1>2<3, >>< or %")->required();
    return sub;
  };
  CLI::App* build = with_word("build", "Snake graph of a word");
  CLI::App* matchings = with_word("matchings", "Perfect matchings of the snake graph");
  CLI::App* lattice = with_word("lattice", "Perfect matching lattice");
  CLI::App* submodules = with_word("submodules", "Canonical submodule lattice");
  CLI::App* bruhat = with_word("bruhat", "Coxeter element, reduced words and weak interval");

  std::string verify_word_arg;
  std::size_t sweep = 0;
  CLI::App* verify = app.add_subcommand("verify", "Check every correspondence on a word or a sweep");
  auto* verify_word_opt = verify->add_option("word", verify_word_arg, "Word to check");
  auto* sweep_opt = verify->add_option("--sweep", sweep, "Check all words up to this length");
  verify_word_opt->excludes(sweep_opt);

  std::vector<std::string> cross, graft;
  auto with_pair = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* c = sub->add_option("--cross", cross, "W1 W2")->expected(2);
    auto* g = sub->add_option("--graft", graft, "W1 POS E W2")->expected(4);
    c->excludes(g);
    return sub;
  };
  CLI::App* resolve = with_pair("resolve", "Resolution words of a crossing or grafting");
  CLI::App* phi_cmd = with_pair("phi", "Check the matching bijection exhaustively");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Format f = format == "dot" ? Format::Dot : format == "text" ? Format::Text : Format::Json;
  try {
    if (*build) return run_build(parse_word(word), f);
    if (*matchings) return run_matchings(parse_word(word), f, false);
    if (*lattice) return run_matchings(parse_word(word), f, true);
    if (*submodules) return run_submodules(parse_word(word), f);
    if (*bruhat) return run_bruhat(parse_word(word), f);
    if (f == Format::Dot) throw UsageError("dot output is not available for this command");
    if (*verify)
      return run_verify(*verify_word_opt ? std::optional<std::string>(verify_word_arg) : std::nullopt,
                        *sweep_opt ? std::optional<std::size_t>(sweep) : std::nullopt, f);
    if (*resolve) return run_resolve(skein_cases(cross, graft), f);
    if (*phi_cmd) return run_phi(skein_cases(cross, graft), f);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
