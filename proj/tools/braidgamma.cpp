// braidgamma: map braids, trace choreographies, check relations, render frames.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "braidgamma/braids.hpp"
#include "braidgamma/choreo_io.hpp"
#include "braidgamma/errors.hpp"
#include "braidgamma/geom2d.hpp"
#include "braidgamma/geom3d.hpp"
#include "braidgamma/homs.hpp"
#include "braidgamma/svg.hpp"
#include "braidgamma/text.hpp"

using namespace braidgamma;
using io::Json;

namespace {

struct Globals {
  int n = 4;
  std::string target = "gamma";
  int r = 1;
  std::string mode = "literal";
  std::string format = "text";
  std::string out;
  std::string assembly = "swapped";
};

int max_n() {
  if (const char* env = std::getenv("BRAIDGAMMA_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ValidationFailed(std::string("BRAIDGAMMA_MAX_N is not an integer: ") + env);
    }
  }
  return 10;
}

HomConfig make_config(const Globals& g) {
  HomConfig cfg;
  cfg.n = g.n;
  if (g.n > max_n()) {
    throw ValidationFailed("n = " + std::to_string(g.n) + " exceeds the cap " + std::to_string(max_n()) +
                           " (set BRAIDGAMMA_MAX_N)");
  }
  cfg.target = g.target == "g" ? Target::g : g.target == "gammar" ? Target::gamma_r : Target::gamma;
  cfg.r = g.r;
  cfg.mode = g.mode == "traced" ? FormulaMode::traced : FormulaMode::literal;
  cfg.assembly = g.assembly == "doubled" ? Assembly::doubled : Assembly::swapped;
  cfg.validate();
  return cfg;
}

std::string read_text_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ValidationFailed("cannot open " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw ValidationFailed("cannot write " + g.out);
  f << text;
}

Json invariant_json(const InvariantClass& c) {
  return Json{{"group", to_string(c.tag())}, {"r", c.r()}, {"zero", c.is_zero()}, {"support", c.support_labels()}};
}

std::string invariant_text(const InvariantClass& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& l : c.support_labels()) s += (s.empty() ? "" : " + ") + l;
  return s;
}

std::string word_or_empty(const std::string& w) { return w.empty() ? "(empty)" : w; }

int cmd_map(const Globals& g, const std::string& braid_arg, bool compare) {
  const HomConfig cfg = make_config(g);
  const BraidWord w = parse_braid(read_text_arg(braid_arg), cfg.n);
  const AnyWord raw = map_braid(cfg, w, false);
  const AnyWord reduced = map_braid(cfg, w, true);
  const InvariantClass inv = invariant(reduced, cfg.n);

  std::optional<bool> agree;
  std::string other_word;
  if (compare) {
    HomConfig alt = cfg;
    alt.mode = cfg.mode == FormulaMode::literal ? FormulaMode::traced : FormulaMode::literal;
    const AnyWord other = map_braid(alt, w, true);
    other_word = to_string(other);
    agree = invariant(other, cfg.n) == inv;
  }

  if (g.format == "json") {
    Json j{{"braid", to_string(w)},   {"n", cfg.n},
           {"target", to_string(cfg.target)}, {"r", cfg.r},
           {"mode", to_string(cfg.mode)},     {"assembly", to_string(cfg.assembly)},
           {"word", to_string(raw)},          {"reduced", to_string(reduced)},
           {"invariant", invariant_json(inv)}};
    if (agree) {
      j["compare"] = Json{{"other_mode_reduced", other_word}, {"invariants_agree", *agree}};
    }
    emit(g, j.dump(2) + "\n");
  } else {
    std::string s = "word: " + word_or_empty(to_string(raw)) + "\nreduced: " + word_or_empty(to_string(reduced)) +
                    "\ninvariant: " + invariant_text(inv) + "\n";
    if (agree) {
      s += "other mode: " + word_or_empty(other_word) + "\ninvariants agree: " + (*agree ? "yes" : "no") + "\n";
    }
    emit(g, s);
  }
  return 0;
}

int cmd_trace(const Globals& g, const std::string& path, bool flip) {
  const auto ch = io::load_choreography(path);
  if (const auto* c3 = std::get_if<geom3d::Choreo3>(&ch)) {
    geom3d::Trace3Options opts;
    opts.flip_orientation = flip;
    const auto events = geom3d::trace3(*c3, opts);
    const GammaWord w = geom3d::g_word(events);
    const InvariantClass inv = invariant(w, c3->n);
    if (g.format == "json") {
      Json evs = Json::array();
      for (const auto& e : events) evs.push_back(io::to_json(e));
      emit(g, Json{{"events", evs}, {"word", to_string(w)}, {"invariant", invariant_json(inv)}}.dump(2) + "\n");
    } else {
      std::string s;
      for (const auto& e : events) {
        s += "t=" + to_string(e.global_time()) + " " + to_string(e.subset) +
             (e.quad ? " " + to_string(*e.quad) : std::string(" nonconvex")) + (e.one_sided ? "" : " two-sided") +
             (e.special ? " special" : "") + "\n";
      }
      s += "word: " + word_or_empty(to_string(w)) + "\ninvariant: " + invariant_text(inv) + "\n";
      emit(g, s);
    }
    return 0;
  }

  const auto& c2 = std::get<geom2d::Choreography>(ch);
  HomConfig cfg = make_config(Globals{c2.n, g.target, g.r, g.mode, g.format, g.out, g.assembly});
  const auto result = geom2d::trace(c2);
  AnyWord w;
  switch (cfg.target) {
    case Target::g: w = geom2d::events_to_g_word(result.events); break;
    case Target::gamma: w = geom2d::events_to_gamma_word(result.events); break;
    case Target::gamma_r: w = geom2d::events_to_multi_word(result.events, cfg.r); break;
  }
  const InvariantClass inv = invariant(w, c2.n);
  for (const auto& warning : result.warnings) std::cerr << "warning: " << warning << "\n";
  if (g.format == "json") {
    Json evs = Json::array();
    for (const auto& e : result.events) evs.push_back(io::to_json(e));
    emit(g, Json{{"events", evs},
                 {"warnings", result.warnings},
                 {"word", to_string(w)},
                 {"invariant", invariant_json(inv)}}
                    .dump(2) +
                "\n");
  } else {
    std::string s;
    for (const auto& e : result.events) {
      const auto& t = e.time;
      s += "segment " + std::to_string(t.segment) + " in [" + to_string(t.isolating.lo) + ", " +
           to_string(t.isolating.hi) + "] " + to_string(e.quad) + " inside=" + std::to_string(e.inside) + "\n";
    }
    s += "word: " + word_or_empty(to_string(w)) + "\ninvariant: " + invariant_text(inv) + "\n";
    emit(g, s);
  }
  return 0;
}

int cmd_check(const Globals& g, const std::string& four_term) {
  const HomConfig cfg = make_config(g);
  std::vector<FourTermVariant> variants;
  if (four_term == "printed" || four_term == "both") variants.push_back(FourTermVariant::printed);
  if (four_term == "inverted" || four_term == "both") variants.push_back(FourTermVariant::inverted);

  bool all_pass = true;
  Json report = Json::array();
  std::string text;
  for (auto variant : variants) {
    const std::string vname = variant == FourTermVariant::printed ? "printed" : "inverted";
    const auto checks = check_relations(cfg, variant);
    std::size_t passed = 0;
    Json items = Json::array();
    for (const auto& c : checks) {
      passed += c.pass ? 1 : 0;
      all_pass = all_pass && c.pass;
      items.push_back({{"index", c.index},
                       {"family", to_string(c.instance.family)},
                       {"indices", c.instance.indices},
                       {"lhs", to_string(c.instance.lhs)},
                       {"rhs", to_string(c.instance.rhs)},
                       {"lhs_image", c.lhs_image},
                       {"rhs_image", c.rhs_image},
                       {"pass", c.pass}});
      if (!c.pass) {
        text += "FAIL [" + vname + "] #" + std::to_string(c.index) + " family " + to_string(c.instance.family) + ": " +
                to_string(c.instance.lhs) + " = " + to_string(c.instance.rhs) + "\n";
      }
    }
    text += vname + " four-term: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " instances pass\n";
    report.push_back({{"four_term", vname}, {"passed", passed}, {"total", checks.size()}, {"instances", items}});
  }
  if (g.format == "json") {
    emit(g, Json{{"n", cfg.n},
                 {"target", to_string(cfg.target)},
                 {"r", cfg.r},
                 {"mode", to_string(cfg.mode)},
                 {"assembly", to_string(cfg.assembly)},
                 {"all_pass", all_pass},
                 {"runs", report}}
                    .dump(2) +
                "\n");
  } else {
    emit(g, text);
  }
  return all_pass ? 0 : 1;
}

int cmd_invariant(const Globals& g, const std::string& word_arg, const std::string& other_arg) {
  const HomConfig cfg = make_config(Globals{g.n, "gamma", 1, g.mode, g.format, g.out, g.assembly});
  const AnyWord w = parse_word(read_text_arg(word_arg), g.r > 1 ? g.r : 0);
  const InvariantClass inv = invariant(w, cfg.n);
  std::optional<bool> equal;
  if (!other_arg.empty()) {
    const AnyWord other = parse_word(read_text_arg(other_arg), g.r > 1 ? g.r : 0);
    equal = invariant_equal(inv, invariant(other, cfg.n));
  }
  if (g.format == "json") {
    Json j{{"word", to_string(w)}, {"invariant", invariant_json(inv)}};
    if (equal) j["equal"] = *equal;
    emit(g, j.dump(2) + "\n");
  } else {
    std::string s = "invariant: " + invariant_text(inv) + "\n";
    if (equal) s += std::string("equal: ") + (*equal ? "yes" : "no") + "\n";
    emit(g, s);
  }
  return 0;
}

int cmd_render(const Globals& g, const std::string& path, const std::string& t_text, const std::string& circle_text) {
  const auto ch = io::load_choreography(path);
  const Rat t = parse_rat(t_text);
  std::vector<geom2d::Pt2> pts;
  if (const auto* c3 = std::get_if<geom3d::Choreo3>(&ch)) {
    for (const auto& p : geom3d::positions_at(*c3, t)) pts.push_back({p.x, p.y});
  } else {
    pts = geom2d::positions_at(std::get<geom2d::Choreography>(ch), t);
  }
  svg::FrameOptions opts;
  opts.caption = "t = " + to_string(t);
  if (!circle_text.empty()) {
    std::array<int, 3> triple{};
    char c1 = 0, c2 = 0;
    std::istringstream in(circle_text);
    if (!(in >> triple[0] >> c1 >> triple[1] >> c2 >> triple[2]) || c1 != ',' || c2 != ',') {
      throw SyntaxError("--circle expects j,p,q", 0);
    }
    opts.circle = triple;
  }
  emit(g, svg::render_frame(pts, opts));
  return 0;
}

int cmd_canon(const Globals& g, const std::string& text) {
  const std::string input = read_text_arg(text);
  std::string printed;
  if (input.find('b') != std::string::npos) {
    printed = to_string(parse_braid(input, g.n));
  } else {
    printed = to_string(parse_word(input, g.r > 1 ? g.r : 0));
  }
  emit(g, (g.format == "json" ? Json{{"canonical", printed}}.dump() : printed) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure braid homomorphisms into Gamma_n^4 and exact event tracing"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-n", g.n, "number of strands")->check(CLI::PositiveNumber);
  app.add_option("--target", g.target, "target group")->check(CLI::IsMember({"g", "gamma", "gammar"}));
  app.add_option("--r", g.r, "number of factors for gammar")->check(CLI::PositiveNumber);
  app.add_option("--mode", g.mode, "formula mode")->check(CLI::IsMember({"literal", "traced"}));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--assembly", g.assembly, "generator image assembly")->check(CLI::IsMember({"swapped", "doubled"}));

  std::string braid_arg, path, word_arg, other_arg, four_term = "printed", t_text = "0", circle_text, canon_arg;
  bool compare = false, flip = false;

  auto* map = app.add_subcommand("map", "image of a braid word (text, or @file)");
  map->add_option("braid", braid_arg, "braid word such as \"b(1,3) b(2,4)^-1\"")->required();
  map->add_flag("--compare", compare, "also compute the other formula mode and compare invariants");

  auto* trace = app.add_subcommand("trace", "trace a choreography JSON file");
  trace->add_option("choreography", path)->required()->check(CLI::ExistingFile);
  trace->add_flag("--flip-orientation", flip, "3D only: read quadrilaterals clockwise");

  auto* check = app.add_subcommand("check", "verify every relation instance at the invariant level");
  check->add_option("--four-term", four_term, "which four-term relation to check")
      ->check(CLI::IsMember({"printed", "inverted", "both"}));

  auto* inv = app.add_subcommand("invariant", "invariant class of a G, Gamma or Gamma^r word");
  inv->add_option("word", word_arg)->required();
  inv->add_option("other", other_arg, "second word to compare against");

  auto* render = app.add_subcommand("render", "SVG frame of a choreography");
  render->add_option("choreography", path)->required()->check(CLI::ExistingFile);
  render->add_option("--t", t_text, "rational time");
  render->add_option("--circle", circle_text, "overlay the circle through points j,p,q");

  auto* canon = app.add_subcommand("canon", "print a braid or word in canonical form");
  canon->add_option("text", canon_arg)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*map) return cmd_map(g, braid_arg, compare);
    if (*trace) return cmd_trace(g, path, flip);
    if (*check) return cmd_check(g, four_term);
    if (*inv) return cmd_invariant(g, word_arg, other_arg);
    if (*render) return cmd_render(g, path, t_text, circle_text);
    if (*canon) return cmd_canon(g, canon_arg);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at offset " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
