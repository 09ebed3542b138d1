#include "braidgamma/homs.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidgamma/errors.hpp"
#include "braidgamma/geom2d.hpp"

namespace braidgamma {

namespace {

void require_pair(int n, StrandIndex i, StrandIndex j) {
  if (i < 1 || i >= j || j > n) {
    throw IndexOutOfRange("generator pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs 1 <= i < j <= " + std::to_string(n));
  }
}

void require_strands(const HomConfig& cfg, const BraidWord& w) {
  for (const auto& g : w.letters) require_pair(cfg.n, g.i, g.j);
}

void append_block(std::vector<LetterSpec>& out, int n, StrandIndex mover, StrandIndex pivot, StrandIndex range_j,
                  bool inverse) {
  auto block = block_specs(n, mover, pivot, range_j);
  std::erase_if(block, [n](const LetterSpec& s) { return !s.valid(n); });
  if (inverse) std::reverse(block.begin(), block.end());
  out.insert(out.end(), block.begin(), block.end());
}

std::vector<LetterSpec> assemble(int n, StrandIndex i, StrandIndex j, Assembly assembly) {
  std::vector<LetterSpec> out;
  for (StrandIndex k = i + 1; k <= j; ++k) append_block(out, n, i, k, k, false);
  if (assembly == Assembly::swapped) {
    append_block(out, n, j, i, j, false);
    for (StrandIndex k = j - 1; k > i; --k) append_block(out, n, k, i, k, true);
  } else {
    append_block(out, n, i, j, j, false);
    for (StrandIndex k = j - 1; k > i; --k) append_block(out, n, i, k, k, true);
  }
  return out;
}

// Repeats the generator image |exponent| times, reversed for negative exponents.
template <class Letter, class Make>
std::vector<Letter> substitute(const HomConfig& cfg, const BraidWord& w, Assembly assembly, Make make) {
  std::vector<Letter> out;
  for (const auto& g : w.letters) {
    std::vector<Letter> image;
    for (const auto& spec : assemble(cfg.n, g.i, g.j, assembly)) image.push_back(make(spec));
    if (g.exponent < 0) std::reverse(image.begin(), image.end());
    for (int k = 0; k < std::abs(g.exponent); ++k) out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

geom2d::TraceResult trace_braid(const HomConfig& cfg, const BraidWord& w) {
  return geom2d::trace(geom2d::braid_choreography(BraidWord{cfg.n, w.letters}));
}

}  // namespace

void HomConfig::validate() const {
  if (n < 1) throw ValidationFailed("n must be at least 1");
  if (r < 1) throw ValidationFailed("r must be at least 1");
  if (r != 1 && target != Target::gamma_r) throw ValidationFailed("r applies only to the gammar target");
}

std::string to_string(Target target) {
  switch (target) {
    case Target::g: return "g";
    case Target::gamma: return "gamma";
    case Target::gamma_r: return "gammar";
  }
  return "?";
}

std::string to_string(FormulaMode mode) { return mode == FormulaMode::literal ? "literal" : "traced"; }
std::string to_string(Assembly assembly) { return assembly == Assembly::swapped ? "swapped" : "doubled"; }

GroupTag group_tag(Target target) {
  switch (target) {
    case Target::g: return GroupTag::g;
    case Target::gamma: return GroupTag::gamma;
    case Target::gamma_r: return GroupTag::gamma_r;
  }
  return GroupTag::gamma;
}

bool LetterSpec::valid(int n) const {
  for (StrandIndex k : {p, q, mover, pivot}) {
    if (k < 1 || k > n) return false;
  }
  return all_distinct(p, q, mover, pivot);
}

GammaGen LetterSpec::gamma() const { return select_d(p, q, mover, pivot); }
GGen LetterSpec::g() const { return GGen(p, q, mover, pivot); }

std::vector<LetterSpec> block_specs(int n, StrandIndex mover, StrandIndex pivot, StrandIndex range_j) {
  const int J = range_j;
  std::vector<LetterSpec> out;
  for (int p = 1; p <= J - 1; ++p)
    for (int q = 1; q <= n - J; ++q) out.push_back({J - p, J + p, mover, pivot});
  for (int p = 2; p <= J - 1; ++p)
    for (int q = 1; q <= p - 1; ++q) out.push_back({p, q, mover, pivot});
  for (int p = 1; p <= n - J + 1; ++p)
    for (int q = 0; q <= n - p + 1; ++q) out.push_back({n - p, n - q, mover, pivot});
  return out;
}

GWord c_word(const HomConfig& cfg, StrandIndex i, StrandIndex j) {
  require_pair(cfg.n, i, j);
  GWord w;
  for (const auto& s : block_specs(cfg.n, i, j, j)) {
    if (s.valid(cfg.n)) w.letters.push_back(s.g());
  }
  return w;
}

GammaWord gamma_word(const HomConfig& cfg, StrandIndex i, StrandIndex j) {
  require_pair(cfg.n, i, j);
  GammaWord w;
  for (const auto& s : block_specs(cfg.n, i, j, j)) {
    if (s.valid(cfg.n)) w.letters.push_back(s.gamma());
  }
  return w;
}

std::vector<LetterSpec> generator_specs(const HomConfig& cfg, StrandIndex i, StrandIndex j) {
  require_pair(cfg.n, i, j);
  return assemble(cfg.n, i, j, cfg.target == Target::g ? Assembly::doubled : cfg.assembly);
}

GWord phi(const HomConfig& cfg, const BraidWord& w, bool reduce) {
  require_strands(cfg, w);
  GWord out;
  if (cfg.mode == FormulaMode::traced) {
    out = geom2d::events_to_g_word(trace_braid(cfg, w).events);
  } else {
    out.letters = substitute<GGen>(cfg, w, Assembly::doubled, [](const LetterSpec& s) { return s.g(); });
  }
  return reduce ? free_reduce(out) : out;
}

GammaWord f(const HomConfig& cfg, const BraidWord& w, bool reduce) {
  require_strands(cfg, w);
  GammaWord out;
  if (cfg.mode == FormulaMode::traced) {
    out = geom2d::events_to_gamma_word(trace_braid(cfg, w).events);
  } else {
    out.letters = substitute<GammaGen>(cfg, w, cfg.assembly, [](const LetterSpec& s) { return s.gamma(); });
  }
  return reduce ? free_reduce(out) : out;
}

MultiWord f_r(const HomConfig& cfg, const BraidWord& w, bool reduce) {
  if (cfg.r < 1) throw ValidationFailed("r must be at least 1");
  require_strands(cfg, w);
  MultiWord out{cfg.r, {}};
  if (cfg.mode == FormulaMode::traced) {
    out = geom2d::events_to_multi_word(trace_braid(cfg, w).events, cfg.r);
  } else {
    const int r = cfg.r;
    out.letters = substitute<SlotLetter>(cfg, w, cfg.assembly, [r](const LetterSpec& s) {
      return SlotLetter{delta_slot(s.p, s.q, s.mover, s.pivot, r), s.gamma()};
    });
  }
  return reduce ? free_reduce(out) : out;
}

AnyWord map_braid(const HomConfig& cfg, const BraidWord& w, bool reduce) {
  cfg.validate();
  switch (cfg.target) {
    case Target::g: return phi(cfg, w, reduce);
    case Target::gamma: return f(cfg, w, reduce);
    case Target::gamma_r: return f_r(cfg, w, reduce);
  }
  return GammaWord{};
}

InvariantClass invariant(const AnyWord& w, int n) {
  return std::visit([n](const auto& word) { return invariant(word, n); }, w);
}

int inside_count(StrandIndex j, StrandIndex p, StrandIndex q) {
  std::array<int, 3> v{j, p, q};
  std::sort(v.begin(), v.end());
  return v[0] + v[2] - v[1] - 2;
}

int delta_slot(StrandIndex p, StrandIndex q, StrandIndex i, StrandIndex j, int r) {
  if (r < 1) throw ValidationFailed("r must be at least 1");
  std::array<int, 3> v{p, q, j};
  std::sort(v.begin(), v.end());
  const bool shifted = i < v[0] || (v[1] < i && i < v[2]);
  return (inside_count(j, p, q) + (shifted ? 1 : 0)) % r;
}

std::vector<RelationCheck> check_relations(const HomConfig& cfg, FourTermVariant variant) {
  cfg.validate();
  std::vector<RelationCheck> out;
  const auto instances = relation_instances(cfg.n, variant);
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& inst = instances[k];
    const AnyWord lhs = map_braid(cfg, inst.lhs);
    const AnyWord rhs = map_braid(cfg, inst.rhs);
    const bool pass = invariant_equal(invariant(lhs, cfg.n), invariant(rhs, cfg.n));
    out.push_back({k, inst, to_string(lhs), to_string(rhs), pass});
  }
  return out;
}

}  // namespace braidgamma
