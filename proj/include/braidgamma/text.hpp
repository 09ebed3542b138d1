#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "braidgamma/words.hpp"

namespace braidgamma {

/// Letters are read as `a{i,j,k,l}`, `d(i,j,k,l)` and `[s]d(i,j,k,l)`,
/// separated by optional whitespace. Γ-letters are canonicalised on read.
/// Errors carry the byte offset of the offending character.
using AnyWord = std::variant<GWord, GammaWord, MultiWord>;

/// Kind is inferred from the letters; mixing kinds is a SyntaxError. A word
/// with no letters parses as an empty GammaWord. For slot-labelled words r is
/// `r_hint` when positive, otherwise one more than the largest slot.
AnyWord parse_word(std::string_view text, int r_hint = 0);

GWord parse_g_word(std::string_view text);
GammaWord parse_gamma_word(std::string_view text);
MultiWord parse_multi_word(std::string_view text, int r);

std::string to_string(const AnyWord& w);

/// Collapses whitespace runs to one space and trims both ends.
std::string normalize_whitespace(std::string_view text);

}  // namespace braidgamma
