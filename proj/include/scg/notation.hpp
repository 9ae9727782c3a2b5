#pragma once

#include <string>
#include <string_view>

#include "scg/game.hpp"

namespace scg {

/// Parses the brace notation: game := atom | "{" list "|" list "}",
/// list := game ("," game)*. "top"/"bot" (or the symbols ⊤/⊥) name the
/// extrema; other atoms are looked up by element name. Throws
/// Errc::syntax_error (with the byte offset) or Errc::unknown_atom.
Game parse_game(SolverContext& ctx, std::string_view text, const PosetRef& poset);

/// Prints a game in the same notation. Options appear in id order.
std::string to_notation(const SolverContext& ctx, Game g, bool unicode = false);

}  // namespace scg
