#pragma once

#include <string>

#include "scg/notation.hpp"
#include "scg/poset.hpp"

inline const std::string kSourceDir = SCG_SOURCE_DIR;

inline scg::Game parse(scg::SolverContext& ctx, const std::string& s, const char* poset = "P4") {
  return scg::parse_game(ctx, s, scg::builtin(poset));
}
