#pragma once

#include <vector>

#include "scg/game.hpp"
#include "scg/setcolor.hpp"

namespace scg {

enum class Verification { brute_force, compositional, skipped };

const char* verification_name(Verification v) noexcept;

/// Which good option justified a gift horse at a node of the input.
struct GoodOptionUse {
  Game node;
  Side side;
  int index;
};

struct RealizationReport {
  Game input;
  SetColoringGame board;
  int carrier_size;
  int bound;
  Verification verified;
  std::vector<GoodOptionUse> good_option_used;
};

struct RealizeOptions {
  /// Boards up to this many cells are checked by exhaustive evaluation.
  int verify_cap = 14;
  /// When false the final check is skipped (the per-node model checks still run).
  bool verify = true;
  /// Also synthesize from the simplified form of each node and keep the smaller board.
  bool try_simplified = true;
};

/// (2^d - 1)(4 ceil(log2 b) + 7) for monotone games, + 10 for passable ones.
/// Throws not_passable.
int size_bound(SolverContext& ctx, Game g);

/// Synthesizes a monotone set coloring board whose value is equivalent to g.
/// Throws not_passable, or verification_failed on an internal inconsistency.
RealizationReport realize(SolverContext& ctx, Game g, RealizeOptions opts = {});

/// equiv(eval(board), g). Throws carrier_too_large past the cap.
bool verify(SolverContext& ctx, const SetColoringGame& board, Game g, EvalOptions opts = {});

}  // namespace scg
