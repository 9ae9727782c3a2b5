#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "scg/game.hpp"

namespace scg {

enum class GadgetKind { left_force, right_force, choice, coupling };

const char* gadget_kind_name(GadgetKind k) noexcept;

/// G + H over the product poset. Moves may be made in either component;
/// two atomic games sum to the atom (a, b).
Game sum(SolverContext& ctx, Game g, Game h);

/// Applies f to every atomic position. Throws poset_mismatch unless
/// f's domain is the poset of g.
Game map(SolverContext& ctx, const MonotoneFn& f, Game g);

/// projector_f(X + G) for X over P3.
Game gadget_apply(SolverContext& ctx, Game x, Game g);
/// projector_g(X + G + H) for X over P4; g and h share a poset.
Game gadget_apply2(SolverContext& ctx, Game x, Game g, Game h);

/// Replaces atom a of a P3/P4 game by g (and b by h), top and bottom by
/// the extrema of the target poset.
Game substitute(SolverContext& ctx, Game x, Game g, std::optional<Game> h = std::nullopt);

Game force_left(SolverContext& ctx, Game g);   // <top | G>
Game force_right(SolverContext& ctx, Game g);  // <G | bot>
/// <<top|G>,<top|H> | <G|bot>,<H|bot>>
Game choice(SolverContext& ctx, Game g, Game h);
/// <G,<top|H> | <G|bot>,H>
Game coupling(SolverContext& ctx, Game g, Game h);

/// <top | <S | bot>>, left equivalent to S.
Game upl(SolverContext& ctx, const std::vector<Game>& s);
/// <<top | S> | bot>, right equivalent to S (the dual of upl).
Game downr(SolverContext& ctx, const std::vector<Game>& s);

/// Adds h as an extra left (or right) option of composite g. Requires
/// tri(h, g) for the left side and tri(g, h) for the right side, otherwise
/// throws not_a_gift_horse. The result is checked to be equivalent to g.
Game add_gift_horse(SolverContext& ctx, Game g, Game h, Side side);

struct RandomGameParams {
  int max_depth = 2;
  int max_branching = 2;
  /// Probability that a non-leaf-forced position is atomic.
  double atomic_prob = 0.3;
  /// Relative atom weights, indexed by Atom; empty means uniform.
  std::vector<double> atom_weights;
};

class RandomGames {
 public:
  RandomGames(std::uint64_t seed, RandomGameParams params = {});

  Game game(SolverContext& ctx, const PosetRef& poset);
  /// Rejection sampling; throws too_large after max_attempts failures.
  Game passable(SolverContext& ctx, const PosetRef& poset, int max_attempts = 100000);
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64();

 private:
  Game game_at(SolverContext& ctx, const PosetRef& poset, int depth);
  Atom atom(const PosetRef& poset);

  std::uint64_t seed_;
  RandomGameParams params_;
  std::mt19937_64 rng_;
};

struct GadgetCounterexample {
  Game g;
  std::optional<Game> h;
  Game applied;
  Game substituted;
};

/// Searches for passable G (and H for P4 games) with X + G not equivalent to the
/// substitution of G into X. Returns the first counterexample found, or
/// nullopt after `trials` samples; it cannot prove that X is a gadget game.
std::optional<GadgetCounterexample> falsify_gadget_game(SolverContext& ctx, Game x, int trials,
                                                        std::uint64_t seed,
                                                        RandomGameParams params = {});

}  // namespace scg
