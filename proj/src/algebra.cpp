#include "scg/algebra.hpp"

#include <numeric>

namespace scg {

const char* gadget_kind_name(GadgetKind k) noexcept {
  switch (k) {
    case GadgetKind::left_force: return "LeftForce";
    case GadgetKind::right_force: return "RightForce";
    case GadgetKind::choice: return "Choice";
    case GadgetKind::coupling: return "Coupling";
  }
  return "?";
}

namespace {

std::vector<Game> copy(std::span<const Game> s) { return {s.begin(), s.end()}; }

class Summer {
 public:
  Summer(SolverContext& ctx, PosetRef p) : ctx_(ctx), p_(std::move(p)) {}

  Game run(Game g, Game h) {
    const std::uint64_t key = (std::uint64_t{g.id} << 32) | h.id;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Game result;
    if (ctx_.is_atomic(g) && ctx_.is_atomic(h)) {
      result = ctx_.atomic(p_->pair(ctx_.atom(g), ctx_.atom(h)), p_);
    } else {
      const auto gl = copy(ctx_.left(g)), gr = copy(ctx_.right(g));
      const auto hl = copy(ctx_.left(h)), hr = copy(ctx_.right(h));
      std::vector<Game> l, r;
      for (Game x : gl) l.push_back(run(x, h));
      for (Game x : hl) l.push_back(run(g, x));
      for (Game x : gr) r.push_back(run(x, h));
      for (Game x : hr) r.push_back(run(g, x));
      result = ctx_.composite(std::move(l), std::move(r));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  SolverContext& ctx_;
  PosetRef p_;
  absl::flat_hash_map<std::uint64_t, Game> memo_;
};

template <class AtomFn>
Game rebuild(SolverContext& ctx, Game g, AtomFn&& on_atom) {
  absl::flat_hash_map<std::uint32_t, Game> memo;
  for (Game p : ctx.positions(g)) {
    Game y;
    if (ctx.is_atomic(p)) {
      y = on_atom(ctx.atom(p));
    } else {
      std::vector<Game> l, r;
      for (Game o : ctx.left(p)) l.push_back(memo.at(o.id));
      for (Game o : ctx.right(p)) r.push_back(memo.at(o.id));
      y = ctx.composite(std::move(l), std::move(r));
    }
    memo.emplace(p.id, y);
  }
  return memo.at(g.id);
}

void require_builtin(const SolverContext& ctx, Game x, const char* name) {
  if (!ctx.poset(x)->same_as(*builtin(name)))
    throw Error(Errc::poset_mismatch, std::string("gadget game must be over ") + name);
}

}  // namespace

Game sum(SolverContext& ctx, Game g, Game h) {
  return Summer(ctx, product(ctx.poset(g), ctx.poset(h))).run(g, h);
}

Game map(SolverContext& ctx, const MonotoneFn& f, Game g) {
  if (!same_poset(f.domain(), ctx.poset(g)))
    throw Error(Errc::poset_mismatch, "function domain differs from the game's poset");
  const PosetRef& cod = f.codomain();
  return rebuild(ctx, g, [&](Atom a) { return ctx.atomic(f(a), cod); });
}

Game gadget_apply(SolverContext& ctx, Game x, Game g) {
  require_builtin(ctx, x, "P3");
  return map(ctx, projector_f(ctx.poset(g)), sum(ctx, x, g));
}

Game gadget_apply2(SolverContext& ctx, Game x, Game g, Game h) {
  require_builtin(ctx, x, "P4");
  ctx.require_same_poset(g, h);
  return map(ctx, projector_g(ctx.poset(g)), sum(ctx, sum(ctx, x, g), h));
}

Game substitute(SolverContext& ctx, Game x, Game g, std::optional<Game> h) {
  const PosetRef& px = ctx.poset(x);
  const PosetRef target = ctx.poset(g);
  if (h) ctx.require_same_poset(g, *h);
  const std::optional<Atom> a = px->find("a"), b = px->find("b");
  return rebuild(ctx, x, [&](Atom v) {
    if (v == px->top()) return ctx.top(target);
    if (v == px->bot()) return ctx.bot(target);
    if (a && v == *a) return g;
    if (b && v == *b && h) return *h;
    throw Error(Errc::unknown_atom, "no substitution for atom '" + px->name(v) + "'");
  });
}

Game force_left(SolverContext& ctx, Game g) { return ctx.composite({ctx.top(ctx.poset(g))}, {g}); }

Game force_right(SolverContext& ctx, Game g) { return ctx.composite({g}, {ctx.bot(ctx.poset(g))}); }

Game choice(SolverContext& ctx, Game g, Game h) {
  ctx.require_same_poset(g, h);
  return ctx.composite({force_left(ctx, g), force_left(ctx, h)}, {force_right(ctx, g), force_right(ctx, h)});
}

Game coupling(SolverContext& ctx, Game g, Game h) {
  ctx.require_same_poset(g, h);
  return ctx.composite({g, force_left(ctx, h)}, {force_right(ctx, g), h});
}

Game upl(SolverContext& ctx, const std::vector<Game>& s) {
  if (s.empty()) throw Error(Errc::empty_option_set, "upl of an empty set");
  const PosetRef p = ctx.poset(s.front());
  return ctx.composite({ctx.top(p)}, {ctx.composite(s, {ctx.bot(p)})});
}

Game downr(SolverContext& ctx, const std::vector<Game>& s) {
  if (s.empty()) throw Error(Errc::empty_option_set, "downr of an empty set");
  const PosetRef p = ctx.poset(s.front());
  return ctx.composite({ctx.composite({ctx.top(p)}, s)}, {ctx.bot(p)});
}

Game add_gift_horse(SolverContext& ctx, Game g, Game h, Side side) {
  if (ctx.is_atomic(g)) throw Error(Errc::not_a_gift_horse, "gift horses need a composite game");
  const bool ok = side == Side::left ? ctx.tri(h, g) : ctx.tri(g, h);
  if (!ok) throw Error(Errc::not_a_gift_horse, "candidate option fails the gift horse condition");
  std::vector<Game> l = copy(ctx.left(g)), r = copy(ctx.right(g));
  (side == Side::left ? l : r).push_back(h);
  const Game result = ctx.composite(std::move(l), std::move(r));
  if (!ctx.equiv(result, g))
    throw Error(Errc::verification_failed, "gift horse changed the value");
  return result;
}

// --- random games ------------------------------------------------------------

RandomGames::RandomGames(std::uint64_t seed, RandomGameParams params)
    : seed_(seed), params_(std::move(params)), rng_(seed) {}

std::uint64_t RandomGames::next_u64() { return rng_(); }

Atom RandomGames::atom(const PosetRef& poset) {
  if (params_.atom_weights.empty()) {
    std::uniform_int_distribution<Atom> pick(0, static_cast<Atom>(poset->size() - 1));
    return pick(rng_);
  }
  std::discrete_distribution<Atom> pick(params_.atom_weights.begin(), params_.atom_weights.end());
  return pick(rng_);
}

Game RandomGames::game_at(SolverContext& ctx, const PosetRef& poset, int depth) {
  std::bernoulli_distribution leaf(params_.atomic_prob);
  if (depth <= 0 || leaf(rng_)) return ctx.atomic(atom(poset), poset);
  std::uniform_int_distribution<int> width(1, std::max(1, params_.max_branching));
  std::vector<Game> l, r;
  const int nl = width(rng_), nr = width(rng_);
  for (int i = 0; i < nl; ++i) l.push_back(game_at(ctx, poset, depth - 1));
  for (int i = 0; i < nr; ++i) r.push_back(game_at(ctx, poset, depth - 1));
  return ctx.composite(std::move(l), std::move(r));
}

Game RandomGames::game(SolverContext& ctx, const PosetRef& poset) {
  return game_at(ctx, poset, params_.max_depth);
}

Game RandomGames::passable(SolverContext& ctx, const PosetRef& poset, int max_attempts) {
  for (int i = 0; i < max_attempts; ++i) {
    const Game g = game(ctx, poset);
    if (ctx.is_passable(g)) return g;
  }
  throw Error(Errc::too_large, "no passable sample within the attempt budget");
}

std::optional<GadgetCounterexample> falsify_gadget_game(SolverContext& ctx, Game x, int trials,
                                                        std::uint64_t seed, RandomGameParams params) {
  const PosetRef px = ctx.poset(x);
  const bool binary = px->same_as(*builtin("P4"));
  if (!binary) require_builtin(ctx, x, "P3");
  const PosetRef target = builtin("P4");
  RandomGames gen(seed, std::move(params));
  for (int t = 0; t < trials; ++t) {
    // Gadget equations are only expected to hold for passable arguments.
    const Game g = gen.passable(ctx, target);
    std::optional<Game> h;
    if (binary) h = gen.passable(ctx, target);
    const Game applied = binary ? gadget_apply2(ctx, x, g, *h) : gadget_apply(ctx, x, g);
    const Game substituted = substitute(ctx, x, g, h);
    if (!ctx.equiv(applied, substituted)) return GadgetCounterexample{g, h, applied, substituted};
  }
  return std::nullopt;
}

}  // namespace scg
