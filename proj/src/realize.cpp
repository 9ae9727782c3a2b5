#include "scg/realize.hpp"

#include <optional>

#include <unordered_map>

#include "scg/algebra.hpp"

namespace scg {

namespace {

std::vector<Game> copy(std::span<const Game> s) { return {s.begin(), s.end()}; }

bool is_just(SolverContext& ctx, std::span<const Game> opts, Atom a) {
  return opts.size() == 1 && ctx.is_atomic(opts[0]) && ctx.atom(opts[0]) == a;
}

// A board together with the game the constructions predict for it.
struct Built {
  SetColoringGame board;
  Game model;
  std::vector<GoodOptionUse> uses;
};

class Realizer {
 public:
  Realizer(SolverContext& ctx, RealizeOptions opts) : ctx_(ctx), opts_(opts) {}

  const Built& build(Game g) {
    if (auto it = memo_.find(g.id); it != memo_.end()) return it->second;
    Built best = build_raw(g);
    if (opts_.try_simplified && !ctx_.is_atomic(g)) {
      const Game s = ctx_.simplify(g);
      for (Game alt_game : {s, prune(s)}) {
        if (alt_game == g || !ctx_.is_passable(alt_game)) continue;
        const Built& alt = build(alt_game);
        if (alt.board.size() < best.board.size()) best = alt;
      }
    }
    return memo_.emplace(g.id, std::move(best)).first->second;
  }

 private:
  // Greedily drops top-level options whose removal keeps the value.
  Game prune(Game g) {
    if (ctx_.is_atomic(g)) return g;
    std::vector<Game> l = copy(ctx_.left(g)), r = copy(ctx_.right(g));
    for (std::vector<Game>* side : {&l, &r})
      for (std::size_t i = 0; side->size() > 1 && i < side->size();) {
        std::vector<Game> fewer = *side;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        const Game k = side == &l ? ctx_.composite(fewer, r) : ctx_.composite(l, fewer);
        if (ctx_.equiv(k, g)) {
          *side = std::move(fewer);
        } else {
          ++i;
        }
      }
    return ctx_.simplify(ctx_.composite(l, r));
  }

  Built build_raw(Game g) {
    const PosetRef& poset = ctx_.poset(g);
    if (ctx_.is_atomic(g)) return {sc_const(poset, ctx_.atom(g)), g, {}};

    std::vector<Game> l = copy(ctx_.left(g)), r = copy(ctx_.right(g));
    if (is_just(ctx_, r, poset->bot())) return checked(g, one_sided(l, false));
    if (is_just(ctx_, l, poset->top())) return checked(g, one_sided(r, true));

    if (auto m = gadget_form(g, l, r)) return *m;

    if (l.size() == 1 && r.size() == 1 && ctx_.is_good_left(g, l[0]) && ctx_.is_good_right(g, r[0])) {
      const Built& bl = build(l[0]);
      const Built& br = build(r[0]);
      Built c{sc_coupling(bl.board, br.board), coupling(ctx_, bl.model, br.model), merge(bl.uses, br.uses)};
      if (ctx_.equiv(c.model, g)) return c;
    }

    std::vector<GoodOptionUse> uses;
    const LocalClass lc = ctx_.local_class(g);
    if (lc == LocalClass::none) throw Error(Errc::not_passable, "a position has no good option");
    if (lc == LocalClass::passable) {
      std::optional<GoodOptionUse> use;
      for (std::size_t i = 0; i < l.size() && !use; ++i)
        if (ctx_.is_good_left(g, l[i])) use = GoodOptionUse{g, Side::left, static_cast<int>(i)};
      for (std::size_t j = 0; j < r.size() && !use; ++j)
        if (ctx_.is_good_right(g, r[j])) use = GoodOptionUse{g, Side::right, static_cast<int>(j)};
      const Game k = use->side == Side::left
                         ? add_gift_horse(ctx_, g, force_right(ctx_, l[use->index]), Side::right)
                         : add_gift_horse(ctx_, g, force_left(ctx_, r[use->index]), Side::left);
      uses.push_back(*use);
      l = copy(ctx_.left(k));
      r = copy(ctx_.right(k));
    }

    Built sg = one_sided(l, false);
    Built sh = one_sided(r, true);
    Built out{sc_coupling(sh.board, sg.board), coupling(ctx_, sh.model, sg.model), merge(sh.uses, sg.uses)};
    out.uses.insert(out.uses.begin(), uses.begin(), uses.end());
    return checked(g, std::move(out));
  }

  // Literal choice or coupling gadget games map straight onto their boards.
  std::optional<Built> gadget_form(Game g, const std::vector<Game>& l, const std::vector<Game>& r) {
    if (l.size() != 2 || r.size() != 2) return std::nullopt;
    const PosetRef& poset = ctx_.poset(g);
    auto inner = [&](Game o, Side side) -> std::optional<Game> {
      if (ctx_.is_atomic(o)) return std::nullopt;
      if (side == Side::left && is_just(ctx_, ctx_.left(o), poset->top()) && ctx_.right(o).size() == 1)
        return ctx_.right(o)[0];
      if (side == Side::right && is_just(ctx_, ctx_.right(o), poset->bot()) && ctx_.left(o).size() == 1)
        return ctx_.left(o)[0];
      return std::nullopt;
    };
    auto in = [](const std::vector<Game>& v, Game x) { return v[0] == x || v[1] == x; };
    std::optional<Built> out;
    auto x0 = inner(l[0], Side::left), x1 = inner(l[1], Side::left);
    auto y0 = inner(r[0], Side::right), y1 = inner(r[1], Side::right);
    if (x0 && x1 && y0 && y1 && ((*x0 == *y0 && *x1 == *y1) || (*x0 == *y1 && *x1 == *y0))) {
      const Built& a = build(*x0);
      const Built& b = build(*x1);
      out = Built{sc_shared_choice(a.board, b.board), choice(ctx_, a.model, b.model), merge(a.uses, b.uses)};
    } else {
      for (int i = 0; i < 2 && !out; ++i) {
        const Game cg = l[i];
        const auto h = inner(l[1 - i], Side::left);
        if (!h || !in(r, *h) || !in(r, force_right(ctx_, cg))) continue;
        const Built& a = build(cg);
        const Built& b = build(*h);
        out = Built{sc_coupling(a.board, b.board), coupling(ctx_, a.model, b.model), merge(a.uses, b.uses)};
      }
    }
    if (out && !ctx_.equiv(out->model, g)) return std::nullopt;
    return out;
  }

  // <G_1..G_n | bot>, or <top | G_1..G_n> when dual is set.
  Built one_sided(const std::vector<Game>& opts, bool dual) {
    std::vector<SetColoringGame> boards;
    std::vector<Game> models;
    std::vector<GoodOptionUse> uses;
    for (Game o : opts) {
      const Built& b = build(o);
      boards.push_back(b.board);
      models.push_back(b.model);
      uses.insert(uses.end(), b.uses.begin(), b.uses.end());
    }
    SetColoringGame board = dual ? sc_one_sided_choice_dual(boards) : sc_one_sided_choice(boards);
    return {std::move(board), one_sided_model(models, 0, models.size(), dual), std::move(uses)};
  }

  // Mirrors the halving in the board combinator.
  Game one_sided_model(const std::vector<Game>& m, std::size_t begin, std::size_t end, bool dual) {
    if (end - begin == 1) return dual ? force_left(ctx_, m[begin]) : force_right(ctx_, m[begin]);
    const std::size_t mid = begin + (end - begin + 1) / 2;
    return choice(ctx_, one_sided_model(m, begin, mid, dual), one_sided_model(m, mid, end, dual));
  }

  Built checked(Game target, Built b) {
    if (!ctx_.equiv(b.model, target))
      throw Error(Errc::verification_failed, "construction model is not equivalent to the target");
    return b;
  }

  static std::vector<GoodOptionUse> merge(const std::vector<GoodOptionUse>& a, const std::vector<GoodOptionUse>& b) {
    std::vector<GoodOptionUse> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  SolverContext& ctx_;
  RealizeOptions opts_;
  std::unordered_map<std::uint32_t, Built> memo_;  // references must stay valid
};

}  // namespace

const char* verification_name(Verification v) noexcept {
  switch (v) {
    case Verification::brute_force:
      return "BruteForce";
    case Verification::compositional:
      return "Compositional";
    case Verification::skipped:
      return "Skipped";
  }
  return "?";
}

int size_bound(SolverContext& ctx, Game g) {
  int per_level;
  const int lg = ceil_log2(static_cast<std::size_t>(std::max(ctx.branching(g), 1)));
  if (ctx.is_monotone(g))
    per_level = 4 * lg + 7;
  else if (ctx.is_passable(g))
    per_level = 4 * lg + 10;
  else
    throw Error(Errc::not_passable, "size bound is only defined for passable games");
  const int d = ctx.depth(g);
  if (d >= 30) throw Error(Errc::too_large, "game too deep for a size bound");
  return ((1 << d) - 1) * per_level;
}

bool verify(SolverContext& ctx, const SetColoringGame& board, Game g, EvalOptions opts) {
  return ctx.equiv(eval(ctx, board, opts), g);
}

RealizationReport realize(SolverContext& ctx, Game g, RealizeOptions opts) {
  if (!ctx.is_passable(g)) throw Error(Errc::not_passable, "only passable games are realizable");
  const int bound = size_bound(ctx, g);
  Realizer r(ctx, opts);
  const Built& b = r.build(g);
  RealizationReport rep{g, b.board, b.board.size(), bound, Verification::skipped, b.uses};
  if (rep.carrier_size > bound)
    throw Error(Errc::verification_failed, "board of " + std::to_string(rep.carrier_size) +
                                               " cells exceeds the size bound " + std::to_string(bound));
  if (opts.verify) {
    if (rep.carrier_size <= opts.verify_cap) {
      if (!verify(ctx, rep.board, g, EvalOptions{opts.verify_cap}))
        throw Error(Errc::verification_failed, "board value differs from the input");
      rep.verified = Verification::brute_force;
    } else {
      rep.verified = Verification::compositional;
    }
  }
  return rep;
}

}  // namespace scg
