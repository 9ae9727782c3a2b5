#include "scg/setcolor.hpp"

namespace scg {

namespace {

// Positions are indexed in base 3: digit c is 0 (empty), 1 (black) or 2 (white).
class Evaluator {
 public:
  Evaluator(SolverContext& ctx, const SetColoringGame& s, EvalOptions opts, bool simplify)
      : ctx_(ctx), s_(s), n_(s.size()), simplify_(simplify) {
    if (n_ > opts.max_cells)
      throw Error(Errc::carrier_too_large, "carrier of " + std::to_string(n_) + " cells exceeds the cap of " +
                                               std::to_string(opts.max_cells));
    const CellMask leaves = CellMask{1} << n_;
    payoff_.resize(leaves);
    for (CellMask m = 0; m < leaves; ++m) payoff_[m] = s.payoff_eval(m);
    std::size_t total = 1;
    for (int i = 0; i < n_; ++i) {
      pow3_.push_back(static_cast<std::uint32_t>(total));
      total *= 3;
    }
    memo_.assign(total, 0);
    for (Atom a = 0; a < s.poset()->size(); ++a) atoms_.push_back(ctx.atomic(a, s.poset()));
    left_.resize(n_ + 1);
    right_.resize(n_ + 1);
  }

  Game at(const Position& p) {
    if (static_cast<int>(p.size()) != n_) throw Error(Errc::invalid_board, "position length differs from carrier size");
    std::uint32_t idx = 0;
    CellMask black = 0, white = 0;
    for (int c = 0; c < n_; ++c) {
      if (p[c] == Cell::black) idx += pow3_[c], black |= CellMask{1} << c;
      if (p[c] == Cell::white) idx += 2 * pow3_[c], white |= CellMask{1} << c;
    }
    return value(idx, black, white, 0);
  }

 private:
  Game value(std::uint32_t idx, CellMask black, CellMask white, int depth) {
    if (memo_[idx] != 0) return Game{memo_[idx] - 1};
    const CellMask empty = ~(black | white) & ((CellMask{1} << n_) - 1);
    Game g;
    if (empty == 0) {
      g = atoms_[payoff_[black]];
    } else {
      for (int c = 0; c < n_; ++c) {
        if (!(empty >> c & 1u)) continue;
        const CellMask bit = CellMask{1} << c;
        const Game l = value(idx + pow3_[c], black | bit, white, depth + 1);
        const Game r = value(idx + 2 * pow3_[c], black, white | bit, depth + 1);
        left_[depth].push_back(l);
        right_[depth].push_back(r);
      }
      g = ctx_.composite(left_[depth], right_[depth]);
      left_[depth].clear();
      right_[depth].clear();
      if (simplify_) g = ctx_.simplify(g);
    }
    memo_[idx] = g.id + 1;
    return g;
  }

  SolverContext& ctx_;
  const SetColoringGame& s_;
  int n_;
  bool simplify_;
  std::vector<Atom> payoff_;
  std::vector<std::uint32_t> pow3_;
  std::vector<std::uint32_t> memo_;
  std::vector<Game> atoms_;
  std::vector<std::vector<Game>> left_, right_;
};

}  // namespace

Game eval(SolverContext& ctx, const SetColoringGame& s, EvalOptions opts) {
  return Evaluator(ctx, s, opts, true).at(Position(s.size(), Cell::empty));
}

Game eval_position(SolverContext& ctx, const SetColoringGame& s, const Position& p, EvalOptions opts) {
  return Evaluator(ctx, s, opts, true).at(p);
}

Game eval_unsimplified(SolverContext& ctx, const SetColoringGame& s, EvalOptions opts) {
  return Evaluator(ctx, s, opts, false).at(Position(s.size(), Cell::empty));
}

bool payoff_is_monotone(const SetColoringGame& s, int max_cells) {
  const int n = s.size();
  if (n > max_cells) throw Error(Errc::carrier_too_large, "carrier too large for the exhaustive monotonicity check");
  const CellMask leaves = CellMask{1} << n;
  std::vector<Atom> table(leaves);
  for (CellMask m = 0; m < leaves; ++m) table[m] = s.payoff_eval(m);
  const AtomPoset& p = *s.poset();
  for (CellMask m = 0; m < leaves; ++m)
    for (int c = 0; c < n; ++c)
      if (!(m >> c & 1u) && !p.le(table[m], table[m | CellMask{1} << c])) return false;
  return true;
}

}  // namespace scg
