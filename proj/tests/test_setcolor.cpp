#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "oracle.hpp"
#include "scg/catalog.hpp"
#include "scg/setcolor.hpp"

using namespace scg;

namespace {

struct SetColor : ::testing::Test {
  SolverContext ctx;
  PosetRef p4 = builtin("P4");
  std::mt19937_64 rng{99};

  Game g(const std::string& s) { return parse(ctx, s); }

  // Any threshold board on n cells over P4.
  SetColoringGame random_board(int n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, payoff_board_count(n, *p4) - 1);
    return payoff_board(n, p4, pick(rng));
  }

  // Value computed by the reference tree builder from the payoff alone.
  oracle::TreeRef reference(const SetColoringGame& s) {
    return oracle::board_tree(s.size(), [&](unsigned m) { return static_cast<int>(s.payoff_eval(m)); });
  }

  bool ref_equiv(Game x, const oracle::TreeRef& t, const oracle::Order& order) {
    oracle::Relations r(order);
    return r.equiv(oracle::from_game(ctx, x), t);
  }
};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::syntax_error;
}

}  // namespace

TEST_F(SetColor, ExampleBoardPayoffs) {
  const SetColoringGame s = sc_base(GadgetKind::coupling);
  EXPECT_EQ(payoff_eval(s, parse_position("◦●◦●●")), p4->top());
  EXPECT_EQ(payoff_eval(s, parse_position("●●◦◦●")), p4->index("a"));
  EXPECT_EQ(payoff_eval(s, parse_position("●◦◦◦●")), p4->bot());
  EXPECT_EQ(payoff_eval(s, parse_position("01011")), p4->top());
  EXPECT_EQ(code_of([&] { payoff_eval(s, parse_position("0101*")); }), Errc::invalid_board);
}

TEST_F(SetColor, BaseBoards) {
  SolverContext c;
  EXPECT_EQ(eval(c, sc_base(GadgetKind::left_force)), parse(c, "{top|a}", "P3"));
  EXPECT_EQ(eval(c, sc_base(GadgetKind::right_force)), parse(c, "{a|bot}", "P3"));
  EXPECT_TRUE(c.equiv(eval(c, sc_base(GadgetKind::choice)), parse(c, "{{top|a},{top|b}|{a|bot},{b|bot}}")));
  EXPECT_TRUE(c.equiv(eval(c, sc_base(GadgetKind::coupling)), parse(c, "{a,{top|b}|{a|bot},b}")));
  EXPECT_EQ(sc_base(GadgetKind::coupling).size(), 5);
}

TEST_F(SetColor, HexTwoByTwo) {
  auto b = builtin("Bool");
  std::vector<CellMask> wins{parse_pattern("1100"), parse_pattern("0110"), parse_pattern("0011")};
  SetColoringGame hex(b, {"c1", "c2", "c3", "c4"}, PayoffExpr::threshold(b, 4, {{b->top(), wins}}));
  EXPECT_TRUE(ctx.equiv(eval(ctx, hex), parse(ctx, "{top|bot}", "Bool")));
}

TEST_F(SetColor, ConstantBoards) {
  for (Atom a = 0; a < 4; ++a) {
    const SetColoringGame s = sc_const(p4, a);
    EXPECT_EQ(s.size(), 0);
    EXPECT_EQ(eval(ctx, s), ctx.atomic(a, p4));
  }
}

TEST_F(SetColor, EvalMatchesReference) {
  for (int i = 0; i < 60; ++i) {
    const SetColoringGame s = random_board(i % 5);
    EXPECT_TRUE(ref_equiv(eval(ctx, s), reference(s), oracle::p4_order()));
    EXPECT_TRUE(ctx.equiv(eval(ctx, s), eval_unsimplified(ctx, s)));
  }
}

TEST_F(SetColor, EvalPosition) {
  const SetColoringGame s = sc_base(GadgetKind::coupling);
  EXPECT_EQ(eval_position(ctx, s, parse_position("01011")), g("top"));
  // With only the last cell open the outcome is top or a.
  EXPECT_EQ(eval_position(ctx, s, parse_position("1100*")), g("a"));
  EXPECT_EQ(eval_position(ctx, s, parse_position("0101*")), g("{top|b}"));
}

TEST_F(SetColor, BoardValuesAreMonotone) {
  for (int i = 0; i < 100; ++i) {
    const SetColoringGame s = random_board(i % 6);
    EXPECT_TRUE(payoff_is_monotone(s));
    const Game raw = eval_unsimplified(ctx, s);
    EXPECT_TRUE(ctx.is_monotone(raw));
    EXPECT_TRUE(ctx.is_passable(raw));
  }
}

TEST_F(SetColor, SumIsHomomorphism) {
  const SetColoringGame ab = sc_sum(sc_const(p4, p4->index("a")), sc_const(p4, p4->index("b")));
  const Game v = eval(ctx, ab);
  ASSERT_TRUE(ctx.is_atomic(v));
  EXPECT_EQ(ab.poset()->name(ctx.atom(v)), "(a,b)");
  for (int i = 0; i < 100; ++i) {
    const SetColoringGame s = random_board(i % 3), t = random_board((i / 3) % 3);
    const SetColoringGame st = sc_sum(s, t);
    EXPECT_EQ(st.size(), s.size() + t.size());
    EXPECT_EQ(eval_unsimplified(ctx, st), sum(ctx, eval_unsimplified(ctx, s), eval_unsimplified(ctx, t)));
  }
}

TEST_F(SetColor, MapIsHomomorphism) {
  const PosetRef pp = product(p4, p4);
  // (x, y) -> x join y is monotone.
  std::vector<Atom> join(pp->size());
  for (Atom xy = 0; xy < pp->size(); ++xy) {
    auto [x, y] = pp->unpair(xy);
    std::vector<Atom> both{x, y};
    join[xy] = *p4->join(both);
  }
  const MonotoneFn f(pp, p4, join, "join");
  for (int i = 0; i < 100; ++i) {
    const SetColoringGame s = sc_sum(random_board(i % 3), random_board((i / 3) % 3));
    const SetColoringGame fs = sc_map(f, s);
    EXPECT_EQ(fs.size(), s.size());
    EXPECT_EQ(eval_unsimplified(ctx, fs), map(ctx, f, eval_unsimplified(ctx, s)));
    const SetColoringGame t = random_board(2);
    EXPECT_EQ(eval_unsimplified(ctx, sc_map(identity_fn(p4), t)), eval_unsimplified(ctx, t));
  }
  EXPECT_EQ(code_of([&] { sc_map(f, random_board(1)); }), Errc::poset_mismatch);
}

TEST_F(SetColor, Forcing) {
  const SetColoringGame r = sc_force_right(sc_const(p4, p4->index("a")));
  EXPECT_EQ(r.size(), 1);
  EXPECT_EQ(eval(ctx, r), g("{a|bot}"));
  for (int i = 0; i < 30; ++i) {
    const SetColoringGame s = random_board(i % 5);
    const Game v = eval(ctx, s);
    const SetColoringGame l = sc_force_left(s), rr = sc_force_right(s);
    EXPECT_EQ(l.size(), s.size() + 1);
    EXPECT_EQ(rr.size(), s.size() + 1);
    EXPECT_TRUE(ref_equiv(force_left(ctx, v), reference(l), oracle::p4_order()));
    EXPECT_TRUE(ctx.equiv(eval(ctx, rr), force_right(ctx, v)));
  }
}

TEST_F(SetColor, SharedChoice) {
  const SetColoringGame c = sc_shared_choice(sc_const(p4, p4->index("a")), sc_const(p4, p4->index("b")));
  EXPECT_EQ(c.size(), 2);
  EXPECT_TRUE(ctx.equiv(eval(ctx, c), g("{{top|a},{top|b}|{a|bot},{b|bot}}")));
  for (int i = 0; i < 40; ++i) {
    const SetColoringGame s = random_board(i % 5), t = random_board((i / 5) % 4);
    const SetColoringGame sh = sc_shared_choice(s, t);
    EXPECT_EQ(sh.size(), std::max(s.size(), t.size()) + 2);
    EXPECT_TRUE(ref_equiv(choice(ctx, eval(ctx, s), eval(ctx, t)), reference(sh), oracle::p4_order()));
  }
}

TEST_F(SetColor, SharedChoiceWithFullOverlap) {
  for (int i = 0; i < 20; ++i) {
    const SetColoringGame s = random_board(4), t = random_board(4);
    const SetColoringGame sh = sc_shared_choice(s, t);
    EXPECT_EQ(sh.size(), 6);
    EXPECT_TRUE(ctx.equiv(eval(ctx, sh), choice(ctx, eval(ctx, s), eval(ctx, t))));
  }
}

TEST_F(SetColor, OneSidedChoice) {
  const Atom a = p4->index("a"), b = p4->index("b");
  const SetColoringGame two = sc_one_sided_choice({sc_const(p4, a), sc_const(p4, b)});
  EXPECT_EQ(two.size(), 3);
  EXPECT_TRUE(ctx.equiv(eval(ctx, two), g("{a,b|bot}")));
  const SetColoringGame two_dual = sc_one_sided_choice_dual({sc_const(p4, a), sc_const(p4, b)});
  EXPECT_EQ(two_dual.size(), 3);
  EXPECT_TRUE(ctx.equiv(eval(ctx, two_dual), g("{top|a,b}")));

  const SetColoringGame s = random_board(3);
  EXPECT_EQ(sc_one_sided_choice({s}).size(), 4);

  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) names.push_back("a" + std::to_string(i));
  const PosetRef anti = antichain_poset(names);
  std::vector<SetColoringGame> boards;
  std::vector<Game> atoms;
  for (const auto& n : names) {
    boards.push_back(sc_const(anti, anti->index(n)));
    atoms.push_back(ctx.atomic(n, anti));
  }
  const SetColoringGame eight = sc_one_sided_choice(boards);
  EXPECT_EQ(eight.size(), 7);
  EXPECT_TRUE(ctx.equiv(eval(ctx, eight), ctx.composite(atoms, {ctx.bot(anti)})));

  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<SetColoringGame> first(boards.begin(), boards.begin() + n);
    EXPECT_EQ(sc_one_sided_choice(first).size(), 2 * ceil_log2(n) + 1);
  }
}

TEST_F(SetColor, OneSidedChoiceRandom) {
  for (int i = 0; i < 25; ++i) {
    std::vector<SetColoringGame> boards;
    std::vector<Game> values;
    const int n = 1 + i % 3;
    int p = 0;
    for (int k = 0; k < n; ++k) {
      boards.push_back(random_board((i + k) % 3));
      values.push_back(eval(ctx, boards.back()));
      p = std::max(p, boards.back().size());
    }
    const SetColoringGame s = sc_one_sided_choice(boards);
    EXPECT_EQ(s.size(), p + 2 * ceil_log2(n) + 1);
    EXPECT_TRUE(ctx.equiv(eval(ctx, s), ctx.composite(values, {g("bot")})));
    const SetColoringGame d = sc_one_sided_choice_dual(boards);
    EXPECT_TRUE(ctx.equiv(eval(ctx, d), ctx.composite({g("top")}, values)));
  }
}

TEST_F(SetColor, Coupling) {
  const SetColoringGame c = sc_coupling(sc_const(p4, p4->index("a")), sc_const(p4, p4->index("b")));
  EXPECT_EQ(c.size(), 5);
  EXPECT_TRUE(ctx.equiv(eval(ctx, c), g("{a,{top|b}|{a|bot},b}")));
  for (int i = 0; i < 25; ++i) {
    const SetColoringGame s = random_board(i % 3), t = random_board((i / 3) % 3);
    const SetColoringGame st = sc_coupling(s, t);
    EXPECT_EQ(st.size(), s.size() + t.size() + 5);
    EXPECT_TRUE(ref_equiv(coupling(ctx, eval(ctx, s), eval(ctx, t)), reference(st), oracle::p4_order()));
  }
}

TEST_F(SetColor, Dual) {
  SolverContext c;
  const SetColoringGame d = sc_dual(sc_base(GadgetKind::left_force));
  EXPECT_EQ(eval(c, d), parse(c, "{a|bot}", "P3"));
  for (int i = 0; i < 50; ++i) {
    const SetColoringGame s = random_board(i % 5);
    EXPECT_TRUE(ctx.equiv(eval(ctx, sc_dual(s)), ctx.dual(eval(ctx, s))));
    EXPECT_EQ(eval(ctx, sc_dual(sc_dual(s))), eval(ctx, s));
  }
  auto noduals = AtomPoset::make({"t", "x", "y", "z", "b"}, {{"b", "x"}, {"b", "y"}, {"x", "z"}, {"y", "z"}, {"z", "t"}});
  EXPECT_EQ(code_of([&] { sc_dual(sc_const(noduals, noduals->top())); }), Errc::no_duality_map);
}

TEST_F(SetColor, Errors) {
  const PosetRef p = p4;
  EXPECT_EQ(code_of([&] { SetColoringGame(p, {"x"}, PayoffExpr::threshold(p, 2, {})); }), Errc::invalid_board);
  EXPECT_EQ(code_of([&] { PayoffExpr::threshold(p, 2, {{p->index("a"), {parse_pattern("01"), parse_pattern("11")}}}); }),
            Errc::invalid_payoff);
  EXPECT_EQ(code_of([&] { SetColoringGame(builtin("P3"), {}, PayoffExpr::constant(p, 0)); }), Errc::invalid_board);
  std::vector<std::string> cells(17, "c");
  SetColoringGame big(p, cells, PayoffExpr::constant(p, 0));
  EXPECT_EQ(code_of([&] { eval(ctx, big); }), Errc::carrier_too_large);
  EXPECT_EQ(code_of([&] { parse_position("10x"); }), Errc::syntax_error);
  auto q = AtomPoset::make({"t", "u", "v", "x", "y", "b"},
                           {{"b", "x"}, {"b", "y"}, {"x", "u"}, {"x", "v"}, {"y", "u"}, {"y", "v"}, {"u", "t"}, {"v", "t"}});
  EXPECT_EQ(code_of([&] {
              PayoffExpr::threshold(q, 1, {{q->index("x"), {parse_pattern("1")}}, {q->index("y"), {parse_pattern("1")}}});
            }),
            Errc::supremum_undefined);
}

TEST_F(SetColor, Patterns) {
  EXPECT_EQ(parse_pattern("0110"), CellMask{6});
  EXPECT_EQ(parse_pattern("◦●●◦"), CellMask{6});
  EXPECT_EQ(pattern_string(6, 4), "0110");
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
}
