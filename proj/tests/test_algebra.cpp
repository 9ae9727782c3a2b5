#include <gtest/gtest.h>

#include "common.hpp"
#include "oracle.hpp"
#include "scg/algebra.hpp"

using namespace scg;

namespace {

struct Algebra : ::testing::Test {
  SolverContext ctx;
  PosetRef p4 = builtin("P4");
  PosetRef p3 = builtin("P3");

  Game g(const std::string& s) { return parse(ctx, s); }
  Game g3(const std::string& s) { return parse(ctx, s, "P3"); }
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

TEST_F(Algebra, SumExamples) {
  const PosetRef pp = product(p4, p4);
  const Game ab = sum(ctx, g("a"), g("b"));
  ASSERT_TRUE(ctx.is_atomic(ab));
  EXPECT_EQ(pp->name(ctx.atom(ab)), "(a,b)");
  EXPECT_EQ(sum(ctx, g("{top|bot}"), g("b")), parse_game(ctx, "{(top,b)|(bot,b)}", pp));
}

TEST_F(Algebra, SumMatchesReference) {
  RandomGames rg(21, {2, 2, 0.3, {}});
  for (int i = 0; i < 100; ++i) {
    const Game x = rg.game(ctx, p4), y = rg.game(ctx, p4);
    const Game s = sum(ctx, x, y);
    const oracle::TreeRef ref = oracle::sum(oracle::from_game(ctx, x), oracle::from_game(ctx, y), 4);
    EXPECT_EQ(s, oracle::to_game(ctx, ref, product(p4, p4)));
  }
}

TEST_F(Algebra, MapExamples) {
  RandomGames rg(22, {3, 3, 0.3, {}});
  for (int i = 0; i < 50; ++i) {
    const Game x = rg.game(ctx, p4);
    EXPECT_EQ(map(ctx, identity_fn(p4), x), x);
    const Game m = map(ctx, projector_f(p4), sum(ctx, g3("a"), x));
    EXPECT_EQ(m, x);
    EXPECT_EQ(ctx.depth(m), ctx.depth(x));
    EXPECT_EQ(ctx.branching(m), ctx.branching(x));
  }
  EXPECT_EQ(code_of([&] { map(ctx, projector_f(p4), g("a")); }), Errc::poset_mismatch);
}

TEST_F(Algebra, Constructors) {
  EXPECT_EQ(force_left(ctx, g("a")), g("{top|a}"));
  EXPECT_EQ(force_right(ctx, g("a")), g("{a|bot}"));
  EXPECT_EQ(choice(ctx, g("a"), g("b")), g("{{top|a},{top|b}|{a|bot},{b|bot}}"));
  EXPECT_EQ(coupling(ctx, g("a"), g("b")), g("{a,{top|b}|{a|bot},b}"));
  EXPECT_EQ(upl(ctx, {g("a")}), g("{top|{a|bot}}"));
  EXPECT_EQ(downr(ctx, {g("a")}), g("{{top|a}|bot}"));
  EXPECT_EQ(code_of([&] { upl(ctx, {}); }), Errc::empty_option_set);
  RandomGames rg(23, {2, 2, 0.3, {}});
  for (int i = 0; i < 50; ++i) {
    const Game x = rg.game(ctx, p4);
    EXPECT_EQ(ctx.dual(upl(ctx, {x})), downr(ctx, {ctx.dual(x)}));
  }
}

TEST_F(Algebra, ConstructorsPreservePassability) {
  RandomGames rg(24, {2, 2, 0.3, {}});
  for (int i = 0; i < 100; ++i) {
    const Game x = rg.passable(ctx, p4), y = rg.passable(ctx, p4);
    EXPECT_TRUE(ctx.is_passable(force_left(ctx, x)));
    EXPECT_TRUE(ctx.is_passable(force_right(ctx, x)));
    EXPECT_TRUE(ctx.is_passable(choice(ctx, x, y)));
    EXPECT_TRUE(ctx.is_passable(coupling(ctx, x, y)));
  }
}

TEST_F(Algebra, UplIsLeftEquivalent) {
  RandomGames rg(25, {2, 2, 0.3, {}});
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const Game s = rg.passable(ctx, p4), x = rg.passable(ctx, p4), y = rg.passable(ctx, p4);
    const Game lhs = ctx.composite({upl(ctx, {s}), x}, {y});
    const Game rhs = ctx.composite({s, x}, {y});
    if (!ctx.is_passable(rhs)) continue;
    ++checked;
    EXPECT_TRUE(ctx.equiv(lhs, rhs)) << to_notation(ctx, rhs);
  }
  EXPECT_GT(checked, 20);
}

TEST_F(Algebra, GiftHorse) {
  const Game tb = g("{top|bot}");
  const Game k = add_gift_horse(ctx, tb, g("bot"), Side::left);
  EXPECT_EQ(k, g("{bot,top|bot}"));
  EXPECT_TRUE(ctx.equiv(k, tb));
  EXPECT_EQ(code_of([&] { add_gift_horse(ctx, g("{bot|bot}"), g("top"), Side::left); }), Errc::not_a_gift_horse);
  EXPECT_EQ(code_of([&] { add_gift_horse(ctx, g("a"), g("bot"), Side::left); }), Errc::not_a_gift_horse);
}

TEST_F(Algebra, SemiMonotonization) {
  RandomGames rg(26, {2, 2, 0.3, {}});
  int used = 0;
  for (int i = 0; i < 3000 && used < 30; ++i) {
    const Game k = rg.passable(ctx, p4);
    if (ctx.local_class(k) != LocalClass::passable) continue;
    const auto l = ctx.left(k);
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (!ctx.is_good_left(k, l[j])) continue;
      const Game k2 = add_gift_horse(ctx, k, force_right(ctx, l[j]), Side::right);
      EXPECT_EQ(ctx.local_class(k2), LocalClass::semi_monotone) << to_notation(ctx, k);
      EXPECT_TRUE(ctx.equiv(k2, k));
      ++used;
      break;
    }
  }
  EXPECT_GT(used, 5);
}

TEST_F(Algebra, CouplingOfLocallyMonotone) {
  RandomGames rg(27, {2, 2, 0.3, {}});
  int checked = 0;
  for (int i = 0; i < 400 && checked < 50; ++i) {
    const Game x = rg.passable(ctx, p4), y = rg.passable(ctx, p4);
    const Game k = ctx.composite({x}, {y});
    if (ctx.local_class(k) != LocalClass::monotone) continue;
    ++checked;
    EXPECT_TRUE(ctx.equiv(k, coupling(ctx, x, y))) << to_notation(ctx, k);
  }
  EXPECT_GT(checked, 10);
}

TEST_F(Algebra, OneSidedChoiceFromForcedChoice) {
  RandomGames rg(28, {2, 2, 0.3, {}});
  for (int i = 0; i < 50; ++i) {
    const Game x = rg.passable(ctx, p4), y = rg.passable(ctx, p4);
    EXPECT_TRUE(ctx.equiv(choice(ctx, force_right(ctx, x), force_right(ctx, y)), ctx.composite({x, y}, {g("bot")})));
  }
}

TEST_F(Algebra, GadgetApplyRequiresPosets) {
  EXPECT_EQ(code_of([&] { gadget_apply(ctx, g("a"), g("a")); }), Errc::poset_mismatch);
  EXPECT_EQ(code_of([&] { gadget_apply2(ctx, g3("a"), g("a"), g("b")); }), Errc::poset_mismatch);
}

TEST_F(Algebra, Substitute) {
  const Game x = g("{a,{top|b}|{a|bot},b}");
  EXPECT_EQ(substitute(ctx, x, g("{top|bot}"), g("bot")), g("{{top|bot},{top|bot}|{{top|bot}|bot},bot}"));
}

TEST_F(Algebra, FalsifyGadgetGame) {
  EXPECT_FALSE(falsify_gadget_game(ctx, g3("{top|a}"), 50, 1).has_value());
  EXPECT_FALSE(falsify_gadget_game(ctx, g3("{a|bot}"), 50, 1).has_value());
  EXPECT_FALSE(falsify_gadget_game(ctx, g("{{top|a},{top|b}|{a|bot},{b|bot}}"), 50, 1).has_value());
  EXPECT_FALSE(falsify_gadget_game(ctx, g("{a,{top|b}|{a|bot},b}"), 50, 1).has_value());
  auto cx = falsify_gadget_game(ctx, g3("{{top|a}|a}"), 50, 1);
  ASSERT_TRUE(cx.has_value());
  EXPECT_FALSE(ctx.equiv(cx->applied, cx->substituted));
}

TEST_F(Algebra, PassableSumCongruence) {
  // Equivalent variants: simplification, and an extra extremal gift horse.
  auto variant = [&](Game x) {
    if (ctx.is_atomic(x)) return ctx.composite({x}, {x});
    if (ctx.tri(g("bot"), x)) return add_gift_horse(ctx, x, g("bot"), Side::left);
    if (ctx.tri(x, g("top"))) return add_gift_horse(ctx, x, g("top"), Side::right);
    return ctx.simplify(x);
  };
  RandomGames rg(29, {2, 2, 0.3, {}});
  int checked = 0;
  for (int i = 0; i < 1000 && checked < 100; ++i) {
    const Game x = rg.passable(ctx, p4), y = rg.passable(ctx, p4);
    const Game x2 = variant(x), y2 = ctx.simplify(variant(y));
    if (!ctx.is_passable(x2) || !ctx.is_passable(y2)) continue;
    ASSERT_TRUE(ctx.equiv(x, x2));
    ASSERT_TRUE(ctx.equiv(y, y2));
    ++checked;
    EXPECT_TRUE(ctx.equiv(sum(ctx, x, y), sum(ctx, x2, y2))) << to_notation(ctx, x) << " + " << to_notation(ctx, y);
  }
  EXPECT_EQ(checked, 100);
}
