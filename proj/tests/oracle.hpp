#pragma once

// Slow reference implementations written straight from the definitions, used
// to cross-check the library. They share no code with it beyond reading the
// structure of a Game.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scg/game.hpp"

namespace oracle {

// Order on atoms 0..n-1 as an explicit matrix: le[x][y] means x <= y.
using Order = std::vector<std::vector<bool>>;

// P4 in the atom numbering used by the library's builtin: top, a, b, bot.
Order p4_order();
Order order_of(const scg::AtomPoset& p);

struct Tree;
using TreeRef = std::shared_ptr<const Tree>;

struct Tree {
  int atom = -1;  // -1 for composite
  std::vector<TreeRef> left, right;
};

TreeRef atom(int a);
TreeRef node(std::vector<TreeRef> l, std::vector<TreeRef> r);

TreeRef from_game(const scg::SolverContext& ctx, scg::Game g);
scg::Game to_game(scg::SolverContext& ctx, const TreeRef& t, const scg::PosetRef& poset);

class Relations {
 public:
  explicit Relations(Order le) : le_(std::move(le)) {}
  bool leq(const TreeRef& g, const TreeRef& h) { return hold(g, h), leq_rec(g, h); }
  bool tri(const TreeRef& g, const TreeRef& h) { return hold(g, h), tri_rec(g, h); }
  bool equiv(const TreeRef& g, const TreeRef& h) { return leq(g, h) && leq(h, g); }

 private:
  using Key = std::pair<const Tree*, const Tree*>;
  // The memo is keyed on addresses, so queried trees must outlive it.
  void hold(const TreeRef& g, const TreeRef& h) {
    held_.push_back(g);
    held_.push_back(h);
  }
  bool leq_rec(const TreeRef& g, const TreeRef& h);
  bool tri_rec(const TreeRef& g, const TreeRef& h);

  std::vector<TreeRef> held_;
  Order le_;
  std::map<Key, bool> leq_memo_, tri_memo_;
};

// Game value of a board given only its payoff on complete colorings
// (black cells as a bitmask). No simplification; positions are shared.
TreeRef board_tree(int ncells, const std::function<int(unsigned)>& payoff);

// Sum over a product poset numbered x * nb + y; map with an atom table.
TreeRef sum(const TreeRef& g, const TreeRef& h, int nb);
TreeRef map(const TreeRef& g, const std::vector<int>& table);

// Number of antichains of subsets of an n-set, by testing every family.
long count_antichains(int n);

}  // namespace oracle
