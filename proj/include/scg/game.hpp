#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "scg/error.hpp"
#include "scg/poset.hpp"

namespace scg {

/// Handle to an interned game. Only meaningful together with the
/// SolverContext that created it; equal handles mean structurally equal games.
struct Game {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(Game, Game) = default;
};

enum class Side { left, right };

enum class LocalClass { atomic, monotone, semi_monotone, passable, none };

const char* local_class_name(LocalClass c) noexcept;

/// Owns the interning table for games and the memo tables for the order
/// relations. Single-threaded; use one context per worker.
class SolverContext {
 public:
  struct Options {
    int simplify_pass_cap = 1000;
    bool check_simplify = true;
  };

  SolverContext() : SolverContext(Options{}) {}
  explicit SolverContext(Options options);

  SolverContext(const SolverContext&) = delete;
  SolverContext& operator=(const SolverContext&) = delete;

  // --- construction -------------------------------------------------------

  Game atomic(Atom a, const PosetRef& poset);
  Game atomic(std::string_view name, const PosetRef& poset) { return atomic(poset->index(name), poset); }
  Game top(const PosetRef& poset) { return atomic(poset->top(), poset); }
  Game bot(const PosetRef& poset) { return atomic(poset->bot(), poset); }

  /// Interns <left | right>. Option lists are sorted and deduplicated.
  /// Throws empty_option_set or poset_mismatch.
  Game composite(std::vector<Game> left, std::vector<Game> right);

  // --- inspection ---------------------------------------------------------

  bool is_atomic(Game g) const noexcept { return nodes_[g.id].atom != kComposite; }
  Atom atom(Game g) const noexcept { return nodes_[g.id].atom; }
  std::span<const Game> left(Game g) const noexcept {
    const Node& n = nodes_[g.id];
    return {options_.data() + n.begin, n.nleft};
  }
  std::span<const Game> right(Game g) const noexcept {
    const Node& n = nodes_[g.id];
    return {options_.data() + n.begin + n.nleft, n.nright};
  }
  std::span<const Game> options(Game g, Side side) const noexcept {
    return side == Side::left ? left(g) : right(g);
  }
  const PosetRef& poset(Game g) const noexcept { return posets_[nodes_[g.id].poset]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  // --- order --------------------------------------------------------------

  bool leq(Game g, Game h);
  bool tri(Game g, Game h);
  bool equiv(Game g, Game h) { return leq(g, h) && leq(h, g); }

  // --- local and global predicates ----------------------------------------

  /// leq(G, G^L); throws not_an_option when gl is not a left option of g.
  bool is_good_left(Game g, Game gl);
  /// leq(G^R, G); throws not_an_option when gr is not a right option of g.
  bool is_good_right(Game g, Game gr);
  LocalClass local_class(Game g);
  bool is_monotone(Game g);
  bool is_passable(Game g);

  // --- rewriting ----------------------------------------------------------

  /// An equivalent game with dominated options removed, reversible options
  /// bypassed (when the reversing option is composite) and games equivalent
  /// to an atom collapsed to that atom. Memoized.
  Game simplify(Game g);

  /// Swap sides and apply the poset's order-reversing involution.
  Game dual(Game g);
  /// Relabel a <-> b; requires the game to live over P4.
  Game swap_ab(Game g);

  // --- metrics ------------------------------------------------------------

  int depth(Game g);
  /// Max over positions of max(|L|, |R|); 0 for an atomic game.
  int branching(Game g);
  std::size_t position_count(Game g);

  /// Every distinct position of g (g included), children before parents.
  std::vector<Game> positions(Game g) const;

  /// Copy a game from another context into this one.
  Game import(const SolverContext& src, Game g);

  void require_same_poset(Game g, Game h) const;

 private:
  static constexpr Atom kComposite = ~Atom{0};
  static constexpr std::uint32_t kUnknown = ~std::uint32_t{0};

  struct Node {
    std::uint32_t poset;
    Atom atom;
    std::uint32_t begin;
    std::uint32_t nleft;
    std::uint32_t nright;
    std::size_t hash;
  };

  std::uint32_t intern_poset(const PosetRef& p);
  Game intern(std::uint32_t poset, Atom atom, std::span<const Game> l, std::span<const Game> r);
  bool same_node(const Node& n, std::uint32_t poset, Atom atom, std::span<const Game> l,
                 std::span<const Game> r) const;
  void grow_table();

  bool leq_impl(Game g, Game h);
  bool tri_impl(Game g, Game h);
  Game simplify_composite(Game g);
  bool global_check(Game g, std::vector<std::int8_t>& cache, bool monotone);

  Options options_cfg_;
  std::vector<PosetRef> posets_;
  std::vector<Node> nodes_;
  std::vector<Game> options_;
  std::vector<std::uint32_t> table_;  // open addressing over node ids
  absl::flat_hash_map<std::uint64_t, bool> leq_cache_;
  absl::flat_hash_map<std::uint64_t, bool> tri_cache_;
  std::vector<std::uint32_t> simplified_;
  std::vector<std::int8_t> monotone_cache_;
  std::vector<std::int8_t> passable_cache_;
};

}  // namespace scg

template <>
struct std::hash<scg::Game> {
  std::size_t operator()(scg::Game g) const noexcept { return std::hash<std::uint32_t>{}(g.id); }
};
