#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "scg/algebra.hpp"
#include "scg/game.hpp"
#include "scg/poset.hpp"

namespace scg {

/// Bit i set = local cell i is black (colored top).
using CellMask = std::uint64_t;

class PayoffExpr;
using PayoffRef = std::shared_ptr<const PayoffExpr>;

/// A child of a Compose node together with the parent cells it reads.
/// Embeddings of different children may overlap.
struct ComposeChild {
  PayoffRef payoff;
  std::vector<int> cells;
};

/// Minimal black-cell sets for one atom of a Threshold payoff.
struct ThresholdEntry {
  Atom atom;
  std::vector<CellMask> sets;
};

/// Monotone payoff built from constants, threshold antichains, composition
/// with monotone functions, and dualization.
class PayoffExpr {
 public:
  enum class Kind { constant, threshold, compose, dual };

  static PayoffRef constant(PosetRef poset, Atom value);
  /// Value = join of the atoms whose sets contain a subset of the black
  /// cells (bot if none). Each atom's sets must form an antichain and every
  /// needed join must exist.
  static PayoffRef threshold(PosetRef poset, int cell_count, std::vector<ThresholdEntry> entries);
  /// fn's domain must be the left-nested product of the children's posets.
  static PayoffRef compose(MonotoneFn fn, std::vector<ComposeChild> children);
  /// Order-reverse of the child on the color-swapped position.
  static PayoffRef dual(PayoffRef child);

  Kind kind() const noexcept { return kind_; }
  const PosetRef& poset() const noexcept { return poset_; }

  /// Throws invalid_payoff unless the expression is well formed for ncells local cells.
  void validate(int ncells) const;
  Atom eval(CellMask black, int ncells) const;

  Atom constant_value() const noexcept { return constant_; }
  int threshold_cells() const noexcept { return cells_; }
  const std::vector<ThresholdEntry>& threshold_entries() const noexcept { return entries_; }
  const MonotoneFn& fn() const { return *fn_; }
  const std::vector<ComposeChild>& children() const noexcept { return children_; }
  const PayoffRef& child() const { return children_.front().payoff; }

 private:
  PayoffExpr() = default;

  Kind kind_ = Kind::constant;
  PosetRef poset_;
  Atom constant_ = 0;
  int cells_ = 0;
  std::vector<ThresholdEntry> entries_;
  std::vector<Atom> joins_;  // join per subset of entries
  std::shared_ptr<const MonotoneFn> fn_;
  std::vector<ComposeChild> children_;
  std::vector<PosetRef> levels_;  // nested product posets for compose
};

/// A carrier of named cells with a monotone payoff over an atom poset.
class SetColoringGame {
 public:
  /// Throws invalid_board when the payoff is malformed or over another poset.
  SetColoringGame(PosetRef poset, std::vector<std::string> cells, PayoffRef payoff);

  const PosetRef& poset() const noexcept { return poset_; }
  const std::vector<std::string>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  const PayoffRef& payoff() const noexcept { return payoff_; }

  /// Payoff of an atomic position given by its black cells.
  Atom payoff_eval(CellMask black) const { return payoff_->eval(black, size()); }

 private:
  PosetRef poset_;
  std::vector<std::string> cells_;
  PayoffRef payoff_;
};

enum class Cell : std::uint8_t { empty, black, white };
using Position = std::vector<Cell>;

/// Parses "●◦⋆" or "10*" style strings ('1'/'●' black, '0'/'◦' white, '*'/'⋆'/'.' empty).
Position parse_position(std::string_view text);

/// Payoff of an atomic position; throws invalid_board if a cell is empty.
Atom payoff_eval(const SetColoringGame& s, const Position& p);

struct EvalOptions {
  int max_cells = 16;
};

/// Combinatorial value of the empty position, simplified. Throws carrier_too_large.
Game eval(SolverContext& ctx, const SetColoringGame& s, EvalOptions opts = {});
/// Combinatorial value of an arbitrary position, simplified.
Game eval_position(SolverContext& ctx, const SetColoringGame& s, const Position& p,
                   EvalOptions opts = {});
/// As eval, but without simplification: the raw hash-consed position DAG.
Game eval_unsimplified(SolverContext& ctx, const SetColoringGame& s, EvalOptions opts = {});

/// Exhaustive check that adding a black cell never lowers the payoff.
bool payoff_is_monotone(const SetColoringGame& s, int max_cells = 16);

// --- board combinators ---------------------------------------------------------

SetColoringGame sc_const(const PosetRef& poset, Atom a);
/// Disjoint union of carriers, payoff into the product poset.
SetColoringGame sc_sum(const SetColoringGame& s, const SetColoringGame& t);
/// Same carrier, payoff post-composed with f.
SetColoringGame sc_map(const MonotoneFn& f, const SetColoringGame& s);
/// The four fixed boards realizing <top|a>, <a|bot>, the choice and the coupling gadget games.
SetColoringGame sc_base(GadgetKind kind);
/// One fresh cell; realizes <top | [[S]]> (resp. <[[S]] | bot>).
SetColoringGame sc_force_left(const SetColoringGame& s);
SetColoringGame sc_force_right(const SetColoringGame& s);
/// Choice gadget with both boards embedded in one shared pool of max(p, q) cells.
SetColoringGame sc_shared_choice(const SetColoringGame& g, const SetColoringGame& h);
/// <G_1, ..., G_n | bot> by near-halving shared choices; size max p_i + 2 ceil(log2 n) + 1.
SetColoringGame sc_one_sided_choice(const std::vector<SetColoringGame>& boards);
/// <top | H_1, ..., H_m>, the same construction with left forcing at the leaves.
SetColoringGame sc_one_sided_choice_dual(const std::vector<SetColoringGame>& boards);
/// <G, <top|H> | <G|bot>, H> on disjoint carriers; size p + q + 5.
SetColoringGame sc_coupling(const SetColoringGame& g, const SetColoringGame& h);
/// Same carrier with a Dual payoff; realizes dual([[S]]). Throws no_duality_map.
SetColoringGame sc_dual(const SetColoringGame& s);

/// "0110" -> cells 1 and 2 required black; character i is cell i.
CellMask parse_pattern(std::string_view bits);
std::string pattern_string(CellMask m, int ncells);

/// ceil(log2 n) for n >= 1.
int ceil_log2(std::size_t n) noexcept;

}  // namespace scg
