#include <algorithm>

#include "scg/setcolor.hpp"

namespace scg {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::invalid_payoff, msg); }

CellMask gather(CellMask black, const std::vector<int>& cells) {
  CellMask out = 0;
  for (std::size_t j = 0; j < cells.size(); ++j) out |= ((black >> cells[j]) & 1u) << j;
  return out;
}

CellMask full_mask(int ncells) { return ncells >= 64 ? ~CellMask{0} : (CellMask{1} << ncells) - 1; }

}  // namespace

PayoffRef PayoffExpr::constant(PosetRef poset, Atom value) {
  if (value >= poset->size()) invalid("constant atom out of range");
  std::shared_ptr<PayoffExpr> e(new PayoffExpr());
  e->kind_ = Kind::constant;
  e->poset_ = std::move(poset);
  e->constant_ = value;
  return e;
}

PayoffRef PayoffExpr::threshold(PosetRef poset, int cell_count, std::vector<ThresholdEntry> entries) {
  if (cell_count < 0 || cell_count > 64) invalid("threshold cell count out of range");
  const CellMask full = full_mask(cell_count);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ThresholdEntry& t = entries[i];
    if (t.atom >= poset->size()) invalid("threshold atom out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[j].atom == t.atom) invalid("atom '" + poset->name(t.atom) + "' listed twice");
    for (CellMask m : t.sets)
      if ((m & ~full) != 0) invalid("threshold set references a cell beyond the carrier");
    for (std::size_t a = 0; a < t.sets.size(); ++a)
      for (std::size_t b = 0; b < t.sets.size(); ++b)
        if (a != b && (t.sets[a] & t.sets[b]) == t.sets[a])
          invalid("threshold sets for '" + poset->name(t.atom) + "' are not an antichain");
  }
  if (entries.size() > 20) invalid("too many threshold atoms");
  std::shared_ptr<PayoffExpr> e(new PayoffExpr());
  e->kind_ = Kind::threshold;
  e->cells_ = cell_count;
  e->joins_.resize(std::size_t{1} << entries.size());
  for (std::size_t subset = 0; subset < e->joins_.size(); ++subset) {
    std::vector<Atom> xs;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (subset >> i & 1u) xs.push_back(entries[i].atom);
    auto j = poset->join(xs);
    if (!j) throw Error(Errc::supremum_undefined, "threshold payoff needs a join the poset lacks");
    e->joins_[subset] = *j;
  }
  e->poset_ = std::move(poset);
  e->entries_ = std::move(entries);
  return e;
}

PayoffRef PayoffExpr::compose(MonotoneFn fn, std::vector<ComposeChild> children) {
  if (children.empty()) invalid("compose needs at least one child");
  std::vector<PosetRef> levels{children.front().payoff->poset()};
  for (std::size_t i = 1; i < children.size(); ++i)
    levels.push_back(product(levels.back(), children[i].payoff->poset()));
  if (!same_poset(levels.back(), fn.domain()))
    throw Error(Errc::poset_mismatch, "compose: function domain is not the product of the children's posets");
  std::shared_ptr<PayoffExpr> e(new PayoffExpr());
  e->kind_ = Kind::compose;
  e->poset_ = fn.codomain();
  e->fn_ = std::make_shared<const MonotoneFn>(std::move(fn));
  e->children_ = std::move(children);
  e->levels_ = std::move(levels);
  return e;
}

PayoffRef PayoffExpr::dual(PayoffRef child) {
  if (!child->poset()->duality()) throw Error(Errc::no_duality_map, "dual payoff needs an order-reversing involution");
  std::shared_ptr<PayoffExpr> e(new PayoffExpr());
  e->kind_ = Kind::dual;
  e->poset_ = child->poset();
  e->children_.push_back(ComposeChild{std::move(child), {}});
  return e;
}

void PayoffExpr::validate(int ncells) const {
  switch (kind_) {
    case Kind::constant:
      return;
    case Kind::threshold:
      if (cells_ != ncells)
        invalid("threshold patterns have " + std::to_string(cells_) + " cells, expected " + std::to_string(ncells));
      return;
    case Kind::compose:
      for (const ComposeChild& c : children_) {
        std::vector<int> sorted = c.cells;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          invalid("compose child embedding is not injective");
        for (int idx : sorted)
          if (idx < 0 || idx >= ncells) invalid("compose child embedding out of range");
        c.payoff->validate(static_cast<int>(c.cells.size()));
      }
      return;
    case Kind::dual:
      child()->validate(ncells);
      return;
  }
}

Atom PayoffExpr::eval(CellMask black, int ncells) const {
  switch (kind_) {
    case Kind::constant:
      return constant_;
    case Kind::threshold: {
      std::size_t subset = 0;
      for (std::size_t i = 0; i < entries_.size(); ++i)
        for (CellMask m : entries_[i].sets)
          if ((m & black) == m) {
            subset |= std::size_t{1} << i;
            break;
          }
      return joins_[subset];
    }
    case Kind::compose: {
      Atom v = 0;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        const ComposeChild& c = children_[i];
        const Atom x = c.payoff->eval(gather(black, c.cells), static_cast<int>(c.cells.size()));
        v = i == 0 ? x : levels_[i]->pair(v, x);
      }
      return (*fn_)(v);
    }
    case Kind::dual: {
      const Atom x = child()->eval(~black & full_mask(ncells), ncells);
      return (*poset_->duality())[x];
    }
  }
  return 0;
}

SetColoringGame::SetColoringGame(PosetRef poset, std::vector<std::string> cells, PayoffRef payoff)
    : poset_(std::move(poset)), cells_(std::move(cells)), payoff_(std::move(payoff)) {
  if (cells_.size() > 64) throw Error(Errc::invalid_board, "carriers are limited to 64 cells");
  if (!same_poset(poset_, payoff_->poset()))
    throw Error(Errc::invalid_board, "payoff is over a different poset than the board");
  try {
    payoff_->validate(static_cast<int>(cells_.size()));
  } catch (const Error& e) {
    throw Error(Errc::invalid_board, e.what());
  }
}

Position parse_position(std::string_view text) {
  Position p;
  for (std::size_t i = 0; i < text.size();) {
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    if (text[i] == '1' || text[i] == 'B') {
      p.push_back(Cell::black), ++i;
    } else if (text[i] == '0' || text[i] == 'W') {
      p.push_back(Cell::white), ++i;
    } else if (text[i] == '*' || text[i] == '.') {
      p.push_back(Cell::empty), ++i;
    } else if (starts("●")) {
      p.push_back(Cell::black), i += std::string_view("●").size();
    } else if (starts("◦")) {
      p.push_back(Cell::white), i += std::string_view("◦").size();
    } else if (starts("⋆")) {
      p.push_back(Cell::empty), i += std::string_view("⋆").size();
    } else {
      throw Error(Errc::syntax_error, "bad position character at offset " + std::to_string(i));
    }
  }
  return p;
}

Atom payoff_eval(const SetColoringGame& s, const Position& p) {
  if (static_cast<int>(p.size()) != s.size()) throw Error(Errc::invalid_board, "position length differs from carrier size");
  CellMask black = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == Cell::empty) throw Error(Errc::invalid_board, "payoff needs an atomic position");
    if (p[i] == Cell::black) black |= CellMask{1} << i;
  }
  return s.payoff_eval(black);
}

}  // namespace scg
