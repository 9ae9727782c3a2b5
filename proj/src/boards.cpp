#include <numeric>

#include "scg/setcolor.hpp"

namespace scg {

namespace {

std::vector<int> range(int begin, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

std::vector<std::string> prefixed(const std::string& prefix, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(prefix + n);
  return out;
}

ThresholdEntry entry(const PosetRef& p, const char* atom, std::initializer_list<const char*> patterns) {
  ThresholdEntry t{p->index(atom), {}};
  for (const char* s : patterns) t.sets.push_back(parse_pattern(s));
  return t;
}

SetColoringGame forced(GadgetKind kind, const SetColoringGame& s) {
  const SetColoringGame base = sc_base(kind);
  std::vector<std::string> cells{"f"};
  for (const auto& c : s.cells()) cells.push_back(c);
  auto payoff = PayoffExpr::compose(projector_f(s.poset()), {{base.payoff(), {0}}, {s.payoff(), range(1, s.size())}});
  return SetColoringGame(s.poset(), std::move(cells), std::move(payoff));
}

SetColoringGame one_sided(const std::vector<SetColoringGame>& boards, std::size_t begin, std::size_t end,
                          GadgetKind leaf) {
  if (end - begin == 1) return forced(leaf, boards[begin]);
  const std::size_t mid = begin + (end - begin + 1) / 2;
  return sc_shared_choice(one_sided(boards, begin, mid, leaf), one_sided(boards, mid, end, leaf));
}

void require_common_poset(const std::vector<SetColoringGame>& boards) {
  if (boards.empty()) throw Error(Errc::empty_option_set, "one-sided choice of no boards");
  for (const auto& b : boards)
    if (!same_poset(b.poset(), boards.front().poset()))
      throw Error(Errc::poset_mismatch, "boards over different posets");
}

}  // namespace

CellMask parse_pattern(std::string_view bits) {
  CellMask m = 0;
  int i = 0;
  for (std::size_t k = 0; k < bits.size();) {
    auto starts = [&](std::string_view s) { return bits.substr(k, s.size()) == s; };
    if (bits[k] == '1') {
      m |= CellMask{1} << i, ++k;
    } else if (bits[k] == '0') {
      ++k;
    } else if (starts("●")) {
      m |= CellMask{1} << i, k += std::string_view("●").size();
    } else if (starts("◦")) {
      k += std::string_view("◦").size();
    } else {
      throw Error(Errc::syntax_error, "bad pattern '" + std::string(bits) + "'");
    }
    if (++i > 64) throw Error(Errc::syntax_error, "pattern longer than 64 cells");
  }
  return m;
}

std::string pattern_string(CellMask m, int ncells) {
  std::string s(ncells, '0');
  for (int i = 0; i < ncells; ++i)
    if (m >> i & 1u) s[i] = '1';
  return s;
}

int ceil_log2(std::size_t n) noexcept {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

SetColoringGame sc_const(const PosetRef& poset, Atom a) {
  return SetColoringGame(poset, {}, PayoffExpr::constant(poset, a));
}

SetColoringGame sc_sum(const SetColoringGame& s, const SetColoringGame& t) {
  const PosetRef p = product(s.poset(), t.poset());
  std::vector<std::string> cells = prefixed("s.", s.cells());
  for (auto& c : prefixed("t.", t.cells())) cells.push_back(std::move(c));
  MonotoneFn pair(p, p, identity_fn(p).table(), "pair");
  auto payoff = PayoffExpr::compose(std::move(pair), {{s.payoff(), range(0, s.size())},
                                                      {t.payoff(), range(s.size(), t.size())}});
  return SetColoringGame(p, std::move(cells), std::move(payoff));
}

SetColoringGame sc_map(const MonotoneFn& f, const SetColoringGame& s) {
  if (!same_poset(f.domain(), s.poset())) throw Error(Errc::poset_mismatch, "function domain differs from the board's poset");
  return SetColoringGame(f.codomain(), s.cells(), PayoffExpr::compose(f, {{s.payoff(), range(0, s.size())}}));
}

SetColoringGame sc_base(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::left_force: {
      const PosetRef p = builtin("P3");
      return SetColoringGame(p, {"c1"}, PayoffExpr::threshold(p, 1, {entry(p, "a", {"0"}), entry(p, "top", {"1"})}));
    }
    case GadgetKind::right_force: {
      const PosetRef p = builtin("P3");
      return SetColoringGame(p, {"c1"}, PayoffExpr::threshold(p, 1, {entry(p, "a", {"1"}), entry(p, "top", {})}));
    }
    case GadgetKind::choice: {
      const PosetRef p = builtin("P4");
      return SetColoringGame(p, {"c1", "c2"},
                             PayoffExpr::threshold(p, 2, {entry(p, "a", {"01"}), entry(p, "b", {"10"})}));
    }
    case GadgetKind::coupling: {
      const PosetRef p = builtin("P4");
      return SetColoringGame(
          p, {"c1", "c2", "c3", "c4", "c5"},
          PayoffExpr::threshold(p, 5, {entry(p, "a", {"00011", "10101", "11000"}), entry(p, "b", {"00100", "01010"})}));
    }
  }
  throw Error(Errc::invalid_board, "unknown gadget kind");
}

SetColoringGame sc_force_left(const SetColoringGame& s) { return forced(GadgetKind::left_force, s); }
SetColoringGame sc_force_right(const SetColoringGame& s) { return forced(GadgetKind::right_force, s); }

SetColoringGame sc_shared_choice(const SetColoringGame& g, const SetColoringGame& h) {
  if (!same_poset(g.poset(), h.poset())) throw Error(Errc::poset_mismatch, "boards over different posets");
  const SetColoringGame base = sc_base(GadgetKind::choice);
  const int pool = std::max(g.size(), h.size());
  std::vector<std::string> cells{"x1", "x2"};
  for (int i = 0; i < pool; ++i) cells.push_back("p" + std::to_string(i));
  auto payoff = PayoffExpr::compose(projector_g(g.poset()), {{base.payoff(), {0, 1}},
                                                             {g.payoff(), range(2, g.size())},
                                                             {h.payoff(), range(2, h.size())}});
  return SetColoringGame(g.poset(), std::move(cells), std::move(payoff));
}

SetColoringGame sc_one_sided_choice(const std::vector<SetColoringGame>& boards) {
  require_common_poset(boards);
  return one_sided(boards, 0, boards.size(), GadgetKind::right_force);
}

SetColoringGame sc_one_sided_choice_dual(const std::vector<SetColoringGame>& boards) {
  require_common_poset(boards);
  return one_sided(boards, 0, boards.size(), GadgetKind::left_force);
}

SetColoringGame sc_coupling(const SetColoringGame& g, const SetColoringGame& h) {
  if (!same_poset(g.poset(), h.poset())) throw Error(Errc::poset_mismatch, "boards over different posets");
  const SetColoringGame base = sc_base(GadgetKind::coupling);
  std::vector<std::string> cells = base.cells();
  for (auto& c : prefixed("g.", g.cells())) cells.push_back(std::move(c));
  for (auto& c : prefixed("h.", h.cells())) cells.push_back(std::move(c));
  auto payoff = PayoffExpr::compose(projector_g(g.poset()), {{base.payoff(), range(0, 5)},
                                                             {g.payoff(), range(5, g.size())},
                                                             {h.payoff(), range(5 + g.size(), h.size())}});
  return SetColoringGame(g.poset(), std::move(cells), std::move(payoff));
}

SetColoringGame sc_dual(const SetColoringGame& s) {
  return SetColoringGame(s.poset(), s.cells(), PayoffExpr::dual(s.payoff()));
}

}  // namespace scg
