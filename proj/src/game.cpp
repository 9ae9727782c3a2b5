#include "scg/game.hpp"

#include <algorithm>

namespace scg {

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) noexcept {
  v *= 0x9E3779B97F4A7C15ull;
  v ^= v >> 29;
  return (h ^ v) * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull;
}

inline std::uint64_t pair_key(Game g, Game h) noexcept {
  return (std::uint64_t{g.id} << 32) | h.id;
}

void sort_unique(std::vector<Game>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Game> copy(std::span<const Game> s) { return {s.begin(), s.end()}; }

}  // namespace

const char* local_class_name(LocalClass c) noexcept {
  switch (c) {
    case LocalClass::atomic: return "atomic";
    case LocalClass::monotone: return "monotone";
    case LocalClass::semi_monotone: return "semi_monotone";
    case LocalClass::passable: return "passable";
    case LocalClass::none: return "none";
  }
  return "?";
}

SolverContext::SolverContext(Options options) : options_cfg_(options), table_(1024, kUnknown) {}

std::uint32_t SolverContext::intern_poset(const PosetRef& p) {
  for (std::uint32_t i = 0; i < posets_.size(); ++i)
    if (same_poset(posets_[i], p)) return i;
  posets_.push_back(p);
  return static_cast<std::uint32_t>(posets_.size() - 1);
}

bool SolverContext::same_node(const Node& n, std::uint32_t poset, Atom atom, std::span<const Game> l,
                              std::span<const Game> r) const {
  if (n.poset != poset || n.atom != atom || n.nleft != l.size() || n.nright != r.size()) return false;
  const Game* opts = options_.data() + n.begin;
  return std::equal(l.begin(), l.end(), opts) && std::equal(r.begin(), r.end(), opts + n.nleft);
}

void SolverContext::grow_table() {
  std::vector<std::uint32_t> bigger(table_.size() * 2, kUnknown);
  const std::size_t mask = bigger.size() - 1;
  for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
    std::size_t slot = nodes_[id].hash & mask;
    while (bigger[slot] != kUnknown) slot = (slot + 1) & mask;
    bigger[slot] = id;
  }
  table_ = std::move(bigger);
}

Game SolverContext::intern(std::uint32_t poset, Atom atom, std::span<const Game> l,
                           std::span<const Game> r) {
  std::size_t h = mix(mix(poset, atom), l.size());
  for (Game g : l) h = mix(h, g.id);
  for (Game g : r) h = mix(h, g.id);
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = h & mask;
  while (table_[slot] != kUnknown) {
    const Node& n = nodes_[table_[slot]];
    if (n.hash == h && same_node(n, poset, atom, l, r)) return Game{table_[slot]};
    slot = (slot + 1) & mask;
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{poset, atom, static_cast<std::uint32_t>(options_.size()),
                        static_cast<std::uint32_t>(l.size()), static_cast<std::uint32_t>(r.size()), h});
  options_.insert(options_.end(), l.begin(), l.end());
  options_.insert(options_.end(), r.begin(), r.end());
  table_[slot] = id;
  if (nodes_.size() * 2 > table_.size()) grow_table();
  return Game{id};
}

Game SolverContext::atomic(Atom a, const PosetRef& poset) {
  if (a >= poset->size()) throw Error(Errc::unknown_atom, "atom index out of range");
  return intern(intern_poset(poset), a, {}, {});
}

Game SolverContext::composite(std::vector<Game> left, std::vector<Game> right) {
  if (left.empty() || right.empty())
    throw Error(Errc::empty_option_set, "composite games need non-empty left and right options");
  const std::uint32_t p = nodes_[left.front().id].poset;
  for (Game g : left)
    if (nodes_[g.id].poset != p) throw Error(Errc::poset_mismatch, "options over different posets");
  for (Game g : right)
    if (nodes_[g.id].poset != p) throw Error(Errc::poset_mismatch, "options over different posets");
  sort_unique(left);
  sort_unique(right);
  return intern(p, kComposite, left, right);
}

void SolverContext::require_same_poset(Game g, Game h) const {
  if (nodes_[g.id].poset != nodes_[h.id].poset)
    throw Error(Errc::poset_mismatch, "games over different posets");
}

// --- order -------------------------------------------------------------------

bool SolverContext::leq(Game g, Game h) {
  require_same_poset(g, h);
  return leq_impl(g, h);
}

bool SolverContext::tri(Game g, Game h) {
  require_same_poset(g, h);
  return tri_impl(g, h);
}

bool SolverContext::leq_impl(Game g, Game h) {
  const std::uint64_t key = pair_key(g, h);
  if (auto it = leq_cache_.find(key); it != leq_cache_.end()) return it->second;
  bool result = true;
  for (Game gl : left(g))
    if (!tri_impl(gl, h)) {
      result = false;
      break;
    }
  if (result)
    for (Game hr : right(h))
      if (!tri_impl(g, hr)) {
        result = false;
        break;
      }
  if (result && (is_atomic(g) || is_atomic(h))) result = tri_impl(g, h);
  leq_cache_.emplace(key, result);
  return result;
}

bool SolverContext::tri_impl(Game g, Game h) {
  const std::uint64_t key = pair_key(g, h);
  if (auto it = tri_cache_.find(key); it != tri_cache_.end()) return it->second;
  bool result = false;
  for (Game gr : right(g))
    if (leq_impl(gr, h)) {
      result = true;
      break;
    }
  if (!result)
    for (Game hl : left(h))
      if (leq_impl(g, hl)) {
        result = true;
        break;
      }
  if (!result && is_atomic(g) && is_atomic(h)) result = poset(g)->le(atom(g), atom(h));
  tri_cache_.emplace(key, result);
  return result;
}

// --- predicates --------------------------------------------------------------

bool SolverContext::is_good_left(Game g, Game gl) {
  auto l = left(g);
  if (std::find(l.begin(), l.end(), gl) == l.end())
    throw Error(Errc::not_an_option, "not a left option");
  return leq_impl(g, gl);
}

bool SolverContext::is_good_right(Game g, Game gr) {
  auto r = right(g);
  if (std::find(r.begin(), r.end(), gr) == r.end())
    throw Error(Errc::not_an_option, "not a right option");
  return leq_impl(gr, g);
}

LocalClass SolverContext::local_class(Game g) {
  if (is_atomic(g)) return LocalClass::atomic;
  std::size_t good_left = 0, good_right = 0;
  for (Game gl : left(g))
    if (leq_impl(g, gl)) ++good_left;
  for (Game gr : right(g))
    if (leq_impl(gr, g)) ++good_right;
  if (good_left == left(g).size() && good_right == right(g).size()) return LocalClass::monotone;
  if (good_left > 0 && good_right > 0) return LocalClass::semi_monotone;
  if (good_left > 0 || good_right > 0) return LocalClass::passable;
  return LocalClass::none;
}

bool SolverContext::global_check(Game g, std::vector<std::int8_t>& cache, bool monotone) {
  if (cache.size() < nodes_.size()) cache.resize(nodes_.size(), -1);
  for (Game p : positions(g)) {
    if (cache[p.id] >= 0) continue;
    bool ok = true;
    if (!is_atomic(p)) {
      for (Game o : left(p)) ok = ok && cache[o.id] == 1;
      for (Game o : right(p)) ok = ok && cache[o.id] == 1;
      if (ok) {
        const LocalClass c = local_class(p);
        ok = monotone ? c == LocalClass::monotone : c != LocalClass::none;
      }
    }
    cache[p.id] = ok ? 1 : 0;
  }
  return cache[g.id] == 1;
}

bool SolverContext::is_monotone(Game g) { return global_check(g, monotone_cache_, true); }
bool SolverContext::is_passable(Game g) { return global_check(g, passable_cache_, false); }

// --- simplification ----------------------------------------------------------

Game SolverContext::simplify(Game g) {
  if (is_atomic(g)) return g;
  if (g.id < simplified_.size() && simplified_[g.id] != kUnknown) return Game{simplified_[g.id]};
  Game result = simplify_composite(g);
  if (options_cfg_.check_simplify && !equiv(g, result))
    throw Error(Errc::verification_failed, "simplification changed the value of a game");
  if (simplified_.size() < nodes_.size()) simplified_.resize(nodes_.size(), kUnknown);
  simplified_[g.id] = result.id;
  simplified_[result.id] = result.id;
  return result;
}

Game SolverContext::simplify_composite(Game g) {
  std::vector<Game> l, r;
  for (Game o : copy(left(g))) l.push_back(simplify(o));
  for (Game o : copy(right(g))) r.push_back(simplify(o));
  sort_unique(l);
  sort_unique(r);

  // Removes x when some other y dominates it; of two equivalent options the
  // one with the smaller id survives.
  auto prune = [this](std::vector<Game>& v, bool keep_larger) {
    std::vector<Game> kept;
    for (Game x : v) {
      bool dominated = false;
      for (Game y : v) {
        if (x == y) continue;
        const bool xy = keep_larger ? leq_impl(x, y) : leq_impl(y, x);
        if (!xy) continue;
        const bool yx = keep_larger ? leq_impl(y, x) : leq_impl(x, y);
        if (!yx || y < x) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(x);
    }
    const bool changed = kept.size() != v.size();
    v = std::move(kept);
    return changed;
  };

  int pass = 0;
  for (;; ++pass) {
    if (pass >= options_cfg_.simplify_pass_cap)
      throw Error(Errc::simplification_diverged, "simplify exceeded its pass cap");
    bool changed = prune(l, true);
    changed = prune(r, false) || changed;
    const Game cur = composite(l, r);

    bool bypassed = false;
    for (std::size_t i = 0; i < l.size() && !bypassed; ++i) {
      const Game x = l[i];
      if (is_atomic(x)) continue;
      for (Game xr : right(x)) {
        if (is_atomic(xr) || !leq_impl(xr, cur)) continue;
        std::vector<Game> repl = copy(left(xr));
        l.erase(l.begin() + static_cast<std::ptrdiff_t>(i));
        l.insert(l.end(), repl.begin(), repl.end());
        sort_unique(l);
        bypassed = true;
        break;
      }
    }
    for (std::size_t i = 0; i < r.size() && !bypassed; ++i) {
      const Game x = r[i];
      if (is_atomic(x)) continue;
      for (Game xl : left(x)) {
        if (is_atomic(xl) || !leq_impl(cur, xl)) continue;
        std::vector<Game> repl = copy(right(xl));
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        r.insert(r.end(), repl.begin(), repl.end());
        sort_unique(r);
        bypassed = true;
        break;
      }
    }
    if (!changed && !bypassed) break;
  }

  const Game result = composite(l, r);
  const PosetRef p = poset(result);
  for (Atom a = 0; a < p->size(); ++a) {
    const Game ga = atomic(a, p);
    if (leq_impl(result, ga) && leq_impl(ga, result)) return ga;
  }
  return result;
}

// --- duality -----------------------------------------------------------------

Game SolverContext::dual(Game g) {
  const PosetRef p = poset(g);
  if (!p->duality()) throw Error(Errc::no_duality_map, "poset has no order-reversing involution");
  const std::vector<Atom>& d = *p->duality();
  absl::flat_hash_map<std::uint32_t, Game> memo;
  std::function<Game(Game)> go = [&](Game x) -> Game {
    if (auto it = memo.find(x.id); it != memo.end()) return it->second;
    Game y;
    if (is_atomic(x)) {
      y = atomic(d[atom(x)], p);
    } else {
      std::vector<Game> nl, nr;
      for (Game o : copy(right(x))) nl.push_back(go(o));
      for (Game o : copy(left(x))) nr.push_back(go(o));
      y = composite(std::move(nl), std::move(nr));
    }
    memo.emplace(x.id, y);
    return y;
  };
  return go(g);
}

Game SolverContext::swap_ab(Game g) {
  const PosetRef p = poset(g);
  if (!p->same_as(*builtin("P4"))) throw Error(Errc::poset_mismatch, "swap_ab requires P4");
  const Atom a = p->index("a"), b = p->index("b");
  absl::flat_hash_map<std::uint32_t, Game> memo;
  std::function<Game(Game)> go = [&](Game x) -> Game {
    if (auto it = memo.find(x.id); it != memo.end()) return it->second;
    Game y;
    if (is_atomic(x)) {
      const Atom v = atom(x);
      y = atomic(v == a ? b : v == b ? a : v, p);
    } else {
      std::vector<Game> nl, nr;
      for (Game o : copy(left(x))) nl.push_back(go(o));
      for (Game o : copy(right(x))) nr.push_back(go(o));
      y = composite(std::move(nl), std::move(nr));
    }
    memo.emplace(x.id, y);
    return y;
  };
  return go(g);
}

// --- metrics -----------------------------------------------------------------

std::vector<Game> SolverContext::positions(Game g) const {
  std::vector<Game> order;
  std::vector<bool> seen(nodes_.size(), false);
  // iterative post-order DFS
  std::vector<std::pair<Game, bool>> stack{{g, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(x);
      continue;
    }
    if (seen[x.id]) continue;
    seen[x.id] = true;
    stack.push_back({x, true});
    for (Game o : left(x))
      if (!seen[o.id]) stack.push_back({o, false});
    for (Game o : right(x))
      if (!seen[o.id]) stack.push_back({o, false});
  }
  return order;
}

int SolverContext::depth(Game g) {
  absl::flat_hash_map<std::uint32_t, int> d;
  for (Game p : positions(g)) {
    int v = 0;
    for (Game o : left(p)) v = std::max(v, d[o.id] + 1);
    for (Game o : right(p)) v = std::max(v, d[o.id] + 1);
    d[p.id] = v;
  }
  return d[g.id];
}

int SolverContext::branching(Game g) {
  std::size_t b = 0;
  for (Game p : positions(g)) b = std::max({b, left(p).size(), right(p).size()});
  return static_cast<int>(b);
}

std::size_t SolverContext::position_count(Game g) { return positions(g).size(); }

Game SolverContext::import(const SolverContext& src, Game g) {
  absl::flat_hash_map<std::uint32_t, Game> memo;
  for (Game p : src.positions(g)) {
    Game y;
    if (src.is_atomic(p)) {
      y = atomic(src.atom(p), src.poset(p));
    } else {
      std::vector<Game> nl, nr;
      for (Game o : src.left(p)) nl.push_back(memo.at(o.id));
      for (Game o : src.right(p)) nr.push_back(memo.at(o.id));
      y = composite(std::move(nl), std::move(nr));
    }
    memo.emplace(p.id, y);
  }
  return memo.at(g.id);
}

}  // namespace scg
