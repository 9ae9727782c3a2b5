#include "scg/poset.hpp"

#include <algorithm>

#include "scg/error.hpp"

namespace scg {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::no_top_or_bottom: return "NoTopOrBottom";
    case Errc::unknown_poset: return "UnknownPoset";
    case Errc::unknown_atom: return "UnknownAtom";
    case Errc::empty_option_set: return "EmptyOptionSet";
    case Errc::poset_mismatch: return "PosetMismatch";
    case Errc::not_an_option: return "NotAnOption";
    case Errc::simplification_diverged: return "SimplificationDiverged";
    case Errc::no_duality_map: return "NoDualityMap";
    case Errc::not_a_gift_horse: return "NotAGiftHorse";
    case Errc::supremum_undefined: return "SupremumUndefined";
    case Errc::carrier_too_large: return "CarrierTooLarge";
    case Errc::not_passable: return "NotPassable";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::too_large: return "TooLarge";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::fixture_parse_error: return "FixtureParseError";
    case Errc::invalid_payoff: return "InvalidPayoff";
    case Errc::invalid_board: return "InvalidBoard";
  }
  return "Error";
}

namespace {

// Backtracking search for an order-reversing involution d with d(top) = bot.
// Each element tries itself first, so fixed points are preferred.
class DualitySearch {
 public:
  explicit DualitySearch(const AtomPoset& p) : p_(p), map_(p.size(), kUnset), used_(p.size(), false) {}

  std::optional<std::vector<Atom>> run() {
    assign(p_.top(), p_.bot());
    assign(p_.bot(), p_.top());
    if (!consistent(p_.top()) || !consistent(p_.bot())) return std::nullopt;
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Atom kUnset = ~Atom{0};

  void assign(Atom x, Atom y) {
    map_[x] = y;
    map_[y] = x;
    used_[x] = used_[y] = true;
  }
  void unassign(Atom x) {
    Atom y = map_[x];
    map_[x] = map_[y] = kUnset;
    used_[x] = used_[y] = false;
  }

  bool consistent(Atom x) const {
    for (Atom y = 0; y < p_.size(); ++y) {
      if (map_[y] == kUnset) continue;
      if (p_.le(x, y) && !p_.le(map_[y], map_[x])) return false;
      if (p_.le(y, x) && !p_.le(map_[x], map_[y])) return false;
    }
    return true;
  }

  bool search(Atom x) {
    if (++steps_ > kMaxSteps) return false;
    while (x < p_.size() && map_[x] != kUnset) ++x;
    if (x == p_.size()) return true;
    std::vector<Atom> candidates{x};
    for (Atom y = 0; y < p_.size(); ++y)
      if (y != x && !used_[y]) candidates.push_back(y);
    for (Atom y : candidates) {
      assign(x, y);
      if (consistent(x) && consistent(y) && search(x + 1)) return true;
      unassign(x);
    }
    return false;
  }

  static constexpr long kMaxSteps = 1'000'000;
  const AtomPoset& p_;
  std::vector<Atom> map_;
  std::vector<bool> used_;
  long steps_ = 0;
};

}  // namespace

PosetRef AtomPoset::make(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  if (elements.empty()) throw Error(Errc::no_top_or_bottom, "empty element list");
  std::shared_ptr<AtomPoset> p(new AtomPoset());
  p->names_ = std::move(elements);
  const std::size_t n = p->names_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p->names_[i] == p->names_[j])
        throw Error(Errc::not_a_partial_order, "duplicate element '" + p->names_[i] + "'");
  p->le_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p->le_[i * n + i] = true;
  for (const auto& [x, y] : le_pairs) {
    Atom i = p->index(x);
    Atom j = p->index(y);
    p->le_[i * n + j] = true;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p->le_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p->le_[k * n + j]) p->le_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p->le_[i * n + j] && p->le_[j * n + i])
        throw Error(Errc::not_a_partial_order,
                    "cycle between '" + p->names_[i] + "' and '" + p->names_[j] + "'");
  p->finish(true);
  return p;
}

void AtomPoset::finish(bool search_duality) {
  const std::size_t n = names_.size();
  std::optional<Atom> top, bot;
  for (Atom x = 0; x < n; ++x) {
    bool is_top = true, is_bot = true;
    for (Atom y = 0; y < n; ++y) {
      is_top = is_top && le(y, x);
      is_bot = is_bot && le(x, y);
    }
    if (is_top) top = x;
    if (is_bot) bot = x;
  }
  if (!top || !bot) throw Error(Errc::no_top_or_bottom, "poset lacks a top or bottom element");
  top_ = *top;
  bot_ = *bot;
  if (search_duality) duality_ = DualitySearch(*this).run();
}

std::optional<Atom> AtomPoset::find(std::string_view name) const {
  for (Atom x = 0; x < names_.size(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

Atom AtomPoset::index(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(Errc::unknown_atom, "unknown atom '" + std::string(name) + "'");
}

std::optional<Atom> AtomPoset::join(std::span<const Atom> xs) const {
  const Atom n = static_cast<Atom>(size());
  std::vector<Atom> upper;
  for (Atom u = 0; u < n; ++u)
    if (std::all_of(xs.begin(), xs.end(), [&](Atom x) { return le(x, u); })) upper.push_back(u);
  for (Atom u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Atom v) { return le(u, v); })) return u;
  return std::nullopt;
}

bool AtomPoset::is_lattice() const {
  for (Atom x = 0; x < size(); ++x)
    for (Atom y = x + 1; y < size(); ++y) {
      const Atom xy[2] = {x, y};
      if (!join(xy)) return false;
    }
  return true;
}

Atom AtomPoset::pair(Atom x, Atom y) const {
  return static_cast<Atom>(x * factors_.second->size() + y);
}

std::pair<Atom, Atom> AtomPoset::unpair(Atom xy) const {
  const auto m = static_cast<Atom>(factors_.second->size());
  return {xy / m, xy % m};
}

std::optional<std::string> AtomPoset::builtin_name() const {
  for (const char* name : {"Bool", "P3", "P4"})
    if (same_as(*builtin(name))) return std::string(name);
  return std::nullopt;
}

bool same_poset(const PosetRef& a, const PosetRef& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

PosetRef product(const PosetRef& a, const PosetRef& b) {
  std::shared_ptr<AtomPoset> p(new AtomPoset());
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  p->factors_ = {a, b};
  p->names_.reserve(n);
  for (Atom x = 0; x < na; ++x)
    for (Atom y = 0; y < nb; ++y) p->names_.push_back("(" + a->name(x) + "," + b->name(y) + ")");
  p->le_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p->le_[i * n + j] = a->le(static_cast<Atom>(i / nb), static_cast<Atom>(j / nb)) &&
                          b->le(static_cast<Atom>(i % nb), static_cast<Atom>(j % nb));
  if (a->duality() && b->duality()) {
    std::vector<Atom> d(n);
    for (Atom x = 0; x < na; ++x)
      for (Atom y = 0; y < nb; ++y) d[x * nb + y] = (*a->duality())[x] * nb + (*b->duality())[y];
    p->duality_ = std::move(d);
  }
  p->finish(false);
  return p;
}

PosetRef builtin(std::string_view name) {
  static const PosetRef kBool = AtomPoset::make({"top", "bot"}, {{"bot", "top"}});
  static const PosetRef kP3 = AtomPoset::make({"top", "a", "bot"}, {{"bot", "a"}, {"a", "top"}});
  static const PosetRef kP4 = AtomPoset::make(
      {"top", "a", "b", "bot"}, {{"bot", "a"}, {"a", "top"}, {"bot", "b"}, {"b", "top"}});
  if (name == "Bool") return kBool;
  if (name == "P3") return kP3;
  if (name == "P4") return kP4;
  throw Error(Errc::unknown_poset, "unknown builtin poset '" + std::string(name) + "'");
}

PosetRef antichain_poset(const std::vector<std::string>& middle) {
  std::vector<std::string> names{"top"};
  std::vector<std::pair<std::string, std::string>> le;
  for (const auto& m : middle) {
    names.push_back(m);
    le.emplace_back("bot", m);
    le.emplace_back(m, "top");
  }
  names.push_back("bot");
  if (middle.empty()) le.emplace_back("bot", "top");
  return AtomPoset::make(std::move(names), le);
}

bool is_monotone_table(const AtomPoset& domain, const AtomPoset& codomain,
                       std::span<const Atom> table) {
  if (table.size() != domain.size()) return false;
  for (Atom y : table)
    if (y >= codomain.size()) return false;
  for (Atom x = 0; x < domain.size(); ++x)
    for (Atom y = 0; y < domain.size(); ++y)
      if (domain.le(x, y) && !codomain.le(table[x], table[y])) return false;
  return true;
}

MonotoneFn::MonotoneFn(PosetRef domain, PosetRef codomain, std::vector<Atom> table, std::string name)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)),
      name_(std::move(name)) {
  if (!is_monotone_table(*domain_, *codomain_, table_))
    throw Error(Errc::invalid_payoff, "function table is not total and monotone");
}

MonotoneFn identity_fn(const PosetRef& a) {
  std::vector<Atom> t(a->size());
  for (Atom x = 0; x < t.size(); ++x) t[x] = x;
  return MonotoneFn(a, a, std::move(t), "identity");
}

MonotoneFn projector_f(const PosetRef& a) {
  const PosetRef p3 = builtin("P3");
  const PosetRef dom = product(p3, a);
  const Atom top = p3->index("top"), mid = p3->index("a");
  std::vector<Atom> t(dom->size());
  for (Atom xy = 0; xy < t.size(); ++xy) {
    auto [x, y] = dom->unpair(xy);
    t[xy] = x == top ? a->top() : x == mid ? y : a->bot();
  }
  return MonotoneFn(dom, a, std::move(t), "projector_f");
}

MonotoneFn projector_g(const PosetRef& a) {
  const PosetRef p4 = builtin("P4");
  const PosetRef inner = product(p4, a);
  const PosetRef dom = product(inner, a);
  const Atom top = p4->index("top"), pa = p4->index("a"), pb = p4->index("b");
  std::vector<Atom> t(dom->size());
  for (Atom xyz = 0; xyz < t.size(); ++xyz) {
    auto [xy, z] = dom->unpair(xyz);
    auto [x, y] = inner->unpair(xy);
    t[xyz] = x == top ? a->top() : x == pa ? y : x == pb ? z : a->bot();
  }
  return MonotoneFn(dom, a, std::move(t), "projector_g");
}

}  // namespace scg
