#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scg {

/// Index of an element within its AtomPoset.
using Atom = std::uint32_t;

class AtomPoset;
using PosetRef = std::shared_ptr<const AtomPoset>;

/// A finite partial order with a top and a bottom element. Immutable once
/// built; the order is kept as a dense reflexive-transitive matrix.
class AtomPoset {
 public:
  /// Builds a poset from element names and generating pairs (x <= y).
  /// Takes the reflexive-transitive closure, rejects cycles and requires
  /// a unique top and bottom.
  static PosetRef make(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& le_pairs);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Atom x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Atom> find(std::string_view name) const;
  /// Like find, but throws Errc::unknown_atom.
  Atom index(std::string_view name) const;

  bool le(Atom x, Atom y) const noexcept { return le_[x * names_.size() + y]; }
  Atom top() const noexcept { return top_; }
  Atom bot() const noexcept { return bot_; }

  /// Least upper bound of a set of elements (bot for the empty set), or
  /// nullopt when no least upper bound exists.
  std::optional<Atom> join(std::span<const Atom> xs) const;
  /// True when every pair of elements has a join.
  bool is_lattice() const;

  /// An order-reversing involution exchanging top and bottom, if one exists.
  const std::optional<std::vector<Atom>>& duality() const noexcept { return duality_; }

  bool is_product() const noexcept { return factors_.first != nullptr; }
  const PosetRef& first_factor() const noexcept { return factors_.first; }
  const PosetRef& second_factor() const noexcept { return factors_.second; }
  /// Element (x, y) of a product poset.
  Atom pair(Atom x, Atom y) const;
  std::pair<Atom, Atom> unpair(Atom xy) const;

  /// Name of the builtin poset this one is structurally equal to, if any.
  std::optional<std::string> builtin_name() const;

  /// Structural equality: same element names in the same order and same order relation.
  bool same_as(const AtomPoset& other) const noexcept {
    return this == &other || (names_ == other.names_ && le_ == other.le_);
  }

 private:
  AtomPoset() = default;
  void finish(bool search_duality);

  std::vector<std::string> names_;
  std::vector<bool> le_;
  Atom top_ = 0;
  Atom bot_ = 0;
  std::optional<std::vector<Atom>> duality_;
  std::pair<PosetRef, PosetRef> factors_;

  friend PosetRef product(const PosetRef& a, const PosetRef& b);
  friend PosetRef builtin(std::string_view name);
};

bool same_poset(const PosetRef& a, const PosetRef& b) noexcept;

/// Cartesian product with the componentwise order. Elements are named "(x,y)".
PosetRef product(const PosetRef& a, const PosetRef& b);

/// Bool = {top, bot}; P3 = bot < a < top; P4 = diamond on {top, a, b, bot}.
PosetRef builtin(std::string_view name);

/// Top and bottom around the given pairwise incomparable middle elements.
PosetRef antichain_poset(const std::vector<std::string>& middle);

/// Total monotone map between atom posets, stored as a table.
class MonotoneFn {
 public:
  /// Throws Errc::invalid_payoff when the table is not total or not monotone.
  MonotoneFn(PosetRef domain, PosetRef codomain, std::vector<Atom> table, std::string name = {});

  const PosetRef& domain() const noexcept { return domain_; }
  const PosetRef& codomain() const noexcept { return codomain_; }
  const std::vector<Atom>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  Atom operator()(Atom x) const { return table_.at(x); }

 private:
  PosetRef domain_;
  PosetRef codomain_;
  std::vector<Atom> table_;
  std::string name_;
};

/// Pairwise check x <= y => f(x) <= f(y).
bool is_monotone_table(const AtomPoset& domain, const AtomPoset& codomain,
                       std::span<const Atom> table);

MonotoneFn identity_fn(const PosetRef& a);

/// P3 x A -> A: (top,y) -> top, (a,y) -> y, (bot,y) -> bot.
MonotoneFn projector_f(const PosetRef& a);

/// (P4 x A) x A -> A: top -> top, a -> y, b -> z, bot -> bot in the first component.
MonotoneFn projector_g(const PosetRef& a);

}  // namespace scg
