#include "scg/board_io.hpp"

#include <fstream>

namespace scg {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::invalid_board, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Atom atom_of(const PosetRef& p, const json& j) {
  const std::string name = str(j, "atom");
  auto a = p->find(name);
  if (!a) throw Error(Errc::unknown_atom, "unknown atom '" + name + "'");
  return *a;
}

bool is_named(const MonotoneFn& f, const char* name, const MonotoneFn& expected) {
  return f.name() == name && f.table() == expected.table();
}

json payoff_to_json(const PayoffExpr& e) {
  const AtomPoset& p = *e.poset();
  switch (e.kind()) {
    case PayoffExpr::Kind::constant:
      return {{"const", p.name(e.constant_value())}};
    case PayoffExpr::Kind::threshold: {
      json t = json::object();
      for (const ThresholdEntry& en : e.threshold_entries()) {
        json sets = json::array();
        for (CellMask m : en.sets) sets.push_back(pattern_string(m, e.threshold_cells()));
        t[p.name(en.atom)] = std::move(sets);
      }
      return {{"threshold", std::move(t)}};
    }
    case PayoffExpr::Kind::compose: {
      const MonotoneFn& f = e.fn();
      const PosetRef& a = e.poset();
      json fn;
      bool explicit_posets = false;
      if (is_named(f, "projector_f", projector_f(a)) && same_poset(f.domain(), projector_f(a).domain())) {
        fn = "projector_f";
      } else if (is_named(f, "projector_g", projector_g(a)) && same_poset(f.domain(), projector_g(a).domain())) {
        fn = "projector_g";
      } else if (f.name() == "pair" && e.children().size() == 2 && same_poset(f.domain(), a) &&
                 f.table() == identity_fn(a).table()) {
        fn = "pair";
      } else if (f.name() == "identity" && e.children().size() == 1 && same_poset(f.domain(), a) &&
                 f.table() == identity_fn(a).table()) {
        fn = "identity";
      } else {
        json table = json::array();
        for (Atom x = 0; x < f.domain()->size(); ++x)
          table.push_back({f.domain()->name(x), f.codomain()->name(f(x))});
        fn = {{"table", std::move(table)}};
        explicit_posets = true;
      }
      json children = json::array();
      for (const ComposeChild& c : e.children()) {
        json cj{{"payoff", payoff_to_json(*c.payoff)}, {"cells", c.cells}};
        if (explicit_posets) cj["poset"] = poset_to_json(c.payoff->poset());
        children.push_back(std::move(cj));
      }
      return {{"compose", {{"fn", std::move(fn)}, {"children", std::move(children)}}}};
    }
    case PayoffExpr::Kind::dual:
      return {{"dual", payoff_to_json(*e.child())}};
  }
  return {};
}

PayoffRef payoff_from_json(const json& j, const PosetRef& p, int ncells);

// Child posets implied by a named function with codomain p.
std::vector<PosetRef> implied_posets(const std::string& fn, const PosetRef& p, std::size_t nchildren) {
  if (fn == "projector_f") return {builtin("P3"), p};
  if (fn == "projector_g") return {builtin("P4"), p, p};
  if (fn == "identity") return {p};
  if (fn == "pair") {
    if (nchildren < 2) bad("pair needs at least two children");
    std::vector<PosetRef> out(nchildren);
    PosetRef cur = p;
    for (std::size_t i = nchildren - 1; i > 0; --i) {
      if (!cur->is_product()) bad("pair: board poset is not a product of the children's posets");
      out[i] = cur->second_factor();
      cur = cur->first_factor();
    }
    out[0] = cur;
    return out;
  }
  bad("unknown function '" + fn + "'");
}

PayoffRef compose_from_json(const json& c, const PosetRef& p, int ncells) {
  const json& fnj = field(c, "fn");
  const json& chj = field(c, "children");
  if (!chj.is_array() || chj.empty()) bad("compose children must be a non-empty array");
  std::vector<PosetRef> posets(chj.size());
  if (fnj.is_string()) posets = implied_posets(fnj.get<std::string>(), p, chj.size());
  if (posets.size() != chj.size()) bad("wrong number of children for '" + str(fnj, "fn") + "'");
  for (std::size_t i = 0; i < chj.size(); ++i)
    if (chj[i].is_object() && chj[i].contains("poset")) posets[i] = poset_from_json(chj[i]["poset"]);
  for (const PosetRef& q : posets)
    if (!q) bad("a table function needs an explicit poset on every child");

  std::vector<ComposeChild> children;
  for (std::size_t i = 0; i < chj.size(); ++i) {
    const json& cells = field(chj[i], "cells");
    if (!cells.is_array()) bad("child cells must be an array");
    std::vector<int> idx;
    for (const json& x : cells) {
      if (!x.is_number_integer()) bad("child cells must be integers");
      const int k = x.get<int>();
      if (k < 0 || k >= ncells) bad("child cell index " + std::to_string(k) + " out of range");
      idx.push_back(k);
    }
    children.push_back({payoff_from_json(field(chj[i], "payoff"), posets[i], static_cast<int>(idx.size())),
                        std::move(idx)});
  }

  PosetRef domain = posets[0];
  for (std::size_t i = 1; i < posets.size(); ++i) domain = product(domain, posets[i]);
  if (fnj.is_string()) {
    const std::string name = fnj.get<std::string>();
    if (name == "projector_f") return PayoffExpr::compose(projector_f(p), std::move(children));
    if (name == "projector_g") return PayoffExpr::compose(projector_g(p), std::move(children));
    if (name == "identity") return PayoffExpr::compose(identity_fn(p), std::move(children));
    return PayoffExpr::compose(MonotoneFn(p, p, identity_fn(p).table(), "pair"), std::move(children));
  }
  const json& table = field(fnj, "table");
  if (!table.is_array()) bad("function table must be an array of [x, y] pairs");
  std::vector<Atom> t(domain->size(), ~Atom{0});
  for (const json& row : table) {
    if (!row.is_array() || row.size() != 2) bad("function table rows are [x, y] pairs");
    t.at(atom_of(domain, row[0])) = atom_of(p, row[1]);
  }
  for (Atom y : t)
    if (y == ~Atom{0}) bad("function table does not cover the whole domain");
  return PayoffExpr::compose(MonotoneFn(domain, p, std::move(t)), std::move(children));
}

PayoffRef payoff_from_json(const json& j, const PosetRef& p, int ncells) {
  if (!j.is_object() || j.size() != 1) bad("payoff must be an object with exactly one key");
  if (j.contains("const")) return PayoffExpr::constant(p, atom_of(p, j["const"]));
  if (j.contains("dual")) return PayoffExpr::dual(payoff_from_json(j["dual"], p, ncells));
  if (j.contains("compose")) return compose_from_json(j["compose"], p, ncells);
  if (j.contains("threshold")) {
    const json& t = j["threshold"];
    if (!t.is_object()) bad("threshold must map atoms to pattern lists");
    std::vector<ThresholdEntry> entries;
    for (const auto& [name, sets] : t.items()) {
      ThresholdEntry e{atom_of(p, name), {}};
      if (!sets.is_array()) bad("threshold patterns for '" + name + "' must be an array");
      for (const json& s : sets) {
        const std::string bits = str(s, "pattern");
        if (static_cast<int>(bits.size()) != ncells)
          bad("pattern '" + bits + "' has length " + std::to_string(bits.size()) + ", expected " +
              std::to_string(ncells));
        e.sets.push_back(parse_pattern(bits));
      }
      entries.push_back(std::move(e));
    }
    return PayoffExpr::threshold(p, ncells, std::move(entries));
  }
  bad("unknown payoff kind '" + j.begin().key() + "'");
}

}  // namespace

json poset_to_json(const PosetRef& p) {
  if (auto b = p->builtin_name()) return {{"builtin", *b}};
  if (p->is_product()) return {{"product", {poset_to_json(p->first_factor()), poset_to_json(p->second_factor())}}};
  json le = json::array();
  for (Atom x = 0; x < p->size(); ++x)
    for (Atom y = 0; y < p->size(); ++y)
      if (x != y && p->le(x, y)) le.push_back({p->name(x), p->name(y)});
  return {{"elements", p->names()}, {"le", std::move(le)}};
}

PosetRef poset_from_json(const json& j) {
  if (j.is_string()) return builtin(j.get<std::string>());
  if (j.contains("builtin")) return builtin(str(j["builtin"], "builtin"));
  if (j.contains("product")) {
    const json& f = j["product"];
    if (!f.is_array() || f.size() != 2) bad("product takes exactly two posets");
    return product(poset_from_json(f[0]), poset_from_json(f[1]));
  }
  std::vector<std::string> elements;
  for (const json& e : field(j, "elements")) elements.push_back(str(e, "element"));
  std::vector<std::pair<std::string, std::string>> le;
  if (j.contains("le"))
    for (const json& pr : j["le"]) {
      if (!pr.is_array() || pr.size() != 2) bad("le entries are [x, y] pairs");
      le.emplace_back(str(pr[0], "element"), str(pr[1], "element"));
    }
  return AtomPoset::make(std::move(elements), le);
}

json board_to_json(const SetColoringGame& s) {
  return {{"poset", poset_to_json(s.poset())}, {"cells", s.cells()}, {"payoff", payoff_to_json(*s.payoff())}};
}

SetColoringGame board_from_json(const json& j) {
  const PosetRef p = poset_from_json(field(j, "poset"));
  std::vector<std::string> cells;
  for (const json& c : field(j, "cells")) cells.push_back(str(c, "cell name"));
  PayoffRef payoff = payoff_from_json(field(j, "payoff"), p, static_cast<int>(cells.size()));
  return SetColoringGame(p, std::move(cells), std::move(payoff));
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::syntax_error, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::syntax_error, path.string() + ": " + e.what());
  }
}

SetColoringGame read_board(const std::filesystem::path& path) { return board_from_json(read_json(path)); }

void write_board(const std::filesystem::path& path, const SetColoringGame& s) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_board, "cannot write " + path.string());
  out << board_to_json(s).dump(2) << "\n";
}

}  // namespace scg
