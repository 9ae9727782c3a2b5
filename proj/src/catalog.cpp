#include "scg/catalog.hpp"

#include <array>
#include <fstream>
#include <mutex>

#include "scg/notation.hpp"

namespace scg {

namespace {

constexpr int kMaxEnumCells = 5;

// Monotone boolean functions on n variables as truth tables (bit S = f(S)).
// f = x_{n-1} ? f1 : f0 with f0 <= f1.
std::vector<std::uint64_t> monotone_tables(int n) {
  if (n == 0) return {0, 1};
  const std::vector<std::uint64_t> prev = monotone_tables(n - 1);
  const int half = 1 << (n - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t f1 : prev)
    for (std::uint64_t f0 : prev)
      if ((f0 & ~f1) == 0) out.push_back(f0 | f1 << half);
  return out;
}

std::vector<CellMask> minimal_sets(std::uint64_t table, int n) {
  std::vector<CellMask> out;
  for (CellMask s = 0; s < (CellMask{1} << n); ++s) {
    if (!(table >> s & 1u)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if ((s >> i & 1u) && (table >> (s & ~(CellMask{1} << i)) & 1u)) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<std::string> cell_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("c" + std::to_string(i));
  return v;
}

[[noreturn]] void fixture_error(const std::string& msg) { throw Error(Errc::fixture_parse_error, msg); }

// Exact handle match first; equivalence scan otherwise.
std::optional<std::size_t> find_equiv(SolverContext& ctx, const std::vector<Game>& xs, Game g) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == g) return i;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (ctx.equiv(xs[i], g)) return i;
  return std::nullopt;
}

struct Snapshot {
  int cells = 0;
  std::uint64_t next = 0;
  bool done = false;
};

void write_snapshot(SolverContext& ctx, const std::filesystem::path& path, int n, const EnumOptions& e,
                    const Snapshot& s, const ValueCatalog& c) {
  json j{{"n", n}, {"shard", e.shard}, {"shards", e.shards}, {"cells", s.cells},
         {"next", s.next}, {"done", s.done}, {"catalog", catalog_to_json(ctx, c)}};
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(Errc::invalid_board, "cannot write snapshot " + tmp.string());
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

const std::vector<std::vector<CellMask>>& antichains(int n) {
  if (n < 0 || n > kMaxEnumCells) throw Error(Errc::too_large, "antichain enumeration supports at most 5 cells");
  static std::array<std::vector<std::vector<CellMask>>, kMaxEnumCells + 1> cache;
  static std::array<std::once_flag, kMaxEnumCells + 1> once;
  std::call_once(once[n], [n] {
    for (std::uint64_t t : monotone_tables(n)) cache[n].push_back(minimal_sets(t, n));
  });
  return cache[n];
}

std::vector<Atom> generators(const AtomPoset& p) {
  std::vector<Atom> out;
  for (Atom x = 0; x < p.size(); ++x) {
    if (x == p.bot()) continue;
    std::vector<Atom> below;
    for (Atom y = 0; y < p.size(); ++y)
      if (y != x && p.le(y, x)) below.push_back(y);
    const auto j = p.join(below);
    if (!j || *j != x) out.push_back(x);
  }
  return out;
}

std::uint64_t payoff_board_count(int n, const AtomPoset& p) {
  const std::uint64_t m = antichains(n).size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < generators(p).size(); ++i) total *= m;
  return total;
}

SetColoringGame payoff_board(int n, const PosetRef& p, std::uint64_t index) {
  const auto& ac = antichains(n);
  const std::vector<Atom> gens = generators(*p);
  std::vector<ThresholdEntry> entries;
  for (Atom g : gens) {
    entries.push_back({g, ac[index % ac.size()]});
    index /= ac.size();
  }
  return SetColoringGame(p, cell_names(n), PayoffExpr::threshold(p, n, std::move(entries)));
}

void enum_payoffs(int n, const PosetRef& p, const std::function<void(std::uint64_t, const SetColoringGame&)>& visit,
                  EnumOptions opts) {
  const int cap = opts.sharded ? kMaxEnumCells : std::min(opts.max_cells, kMaxEnumCells);
  if (n < 0 || n > cap)
    throw Error(Errc::too_large, std::to_string(n) + " cells exceeds the enumeration cap of " + std::to_string(cap));
  if (opts.shards < 1 || opts.shard < 0 || opts.shard >= opts.shards) throw Error(Errc::too_large, "bad shard spec");
  const std::uint64_t total = payoff_board_count(n, *p);
  for (std::uint64_t i = opts.shard; i < total; i += opts.shards) visit(i, payoff_board(n, p, i));
}

std::optional<std::size_t> ValueCatalog::find(SolverContext& ctx, Game g) const {
  std::vector<Game> xs;
  for (const auto& e : entries) xs.push_back(e.value);
  return find_equiv(ctx, xs, g);
}

bool ValueCatalog::insert(SolverContext& ctx, Game g, const SetColoringGame& witness, int cells) {
  if (auto i = find(ctx, g)) {
    if (cells < entries[*i].cells) entries[*i] = CatalogEntry{entries[*i].value, witness, cells};
    return false;
  }
  entries.push_back(CatalogEntry{g, witness, cells});
  return true;
}

ValueCatalog build_catalog(SolverContext& ctx, int n, const PosetRef& p, CatalogOptions opts) {
  ValueCatalog cat{p, {}};
  Snapshot snap;
  if (opts.snapshot && std::filesystem::exists(*opts.snapshot)) {
    const json j = read_json(*opts.snapshot);
    if (j.at("n") != n || j.at("shard") != opts.enumeration.shard || j.at("shards") != opts.enumeration.shards)
      throw Error(Errc::invalid_board, "snapshot " + opts.snapshot->string() + " is for a different run");
    cat = catalog_from_json(ctx, j.at("catalog"));
    cat.poset = p;
    snap = Snapshot{j.at("cells").get<int>(), j.at("next").get<std::uint64_t>(), j.at("done").get<bool>()};
    if (snap.done) return cat;
  }
  std::uint64_t since = 0;
  for (int k = snap.cells; k <= n; ++k) {
    const std::uint64_t start = k == snap.cells ? snap.next : 0;
    enum_payoffs(
        k, p,
        [&](std::uint64_t i, const SetColoringGame& board) {
          if (i < start) return;
          cat.insert(ctx, eval(ctx, board, opts.eval), board, k);
          if (opts.snapshot && ++since >= opts.snapshot_every) {
            since = 0;
            write_snapshot(ctx, *opts.snapshot, n, opts.enumeration, Snapshot{k, i + 1, false}, cat);
          }
        },
        opts.enumeration);
  }
  if (opts.snapshot) write_snapshot(ctx, *opts.snapshot, n, opts.enumeration, Snapshot{n, 0, true}, cat);
  return cat;
}

ValueCatalog build_catalog(SolverContext& ctx, int n) { return build_catalog(ctx, n, builtin("P4")); }

void merge_catalog(SolverContext& ctx, ValueCatalog& a, const ValueCatalog& b) {
  for (const auto& e : b.entries) a.insert(ctx, e.value, e.witness, e.cells);
}

json catalog_to_json(SolverContext& ctx, const ValueCatalog& c) {
  json out = json::array();
  for (const auto& e : c.entries)
    out.push_back({{"value", to_notation(ctx, e.value)}, {"cells", e.cells}, {"board", board_to_json(e.witness)}});
  return out;
}

ValueCatalog catalog_from_json(SolverContext& ctx, const json& j) {
  ValueCatalog c{builtin("P4"), {}};
  if (!j.is_array()) throw Error(Errc::invalid_board, "catalog must be a JSON array");
  for (const json& e : j) {
    SetColoringGame board = board_from_json(e.at("board"));
    c.poset = board.poset();
    const Game v = parse_game(ctx, e.at("value").get<std::string>(), board.poset());
    c.entries.push_back(CatalogEntry{v, std::move(board), e.at("cells").get<int>()});
  }
  return c;
}

AppendixFixture fixture_from_json(const json& j) {
  try {
    AppendixFixture f{poset_from_json(j.at("poset")), {}};
    if (!f.poset->find("a") || !f.poset->find("b")) fixture_error("fixture poset needs atoms a and b");
    for (const json& s : j.at("sections")) {
      FixtureSection sec{s.at("cells").get<int>(), s.value("forced_forms", false), {}};
      if (sec.cells < 0 || sec.cells > 64) fixture_error("bad section cell count");
      for (const json& e : s.at("entries")) {
        FixtureEntry fe{e.at("value").get<std::string>(), e.at("a").get<std::vector<std::string>>(),
                        e.at("b").get<std::vector<std::string>>()};
        for (const auto* list : {&fe.a, &fe.b}) {
          std::vector<CellMask> masks;
          for (const std::string& p : *list) {
            if (static_cast<int>(p.size()) != sec.cells || p.find_first_not_of("01") != std::string::npos)
              fixture_error("pattern '" + p + "' of " + fe.value + " does not fit " + std::to_string(sec.cells) +
                            " cells");
            masks.push_back(parse_pattern(p));
          }
          for (CellMask x : masks)
            for (CellMask y : masks)
              if (x != y && (x & y) == x) fixture_error("patterns of " + fe.value + " are not an antichain");
        }
        sec.entries.push_back(std::move(fe));
      }
      f.sections.push_back(std::move(sec));
    }
    std::sort(f.sections.begin(), f.sections.end(),
              [](const FixtureSection& x, const FixtureSection& y) { return x.cells < y.cells; });
    return f;
  } catch (const json::exception& e) {
    fixture_error(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::fixture_parse_error) throw;
    fixture_error(e.what());
  }
}

AppendixFixture read_fixture(const std::filesystem::path& path) {
  try {
    return fixture_from_json(read_json(path));
  } catch (const Error& e) {
    if (e.code() == Errc::fixture_parse_error) throw;
    fixture_error(e.what());
  }
}

SetColoringGame fixture_board(const AppendixFixture& f, int cells, const FixtureEntry& e) {
  auto masks = [](const std::vector<std::string>& ps) {
    std::vector<CellMask> out;
    for (const auto& p : ps) out.push_back(parse_pattern(p));
    return out;
  };
  try {
    return SetColoringGame(f.poset, cell_names(cells),
                           PayoffExpr::threshold(f.poset, cells,
                                                 {{f.poset->index("a"), masks(e.a)}, {f.poset->index("b"), masks(e.b)}}));
  } catch (const Error& err) {
    fixture_error(e.value + ": " + err.what());
  }
}

std::vector<Game> expand_fixture(SolverContext& ctx, const AppendixFixture& f, int n) {
  std::vector<Game> all;
  auto add = [&](Game g) {
    g = ctx.simplify(g);
    if (!find_equiv(ctx, all, g)) all.push_back(g);
  };
  auto add_closed = [&](Game g) {
    const Game s = ctx.swap_ab(g);
    for (Game x : {g, s, ctx.dual(g), ctx.dual(s)}) add(x);
  };
  for (const FixtureSection& sec : f.sections) {
    if (sec.cells > n) break;
    const std::vector<Game> prev = all;
    for (const FixtureEntry& e : sec.entries) add_closed(parse_game(ctx, e.value, f.poset));
    if (sec.forced_forms)
      for (Game g : prev) {
        add_closed(ctx.composite({ctx.top(f.poset)}, {g}));
        add_closed(ctx.composite({g}, {ctx.bot(f.poset)}));
      }
  }
  return all;
}

std::vector<AppendixCheck> verify_appendix(SolverContext& ctx, const AppendixFixture& f) {
  std::vector<AppendixCheck> out;
  for (const FixtureSection& sec : f.sections)
    for (const FixtureEntry& e : sec.entries) {
      AppendixCheck c{sec.cells, e.value, false, {}};
      try {
        const Game expected = parse_game(ctx, e.value, f.poset);
        const Game got = eval(ctx, fixture_board(f, sec.cells, e));
        c.pass = ctx.equiv(expected, got);
        c.detail = to_notation(ctx, got);
      } catch (const Error& err) {
        c.detail = err.what();
      }
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Game> missing_from(SolverContext& ctx, const std::vector<Game>& a, const std::vector<Game>& b) {
  std::vector<Game> out;
  for (Game g : a)
    if (!find_equiv(ctx, b, g)) out.push_back(g);
  return out;
}

}  // namespace scg
