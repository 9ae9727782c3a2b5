#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scg/board_io.hpp"
#include "scg/game.hpp"
#include "scg/setcolor.hpp"

namespace scg {

/// All antichains of subsets of an n-element set, in a fixed canonical order.
/// Sizes 2, 3, 6, 20, 168, 7581 for n = 0..5.
const std::vector<std::vector<CellMask>>& antichains(int n);

/// Atoms that get their own antichain in an enumerated threshold payoff:
/// the join-irreducible elements (a and b for P4).
std::vector<Atom> generators(const AtomPoset& p);

struct EnumOptions {
  int max_cells = 4;
  /// Enumerate only boards whose index is congruent to shard mod shards.
  int shard = 0;
  int shards = 1;
  /// Sharded mode lifts the cell cap to 5.
  bool sharded = false;
};

/// Number of threshold boards on n cells: antichains(n).size() ^ generators.
std::uint64_t payoff_board_count(int n, const AtomPoset& p);

/// The board with the given index, 0 <= index < payoff_board_count.
SetColoringGame payoff_board(int n, const PosetRef& p, std::uint64_t index);

/// Visits every threshold board on exactly n cells (within the shard).
/// Throws too_large when n exceeds the configured cap.
void enum_payoffs(int n, const PosetRef& p, const std::function<void(std::uint64_t, const SetColoringGame&)>& visit,
                  EnumOptions opts = {});

struct CatalogEntry {
  Game value;
  SetColoringGame witness;
  int cells;
};

struct ValueCatalog {
  PosetRef poset;
  std::vector<CatalogEntry> entries;

  /// Index of an entry equivalent to g, if any.
  std::optional<std::size_t> find(SolverContext& ctx, Game g) const;
  /// Adds g unless an equivalent value is present; returns true if added.
  bool insert(SolverContext& ctx, Game g, const SetColoringGame& witness, int cells);
};

struct CatalogOptions {
  EnumOptions enumeration;
  /// Written every snapshot_every boards when set; an existing file is resumed from.
  std::optional<std::filesystem::path> snapshot;
  std::uint64_t snapshot_every = 100000;
  EvalOptions eval;
};

/// Distinct values of all threshold boards with at most n cells.
ValueCatalog build_catalog(SolverContext& ctx, int n, const PosetRef& p, CatalogOptions opts = {});
ValueCatalog build_catalog(SolverContext& ctx, int n);

/// Dedups b's entries into a, keeping the smaller cell count.
void merge_catalog(SolverContext& ctx, ValueCatalog& a, const ValueCatalog& b);

/// [{"value": notation, "cells": k, "board": {...}}, ...]
json catalog_to_json(SolverContext& ctx, const ValueCatalog& c);
ValueCatalog catalog_from_json(SolverContext& ctx, const json& j);

struct FixtureEntry {
  std::string value;
  std::vector<std::string> a, b;
};

struct FixtureSection {
  int cells;
  /// The section also contains <top|G> and <G|bot> for every G listed so far.
  bool forced_forms;
  std::vector<FixtureEntry> entries;
};

struct AppendixFixture {
  PosetRef poset;
  std::vector<FixtureSection> sections;
};

/// Throws fixture_parse_error.
AppendixFixture fixture_from_json(const json& j);
AppendixFixture read_fixture(const std::filesystem::path& path);

/// Threshold board of an entry; throws fixture_parse_error on malformed patterns.
SetColoringGame fixture_board(const AppendixFixture& f, int cells, const FixtureEntry& e);

/// All values the fixture accounts for with at most n cells: explicit entries,
/// forced forms of smaller values, closed under dual and a/b exchange.
std::vector<Game> expand_fixture(SolverContext& ctx, const AppendixFixture& f, int n);

struct AppendixCheck {
  int cells;
  std::string value;
  bool pass;
  std::string detail;  // computed value, or the error
};

std::vector<AppendixCheck> verify_appendix(SolverContext& ctx, const AppendixFixture& f);

/// Games in a not equivalent to any game in b.
std::vector<Game> missing_from(SolverContext& ctx, const std::vector<Game>& a, const std::vector<Game>& b);

}  // namespace scg
