#include "scg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "scg/board_io.hpp"
#include "scg/catalog.hpp"
#include "scg/notation.hpp"
#include "scg/realize.hpp"

namespace scg::cli {

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string poset = "P4";
  bool unicode = false;
  int max_cells = 16;
  std::uint64_t seed = 1;
  bool random = false;
};

PosetRef load_poset(const std::string& spec) {
  if (fs::is_regular_file(spec)) return poset_from_json(read_json(spec));
  return builtin(spec);
}

bool looks_like_file(const std::string& s) { return s.ends_with(".scg") || s.ends_with(".json") || fs::is_regular_file(s); }

// A game from notation, from a board file (its value), or from the random generator.
Game load_game(SolverContext& ctx, const Flags& f, const std::string& text) {
  if (looks_like_file(text)) return eval(ctx, read_board(text), EvalOptions{f.max_cells});
  return parse_game(ctx, text, load_poset(f.poset));
}

Game random_game(SolverContext& ctx, const Flags& f, bool passable) {
  RandomGames rg(f.seed, {});
  const PosetRef p = load_poset(f.poset);
  return passable ? rg.passable(ctx, p) : rg.game(ctx, p);
}

int answer(std::ostream& out, bool b) {
  out << (b ? "true" : "false") << "\n";
  return b ? 0 : 1;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw Error(Errc::invalid_board, "cannot write " + path);
  o << text << "\n";
}

bool parse_shard(const std::string& s, EnumOptions& e) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return false;
  try {
    e.shard = std::stoi(s.substr(0, slash));
    e.shards = std::stoi(s.substr(slash + 1));
  } catch (const std::exception&) {
    return false;
  }
  return e.shards >= 1 && e.shard >= 0 && e.shard < e.shards;
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::not_passable:
    case Errc::verification_failed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Values, order and realization of monotone set coloring games"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Flags f;
  app.add_option("--poset", f.poset, "Builtin poset (Bool, P3, P4) or a poset JSON file")->capture_default_str();
  app.add_flag("--unicode", f.unicode, "Print values with unicode symbols");
  app.add_option("--max-cells", f.max_cells, "Evaluation cap on carrier size")->capture_default_str();
  app.add_option("--seed", f.seed, "Seed for --random")->capture_default_str();

  std::string g1, g2, target, output, report_path, snapshot, shard = "0/1";
  std::vector<std::string> merge_files;
  bool passable = false, monotone = false, verify_flag = false;
  int n = 3;

  auto* value = app.add_subcommand("value", "Print the simplified value of a game or board");
  value->add_option("game", g1, "Notation or .scg board");
  value->add_flag("--random", f.random, "Use a random game drawn with --seed");

  auto* leq = app.add_subcommand("leq", "Decide G <= H");
  leq->add_option("G", g1)->required();
  leq->add_option("H", g2)->required();

  auto* equiv = app.add_subcommand("equiv", "Decide G == H up to equivalence");
  equiv->add_option("G", g1)->required();
  equiv->add_option("H", g2)->required();

  auto* check = app.add_subcommand("check", "Decide a global property of a game");
  check->add_option("game", g1);
  auto* kind = check->add_option_group("property");
  kind->add_flag("--passable", passable);
  kind->add_flag("--monotone", monotone);
  kind->require_option(1);
  check->add_flag("--random", f.random, "Use a random game drawn with --seed");

  auto* evalc = app.add_subcommand("eval", "Value of a board file");
  evalc->add_option("board", target)->required();
  std::string position;
  evalc->add_option("--position", position, "Start position, e.g. 1*0*");

  auto* realizec = app.add_subcommand("realize", "Synthesize a board for a passable game");
  realizec->add_option("game", g1);
  realizec->add_flag("--random", f.random, "Use a random passable game drawn with --seed");
  realizec->add_flag("--verify", verify_flag, "Check the board by exhaustive evaluation");
  realizec->add_option("-o", output, "Write the board to this .scg file");
  realizec->add_option("--report", report_path, "Write the JSON report to this file");

  auto* appendix = app.add_subcommand("verify-appendix", "Check every entry of a fixture file");
  appendix->add_option("fixture", target)->required();

  auto* catalogc = app.add_subcommand("catalog", "Enumerate board values by cell count");
  catalogc->add_option("-n", n, "Maximum cell count")->capture_default_str();
  catalogc->add_option("--shard", shard, "Shard i/k of the enumeration (enables 5 cells)");
  catalogc->add_option("--snapshot", snapshot, "Periodic snapshot file, resumed if present");
  catalogc->add_option("--merge", merge_files, "Merge catalog JSON files instead of enumerating");
  catalogc->add_option("-o", output, "Write the catalog here instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    SolverContext ctx;
    auto print = [&](Game g) { out << to_notation(ctx, g, f.unicode) << "\n"; };
    auto pick = [&](bool want_passable) {
      if (f.random) return random_game(ctx, f, want_passable);
      if (g1.empty()) throw CLI::RequiredError("game");
      return load_game(ctx, f, g1);
    };

    if (value->parsed()) {
      print(ctx.simplify(pick(false)));
      return 0;
    }
    if (leq->parsed()) return answer(out, ctx.leq(load_game(ctx, f, g1), load_game(ctx, f, g2)));
    if (equiv->parsed()) return answer(out, ctx.equiv(load_game(ctx, f, g1), load_game(ctx, f, g2)));
    if (check->parsed()) {
      const Game g = pick(false);
      return answer(out, passable ? ctx.is_passable(g) : ctx.is_monotone(g));
    }
    if (evalc->parsed()) {
      const SetColoringGame board = read_board(target);
      const EvalOptions eo{f.max_cells};
      print(position.empty() ? eval(ctx, board, eo) : eval_position(ctx, board, parse_position(position), eo));
      return 0;
    }
    if (realizec->parsed()) {
      const Game g = pick(true);
      RealizeOptions ro;
      ro.verify = verify_flag;
      ro.verify_cap = std::min(f.max_cells, 14);
      const RealizationReport r = realize(ctx, g, ro);
      json rep{{"input", to_notation(ctx, g)},
               {"cells", r.carrier_size},
               {"bound", r.bound},
               {"verified", verification_name(r.verified)}};
      if (!output.empty()) {
        write_board(output, r.board);
      } else {
        rep["board"] = board_to_json(r.board);
      }
      if (!report_path.empty()) write_text(report_path, rep.dump(2));
      out << rep.dump(2) << "\n";
      return 0;
    }
    if (appendix->parsed()) {
      const AppendixFixture fx = read_fixture(target);
      bool all = true;
      for (const AppendixCheck& c : verify_appendix(ctx, fx)) {
        out << c.cells << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.value;
        if (!c.pass) out << "  got " << c.detail;
        out << "\n";
        all = all && c.pass;
      }
      return all ? 0 : 1;
    }
    if (catalogc->parsed()) {
      ValueCatalog cat;
      if (!merge_files.empty()) {
        cat = catalog_from_json(ctx, read_json(merge_files.front()));
        for (std::size_t i = 1; i < merge_files.size(); ++i)
          merge_catalog(ctx, cat, catalog_from_json(ctx, read_json(merge_files[i])));
      } else {
        CatalogOptions co;
        if (!parse_shard(shard, co.enumeration)) throw CLI::ValidationError("--shard", "expected i/k");
        co.enumeration.sharded = catalogc->count("--shard") > 0;
        if (!snapshot.empty()) co.snapshot = snapshot;
        co.eval.max_cells = f.max_cells;
        cat = build_catalog(ctx, n, load_poset(f.poset), co);
      }
      const std::string text = catalog_to_json(ctx, cat).dump(1);
      if (output.empty())
        out << text << "\n";
      else
        write_text(output, text);
      return 0;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace scg::cli
