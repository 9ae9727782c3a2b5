#include "scg/notation.hpp"

#include <algorithm>
#include <cctype>

namespace scg {

namespace {

constexpr std::string_view kTopSymbol = "⊤";
constexpr std::string_view kBotSymbol = "⊥";

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

class Parser {
 public:
  Parser(SolverContext& ctx, std::string_view text, const PosetRef& poset)
      : ctx_(ctx), text_(text), poset_(poset) {}

  Game parse() {
    Game g = game();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::syntax_error, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Game game() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '{') {
      ++pos_;
      std::vector<Game> l = list('|');
      ++pos_;
      std::vector<Game> r = list('}');
      ++pos_;
      return ctx_.composite(std::move(l), std::move(r));
    }
    return atom();
  }

  std::vector<Game> list(char terminator) {
    std::vector<Game> out;
    if (peek(terminator)) fail("empty option list");
    for (;;) {
      out.push_back(game());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek(terminator)) return out;
      fail(std::string("expected ',' or '") + terminator + "'");
    }
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' ||
           c == '-' || (static_cast<unsigned char>(c) & 0x80);
  }

  Game atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (text_[pos_] == '(') {
      int depth = 0;
      do {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      } while (pos_ < text_.size() && depth > 0);
      if (depth != 0) fail("unbalanced parentheses in atom");
    } else {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    if (pos_ == start) fail("expected an atom or '{'");
    std::string name(text_.substr(start, pos_ - start));
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               name.end());
    name = replace_all(replace_all(name, kTopSymbol, "top"), kBotSymbol, "bot");
    if (auto a = poset_->find(name)) return ctx_.atomic(*a, poset_);
    if (name == "top") return ctx_.top(poset_);
    if (name == "bot") return ctx_.bot(poset_);
    throw Error(Errc::unknown_atom, "unknown atom '" + name + "' at offset " + std::to_string(start));
  }

  SolverContext& ctx_;
  std::string_view text_;
  PosetRef poset_;
  std::size_t pos_ = 0;
};

void print(const SolverContext& ctx, Game g, bool unicode, std::string& out) {
  if (ctx.is_atomic(g)) {
    const PosetRef& p = ctx.poset(g);
    const Atom a = ctx.atom(g);
    if (a == p->top())
      out += unicode ? kTopSymbol : "top";
    else if (a == p->bot())
      out += unicode ? kBotSymbol : "bot";
    else
      out += unicode ? replace_all(replace_all(p->name(a), "top", kTopSymbol), "bot", kBotSymbol)
                     : p->name(a);
    return;
  }
  out += '{';
  bool first = true;
  for (Game o : ctx.left(g)) {
    if (!first) out += ',';
    first = false;
    print(ctx, o, unicode, out);
  }
  out += '|';
  first = true;
  for (Game o : ctx.right(g)) {
    if (!first) out += ',';
    first = false;
    print(ctx, o, unicode, out);
  }
  out += '}';
}

}  // namespace

Game parse_game(SolverContext& ctx, std::string_view text, const PosetRef& poset) {
  return Parser(ctx, text, poset).parse();
}

std::string to_notation(const SolverContext& ctx, Game g, bool unicode) {
  std::string out;
  print(ctx, g, unicode, out);
  return out;
}

}  // namespace scg
