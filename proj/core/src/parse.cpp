#include "clar/parse.hpp"

#include <cctype>
#include <map>

namespace clar {

namespace {

enum class Tok {
  Ident, Number, HashBits,
  LParen, RParen, Comma, Dot, Plus, Star, Prime, Caret, Bar,
  Eq, Le, Lt, Ge, Gt, Neq,
  Not, And, Or, Imp, Turnstile,
  All, Ex, Call, Cex, MeetSym, JoinSym,  // MeetSym/JoinSym: UTF-8 infix-or-quantifier
  Cand, Cor,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;
  std::vector<Token> out;

  explicit Lexer(const std::string& str) : s(str) {}

  bool match(const char* lit) {
    size_t n = std::char_traits<char>::length(lit);
    if (s.compare(i, n, lit) == 0) {
      i += n;
      return true;
    }
    return false;
  }

  void push(Tok k, size_t at, std::string text = "") { out.push_back({k, std::move(text), at}); }

  void run() {
    while (i < s.size()) {
      size_t at = i;
      char c = s[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { ++i; continue; }
      // UTF-8 synonyms.
      if (match("∧")) { push(Tok::And, at); continue; }      // ∧
      if (match("∨")) { push(Tok::Or, at); continue; }       // ∨
      if (match("→")) { push(Tok::Imp, at); continue; }      // →
      if (match("¬")) { push(Tok::Not, at); continue; }      // ¬
      if (match("∀")) { push(Tok::All, at); continue; }      // ∀
      if (match("∃")) { push(Tok::Ex, at); continue; }       // ∃
      if (match("⊓")) { push(Tok::MeetSym, at); continue; }  // ⊓
      if (match("⊔")) { push(Tok::JoinSym, at); continue; }  // ⊔
      if (match("≤")) { push(Tok::Le, at); continue; }       // ≤
      if (match("≠")) { push(Tok::Neq, at); continue; }      // ≠
      if (match("′")) { push(Tok::Prime, at); continue; }    // ′
      if (match("×")) { push(Tok::Star, at); continue; }     // ×
      if (match("->")) { push(Tok::Imp, at); continue; }
      if (match("|o-")) { push(Tok::Turnstile, at); continue; }
      if (match("<=")) { push(Tok::Le, at); continue; }
      if (match(">=")) { push(Tok::Ge, at); continue; }
      if (match("!=")) { push(Tok::Neq, at); continue; }
      switch (c) {
        case '(': push(Tok::LParen, at); ++i; continue;
        case ')': push(Tok::RParen, at); ++i; continue;
        case ',': push(Tok::Comma, at); ++i; continue;
        case '.': push(Tok::Dot, at); ++i; continue;
        case '+': push(Tok::Plus, at); ++i; continue;
        case '*': push(Tok::Star, at); ++i; continue;
        case '\'': push(Tok::Prime, at); ++i; continue;
        case '^': push(Tok::Caret, at); ++i; continue;
        case '|': push(Tok::Bar, at); ++i; continue;
        case '=': push(Tok::Eq, at); ++i; continue;
        case '<': push(Tok::Lt, at); ++i; continue;
        case '>': push(Tok::Gt, at); ++i; continue;
        case '~': push(Tok::Not, at); ++i; continue;
        case '&': push(Tok::And, at); ++i; continue;
        default: break;
      }
      if (c == '#') {
        size_t j = i + 1;
        std::string bits;
        while (j < s.size() && (s[j] == '0' || s[j] == '1')) bits.push_back(s[j++]);
        if (bits.empty()) throw ParseError("expected binary digits after '#'", at);
        i = j;
        push(Tok::HashBits, at, bits);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        std::string digits;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) digits.push_back(s[j++]);
        i = j;
        push(Tok::Number, at, digits);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        std::string word;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
          word.push_back(s[j++]);
        i = j;
        if (word == "all") push(Tok::All, at);
        else if (word == "ex") push(Tok::Ex, at);
        else if (word == "call") push(Tok::Call, at);
        else if (word == "cex") push(Tok::Cex, at);
        else if (word == "cand") push(Tok::Cand, at);
        else if (word == "cor") push(Tok::Cor, at);
        else push(Tok::Ident, at, word);
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
    push(Tok::End, s.size());
  }
};

class Parser {
public:
  Parser(const std::string& text, const ParseOptions& opts) : opts_(opts) {
    Lexer lx(text);
    lx.run();
    toks_ = std::move(lx.out);
  }

  const Token& peek(size_t ahead = 0) const {
    size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool check(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (check(k)) { advance(); return true; }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, peek().pos); }

  // ---- pseudo-terms ----

  PTerm pterm() {
    PTerm t = pprod();
    while (accept(Tok::Plus)) t = PTerm::sum(t, pprod());
    return t;
  }

  PTerm pprod() {
    PTerm t = ppost();
    while (accept(Tok::Star)) t = PTerm::prod(t, ppost());
    return t;
  }

  PTerm ppost() {
    PTerm t = pcore();
    for (;;) {
      if (accept(Tok::Prime)) {
        t = t.succ();
      } else if (check(Tok::Caret)) {
        advance();
        if (!check(Tok::Number)) fail("expected a decimal exponent after '^'");
        uint64_t k = std::stoull(advance().text);
        if (k == 0) fail("exponent must be positive");
        PTerm base = t;
        for (uint64_t j = 1; j < k; ++j) t = PTerm::prod(t, base);
      } else {
        break;
      }
    }
    return t;
  }

  PTerm pcore() {
    const Token& tk = peek();
    switch (tk.kind) {
      case Tok::Number: {
        advance();
        if (tk.text == "0") return PTerm::zero();
        if (tk.text == "2" && accept(Tok::Caret)) return PTerm::pow2(ppost());
        fail("numeric constants are written in binary as #" + tk.text +
             "; only 0 appears bare");
      }
      case Tok::HashBits: {
        advance();
        if (tk.text.size() > 1 && tk.text[0] == '0') fail("leading zeros in a binary numeral");
        return PTerm::constant(BigNat::from_binary(tk.text));
      }
      case Tok::Bar: {
        advance();
        PTerm inner = pterm();
        expect(Tok::Bar, "closing '|'");
        return PTerm::len(inner);
      }
      case Tok::LParen: {
        advance();
        PTerm t = pterm();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Ident: {
        advance();
        static const std::map<std::string, std::pair<PtKind, size_t>> calls = {
            {"monus", {PtKind::Monus, 2}}, {"half", {PtKind::Half, 1}},
            {"br0", {PtKind::Br0, 2}},     {"br1", {PtKind::Br1, 2}},
            {"bitsum", {PtKind::Bitsum, 4}}, {"carry", {PtKind::Carry, 3}},
        };
        auto it = calls.find(tk.text);
        if (it != calls.end()) {
          expect(Tok::LParen, "'(' after function name");
          std::vector<PTerm> args;
          for (size_t k = 0; k < it->second.second; ++k) {
            if (k) expect(Tok::Comma, "','");
            args.push_back(pterm());
          }
          expect(Tok::RParen, "')'");
          return PTerm::make(it->second.first, std::move(args));
        }
        return PTerm::var(tk.text);
      }
      default: fail("expected a term");
    }
  }

  // ---- formulas ----

  Formula formula() { return f_imp(); }

  bool at_quantifier() const {
    switch (peek().kind) {
      case Tok::All:
      case Tok::Ex:
      case Tok::Call:
      case Tok::Cex: return true;
      case Tok::MeetSym:
      case Tok::JoinSym: return true;  // prefix position
      default: return false;
    }
  }

  Formula f_imp() {
    if (at_quantifier()) return f_quantifier();
    Formula l = f_or();
    if (accept(Tok::Imp)) return Formula::imp(l, f_imp());
    return l;
  }

  Formula f_or() {
    Formula l = f_and();
    for (;;) {
      if (accept(Tok::Or)) l = Formula::disj(l, f_and());
      else if (accept(Tok::Cor) ) l = Formula::join(l, f_and());
      else if (check(Tok::JoinSym)) { advance(); l = Formula::join(l, f_and()); }
      else if (check(Tok::Bar)) {
        // '|' here is the or-connective, not a length delimiter.
        advance();
        l = Formula::disj(l, f_and());
      } else break;
    }
    return l;
  }

  Formula f_and() {
    Formula l = f_unary();
    for (;;) {
      if (accept(Tok::And)) l = Formula::conj(l, f_unary());
      else if (accept(Tok::Cand)) l = Formula::meet(l, f_unary());
      else if (check(Tok::MeetSym)) { advance(); l = Formula::meet(l, f_unary()); }
      else break;
    }
    return l;
  }

  Formula f_unary() {
    if (accept(Tok::Not)) {
      size_t at = peek().pos;
      Formula f = f_unary();
      if (f.is_elementary()) return Formula::negation(f);
      if (opts_.normalize) return negate_normalized(f);
      throw ParseError(
          "'~' over a non-elementary subformula; enable normalization to push "
          "it inward and dualize the choice operators", at);
    }
    if (at_quantifier()) return f_quantifier();
    return f_primary();
  }

  Formula f_quantifier() {
    Tok q = advance().kind;
    bool length_bound = false;
    if (accept(Tok::Bar)) length_bound = true;
    if (!check(Tok::Ident)) fail("expected a variable after the quantifier");
    std::string x = advance().text;
    std::optional<std::pair<Rel, PTerm>> bound;
    if (length_bound) {
      expect(Tok::Bar, "closing '|'");
      Rel r;
      if (accept(Tok::Le)) r = Rel::Le;
      else if (accept(Tok::Lt)) r = Rel::Lt;
      else fail("expected <= or < after |var|");
      bound = {r, pterm()};
    } else if (check(Tok::Le) || check(Tok::Lt)) {
      Rel r = advance().kind == Tok::Le ? Rel::Le : Rel::Lt;
      bound = {r, pterm()};
    }
    expect(Tok::Dot, "'.' after the quantifier binder");
    Formula body = f_imp();
    Formula guard;
    if (bound) {
      PTerm lhs = length_bound ? PTerm::len(PTerm::var(x)) : PTerm::var(x);
      guard = Formula::cmp(bound->first, lhs, bound->second);
    }
    switch (q) {
      case Tok::All:
        return Formula::forall(x, bound ? Formula::imp(guard, body) : body);
      case Tok::Ex:
        return Formula::exists(x, bound ? Formula::conj(guard, body) : body);
      case Tok::Call:
      case Tok::MeetSym:
        return Formula::meet_q(x, bound ? Formula::imp(guard, body) : body);
      case Tok::Cex:
      case Tok::JoinSym:
        return Formula::join_q(x, bound ? Formula::conj(guard, body) : body);
      default: fail("bad quantifier");
    }
  }

  Formula f_primary() {
    // Try an atom first; fall back to a parenthesized formula.
    size_t save = pos_;
    try {
      return f_atom();
    } catch (const ParseError&) {
      pos_ = save;
    }
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    fail("expected a formula");
  }

  Formula f_atom() {
    if (check(Tok::Ident) &&
        (peek().text == "Bit" || peek().text == "Carry1" || peek().text == "Borrow1")) {
      std::string name = advance().text;
      expect(Tok::LParen, "'('");
      std::vector<PTerm> args;
      size_t want = name == "Bit" ? 2 : 3;
      for (size_t k = 0; k < want; ++k) {
        if (k) expect(Tok::Comma, "','");
        args.push_back(pterm());
      }
      expect(Tok::RParen, "')'");
      if (name == "Bit") return Formula::bit(args[0], args[1]);
      if (name == "Carry1") return Formula::carry1(args[0], args[1], args[2]);
      return Formula::borrow1(args[0], args[1], args[2]);
    }
    PTerm l = pterm();
    switch (peek().kind) {
      case Tok::Eq: advance(); return Formula::eq(l, pterm());
      case Tok::Le: advance(); return Formula::cmp(Rel::Le, l, pterm());
      case Tok::Lt: advance(); return Formula::cmp(Rel::Lt, l, pterm());
      case Tok::Ge: advance(); return Formula::cmp(Rel::Le, pterm(), l);
      case Tok::Gt: advance(); return Formula::cmp(Rel::Lt, pterm(), l);
      case Tok::Neq: advance(); return Formula::negation(Formula::eq(l, pterm()));
      default: fail("expected a relation symbol");
    }
  }

  // ---- sequents ----

  std::pair<std::vector<Formula>, Formula> sequent() {
    std::vector<Formula> ants;
    if (!accept(Tok::Turnstile)) {
      ants.push_back(formula());
      while (accept(Tok::Comma)) ants.push_back(formula());
      expect(Tok::Turnstile, "'|o-'");
    }
    Formula succ = formula();
    return {std::move(ants), std::move(succ)};
  }

  void expect_end() {
    if (!check(Tok::End)) fail("trailing input");
  }

private:
  ParseOptions opts_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

PTerm parse_pterm(const std::string& text) {
  Parser p(text, {});
  PTerm t = p.pterm();
  p.expect_end();
  return t;
}

Formula parse_formula(const std::string& text, const ParseOptions& opts) {
  Parser p(text, opts);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

std::pair<std::vector<Formula>, Formula> parse_sequent_parts(const std::string& text,
                                                             const ParseOptions& opts) {
  Parser p(text, opts);
  auto r = p.sequent();
  p.expect_end();
  return r;
}

Labmove parse_labmove(const std::string& line) {
  size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i >= line.size()) throw ParseError("empty labmove", 0);
  char who = line[i];
  Player p;
  if (who == 'T') p = Player::Top;
  else if (who == 'B') p = Player::Bot;
  else throw ParseError("labmove must start with 'T:' or 'B:'", i);
  ++i;
  if (i >= line.size() || line[i] != ':') throw ParseError("expected ':' after the player", i);
  ++i;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  size_t end = line.size();
  while (end > i && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  std::string move = line.substr(i, end - i);
  if (move.empty()) throw ParseError("empty move string", i);
  if (!MovePath::parse(move)) throw ParseError("bad move string '" + move + "'", i);
  return {p, move};
}

Position parse_position(const std::string& text) {
  Position pos;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string line = text.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    start = nl == std::string::npos ? text.size() + 1 : nl + 1;
    size_t a = 0;
    while (a < line.size() && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    if (a >= line.size() || line[a] == '#') continue;
    pos.push_back(parse_labmove(line));
  }
  return pos;
}

}  // namespace clar
