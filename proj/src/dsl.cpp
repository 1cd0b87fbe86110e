#include "eggert/dsl.hpp"

#include <cctype>
#include <charconv>

namespace eggert {

  namespace {
    enum class Tok { End, Int, Ident, LParen, RParen, LBrack, RBrack, Comma, Colon, Arrow, Dot, Star, Caret, LTri, RTri };

    struct Token {
      Tok         kind;
      std::size_t pos;
      std::string text;
    };

    std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> out;
      std::size_t        i = 0;
      auto               starts = [&](std::string_view t) { return s.substr(i, t.size()) == t; };
      while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
          ++i;
          continue;
        }
        std::size_t at = i;
        if (std::isdigit(c)) {
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
          }
          out.push_back({Tok::Int, at, std::string(s.substr(at, i - at))});
          continue;
        }
        if (std::isalpha(c) || c == '_') {
          while (i < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) {
            ++i;
          }
          out.push_back({Tok::Ident, at, std::string(s.substr(at, i - at))});
          continue;
        }
        struct Sym {
          std::string_view text;
          Tok              kind;
        };
        static constexpr Sym syms[] = {
            {"->", Tok::Arrow},         {"(", Tok::LParen},         {")", Tok::RParen},
            {"[", Tok::LBrack},         {"]", Tok::RBrack},         {",", Tok::Comma},
            {":", Tok::Colon},          {".", Tok::Dot},            {"*", Tok::Star},
            {"^", Tok::Caret},          {"⊠", Tok::Star},      {"·", Tok::Dot},
            {"◁", Tok::LTri},      {"▷", Tok::RTri},
        };
        bool matched = false;
        for (auto const& sym : syms) {
          if (starts(sym.text)) {
            out.push_back({sym.kind, at, std::string(sym.text)});
            i += sym.text.size();
            matched = true;
            break;
          }
        }
        if (!matched) {
          throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", at);
        }
      }
      out.push_back({Tok::End, s.size(), ""});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view s) : _toks(tokenize(s)) {}

      Expr parse() {
        Expr e = compose();
        if (peek().kind != Tok::End) {
          fail("trailing input '" + peek().text + "'");
        }
        return e;
      }

     private:
      Token const& peek() const {
        return _toks[_i];
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, peek().pos);
      }

      Token const& expect(Tok k, char const* what) {
        if (peek().kind != k) {
          fail(std::string("expected ") + what);
        }
        return _toks[_i++];
      }

      bool accept(Tok k) {
        if (peek().kind == k) {
          ++_i;
          return true;
        }
        return false;
      }

      arity_t number() {
        auto const& t = expect(Tok::Int, "integer");
        arity_t     v = 0;
        auto [p, ec]  = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc()) {
          throw ParseError("integer out of range", t.pos);
        }
        return v;
      }

      static Expr binary(Expr::Kind k, Expr l, Expr r) {
        Expr e;
        e.kind = k;
        e.kids = {std::move(l), std::move(r)};
        return e;
      }

      static Expr padded(arity_t q, Expr x, arity_t p) {
        Expr e;
        e.kind = Expr::Kind::Pad;
        e.nums = {q, p};
        e.kids = {std::move(x)};
        return e;
      }

      Expr compose() {
        Expr e = tensor();
        while (accept(Tok::Dot)) {
          e = binary(Expr::Kind::Compose, std::move(e), tensor());
        }
        return e;
      }

      Expr tensor() {
        Expr e = prefix();
        while (accept(Tok::Star)) {
          e = binary(Expr::Kind::Tensor, std::move(e), prefix());
        }
        return e;
      }

      Expr prefix() {
        if (peek().kind == Tok::Int) {
          arity_t q = number();
          expect(Tok::LTri, "'◁' after a left pad");
          return padded(q, prefix(), 0);
        }
        return postfix();
      }

      Expr postfix() {
        Expr e = atom();
        for (;;) {
          if (accept(Tok::Caret)) {
            Expr p;
            p.kind = Expr::Kind::Power;
            p.nums = {number()};
            p.kids = {std::move(e)};
            e      = std::move(p);
          } else if (accept(Tok::RTri)) {
            e = padded(0, std::move(e), number());
          } else {
            return e;
          }
        }
      }

      Expr atom() {
        if (accept(Tok::LParen)) {
          Expr e = compose();
          expect(Tok::RParen, "')'");
          return e;
        }
        if (peek().kind != Tok::Ident) {
          fail("expected an expression");
        }
        Token kw = _toks[_i++];
        Expr  e;
        if (kw.text == "gen") {
          e.kind = Expr::Kind::Gen;
          e.name = expect(Tok::Ident, "generator name").text;
        } else if (kw.text == "id") {
          e.kind = Expr::Kind::Id;
          expect(Tok::LParen, "'('");
          e.nums = {number()};
          expect(Tok::RParen, "')'");
        } else if (kw.text == "braid" || kw.text == "branch") {
          e.kind = kw.text == "braid" ? Expr::Kind::Braid : Expr::Kind::Branch;
          expect(Tok::LParen, "'('");
          arity_t a = number();
          expect(Tok::Comma, "','");
          arity_t b = number();
          expect(Tok::RParen, "')'");
          e.nums = {a, b};
        } else if (kw.text == "dup") {
          e.kind = Expr::Kind::Dup;
        } else if (kw.text == "del") {
          e.kind = Expr::Kind::Del;
        } else if (kw.text == "pad") {
          expect(Tok::LParen, "'('");
          arity_t q = number();
          expect(Tok::Comma, "','");
          Expr x = compose();
          expect(Tok::Comma, "','");
          arity_t p = number();
          expect(Tok::RParen, "')'");
          return padded(q, std::move(x), p);
        } else if (kw.text == "fm") {
          expect(Tok::LBrack, "'['");
          arity_t m = number();
          expect(Tok::Arrow, "'->'");
          arity_t n = number();
          expect(Tok::Colon, "':'");
          std::vector<arity_t> t;
          if (peek().kind != Tok::RBrack) {
            t.push_back(number());
            while (accept(Tok::Comma)) {
              t.push_back(number());
            }
          }
          expect(Tok::RBrack, "']'");
          try {
            e.map = FinMap(m, n, std::move(t));
          } catch (Error const& err) {
            throw ParseError(err.what(), kw.pos);
          }
          e.kind = Expr::Kind::Map;
        } else {
          throw ParseError("unknown atom '" + kw.text + "'", kw.pos);
        }
        return e;
      }

      std::vector<Token> _toks;
      std::size_t        _i = 0;
    };

    std::string fm_text(FinMap const& f) {
      return f.to_string();
    }
  }  // namespace

  Expr parse_expr(std::string_view text) {
    return Parser(text).parse();
  }

  std::string print_expr(Expr const& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Gen:
        return "gen " + e.name;
      case K::Id:
        return "id(" + std::to_string(e.nums[0]) + ")";
      case K::Map:
        return fm_text(e.map);
      case K::Braid:
        return "braid(" + std::to_string(e.nums[0]) + "," + std::to_string(e.nums[1]) + ")";
      case K::Branch:
        return "branch(" + std::to_string(e.nums[0]) + "," + std::to_string(e.nums[1]) + ")";
      case K::Dup:
        return "dup";
      case K::Del:
        return "del";
      case K::Pad:
        return "pad(" + std::to_string(e.nums[0]) + "," + print_expr(e.kids[0]) + ","
               + std::to_string(e.nums[1]) + ")";
      case K::Compose:
        return "(" + print_expr(e.kids[0]) + " . " + print_expr(e.kids[1]) + ")";
      case K::Tensor:
        return "(" + print_expr(e.kids[0]) + " * " + print_expr(e.kids[1]) + ")";
      case K::Power:
        return print_expr(e.kids[0]) + "^" + std::to_string(e.nums[0]);
    }
    return "";
  }

  Word elaborate(Expr const& e, Alphabet const& A) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Gen:
        return gen_word(A, e.name);
      case K::Id:
        return id_word(e.nums[0]);
      case K::Map:
        return structure_word(e.map);
      case K::Braid:
        return structure_word(braid(e.nums[0], e.nums[1]));
      case K::Branch:
        return structure_word(branch(e.nums[0], e.nums[1]));
      case K::Dup:
        return structure_word(f2());
      case K::Del:
        return structure_word(f0());
      case K::Pad:
        return whisker(e.nums[0], elaborate(e.kids[0], A), e.nums[1]);
      case K::Tensor:
        return tensor_words(elaborate(e.kids[0], A), elaborate(e.kids[1], A));
      case K::Power:
        return tensor_power(elaborate(e.kids[0], A), e.nums[0]);
      case K::Compose: {
        Word l = elaborate(e.kids[0], A);
        Word r = elaborate(e.kids[1], A);
        if (l.tgt() != r.src()) {
          throw ArityError("arity mismatch in " + print_expr(e) + ": left side has target "
                           + std::to_string(l.tgt()) + ", right side has source "
                           + std::to_string(r.src()));
        }
        return compose_words(l, r);
      }
    }
    throw Error("bad expression");
  }

  Word parse_word(std::string_view text, Alphabet const& A) {
    return elaborate(parse_expr(text), A);
  }

  std::string print_word(Word const& w, Alphabet const& A) {
    std::string out;
    auto        add = [&](std::string const& s) {
      if (!out.empty()) {
        out += " . ";
      }
      out += s;
    };
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (!w.boundary(i).is_identity()) {
        add(fm_text(w.boundary(i)));
      }
      if (i < w.size()) {
        auto const& l    = w.letter(i);
        std::string name = "gen " + A[l.gen].name;
        if (l.left == 0 && l.right == 0) {
          add(name);
        } else {
          add("pad(" + std::to_string(l.left) + "," + name + "," + std::to_string(l.right) + ")");
        }
      }
    }
    return out.empty() ? "id(" + std::to_string(w.src()) + ")" : out;
  }

}  // namespace eggert
