// Expression language for words.

#ifndef EGGERT_DSL_HPP_
#define EGGERT_DSL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "eggert/word.hpp"

namespace eggert {

  //! Abstract syntax. nums holds the integer arguments of an atom (id: n;
  //! braid: m, m'; branch: a, m; pad: q, p; power: k) and map the table of
  //! an fm atom.
  struct Expr {
    enum class Kind { Gen, Id, Map, Braid, Branch, Dup, Del, Pad, Compose, Tensor, Power };

    Kind                 kind = Kind::Id;
    std::string          name;
    std::vector<arity_t> nums;
    FinMap               map;
    std::vector<Expr>    kids;

    bool operator==(Expr const&) const = default;
  };

  Expr parse_expr(std::string_view text);
  //! Fully parenthesised ASCII form; parse_expr(print_expr(e)) == e.
  std::string print_expr(Expr const& e);
  Word        elaborate(Expr const& e, Alphabet const& A);

  //! parse_expr followed by elaborate.
  Word parse_word(std::string_view text, Alphabet const& A);
  //! `fm[..] . pad(l,gen x,r) . fm[..] ...`, omitting identity boundaries.
  std::string print_word(Word const& w, Alphabet const& A);

}  // namespace eggert

#endif  // EGGERT_DSL_HPP_
