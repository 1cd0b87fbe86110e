// Words over an alphabet: alternating opposite-maps and padded generators.

#ifndef EGGERT_WORD_HPP_
#define EGGERT_WORD_HPP_

#include <vector>

#include "eggert/alphabet.hpp"
#include "eggert/finmap.hpp"

namespace eggert {

  //! A padded generator (l, x, r). The generator arities are carried along so
  //! that words can be manipulated without the alphabet at hand.
  struct Letter {
    arity_t left;
    gen_t   gen;
    arity_t right;
    arity_t gen_src;
    arity_t gen_tgt;

    arity_t in() const noexcept {
      return left + gen_src + right;
    }
    arity_t out() const noexcept {
      return left + gen_tgt + right;
    }
    bool operator==(Letter const&) const = default;
    bool operator<(Letter const& that) const;
  };

  //! The word f_0^op, (l_1,x_1,r_1), f_1^op, ..., f_k^op. Boundary maps are
  //! stored in the Map_0 direction: f_i^op goes from f_i.tgt() to f_i.src().
  class Word {
   public:
    Word() : Word(identity(0)) {}
    explicit Word(FinMap f);
    Word(std::vector<FinMap> boundary, std::vector<Letter> letters);

    arity_t src() const noexcept {
      return _bnd.front().tgt();
    }
    arity_t tgt() const noexcept {
      return _bnd.back().src();
    }
    //! Number of letters.
    std::size_t size() const noexcept {
      return _letters.size();
    }
    std::vector<FinMap> const& boundary() const noexcept {
      return _bnd;
    }
    FinMap const& boundary(std::size_t i) const {
      return _bnd[i];
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    Letter const& letter(std::size_t i) const {
      return _letters[i];
    }

    std::size_t hash() const noexcept {
      return _hash;
    }
    bool operator==(Word const& that) const {
      return _hash == that._hash && _letters == that._letters && _bnd == that._bnd;
    }
    bool operator<(Word const& that) const;

   private:
    void validate() const;

    std::vector<FinMap> _bnd;
    std::vector<Letter> _letters;
    std::size_t         _hash = 0;
  };

  Word id_word(arity_t m);
  //! The length-0 word f^op, of type (f.tgt, f.src).
  Word structure_word(FinMap const& f);
  //! The length-1 word (id, (l,x,r), id).
  Word letter_word(arity_t l, gen_t x, arity_t xs, arity_t xt, arity_t r);
  Word letter_word(Alphabet const& A, arity_t l, std::string const& name, arity_t r);
  Word gen_word(Alphabet const& A, std::string const& name);

  Word compose_words(Word const& w, Word const& wp);
  Word compose_words(std::vector<Word> const& ws);
  Word whisker(arity_t q, Word const& w, arity_t p);
  //! (w |> w's) . (wt <| w').
  Word tensor_words(Word const& w, Word const& wp);
  Word tensor_power(Word const& w, arity_t a);
  std::vector<Word> standard_decomposition(Word const& w);

  //! Letters [i, j) with boundaries f_i .. f_j.
  Word subword(Word const& w, std::size_t i, std::size_t j);
  //! Letters [0, i) ending with boundary f, which must have f.tgt == w.boundary(i).tgt.
  Word prefix_with(Word const& w, std::size_t i, FinMap const& last);
  //! Boundary f followed by letters [j, size).
  Word suffix_with(FinMap const& first, Word const& w, std::size_t j);

}  // namespace eggert

template <>
struct std::hash<eggert::Word> {
  std::size_t operator()(eggert::Word const& w) const noexcept {
    return w.hash();
  }
};

#endif  // EGGERT_WORD_HPP_
