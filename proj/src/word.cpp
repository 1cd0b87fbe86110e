#include "eggert/word.hpp"

#include <tuple>

namespace eggert {

  bool Letter::operator<(Letter const& that) const {
    return std::tie(left, gen, right, gen_src, gen_tgt)
           < std::tie(that.left, that.gen, that.right, that.gen_src, that.gen_tgt);
  }

  Word::Word(FinMap f) : _bnd{std::move(f)} {
    validate();
  }

  Word::Word(std::vector<FinMap> boundary, std::vector<Letter> letters)
      : _bnd(std::move(boundary)), _letters(std::move(letters)) {
    validate();
  }

  void Word::validate() const {
    if (_bnd.size() != _letters.size() + 1) {
      throw ArityError("word needs one more boundary map than letters");
    }
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (_bnd[i].src() != _letters[i].in()) {
        throw ArityError("boundary " + std::to_string(i) + " " + _bnd[i].to_string()
                         + " does not feed letter of input arity "
                         + std::to_string(_letters[i].in()));
      }
      if (_bnd[i + 1].tgt() != _letters[i].out()) {
        throw ArityError("letter of output arity " + std::to_string(_letters[i].out())
                         + " does not feed boundary " + std::to_string(i + 1) + " "
                         + _bnd[i + 1].to_string());
      }
    }
    std::size_t h = 0xcbf29ce484222325ULL;
    auto        mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      mix(_bnd[i].hash());
      mix(_letters[i].left);
      mix(_letters[i].gen);
      mix(_letters[i].right);
    }
    mix(_bnd.back().hash());
    const_cast<Word*>(this)->_hash = h;
  }

  bool Word::operator<(Word const& that) const {
    return std::tie(_letters, _bnd) < std::tie(that._letters, that._bnd);
  }

  Word id_word(arity_t m) {
    return Word(identity(m));
  }

  Word structure_word(FinMap const& f) {
    return Word(f);
  }

  Word letter_word(arity_t l, gen_t x, arity_t xs, arity_t xt, arity_t r) {
    return Word({identity(l + xs + r), identity(l + xt + r)}, {{l, x, r, xs, xt}});
  }

  Word letter_word(Alphabet const& A, arity_t l, std::string const& name, arity_t r) {
    gen_t id = A.id(name);
    return letter_word(l, id, A[id].src, A[id].tgt, r);
  }

  Word gen_word(Alphabet const& A, std::string const& name) {
    return letter_word(A, 0, name, 0);
  }

  Word compose_words(Word const& w, Word const& wp) {
    if (w.tgt() != wp.src()) {
      throw ArityError("cannot compose words of types (" + std::to_string(w.src()) + ","
                       + std::to_string(w.tgt()) + ") and (" + std::to_string(wp.src()) + ","
                       + std::to_string(wp.tgt()) + ")");
    }
    std::vector<FinMap> b(w.boundary().begin(), w.boundary().end() - 1);
    b.push_back(compose(wp.boundary().front(), w.boundary().back()));
    b.insert(b.end(), wp.boundary().begin() + 1, wp.boundary().end());
    std::vector<Letter> l(w.letters());
    l.insert(l.end(), wp.letters().begin(), wp.letters().end());
    return Word(std::move(b), std::move(l));
  }

  Word compose_words(std::vector<Word> const& ws) {
    Word r = ws.at(0);
    for (std::size_t i = 1; i < ws.size(); ++i) {
      r = compose_words(r, ws[i]);
    }
    return r;
  }

  Word whisker(arity_t q, Word const& w, arity_t p) {
    if (q == 0 && p == 0) {
      return w;
    }
    std::vector<FinMap> b;
    b.reserve(w.boundary().size());
    FinMap iq = identity(q), ip = identity(p);
    for (auto const& f : w.boundary()) {
      b.push_back(tensor(tensor(iq, f), ip));
    }
    std::vector<Letter> l(w.letters());
    for (auto& x : l) {
      x.left += q;
      x.right += p;
    }
    return Word(std::move(b), std::move(l));
  }

  Word tensor_words(Word const& w, Word const& wp) {
    return compose_words(whisker(0, w, wp.src()), whisker(w.tgt(), wp, 0));
  }

  Word tensor_power(Word const& w, arity_t a) {
    Word r = id_word(0);
    for (arity_t i = 0; i < a; ++i) {
      r = compose_words(whisker(0, r, w.src()), whisker(r.tgt(), w, 0));
    }
    return r;
  }

  std::vector<Word> standard_decomposition(Word const& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.push_back(structure_word(w.boundary(i)));
      auto const& x = w.letter(i);
      out.push_back(letter_word(x.left, x.gen, x.gen_src, x.gen_tgt, x.right));
    }
    out.push_back(structure_word(w.boundary().back()));
    return out;
  }

  Word subword(Word const& w, std::size_t i, std::size_t j) {
    return Word(std::vector<FinMap>(w.boundary().begin() + i, w.boundary().begin() + j + 1),
                std::vector<Letter>(w.letters().begin() + i, w.letters().begin() + j));
  }

  Word prefix_with(Word const& w, std::size_t i, FinMap const& last) {
    std::vector<FinMap> b(w.boundary().begin(), w.boundary().begin() + i);
    b.push_back(last);
    return Word(std::move(b), std::vector<Letter>(w.letters().begin(), w.letters().begin() + i));
  }

  Word suffix_with(FinMap const& first, Word const& w, std::size_t j) {
    std::vector<FinMap> b{first};
    b.insert(b.end(), w.boundary().begin() + j + 1, w.boundary().end());
    return Word(std::move(b), std::vector<Letter>(w.letters().begin() + j, w.letters().end()));
  }

}  // namespace eggert
