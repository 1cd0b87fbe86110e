// Evaluation of words in End_0(M).

#ifndef EGGERT_EVAL_HPP_
#define EGGERT_EVAL_HPP_

#include <optional>
#include <vector>

#include "eggert/alphabet.hpp"
#include "eggert/endo.hpp"
#include "eggert/word.hpp"

namespace eggert {

  //! A biindexed map from an alphabet into End_0(M): one function per
  //! generator id, all over the same carrier.
  class GeneratorAssignment {
   public:
    GeneratorAssignment() = default;
    GeneratorAssignment(Alphabet const& A, elem_t carrier);

    elem_t carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _funcs.size();
    }
    void set(gen_t id, FinFunction f);
    void set(std::string const& name, FinFunction f);
    bool has(gen_t id) const {
      return id < _funcs.size() && _funcs[id].has_value();
    }
    FinFunction const& operator[](gen_t id) const;
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    //! Throws unless every generator is assigned.
    void check_complete() const;

   private:
    Alphabet                                _alphabet;
    elem_t                                  _carrier = 0;
    std::vector<std::optional<FinFunction>> _funcs;
  };

  //! f_0^op e_0 . (id_l1 (x) x_1 (x) id_r1) . f_1^op e_0 . ...
  FinFunction eval_word(Word const& w, GeneratorAssignment const& g);

}  // namespace eggert

#endif  // EGGERT_EVAL_HPP_
