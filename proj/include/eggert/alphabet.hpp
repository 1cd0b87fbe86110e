#ifndef EGGERT_ALPHABET_HPP_
#define EGGERT_ALPHABET_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eggert/finmap.hpp"

namespace eggert {

  using gen_t = std::uint32_t;

  struct Generator {
    std::string name;
    arity_t     src;
    arity_t     tgt;

    bool operator==(Generator const&) const = default;
  };

  //! A biindexed set of named generators. Ids are positions in declaration
  //! order.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> gens);

    gen_t add(std::string const& name, arity_t src, arity_t tgt);

    std::size_t size() const noexcept {
      return _gens.size();
    }
    Generator const& operator[](gen_t id) const {
      return _gens.at(id);
    }
    std::vector<Generator> const& generators() const noexcept {
      return _gens;
    }

    bool contains(std::string const& name) const {
      return _ids.count(name) != 0;
    }
    gen_t id(std::string const& name) const;
    //! (src, tgt) of a named generator.
    std::pair<arity_t, arity_t> lookup(std::string const& name) const;

    bool operator==(Alphabet const& that) const {
      return _gens == that._gens;
    }

   private:
    std::vector<Generator>                 _gens;
    std::unordered_map<std::string, gen_t> _ids;
  };

  Alphabet alphabet_group();

}  // namespace eggert

#endif  // EGGERT_ALPHABET_HPP_
