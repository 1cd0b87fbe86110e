// Maps [1,m] -> [1,n] between standard finite sets.

#ifndef EGGERT_FINMAP_HPP_
#define EGGERT_FINMAP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eggert/error.hpp"

namespace eggert {

  using arity_t = std::uint32_t;

  //! A total function [1,m] -> [1,n] stored as a dense 1-based table.
  //! Entry i of the table (0-based storage) is the image of i+1.
  class FinMap {
   public:
    FinMap() = default;
    FinMap(arity_t src, arity_t tgt, std::vector<arity_t> table);

    arity_t src() const noexcept {
      return _src;
    }
    arity_t tgt() const noexcept {
      return _tgt;
    }
    std::vector<arity_t> const& table() const noexcept {
      return _table;
    }
    //! Image of i, 1-based.
    arity_t operator()(arity_t i) const {
      return _table[i - 1];
    }

    bool is_identity() const noexcept;
    bool is_injective() const;
    bool is_surjective() const;

    bool operator==(FinMap const& that) const = default;
    bool operator<(FinMap const& that) const;

    std::size_t hash() const noexcept;
    //! Textual form `fm[m->n: i1,...,im]`.
    std::string to_string() const;

   private:
    arity_t              _src = 0;
    arity_t              _tgt = 0;
    std::vector<arity_t> _table;
  };

  //! Diagrammatic composition: (f;g)(i) = g(f(i)).
  FinMap compose(FinMap const& f, FinMap const& g);
  FinMap tensor(FinMap const& f, FinMap const& g);
  FinMap identity(arity_t m);
  //! Block swap s_{m,m'}: i -> i+m' for i <= m, i -> i-m otherwise.
  FinMap braid(arity_t m, arity_t mp);
  //! Fold map h_{a,m'}: [1,a*m'] -> [1,m'] by residue.
  FinMap branch(arity_t a, arity_t mp);
  FinMap f2();
  FinMap f0();
  //! Inverse of a bijection.
  FinMap inverse(FinMap const& f);

  //! All u with compose(u, g) == h.
  std::vector<FinMap> factorizations_through(FinMap const& h, FinMap const& g);
  //! All u with compose(g, u) == h. Positions of g.tgt outside the image of
  //! g range over [1, h.tgt].
  std::vector<FinMap> extensions_through(FinMap const& h, FinMap const& g);

  //! Every map [1,m] -> [1,n], in lexicographic table order.
  std::vector<FinMap> all_maps(arity_t m, arity_t n);

}  // namespace eggert

template <>
struct std::hash<eggert::FinMap> {
  std::size_t operator()(eggert::FinMap const& f) const noexcept {
    return f.hash();
  }
};

#endif  // EGGERT_FINMAP_HPP_
