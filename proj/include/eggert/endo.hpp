// Functions M^m -> M^n over a finite carrier.

#ifndef EGGERT_ENDO_HPP_
#define EGGERT_ENDO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eggert/finmap.hpp"

namespace eggert {

  using elem_t = std::uint32_t;

  //! A tabulated function M^m -> M^n. Rows are indexed by input tuples in
  //! mixed-radix order with the leftmost coordinate most significant; each
  //! row holds n outputs.
  class FinFunction {
   public:
    FinFunction() = default;
    FinFunction(elem_t carrier, arity_t src, arity_t tgt, std::vector<elem_t> table);
    //! Tabulate from a callback on input tuples.
    template <typename F>
    static FinFunction tabulate(elem_t carrier, arity_t src, arity_t tgt, F&& f);

    elem_t carrier() const noexcept {
      return _carrier;
    }
    arity_t src() const noexcept {
      return _src;
    }
    arity_t tgt() const noexcept {
      return _tgt;
    }
    std::vector<elem_t> const& table() const noexcept {
      return _table;
    }
    std::size_t rows() const noexcept {
      return _rows;
    }

    std::vector<elem_t> input(std::size_t row) const;
    std::size_t         row_of(std::vector<elem_t> const& input) const;
    std::vector<elem_t> output(std::size_t row) const;
    std::vector<elem_t> operator()(std::vector<elem_t> const& input) const {
      return output(row_of(input));
    }

    bool operator==(FinFunction const&) const = default;

    //! One line per row, `x1 ... xm -> y1 ... yn`.
    std::string dump() const;

   private:
    elem_t              _carrier = 0;
    arity_t             _src     = 0;
    arity_t             _tgt     = 0;
    std::size_t         _rows    = 1;
    std::vector<elem_t> _table;
  };

  std::size_t ipow(std::size_t base, std::size_t exp);

  FinFunction ff_identity(elem_t carrier, arity_t m);
  FinFunction ff_compose(FinFunction const& f, FinFunction const& g);
  FinFunction ff_tensor(FinFunction const& f, FinFunction const& g);
  FinFunction ff_power(FinFunction const& f, arity_t a);
  //! The coordinate pullback of f: (x_1..x_n) -> (x_{1f}..x_{mf}).
  FinFunction pullback(FinMap const& f, elem_t carrier);

  bool check_braiding(FinFunction const& x, FinFunction const& xp);
  bool check_branching(arity_t a, FinFunction const& x);

  struct Difference {
    std::vector<elem_t> input;
    std::vector<elem_t> left;
    std::vector<elem_t> right;
  };
  //! First row (mixed-radix order) on which f and g disagree.
  std::optional<Difference> first_difference(FinFunction const& f, FinFunction const& g);

  //! Parse rows of the dump format; missing rows are an error.
  FinFunction parse_rows(std::vector<std::string> const& rows,
                         elem_t                          carrier,
                         arity_t                         src,
                         arity_t                         tgt);

  template <typename F>
  FinFunction FinFunction::tabulate(elem_t carrier, arity_t src, arity_t tgt, F&& f) {
    std::size_t         rows = ipow(carrier, src);
    std::vector<elem_t> table;
    table.reserve(rows * tgt);
    std::vector<elem_t> in(src, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t x = r;
      for (arity_t i = src; i-- > 0;) {
        in[i] = static_cast<elem_t>(x % carrier);
        x /= carrier;
      }
      std::vector<elem_t> out = f(in);
      table.insert(table.end(), out.begin(), out.end());
    }
    return FinFunction(carrier, src, tgt, std::move(table));
  }

}  // namespace eggert

#endif  // EGGERT_ENDO_HPP_
