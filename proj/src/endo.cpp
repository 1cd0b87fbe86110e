#include "eggert/endo.hpp"

#include <sstream>

namespace eggert {

  std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
      r *= base;
    }
    return r;
  }

  FinFunction::FinFunction(elem_t carrier, arity_t src, arity_t tgt, std::vector<elem_t> table)
      : _carrier(carrier), _src(src), _tgt(tgt), _rows(ipow(carrier, src)), _table(std::move(table)) {
    if (_table.size() != _rows * tgt) {
      throw ArityError("function table has " + std::to_string(_table.size())
                       + " entries, expected " + std::to_string(_rows * tgt));
    }
    for (auto x : _table) {
      if (x >= carrier) {
        throw ArityError("table entry " + std::to_string(x) + " outside carrier");
      }
    }
  }

  std::vector<elem_t> FinFunction::input(std::size_t row) const {
    std::vector<elem_t> in(_src);
    for (arity_t i = _src; i-- > 0;) {
      in[i] = static_cast<elem_t>(row % _carrier);
      row /= _carrier;
    }
    return in;
  }

  std::size_t FinFunction::row_of(std::vector<elem_t> const& in) const {
    std::size_t r = 0;
    for (auto x : in) {
      r = r * _carrier + x;
    }
    return r;
  }

  std::vector<elem_t> FinFunction::output(std::size_t row) const {
    auto it = _table.begin() + row * _tgt;
    return std::vector<elem_t>(it, it + _tgt);
  }

  std::string FinFunction::dump() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < _rows; ++r) {
      bool first = true;
      for (auto x : input(r)) {
        out << (first ? "" : " ") << x;
        first = false;
      }
      out << (first ? "->" : " ->");
      for (auto y : output(r)) {
        out << ' ' << y;
      }
      out << '\n';
    }
    return out.str();
  }

  FinFunction ff_identity(elem_t carrier, arity_t m) {
    return FinFunction::tabulate(carrier, m, m, [](auto const& in) { return in; });
  }

  FinFunction ff_compose(FinFunction const& f, FinFunction const& g) {
    if (f.tgt() != g.src() || f.carrier() != g.carrier()) {
      throw ArityError("cannot compose functions of types (" + std::to_string(f.src()) + ","
                       + std::to_string(f.tgt()) + ") and (" + std::to_string(g.src()) + ","
                       + std::to_string(g.tgt()) + ")");
    }
    std::vector<elem_t> table;
    table.reserve(f.rows() * g.tgt());
    auto const& ft = f.table();
    auto const& gt = g.table();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      std::size_t mid = 0;
      for (arity_t j = 0; j < f.tgt(); ++j) {
        mid = mid * f.carrier() + ft[r * f.tgt() + j];
      }
      table.insert(table.end(), gt.begin() + mid * g.tgt(), gt.begin() + (mid + 1) * g.tgt());
    }
    return FinFunction(f.carrier(), f.src(), g.tgt(), std::move(table));
  }

  FinFunction ff_tensor(FinFunction const& f, FinFunction const& g) {
    if (f.carrier() != g.carrier()) {
      throw ArityError("cannot tensor functions over different carriers");
    }
    std::vector<elem_t> table;
    table.reserve(f.rows() * g.rows() * (f.tgt() + g.tgt()));
    auto const& ft = f.table();
    auto const& gt = g.table();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t s = 0; s < g.rows(); ++s) {
        table.insert(table.end(), ft.begin() + r * f.tgt(), ft.begin() + (r + 1) * f.tgt());
        table.insert(table.end(), gt.begin() + s * g.tgt(), gt.begin() + (s + 1) * g.tgt());
      }
    }
    return FinFunction(f.carrier(), f.src() + g.src(), f.tgt() + g.tgt(), std::move(table));
  }

  FinFunction ff_power(FinFunction const& f, arity_t a) {
    FinFunction r = ff_identity(f.carrier(), 0);
    for (arity_t i = 0; i < a; ++i) {
      r = ff_tensor(r, f);
    }
    return r;
  }

  FinFunction pullback(FinMap const& f, elem_t carrier) {
    return FinFunction::tabulate(carrier, f.tgt(), f.src(), [&f](auto const& in) {
      std::vector<elem_t> out(f.src());
      for (arity_t i = 1; i <= f.src(); ++i) {
        out[i - 1] = in[f(i) - 1];
      }
      return out;
    });
  }

  bool check_braiding(FinFunction const& x, FinFunction const& xp) {
    elem_t M   = x.carrier();
    auto   lhs = ff_compose(pullback(braid(x.src(), xp.src()), M), ff_tensor(x, xp));
    auto   rhs = ff_compose(ff_tensor(xp, x), pullback(braid(x.tgt(), xp.tgt()), M));
    return lhs == rhs;
  }

  bool check_branching(arity_t a, FinFunction const& x) {
    elem_t M   = x.carrier();
    auto   lhs = ff_compose(pullback(branch(a, x.src()), M), ff_power(x, a));
    auto   rhs = ff_compose(x, pullback(branch(a, x.tgt()), M));
    return lhs == rhs;
  }

  std::optional<Difference> first_difference(FinFunction const& f, FinFunction const& g) {
    if (f.src() != g.src() || f.tgt() != g.tgt() || f.carrier() != g.carrier()) {
      throw ArityError("cannot compare functions of different types");
    }
    for (std::size_t r = 0; r < f.rows(); ++r) {
      auto a = f.output(r);
      auto b = g.output(r);
      if (a != b) {
        return Difference{f.input(r), a, b};
      }
    }
    return std::nullopt;
  }

  FinFunction parse_rows(std::vector<std::string> const& rows,
                         elem_t                          carrier,
                         arity_t                         src,
                         arity_t                         tgt) {
    std::size_t         n = ipow(carrier, src);
    std::vector<elem_t> table(n * tgt, 0);
    std::vector<bool>   seen(n, false);
    FinFunction         shape(carrier, src, 0, {});
    for (auto const& line : rows) {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) {
        throw Error("table row without \"->\": " + line);
      }
      std::istringstream  lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
      std::vector<elem_t> in, out;
      long long           x;
      while (lhs >> x) {
        in.push_back(static_cast<elem_t>(x));
        if (x < 0 || x >= carrier) {
          throw Error("row entry outside carrier: " + line);
        }
      }
      while (rhs >> x) {
        out.push_back(static_cast<elem_t>(x));
        if (x < 0 || x >= carrier) {
          throw Error("row entry outside carrier: " + line);
        }
      }
      if (!lhs.eof() || !rhs.eof() || in.size() != src || out.size() != tgt) {
        throw Error("malformed table row: " + line);
      }
      std::size_t r = shape.row_of(in);
      if (seen[r]) {
        throw Error("duplicate table row: " + line);
      }
      seen[r] = true;
      std::copy(out.begin(), out.end(), table.begin() + r * tgt);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!seen[r]) {
        throw Error("table is missing rows");
      }
    }
    return FinFunction(carrier, src, tgt, std::move(table));
  }

}  // namespace eggert
