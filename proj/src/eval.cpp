#include "eggert/eval.hpp"

namespace eggert {

  GeneratorAssignment::GeneratorAssignment(Alphabet const& A, elem_t carrier)
      : _alphabet(A), _carrier(carrier), _funcs(A.size()) {}

  void GeneratorAssignment::set(gen_t id, FinFunction f) {
    auto const& g = _alphabet[id];
    if (f.src() != g.src || f.tgt() != g.tgt) {
      throw ArityError("generator " + g.name + " has type (" + std::to_string(g.src) + ","
                       + std::to_string(g.tgt) + ") but was assigned a function of type ("
                       + std::to_string(f.src()) + "," + std::to_string(f.tgt()) + ")");
    }
    if (f.carrier() != _carrier) {
      throw ArityError("generator " + g.name + " assigned over the wrong carrier");
    }
    _funcs[id] = std::move(f);
  }

  void GeneratorAssignment::set(std::string const& name, FinFunction f) {
    set(_alphabet.id(name), std::move(f));
  }

  FinFunction const& GeneratorAssignment::operator[](gen_t id) const {
    if (!has(id)) {
      throw UnknownGenerator("no function assigned to generator "
                             + (id < _alphabet.size() ? _alphabet[id].name : std::to_string(id)));
    }
    return *_funcs[id];
  }

  void GeneratorAssignment::check_complete() const {
    for (gen_t i = 0; i < _funcs.size(); ++i) {
      (*this)[i];
    }
  }

  // Runs every input tuple through the layers directly instead of building
  // the intermediate tables.
  FinFunction eval_word(Word const& w, GeneratorAssignment const& g) {
    elem_t M = g.carrier();
    for (auto const& x : w.letters()) {
      auto const& f = g[x.gen];
      if (f.src() != x.gen_src || f.tgt() != x.gen_tgt) {
        throw ArityError("assignment does not match letter arities");
      }
    }
    return FinFunction::tabulate(M, w.src(), w.tgt(), [&](std::vector<elem_t> const& in) {
      std::vector<elem_t> cur = in, next;
      auto                pull = [&](FinMap const& f) {
        next.resize(f.src());
        for (arity_t i = 0; i < f.src(); ++i) {
          next[i] = cur[f.table()[i] - 1];
        }
        cur.swap(next);
      };
      pull(w.boundary(0));
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto const& x = w.letter(i);
        auto const& f = g[x.gen];
        std::size_t row = 0;
        for (arity_t j = 0; j < x.gen_src; ++j) {
          row = row * M + cur[x.left + j];
        }
        next.assign(cur.begin(), cur.begin() + x.left);
        auto out = f.table().begin() + row * x.gen_tgt;
        next.insert(next.end(), out, out + x.gen_tgt);
        next.insert(next.end(), cur.begin() + x.left + x.gen_src, cur.end());
        cur.swap(next);
        pull(w.boundary(i + 1));
      }
      return cur;
    });
  }

}  // namespace eggert
