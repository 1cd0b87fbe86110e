// Fixed assignments for the group alphabet that break one axiom each.

#ifndef EGGERT_TESTS_ALGEBRAS_HPP_
#define EGGERT_TESTS_ALGEBRAS_HPP_

#include "eggert/present.hpp"

namespace eggert::test {

  //! x o y = x - y mod 3: (0 o 0) o 1 = 2, 0 o (0 o 1) = 1.
  inline GeneratorAssignment magma_z3() {
    auto g = algebra_from_group(group_zmod(3), alphabet_group());
    g.set("mu", FinFunction::tabulate(3, 2, 1, [](auto const& x) {
            return std::vector<elem_t>{(x[0] + 3 - x[1]) % 3};
          }));
    return g;
  }

  inline GeneratorAssignment wrong_unit_z4() {
    auto g = algebra_from_group(group_zmod(4), alphabet_group());
    g.set("eta", FinFunction(4, 0, 1, {1}));
    return g;
  }

  //! omega is the identity instead of negation.
  inline GeneratorAssignment wrong_inverse_z5() {
    auto g = algebra_from_group(group_zmod(5), alphabet_group());
    g.set("omega", ff_identity(5, 1));
    return g;
  }

  inline bool associative(FinFunction const& mu) {
    elem_t M = mu.carrier();
    for (elem_t x = 0; x < M; ++x) {
      for (elem_t y = 0; y < M; ++y) {
        for (elem_t z = 0; z < M; ++z) {
          if (mu({mu({x, y})[0], z}) != mu({x, mu({y, z})[0]})) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace eggert::test

#endif  // EGGERT_TESTS_ALGEBRAS_HPP_
