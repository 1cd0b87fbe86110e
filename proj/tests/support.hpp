// Seeded generators shared by the tests.

#ifndef EGGERT_TESTS_SUPPORT_HPP_
#define EGGERT_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>

#include "eggert/dsl.hpp"
#include "eggert/eval.hpp"
#include "eggert/rules.hpp"
#include "eggert/word.hpp"

namespace eggert::test {

  inline arity_t pick(std::mt19937_64& rng, arity_t lo, arity_t hi) {
    return lo + static_cast<arity_t>(rng() % (hi - lo + 1));
  }

  inline FinMap random_map(std::mt19937_64& rng, arity_t m, arity_t n) {
    std::vector<arity_t> t(m);
    for (auto& x : t) {
      x = pick(rng, 1, n);
    }
    return FinMap(m, n, std::move(t));
  }

  //! Three generators with arities in [0,2] x [0,2], at least one of them
  //! with positive source and positive target.
  inline Alphabet random_alphabet(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Alphabet        A;
    A.add("x", pick(rng, 1, 2), pick(rng, 1, 2));
    A.add("y", pick(rng, 0, 2), pick(rng, 0, 2));
    A.add("z", pick(rng, 0, 2), pick(rng, 0, 2));
    return A;
  }

  //! A word of length <= max_len whose boundary widths stay <= width + 2.
  inline Word random_word(std::mt19937_64&       rng,
                          Alphabet const&        A,
                          std::size_t            max_len,
                          arity_t                width,
                          std::optional<arity_t> src = std::nullopt) {
    arity_t             cur = src ? *src : pick(rng, 0, width);
    std::vector<FinMap> bnd;
    std::vector<Letter> letters;
    std::size_t         len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      gen_t       x = static_cast<gen_t>(rng() % A.size());
      auto const& g = A[x];
      if (cur == 0 && g.src > 0) {
        continue;
      }
      arity_t pads = pick(rng, 0, width);
      arity_t l    = pick(rng, 0, pads);
      arity_t in   = l + g.src + (pads - l);
      if (cur == 0 && in > 0) {
        l = 0, pads = 0, in = g.src;
        if (in > 0) {
          continue;
        }
      }
      bnd.push_back(random_map(rng, in, cur));
      letters.push_back(Letter{l, x, pads - l, g.src, g.tgt});
      cur = l + g.tgt + (pads - l);
    }
    arity_t t = cur == 0 ? 0 : pick(rng, 0, width);
    bnd.push_back(random_map(rng, t, cur));
    return Word(std::move(bnd), std::move(letters));
  }

  inline GeneratorAssignment random_assignment(std::mt19937_64& rng, Alphabet const& A, elem_t M) {
    GeneratorAssignment g(A, M);
    for (gen_t i = 0; i < A.size(); ++i) {
      std::vector<elem_t> t(ipow(M, A[i].src) * A[i].tgt);
      for (auto& y : t) {
        y = static_cast<elem_t>(rng() % M);
      }
      g.set(i, FinFunction(M, A[i].src, A[i].tgt, std::move(t)));
    }
    return g;
  }

  //! A schema instance with |v|, |v2| <= 1, pads <= 2 and a <= a_max.
  inline RuleInstance random_instance(std::mt19937_64& rng, Alphabet const& A, arity_t a_max) {
    RuleInstance r;
    r.kind = static_cast<RuleKind>(rng() % 4);
    r.v    = random_word(rng, A, 1, 1);
    if (r.kind == RuleKind::M1) {
      r.v2 = random_word(rng, A, 1, 1);
    } else {
      r.a = pick(rng, 0, a_max);
      r.q = pick(rng, 0, 2);
      r.p = pick(rng, 0, 2);
    }
    return r;
  }

  inline Expr leaf(Expr::Kind k, std::vector<arity_t> nums = {}) {
    Expr e;
    e.kind = k;
    e.nums = std::move(nums);
    return e;
  }

  //! Random AST, not necessarily well typed.
  inline Expr random_expr(std::mt19937_64& rng, int depth) {
    using K  = Expr::Kind;
    auto num = [&](arity_t hi) { return pick(rng, 0, hi); };
    int  top = depth <= 0 ? 6 : 10;
    switch (rng() % top) {
      case 0: {
        Expr e = leaf(K::Gen);
        e.name = std::vector<std::string>{"mu", "eta", "omega", "x_1"}[rng() % 4];
        return e;
      }
      case 1:
        return leaf(K::Id, {num(4)});
      case 2: {
        Expr    e = leaf(K::Map);
        arity_t n = pick(rng, 1, 3);
        e.map     = random_map(rng, num(3), n);
        return e;
      }
      case 3:
        return leaf(rng() % 2 ? K::Braid : K::Branch, {num(3), num(3)});
      case 4:
        return leaf(K::Dup);
      case 5:
        return leaf(K::Del);
      case 6: {
        Expr e = leaf(K::Pad, {num(2), num(2)});
        e.kids = {random_expr(rng, depth - 1)};
        return e;
      }
      case 7: {
        Expr e = leaf(K::Power, {num(3)});
        e.kids = {random_expr(rng, depth - 1)};
        return e;
      }
      default: {
        Expr e = leaf(rng() % 2 ? K::Compose : K::Tensor);
        e.kids = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
        return e;
      }
    }
  }

}  // namespace eggert::test

#endif  // EGGERT_TESTS_SUPPORT_HPP_
