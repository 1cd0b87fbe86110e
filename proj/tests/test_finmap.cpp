#include <doctest.h>

#include <algorithm>

#include "eggert/finmap.hpp"

using namespace eggert;

namespace {
  FinMap fm(arity_t m, arity_t n, std::vector<arity_t> t) {
    return FinMap(m, n, std::move(t));
  }

  // Pointwise oracle for composition.
  FinMap compose_oracle(FinMap const& f, FinMap const& g) {
    std::vector<arity_t> t;
    for (arity_t i = 1; i <= f.src(); ++i) {
      t.push_back(g(f(i)));
    }
    return fm(f.src(), g.tgt(), t);
  }
}  // namespace

TEST_CASE("finmap construction validates the table") {
  CHECK_THROWS_AS(fm(2, 1, {1}), ArityError);
  CHECK_THROWS_AS(fm(1, 2, {3}), ArityError);
  CHECK_THROWS_AS(fm(1, 0, {1}), ArityError);
  CHECK_NOTHROW(fm(0, 0, {}));
  CHECK(fm(2, 3, {3, 1}).to_string() == "fm[2->3:3,1]");
}

TEST_CASE("finmap compose") {
  CHECK(compose(f2(), identity(1)) == f2());
  CHECK(compose(braid(1, 1), braid(1, 1)) == identity(2));
  CHECK(compose(branch(2, 2), f2()) == branch(4, 1));
  CHECK(compose(branch(2, 2), f2()) == compose_oracle(branch(2, 2), f2()));
  CHECK_THROWS_AS(compose(f2(), f2()), ArityError);
}

TEST_CASE("finmap tensor") {
  CHECK(tensor(f2(), identity(1)) == fm(3, 2, {1, 1, 2}));
  CHECK(tensor(identity(0), f2()) == f2());
  CHECK(tensor(braid(1, 1), f0()) == fm(2, 3, {2, 1}));
}

TEST_CASE("finmap braid, branch and constants") {
  CHECK(braid(2, 1) == fm(3, 3, {2, 3, 1}));
  CHECK(braid(1, 2) == fm(3, 3, {3, 1, 2}));
  for (arity_t m = 0; m <= 4; ++m) {
    CHECK(braid(0, m) == identity(m));
    CHECK(branch(1, m) == identity(m));
  }
  CHECK(branch(2, 3) == fm(6, 3, {1, 2, 3, 1, 2, 3}));
  CHECK(branch(3, 2) == fm(6, 2, {1, 2, 1, 2, 1, 2}));
  CHECK(f2() == fm(2, 1, {1, 1}));
  CHECK(f0() == fm(0, 1, {}));
  CHECK(identity(0) == fm(0, 0, {}));
  for (arity_t m = 0; m <= 3; ++m) {
    for (arity_t n = 0; n <= 3; ++n) {
      for (arity_t i = 1; i <= m + n; ++i) {
        CHECK(braid(m, n)(i) == (i <= m ? i + n : i - m));
      }
    }
  }
}

TEST_CASE("factorizations_through matches the brute-force filter") {
  auto fs = factorizations_through(f2(), f2());
  CHECK(fs.size() == 4);
  CHECK(factorizations_through(identity(2), braid(1, 1)) == std::vector<FinMap>{braid(1, 1)});
  CHECK(factorizations_through(identity(1), f0()).empty());
  for (arity_t m = 0; m <= 3; ++m) {
    for (arity_t n = 0; n <= 3; ++n) {
      for (arity_t o = 0; o <= 3; ++o) {
        for (auto const& h : all_maps(m, o)) {
          for (auto const& g : all_maps(n, o)) {
            std::vector<FinMap> want, want_ext;
            for (auto const& u : all_maps(m, n)) {
              if (compose(u, g) == h) {
                want.push_back(u);
              }
            }
            auto got = factorizations_through(h, g);
            std::sort(got.begin(), got.end());
            REQUIRE(got == want);
          }
        }
      }
    }
  }
}

TEST_CASE("extensions_through matches the brute-force filter") {
  for (arity_t m = 0; m <= 3; ++m) {
    for (arity_t n = 0; n <= 3; ++n) {
      for (arity_t o = 0; o <= 3; ++o) {
        for (auto const& g : all_maps(m, n)) {
          for (auto const& h : all_maps(m, o)) {
            std::vector<FinMap> want;
            for (auto const& u : all_maps(n, o)) {
              if (compose(g, u) == h) {
                want.push_back(u);
              }
            }
            auto got = extensions_through(h, g);
            std::sort(got.begin(), got.end());
            REQUIRE(got == want);
          }
        }
      }
    }
  }
}

TEST_CASE("Map0 laws on small arities") {
  for (arity_t a = 0; a <= 2; ++a) {
    for (arity_t b = 0; b <= 2; ++b) {
      for (auto const& f : all_maps(a, b)) {
        CHECK(compose(identity(a), f) == f);
        CHECK(compose(f, identity(b)) == f);
        for (arity_t c = 0; c <= 2; ++c) {
          for (arity_t d = 0; d <= 2; ++d) {
            for (auto const& fp : all_maps(c, d)) {
              CHECK(compose(tensor(f, fp), braid(b, d)) == compose(braid(a, c), tensor(fp, f)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("inverse of a bijection") {
  CHECK(inverse(braid(2, 1)) == braid(1, 2));
  CHECK_THROWS(inverse(f2()));
}
