#include <doctest.h>

#include "eggert/endo.hpp"

using namespace eggert;

namespace {
  std::vector<FinFunction> all_functions(elem_t M, arity_t m, arity_t n) {
    std::size_t              rows  = ipow(M, m);
    std::size_t              cells = rows * n;
    std::size_t              total = ipow(M, cells);
    std::vector<FinFunction> out;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<elem_t> t(cells);
      std::size_t         x = code;
      for (auto& y : t) {
        y = static_cast<elem_t>(x % M);
        x /= M;
      }
      out.emplace_back(M, m, n, std::move(t));
    }
    return out;
  }

  FinFunction zmod_add(elem_t n) {
    return FinFunction::tabulate(n, 2, 1, [n](auto const& in) {
      return std::vector<elem_t>{(in[0] + in[1]) % n};
    });
  }
}  // namespace

TEST_CASE("endo compose and tensor") {
  auto mu = zmod_add(2);
  CHECK(ff_compose(mu, ff_identity(2, 1)) == mu);
  auto t    = ff_tensor(mu, ff_identity(2, 1));
  auto want = FinFunction::tabulate(2, 3, 2, [](auto const& in) {
    return std::vector<elem_t>{(in[0] + in[1]) % 2, in[2]};
  });
  CHECK(t == want);
  CHECK(t.rows() == 8);
  auto sq = ff_compose(pullback(f2(), 3), zmod_add(3));
  CHECK(sq == FinFunction::tabulate(3, 1, 1, [](auto const& in) {
          return std::vector<elem_t>{(2 * in[0]) % 3};
        }));
  CHECK_THROWS_AS(ff_compose(mu, mu), ArityError);
}

TEST_CASE("endo pullback") {
  CHECK(pullback(f2(), 4) == FinFunction::tabulate(4, 1, 2, [](auto const& in) {
          return std::vector<elem_t>{in[0], in[0]};
        }));
  CHECK(pullback(identity(2), 3) == ff_identity(3, 2));
  CHECK(pullback(braid(1, 1), 2) == FinFunction::tabulate(2, 2, 2, [](auto const& in) {
          return std::vector<elem_t>{in[1], in[0]};
        }));
  CHECK(pullback(f0(), 3).src() == 1);
  CHECK(pullback(f0(), 3).tgt() == 0);
}

TEST_CASE("endo pullback is contravariantly functorial") {
  for (elem_t M = 1; M <= 3; ++M) {
    for (arity_t a = 0; a <= 2; ++a) {
      for (arity_t b = 0; b <= 2; ++b) {
        for (arity_t c = 0; c <= 2; ++c) {
          for (auto const& f : all_maps(a, b)) {
            for (auto const& g : all_maps(b, c)) {
              REQUIRE(pullback(compose(f, g), M) == ff_compose(pullback(g, M), pullback(f, M)));
            }
            for (auto const& g : all_maps(c, b)) {
              REQUIRE(pullback(tensor(f, g), M) == ff_tensor(pullback(f, M), pullback(g, M)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("endo braiding and branching hold exhaustively on a small range") {
  for (elem_t M = 1; M <= 2; ++M) {
    for (arity_t m = 0; m <= 2; ++m) {
      for (arity_t n = 0; n <= 1; ++n) {
        auto xs = all_functions(M, m, n);
        for (auto const& x : xs) {
          for (arity_t a = 0; a <= 3; ++a) {
            REQUIRE(check_branching(a, x));
          }
          for (auto const& xp : all_functions(M, 1, 1)) {
            REQUIRE(check_braiding(x, xp));
          }
        }
      }
    }
  }
  CHECK(check_branching(2, zmod_add(2)));
}

TEST_CASE("endo tensor is strictly associative with unit") {
  auto f = zmod_add(3);
  auto g = pullback(f2(), 3);
  CHECK(ff_tensor(ff_tensor(f, g), f) == ff_tensor(f, ff_tensor(g, f)));
  CHECK(ff_tensor(ff_identity(3, 0), f) == f);
  CHECK(ff_tensor(f, ff_identity(3, 0)) == f);
}

TEST_CASE("endo dump and parse round trip") {
  auto f = zmod_add(3);
  std::vector<std::string> rows;
  std::string              d = f.dump();
  std::size_t              s = 0;
  for (std::size_t e; (e = d.find('\n', s)) != std::string::npos; s = e + 1) {
    rows.push_back(d.substr(s, e - s));
  }
  CHECK(rows.size() == 9);
  CHECK(rows[5] == "1 2 -> 0");
  CHECK(parse_rows(rows, 3, 2, 1) == f);
  rows.pop_back();
  CHECK_THROWS(parse_rows(rows, 3, 2, 1));
}

TEST_CASE("first_difference locates the first differing row") {
  auto f = zmod_add(2);
  auto g = FinFunction::tabulate(2, 2, 1, [](auto const& in) {
    return std::vector<elem_t>{in[0] * in[1]};
  });
  auto d = first_difference(f, g);
  REQUIRE(d);
  CHECK(d->input == std::vector<elem_t>{0, 1});
  CHECK(d->left == std::vector<elem_t>{1});
  CHECK(d->right == std::vector<elem_t>{0});
  CHECK_FALSE(first_difference(f, f));
}
