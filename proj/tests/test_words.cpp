#include <doctest.h>

#include <random>

#include "eggert/eval.hpp"
#include "eggert/word.hpp"
#include "support.hpp"

using namespace eggert;

TEST_CASE("word compose merges seams") {
  Alphabet A = alphabet_group();
  Word     w = structure_word(braid(1, 1));
  CHECK(compose_words(w, w) == id_word(2));
  Word mu = gen_word(A, "mu");
  CHECK(compose_words(id_word(2), mu) == mu);
  Word two = compose_words(mu, gen_word(A, "omega"));
  CHECK(two.size() == 2);
  CHECK(two.src() == 2);
  CHECK(two.tgt() == 1);
  CHECK(two.boundary(1) == identity(1));
  CHECK_THROWS_AS(compose_words(mu, mu), ArityError);
}

TEST_CASE("word whisker") {
  Alphabet A  = alphabet_group();
  Word     mu = gen_word(A, "mu");
  CHECK(whisker(0, mu, 0) == mu);
  Word w = whisker(1, mu, 2);
  CHECK(w.size() == 1);
  CHECK(w.letter(0).left == 1);
  CHECK(w.letter(0).right == 2);
  CHECK(w.boundary(0) == identity(5));
  CHECK(w.boundary(1) == identity(4));
  CHECK(w == letter_word(A, 1, "mu", 2));
  Word x = compose_words(mu, gen_word(A, "omega"));
  CHECK(whisker(2, whisker(1, x, 0), 0) == whisker(3, x, 0));
  CHECK(whisker(0, whisker(0, x, 1), 2) == whisker(0, x, 3));
}

TEST_CASE("word tensor and powers") {
  Alphabet A  = alphabet_group();
  Word     mu = gen_word(A, "mu");
  Word     om = gen_word(A, "omega");
  CHECK(tensor_words(id_word(2), id_word(3)) == id_word(5));
  Word t = tensor_words(mu, om);
  CHECK(t.size() == 2);
  CHECK(t.src() == 3);
  CHECK(t.tgt() == 2);
  CHECK(tensor_words(t, id_word(0)) == t);
  CHECK(tensor_words(id_word(0), t) == t);
  CHECK(tensor_power(t, 0) == id_word(0));
  CHECK(tensor_power(t, 1) == t);
  CHECK(tensor_power(id_word(1), 3) == id_word(3));
  CHECK(tensor_power(mu, 3).size() == 3);
  CHECK(tensor_power(mu, 3).src() == 6);
  CHECK(tensor_words(structure_word(f2()), structure_word(braid(1, 1)))
        == structure_word(tensor(f2(), braid(1, 1))));
  CHECK(tensor_words(id_word(1), tensor_words(om, id_word(2))) == letter_word(A, 1, "omega", 2));
}

TEST_CASE("word standard decomposition round trips") {
  Alphabet A = alphabet_group();
  auto     d = standard_decomposition(id_word(3));
  CHECK(d.size() == 1);
  d = standard_decomposition(letter_word(A, 1, "omega", 0));
  REQUIRE(d.size() == 3);
  CHECK(d[0] == id_word(2));
  CHECK(d[1] == letter_word(A, 1, "omega", 0));
  CHECK(d[2] == id_word(2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = test::random_word(rng, A, 3, 3);
    auto s = standard_decomposition(w);
    CHECK(s.size() == 2 * w.size() + 1);
    CHECK(compose_words(s) == w);
  }
}

TEST_CASE("word whisker and tensor identities on random words") {
  Alphabet        A = test::random_alphabet(11);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word    w = test::random_word(rng, A, 2, 2);
    arity_t q = rng() % 3, p = rng() % 3;
    Word    wq = whisker(q, w, p);
    CHECK(wq.size() == w.size());
    CHECK(wq.src() == q + w.src() + p);
    CHECK(wq.tgt() == q + w.tgt() + p);
    Word u = test::random_word(rng, A, 2, 2, w.tgt());
    CHECK(compose_words(whisker(q, w, p), whisker(q, u, p)) == whisker(q, compose_words(w, u), p));
    CHECK(whisker(q, whisker(0, w, p), 0) == whisker(0, whisker(q, w, 0), p));
    Word v = test::random_word(rng, A, 2, 2);
    Word x = test::random_word(rng, A, 1, 2);
    CHECK(tensor_words(tensor_words(w, v), x) == tensor_words(w, tensor_words(v, x)));
    CHECK(compose_words(compose_words(w, u), test::random_word(rng, A, 0, 2, u.tgt())).size()
          == w.size() + u.size());
  }
}

TEST_CASE("evaluation") {
  Alphabet            A = alphabet_group();
  GeneratorAssignment g(A, 3);
  g.set("mu", FinFunction::tabulate(3, 2, 1, [](auto const& in) {
          return std::vector<elem_t>{(in[0] + in[1]) % 3};
        }));
  g.set("eta", FinFunction(3, 0, 1, {0}));
  g.set("omega", FinFunction::tabulate(3, 1, 1, [](auto const& in) {
          return std::vector<elem_t>{(3 - in[0]) % 3};
        }));
  CHECK(eval_word(id_word(2), g) == ff_identity(3, 2));
  Word mu = gen_word(A, "mu");
  CHECK(eval_word(mu, g) == g[A.id("mu")]);
  Word y1 = compose_words(tensor_words(mu, id_word(1)), mu);
  CHECK(eval_word(y1, g) == FinFunction::tabulate(3, 3, 1, [](auto const& in) {
          return std::vector<elem_t>{(in[0] + in[1] + in[2]) % 3};
        }));
  GeneratorAssignment partial(A, 3);
  CHECK_THROWS(eval_word(mu, partial));
  CHECK_THROWS_AS(partial.set("mu", ff_identity(3, 1)), ArityError);
  CHECK_THROWS_AS(A.lookup("nu"), UnknownGenerator);
  CHECK(A.lookup("eta") == std::pair<arity_t, arity_t>{0, 1});
}

TEST_CASE("evaluation is a preoperad morphism") {
  Alphabet        A = test::random_alphabet(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    elem_t M = 2 + rng() % 2;
    auto   g = test::random_assignment(rng, A, M);
    Word   w = test::random_word(rng, A, 2, 2);
    Word   u = test::random_word(rng, A, 2, 2, w.tgt());
    Word   v = test::random_word(rng, A, 1, 2);
    CHECK(eval_word(compose_words(w, u), g) == ff_compose(eval_word(w, g), eval_word(u, g)));
    CHECK(eval_word(tensor_words(w, v), g) == ff_tensor(eval_word(w, g), eval_word(v, g)));
    arity_t q = rng() % 2, p = rng() % 2;
    CHECK(eval_word(whisker(q, w, p), g)
          == ff_tensor(ff_identity(M, q), ff_tensor(eval_word(w, g), ff_identity(M, p))));
    arity_t a = rng() % 3;
    if (w.src() * a <= 4) {
      CHECK(eval_word(tensor_power(w, a), g) == ff_power(eval_word(w, g), a));
    }
  }
}
