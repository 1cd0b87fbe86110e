#include <doctest.h>

#include <algorithm>
#include <random>

#include "eggert/rules.hpp"
#include "eggert/search.hpp"
#include "support.hpp"

using namespace eggert;

TEST_CASE("schema sides agree on type and under evaluation") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Alphabet        A = test::random_alphabet(seed);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
      auto r            = test::random_instance(rng, A, 3);
      auto [lhs, rhs]   = instance_sides(r);
      REQUIRE(lhs.src() == rhs.src());
      REQUIRE(lhs.tgt() == rhs.tgt());
      if (lhs.src() > 5) {
        continue;
      }
      for (elem_t M : {2u, 3u}) {
        auto g = test::random_assignment(rng, A, M);
        REQUIRE(eval_word(lhs, g) == eval_word(rhs, g));
      }
    }
  }
}

TEST_CASE("M1 on a tensor of two letters yields the swapped form") {
  Alphabet A  = alphabet_group();
  Word     mu = gen_word(A, "mu");
  Word     om = gen_word(A, "omega");
  Word     w  = tensor_words(mu, om);
  Word     sw = compose_words(whisker(mu.src(), om, 0), whisker(0, mu, om.tgt()));
  auto     ns = rule_instances_matching(w, Bounds{});
  bool     found = std::any_of(ns.begin(), ns.end(), [&](auto const& n) {
    return n.word == sw && n.step.rule.kind == RuleKind::M1;
  });
  CHECK(found);
  for (auto const& n : ns) {
    CHECK(apply_step(w, n.step) == n.word);
  }
  auto none = rule_instances_matching(id_word(1), Bounds{});
  CHECK(std::none_of(none.begin(), none.end(), [](auto const& n) {
    return n.step.rule.kind == RuleKind::M1;
  }));
}

TEST_CASE("M2 instances are discovered in both directions") {
  Alphabet A  = alphabet_group();
  Word     om = gen_word(A, "omega");
  RuleInstance r{RuleKind::M2, om, {}, 1, 0, 0, 0};
  auto [lhs, rhs] = instance_sides(r);
  auto ns = rule_instances_matching(lhs, Bounds{});
  CHECK(std::any_of(ns.begin(), ns.end(), [&](auto const& n) { return n.word == rhs; }));
  ns = rule_instances_matching(rhs, Bounds{});
  CHECK(std::any_of(ns.begin(), ns.end(), [&](auto const& n) { return n.word == lhs; }));
}

TEST_CASE("search links the two sides of random schema instances in a few steps") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Alphabet        A = test::random_alphabet(100 + seed);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
      auto r = test::random_instance(rng, A, 2);
      if (r.kind == RuleKind::M3 || (r.kind == RuleKind::M4 && r.a < 2)) {
        continue;
      }
      auto [lhs, rhs] = instance_sides(r);
      if (lhs.src() > 6 || lhs.size() == 0 || rhs.size() == 0 || lhs == rhs) {
        continue;
      }
      Budget b;
      b.max_steps = 5000;
      auto o      = search(lhs, rhs, b);
      REQUIRE_MESSAGE(o.verdict == Verdict::Proved,
                      "kind " << to_string(r.kind) << " a=" << r.a << " seed " << seed);
      CHECK(o.certificate->steps.size() <= 3);
    }
  }
}

TEST_CASE("certificates replay and reverse") {
  Alphabet A  = alphabet_group();
  Word     mu = gen_word(A, "mu");
  Word     om = gen_word(A, "omega");
  Word     w  = tensor_words(mu, om);
  Word     w2 = compose_words(whisker(2, om, 0), whisker(0, mu, 1));
  auto     o  = search(w, w2, Budget{});
  REQUIRE(o.verdict == Verdict::Proved);
  replay(*o.certificate);
  replay(reversed(*o.certificate));
  auto bad = *o.certificate;
  REQUIRE(!bad.steps.empty());
  bad.steps[0].split += 1;
  CHECK_THROWS_AS(replay(bad), ReplayError);
  auto lifted = lift(*o.certificate, tensor_words(gen_word(A, "eta"), id_word(3)), 1, 0, id_word(3));
  replay(lifted);
}

TEST_CASE("equivalent decides the easy cases") {
  Alphabet A  = alphabet_group();
  Word     mu = gen_word(A, "mu");
  auto     o  = equivalent(mu, mu, A);
  CHECK(o.verdict == Verdict::Proved);
  CHECK(o.certificate->steps.empty());
  Word swapped = compose_words(structure_word(braid(1, 1)), mu);
  o            = equivalent(mu, swapped, A);
  REQUIRE(o.verdict == Verdict::Disproved);
  CHECK(validate_witness(mu, swapped, *o.witness));
  o = equivalent(mu, gen_word(A, "omega"), A);
  CHECK(o.verdict == Verdict::Disproved);
  CHECK(o.witness->arity_mismatch);
}

TEST_CASE("interchange, braid and branch lemmas are proved") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Alphabet A = test::random_alphabet(rng());
    Word     w = test::random_word(rng, A, 2, 2);
    Word     v = test::random_word(rng, A, 2, 2);
    Word     l = compose_words(whisker(0, w, v.src()), whisker(w.tgt(), v, 0));
    Word     r = compose_words(whisker(w.src(), v, 0), whisker(0, w, v.tgt()));
    auto     o = equivalent(l, r, A);
    CHECK_MESSAGE(o.verdict == Verdict::Proved, "interchange case " << i);
    arity_t p  = test::pick(rng, 0, 2);
    Word    bl = compose_words(structure_word(braid(w.src(), p)), whisker(0, w, p));
    Word    br = compose_words(whisker(p, w, 0), structure_word(braid(w.tgt(), p)));
    o          = equivalent(bl, br, A);
    CHECK_MESSAGE(o.verdict == Verdict::Proved, "braid case " << i);
    Word    u  = test::random_word(rng, A, 1, 2);
    arity_t a  = test::pick(rng, 0, 2);
    Word    hl = compose_words(structure_word(branch(a, u.src())), tensor_power(u, a));
    Word    hr = compose_words(u, structure_word(branch(a, u.tgt())));
    o          = equivalent(hl, hr, A);
    CHECK_MESSAGE(o.verdict == Verdict::Proved, "branch case " << i);
  }
}
