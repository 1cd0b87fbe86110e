// Bounded equivalence search with evaluation-based refutation.

#ifndef EGGERT_SEARCH_HPP_
#define EGGERT_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eggert/eval.hpp"
#include "eggert/rules.hpp"

namespace eggert {

  struct Budget {
    //! Distinct words discovered before giving up.
    std::size_t          max_steps = 100000;
    //! 0 means |w| + |w'| + 4.
    std::size_t          max_word_len = 0;
    arity_t              a_max        = 3;
    //! 0 means the largest boundary width of the two words.
    arity_t              pad_max           = 0;
    std::vector<elem_t>  probe_carriers    = {2, 3};
    std::size_t          probe_assignments = 8;
    std::uint64_t        seed              = 0;
    unsigned             mask              = kAllRules;
  };

  enum class Verdict { Proved, Disproved, Unknown };

  std::string to_string(Verdict v);

  //! A refuting assignment. If arity_mismatch is set the words have
  //! different types and the remaining fields are empty.
  struct Witness {
    bool                 arity_mismatch = false;
    GeneratorAssignment  assignment;
    std::vector<elem_t>  input;
    std::vector<elem_t>  left;
    std::vector<elem_t>  right;
  };

  struct Outcome {
    Verdict                    verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;
    std::optional<Witness>     witness;
    std::size_t                visited = 0;
  };

  //! Deterministic probe battery: projections, constants, permutation
  //! actions and seeded random tables on each probe carrier.
  std::vector<GeneratorAssignment> probe_assignments(Alphabet const& A, Budget const& b);

  //! First assignment on which w and w' evaluate differently.
  std::optional<Witness> refute(Word const&                             w,
                                Word const&                             wp,
                                std::vector<GeneratorAssignment> const& probes);

  //! True iff the witness really separates w and w'.
  bool validate_witness(Word const& w, Word const& wp, Witness const& x);

  //! Bidirectional breadth-first search, first with the M1 rules only and
  //! then with b.mask; never returns Disproved.
  Outcome search(Word const& w, Word const& wp, Budget const& b, Relations const& rels = {});

  //! Equivalence in the free operad.
  Outcome equivalent(Word const& w, Word const& wp, Alphabet const& A, Budget const& b = {});

}  // namespace eggert

#endif  // EGGERT_SEARCH_HPP_
