// Finitely presented operads <X|Y> and the group presentation.

#ifndef EGGERT_PRESENT_HPP_
#define EGGERT_PRESENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "eggert/search.hpp"

namespace eggert {

  struct Presentation {
    Alphabet  alphabet;
    Relations relations;
  };

  //! Throws ArityError if some relation has sides of different types.
  Presentation make_presentation(Alphabet A, Relations rels);

  //! Parses `generator NAME m n` and `relation <expr> == <expr>` lines.
  //! Blank lines and lines starting with '#' are skipped.
  Presentation parse_presentation(std::string const& text);

  //! Generators mu (2,1), eta (0,1), omega (1,1) with the five group
  //! relations: associativity, left and right unit, left and right inverse.
  Presentation builtin_group();
  //! Associativity, left unit and left inverse only.
  Presentation builtin_group_Z();

  struct AlgebraReport {
    struct Entry {
      bool                      pass = true;
      std::optional<Difference> diff;
    };
    std::vector<Entry> entries;

    bool pass() const;
    //! Index of the first failing relation, if any.
    std::optional<std::size_t> first_failure() const;
  };

  AlgebraReport check_algebra(GeneratorAssignment const& g, Presentation const& pres);

  struct GroupTables {
    elem_t              order = 0;
    std::vector<elem_t> mult;
    elem_t              unit = 0;
    std::vector<elem_t> inverse;

    bool operator==(GroupTables const&) const = default;
  };

  GroupTables group_zmod(elem_t n);
  GroupTables group_s3();
  //! Z/1 .. Z/6 and S3.
  std::vector<GroupTables> small_groups();

  //! Assigns every (2,1) generator the multiplication, every (0,1)
  //! generator the unit and every (1,1) generator the inverse. Throws for
  //! generators of any other type.
  GeneratorAssignment algebra_from_group(GroupTables const& t, Alphabet const& A);

  class AlgebraRejected : public Error {
   public:
    AlgebraRejected(std::string const& msg, AlgebraReport report)
        : Error(msg), _report(std::move(report)) {}
    AlgebraReport const& report() const noexcept {
      return _report;
    }

   private:
    AlgebraReport _report;
  };

  //! Reads the tables of mu, eta, omega back from an algebra of
  //! builtin_group() and re-verifies the group axioms on them.
  GroupTables group_from_algebra(GeneratorAssignment const& g);

  struct ModOptions {
    bool use_lemmas = true;
  };

  //! Equivalence modulo the relations of pres. Disproved witnesses satisfy
  //! every relation.
  Outcome equivalent_mod(Word const&         w,
                         Word const&         wp,
                         Presentation const& pres,
                         Budget const&       b    = {},
                         ModOptions const&   opts = {});

  //! Probe assignments that satisfy every relation of pres.
  std::vector<GeneratorAssignment> model_probes(Presentation const& pres, Budget const& b);

  //! True iff the witness separates w and w' and satisfies pres.
  bool validate_witness_mod(Word const&         w,
                            Word const&         wp,
                            Witness const&      x,
                            Presentation const& pres);

  struct LemmaFixture {
    std::string  name;
    Presentation pres;
    Certificate  cert;
  };

  //! Certificates for the identities of the group presentation. Built once
  //! and cached.
  std::vector<LemmaFixture> const& lemma_fixtures();

}  // namespace eggert

#endif  // EGGERT_PRESENT_HPP_
