// Certificate and assignment files.

#ifndef EGGERT_IO_HPP_
#define EGGERT_IO_HPP_

#include <string>

#include "eggert/present.hpp"

namespace eggert {

  //! Resolves `@group` and `@group-Z`; anything else is presentation text.
  Presentation builtin_presentation(std::string const& tag);

  //! Header `pres:` names a built-in (`@group`, `@group-Z`) or `inline`,
  //! in which case `generator` and `relation` lines follow. Then `start:`,
  //! `end:` and one `step n:` line per step. Relations are numbered from 1
  //! in `rule=REL:i`.
  std::string write_certificate(Certificate const& c, Presentation const& pres, std::string const& tag);

  struct CertificateFile {
    Presentation pres;
    Certificate  cert;
  };

  CertificateFile read_certificate(std::string const& text);

  //! Blocks of `gen NAME` followed by table rows `x1 .. xm -> y1 .. yn`.
  //! Generators without a block stay unassigned.
  GeneratorAssignment parse_assignment(std::string const& text, Alphabet const& A, elem_t carrier);

  std::string write_assignment(GeneratorAssignment const& g);

}  // namespace eggert

#endif  // EGGERT_IO_HPP_
