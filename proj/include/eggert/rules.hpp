// Elementary relations, context-closed rewrite steps and certificates.

#ifndef EGGERT_RULES_HPP_
#define EGGERT_RULES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "eggert/word.hpp"

namespace eggert {

  using Relations = std::vector<std::pair<Word, Word>>;

  enum class RuleKind { M1, M2, M3, M4, REL, CARD };

  std::string to_string(RuleKind k);

  //! A schema instance. M1 uses v and v2; M2/M3/M4 use a, q, p, v; REL uses
  //! rel with whisker pads q, p; CARD uses v (of type (1,0) or (0,0)) with
  //! pads q, p.
  struct RuleInstance {
    RuleKind    kind = RuleKind::M1;
    Word        v;
    Word        v2;
    arity_t     a   = 0;
    arity_t     q   = 0;
    arity_t     p   = 0;
    std::size_t rel = 0;

    bool operator==(RuleInstance const&) const = default;
  };

  //! (lhs, rhs) of the instance; throws if parameters are ill-formed.
  std::pair<Word, Word> instance_sides(RuleInstance const& r, Relations const& rels = {});

  //! The canonical word of type (1,0) or (0,0).
  Word card_canonical(arity_t src, arity_t tgt);

  //! w = U . a . V  ->  U . b . V, where a is the lhs (forward) or rhs
  //! (backward) of the rule, U ends with seam_left and V starts with
  //! seam_right, and split is the number of letters in U.
  struct RewriteStep {
    RuleInstance rule;
    bool         forward = true;
    std::size_t  split   = 0;
    FinMap       seam_left;
    FinMap       seam_right;

    bool operator==(RewriteStep const&) const = default;
  };

  class ReplayError : public Error {
   public:
    ReplayError(std::string const& msg, std::size_t step) : Error(msg), _step(step) {}
    std::size_t step() const noexcept {
      return _step;
    }

   private:
    std::size_t _step;
  };

  //! Result of one step; throws Error if the pre-word does not factor as
  //! claimed.
  Word apply_step(Word const& w, RewriteStep const& s, Relations const& rels = {});

  struct Certificate {
    Word                     start;
    Word                     end;
    std::vector<RewriteStep> steps;
  };

  //! Replays all steps from start and checks the end word. Throws
  //! ReplayError naming the 1-based step on failure.
  void replay(Certificate const& c, Relations const& rels = {});
  Certificate reversed(Certificate const& c);
  //! Sequential composition; throws unless a.end == b.start.
  Certificate concat(Certificate const& a, Certificate const& b);

  //! Lifts a certificate for a == b to one for u.(q <| a |> p).v == u.(q <| b |> p).v.
  Certificate lift(Certificate const& c,
                   Word const&        u,
                   arity_t            q,
                   arity_t            p,
                   Word const&        v,
                   Relations const&   rels = {});

  enum RuleMask : unsigned {
    kM1Swap   = 1u << 0,
    kM1Slide  = 1u << 1,
    kM2       = 1u << 2,
    kM4Merge  = 1u << 3,
    kM4Delete = 1u << 4,
    kM4Split  = 1u << 5,
    kRel      = 1u << 6,
    kAllRules = 0x7fu
  };

  struct Bounds {
    arity_t     a_max   = 3;
    arity_t     pad_max = ~arity_t(0);
    std::size_t max_len = ~std::size_t(0);
    unsigned    mask    = kAllRules;
  };

  struct Neighbour {
    RewriteStep step;
    Word        word;
  };

  //! Words one step away from w under the rules selected by bounds.mask.
  std::vector<Neighbour> rule_instances_matching(Word const&      w,
                                                 Bounds const&    bounds,
                                                 Relations const& rels = {});

}  // namespace eggert

#endif  // EGGERT_RULES_HPP_
