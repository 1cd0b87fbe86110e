#include "eggert/rules.hpp"

#include <algorithm>

namespace eggert {

  std::string to_string(RuleKind k) {
    switch (k) {
      case RuleKind::M1:
        return "M1";
      case RuleKind::M2:
        return "M2";
      case RuleKind::M3:
        return "M3";
      case RuleKind::M4:
        return "M4";
      case RuleKind::REL:
        return "REL";
      case RuleKind::CARD:
        return "CARD";
    }
    return "?";
  }

  Word card_canonical(arity_t src, arity_t tgt) {
    if (src == 1 && tgt == 0) {
      return structure_word(f0());
    }
    if (src == 0 && tgt == 0) {
      return id_word(0);
    }
    throw Error("CARD applies only to types (1,0) and (0,0)");
  }

  std::pair<Word, Word> instance_sides(RuleInstance const& r, Relations const& rels) {
    if (r.kind != RuleKind::REL && r.kind != RuleKind::CARD && r.v.size() > 1) {
      throw Error("schema word v must have length at most 1");
    }
    Word const& v = r.v;
    switch (r.kind) {
      case RuleKind::M1: {
        Word const& w = r.v2;
        if (w.size() > 1) {
          throw Error("schema word v2 must have length at most 1");
        }
        return {compose_words(whisker(0, v, w.src()), whisker(v.tgt(), w, 0)),
                compose_words(whisker(v.src(), w, 0), whisker(0, v, w.tgt()))};
      }
      case RuleKind::M2:
        return {whisker(r.q,
                        compose_words(structure_word(braid(v.src(), r.a)), whisker(0, v, r.a)),
                        r.p),
                whisker(r.q,
                        compose_words(whisker(r.a, v, 0), structure_word(braid(v.tgt(), r.a))),
                        r.p)};
      case RuleKind::M3:
        return {whisker(r.q,
                        compose_words(structure_word(braid(r.a, v.src())), whisker(r.a, v, 0)),
                        r.p),
                whisker(r.q,
                        compose_words(whisker(0, v, r.a), structure_word(braid(r.a, v.tgt()))),
                        r.p)};
      case RuleKind::M4:
        return {whisker(r.q,
                        compose_words(structure_word(branch(r.a, v.src())), tensor_power(v, r.a)),
                        r.p),
                whisker(r.q, compose_words(v, structure_word(branch(r.a, v.tgt()))), r.p)};
      case RuleKind::REL:
        if (r.rel >= rels.size()) {
          throw Error("relation index " + std::to_string(r.rel) + " out of range");
        }
        return {whisker(r.q, rels[r.rel].first, r.p), whisker(r.q, rels[r.rel].second, r.p)};
      case RuleKind::CARD:
        return {whisker(r.q, v, r.p), whisker(r.q, card_canonical(v.src(), v.tgt()), r.p)};
    }
    throw Error("bad rule kind");
  }

  Word apply_step(Word const& w, RewriteStep const& s, Relations const& rels) {
    auto [lhs, rhs] = instance_sides(s.rule, rels);
    Word const& a   = s.forward ? lhs : rhs;
    Word const& b   = s.forward ? rhs : lhs;
    if (s.split + a.size() > w.size()) {
      throw Error("pattern span runs past the end of the word");
    }
    if (s.seam_left.tgt() != w.boundary(s.split).tgt()
        || s.seam_right.src() != w.boundary(s.split + a.size()).src()) {
      throw Error("seam maps have the wrong arities");
    }
    Word u = prefix_with(w, s.split, s.seam_left);
    Word v = suffix_with(s.seam_right, w, s.split + a.size());
    if (compose_words({u, a, v}) != w) {
      throw Error("word does not factor through the pattern at split "
                  + std::to_string(s.split));
    }
    return compose_words({u, b, v});
  }

  void replay(Certificate const& c, Relations const& rels) {
    Word w = c.start;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      try {
        w = apply_step(w, c.steps[i], rels);
      } catch (Error const& e) {
        throw ReplayError("step " + std::to_string(i + 1) + ": " + e.what(), i + 1);
      }
    }
    if (w != c.end) {
      throw ReplayError("replay does not end at the stated end word", c.steps.size());
    }
  }

  Certificate reversed(Certificate const& c) {
    Certificate r{c.end, c.start, {c.steps.rbegin(), c.steps.rend()}};
    for (auto& s : r.steps) {
      s.forward = !s.forward;
    }
    return r;
  }

  Certificate concat(Certificate const& a, Certificate const& b) {
    if (a.end != b.start) {
      throw Error("certificates do not chain");
    }
    Certificate r{a.start, b.end, a.steps};
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
  }

  Certificate lift(Certificate const& c,
                   Word const&        u,
                   arity_t            q,
                   arity_t            p,
                   Word const&        v,
                   Relations const&   rels) {
    auto        ctx = [&](Word const& x) { return compose_words({u, whisker(q, x, p), v}); };
    Certificate r{ctx(c.start), ctx(c.end), {}};
    Word        w = c.start;
    for (auto const& s : c.steps) {
      RewriteStep t = s;
      if (s.rule.kind == RuleKind::M1) {
        t.rule.v  = whisker(q, s.rule.v, 0);
        t.rule.v2 = whisker(0, s.rule.v2, p);
      } else {
        t.rule.q += q;
        t.rule.p += p;
      }
      auto        sides = instance_sides(s.rule, rels);
      std::size_t span  = (s.forward ? sides.first : sides.second).size();
      Word        U     = compose_words(u, whisker(q, prefix_with(w, s.split, s.seam_left), p));
      Word V = compose_words(whisker(q, suffix_with(s.seam_right, w, s.split + span), p), v);
      t.split      = U.size();
      t.seam_left  = U.boundary().back();
      t.seam_right = V.boundary().front();
      r.steps.push_back(std::move(t));
      w = apply_step(w, s, rels);
    }
    return r;
  }

}  // namespace eggert
