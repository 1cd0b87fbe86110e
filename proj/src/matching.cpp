// Enumeration of one-step rewrites.
//
// Patterns are matched with their outer boundary maps absorbed into the
// seams wherever the schema allows it; the remaining freedom in the schema
// words is read off the interior boundary maps of w.

#include <algorithm>
#include <optional>

#include "eggert/rules.hpp"

namespace eggert {

  namespace {

    struct Split {
      FinMap left;
      FinMap right;
    };

    // F = A (x) B with A: [1,s] -> [1,t].
    std::optional<Split> split_map(FinMap const& F, arity_t s, arity_t t) {
      if (s > F.src() || t > F.tgt()) {
        return std::nullopt;
      }
      std::vector<arity_t> a(s), b(F.src() - s);
      for (arity_t i = 0; i < s; ++i) {
        if (F.table()[i] > t) {
          return std::nullopt;
        }
        a[i] = F.table()[i];
      }
      for (arity_t i = s; i < F.src(); ++i) {
        if (F.table()[i] <= t) {
          return std::nullopt;
        }
        b[i - s] = F.table()[i] - t;
      }
      return Split{FinMap(s, t, std::move(a)), FinMap(F.src() - s, F.tgt() - t, std::move(b))};
    }

    // Length of the prefix of F with entries <= t.
    arity_t prefix_below(FinMap const& F, arity_t t) {
      arity_t s = 0;
      while (s < F.src() && F.table()[s] <= t) {
        ++s;
      }
      return s;
    }

    // Range of t for which F splits after source position s.
    std::pair<arity_t, arity_t> target_range(FinMap const& F, arity_t s) {
      arity_t lo = 0, hi = F.tgt();
      for (arity_t i = 0; i < s; ++i) {
        lo = std::max(lo, F.table()[i]);
      }
      for (arity_t i = s; i < F.src(); ++i) {
        hi = std::min(hi, F.table()[i] - 1);
      }
      return {lo, hi};
    }

    Word single(FinMap g0, Letter x, FinMap g1) {
      return Word({std::move(g0), std::move(g1)}, {x});
    }

    Letter shifted(Letter x, int dl, int dr) {
      x.left  = static_cast<arity_t>(static_cast<int>(x.left) + dl);
      x.right = static_cast<arity_t>(static_cast<int>(x.right) + dr);
      return x;
    }

    FinMap pad(arity_t q, FinMap const& f, arity_t p) {
      return tensor(tensor(identity(q), f), identity(p));
    }

    class Matcher {
     public:
      Matcher(Word const& w, Bounds const& b, Relations const& rels)
          : _w(w), _b(b), _rels(rels) {}

      std::vector<Neighbour> run() {
        std::size_t k = _w.size();
        for (std::size_t i = 0; i < k; ++i) {
          if (_b.mask & kM1Slide) {
            slides(i);
          }
          if (_b.mask & kM4Delete) {
            m4_delete(i);
          }
          if (_b.mask & kM2) {
            m2(i);
          }
          if (_b.mask & kM4Split) {
            m4_split(i);
          }
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
          if (_b.mask & kM1Swap) {
            m1_swap(i);
          }
          if (_b.mask & kM4Merge) {
            m4_merge(i);
          }
        }
        if (_b.mask & kRel) {
          for (std::size_t r = 0; r < _rels.size(); ++r) {
            rel(r, true);
            rel(r, false);
          }
        }
        return std::move(_out);
      }

     private:
      void emit(RuleInstance rule, bool fwd, std::size_t split, FinMap sl, FinMap sr) {
        RewriteStep s{std::move(rule), fwd, split, std::move(sl), std::move(sr)};
        Word        r;
        try {
          r = apply_step(_w, s, _rels);
        } catch (Error const&) {
          return;
        }
        if (r.size() > _b.max_len || r == _w) {
          return;
        }
        _out.push_back({std::move(s), std::move(r)});
      }

      static RuleInstance m1(Word v, Word v2) {
        RuleInstance r;
        r.kind = RuleKind::M1;
        r.v    = std::move(v);
        r.v2   = std::move(v2);
        return r;
      }

      static RuleInstance schema(RuleKind k, arity_t a, arity_t q, arity_t p, Word v) {
        RuleInstance r;
        r.kind = k;
        r.a    = a;
        r.q    = q;
        r.p    = p;
        r.v    = std::move(v);
        return r;
      }

      // Two adjacent letters whose middle map is block diagonal.
      void m1_swap(std::size_t i) {
        Letter const& A   = _w.letter(i);
        Letter const& B   = _w.letter(i + 1);
        FinMap const& Mid = _w.boundary(i + 1);
        FinMap const& P   = _w.boundary(i);
        FinMap const& Q   = _w.boundary(i + 2);
        // (v |> v's).(vt <| v'): A first, B right of A's block.
        for (arity_t vt = 0; vt <= B.left; ++vt) {
          for (arity_t vps = 0; vps <= A.right; ++vps) {
            auto sp = split_map(Mid, vt, A.out() - vps);
            if (!sp) {
              continue;
            }
            Word v  = single(identity(A.in() - vps), shifted(A, 0, -int(vps)), sp->left);
            Word v2 = single(sp->right, shifted(B, -int(vt), 0), identity(B.out() - vt));
            emit(m1(std::move(v), std::move(v2)), true, i, P, Q);
          }
        }
        // (vs <| v').(v |> v't): A is the v' letter, B the v letter.
        for (arity_t vs = 0; vs <= A.left; ++vs) {
          for (arity_t vpt = 0; vpt <= B.right; ++vpt) {
            auto sp = split_map(Mid, B.in() - vpt, vs);
            if (!sp) {
              continue;
            }
            Word v  = single(sp->left, shifted(B, 0, -int(vpt)), identity(B.out() - vpt));
            Word v2 = single(identity(A.in() - vs), shifted(A, -int(vs), 0), sp->right);
            emit(m1(std::move(v), std::move(v2)), false, i, P, Q);
          }
        }
      }

      // M1 with one side of length 0: a block-diagonal piece of a boundary
      // map passes the letter.
      void slides(std::size_t i) {
        Letter const& X = _w.letter(i);
        FinMap const& P = _w.boundary(i);
        FinMap const& Q = _w.boundary(i + 1);
        // Left piece of P moves after the letter.
        for (arity_t s = 0; s <= X.left; ++s) {
          auto [lo, hi] = target_range(P, s);
          for (arity_t t = lo; t <= hi && lo <= hi; ++t) {
            auto sp = split_map(P, s, t);
            if (!sp || sp->left.is_identity()) {
              continue;
            }
            Word v2 = single(sp->right, shifted(X, -int(s), 0), identity(X.out() - s));
            emit(m1(structure_word(sp->left), std::move(v2)), true, i, identity(P.tgt()), Q);
          }
        }
        // Left piece of Q moves before the letter.
        for (arity_t t = 0; t <= X.left; ++t) {
          auto sp = split_map(Q, prefix_below(Q, t), t);
          if (!sp || sp->left.is_identity()) {
            continue;
          }
          Word v2 = single(identity(X.in() - t), shifted(X, -int(t), 0), sp->right);
          emit(m1(structure_word(sp->left), std::move(v2)), false, i, P, identity(Q.src()));
        }
        // Right piece of Q moves before the letter.
        for (arity_t gt = 0; gt <= X.right; ++gt) {
          arity_t n1 = X.out() - gt;
          auto    sp = split_map(Q, prefix_below(Q, n1), n1);
          if (!sp || sp->right.is_identity()) {
            continue;
          }
          Word v = single(identity(X.in() - gt), shifted(X, 0, -int(gt)), sp->left);
          emit(m1(std::move(v), structure_word(sp->right)), true, i, P, identity(Q.src()));
        }
        // Right piece of P moves after the letter.
        for (arity_t gs = 0; gs <= X.right; ++gs) {
          arity_t n0    = X.in() - gs;
          auto [lo, hi] = target_range(P, n0);
          for (arity_t t = lo; t <= hi && lo <= hi; ++t) {
            auto sp = split_map(P, n0, t);
            if (!sp || sp->right.is_identity()) {
              continue;
            }
            Word v = single(sp->left, shifted(X, 0, -int(gs)), identity(X.out() - gs));
            emit(m1(std::move(v), structure_word(sp->right)), false, i, identity(P.tgt()), Q);
          }
        }
      }

      // Moves a letter across a block of a wires; the M3 forms give the
      // same words and are not enumerated.
      void m2(std::size_t i) {
        Letter const& X = _w.letter(i);
        FinMap const& P = _w.boundary(i);
        FinMap const& Q = _w.boundary(i + 1);
        for (arity_t q = 0; q <= X.left && q <= _b.pad_max; ++q) {
          arity_t l = X.left - q;
          for (arity_t r = 0; r <= X.right; ++r) {
            for (arity_t a = 1; a <= _b.a_max && r + a <= X.right; ++a) {
              arity_t p = X.right - r - a;
              if (p > _b.pad_max) {
                continue;
              }
              Word   v  = letter_word(l, X.gen, X.gen_src, X.gen_tgt, r);
              FinMap a0 = pad(q, braid(v.src(), a), p);
              emit(schema(RuleKind::M2, a, q, p, v), true, i, compose(inverse(a0), P), Q);
            }
          }
        }
        for (arity_t q = 0; q <= X.left && q <= _b.pad_max; ++q) {
          for (arity_t a = 1; a <= _b.a_max && q + a <= X.left; ++a) {
            arity_t l = X.left - q - a;
            for (arity_t r = 0; r <= X.right; ++r) {
              arity_t p = X.right - r;
              if (p > _b.pad_max) {
                continue;
              }
              Word   v  = letter_word(l, X.gen, X.gen_src, X.gen_tgt, r);
              FinMap al = pad(q, braid(v.tgt(), a), p);
              emit(schema(RuleKind::M2, a, q, p, v), false, i, P, compose(Q, inverse(al)));
            }
          }
        }
      }

      // A letter whose outputs are all discarded.
      void m4_delete(std::size_t i) {
        Letter const& X  = _w.letter(i);
        FinMap        al = pad(X.left, branch(0, X.gen_tgt), X.right);
        auto          f  = factorizations_through(_w.boundary(i + 1), al);
        if (f.empty()) {
          return;
        }
        Word v = letter_word(0, X.gen, X.gen_src, X.gen_tgt, 0);
        emit(schema(RuleKind::M4, 0, X.left, X.right, v), false, i, _w.boundary(i), f.front());
      }

      // One letter becomes a copies reading duplicated inputs.
      void m4_split(std::size_t i) {
        Letter const& X = _w.letter(i);
        if (X.gen_tgt == 0) {
          return;
        }
        FinMap const& Q = _w.boundary(i + 1);
        for (arity_t a = 2; a <= _b.a_max; ++a) {
          FinMap al = pad(X.left, branch(a, X.gen_tgt), X.right);
          Word   v  = letter_word(0, X.gen, X.gen_src, X.gen_tgt, 0);
          int    n  = 0;
          for (auto const& f : factorizations_through(Q, al)) {
            std::vector<bool> used(a, false);
            for (auto y : f.table()) {
              if (y > X.left && y <= X.left + a * X.gen_tgt) {
                used[(y - X.left - 1) / X.gen_tgt] = true;
              }
            }
            if (std::find(used.begin(), used.end(), false) != used.end()) {
              continue;
            }
            emit(schema(RuleKind::M4, a, X.left, X.right, v), false, i, _w.boundary(i), f);
            if (++n >= 8) {
              break;
            }
          }
        }
      }

      // a adjacent copies of one generator reading the same wires.
      void m4_merge(std::size_t i) {
        Letter const& A = _w.letter(i);
        Letter const& B = _w.letter(i + 1);
        if (A.gen != B.gen || B.left < A.left || A.right < B.right) {
          return;
        }
        arity_t vt = B.left - A.left, vs = A.right - B.right;
        for (arity_t a = 2; a <= _b.a_max && i + a <= _w.size(); ++a) {
          Letter const& Z = _w.letter(i + a - 1);
          if (Z.gen != A.gen || Z.left != A.left + (a - 1) * vt || Z.right + (a - 1) * vs != A.right) {
            break;
          }
          for (arity_t q = 0; q <= A.left; ++q) {
            for (arity_t p = 0; p <= Z.right; ++p) {
              arity_t l = A.left - q, r = Z.right - p;
              arity_t n1 = l + A.gen_tgt + r, n0 = l + A.gen_src + r;
              FinMap const& Mid = _w.boundary(i + 1);
              // Mid = id_q (x) g1 (x) g0 (x) id.
              auto outer = split_map(Mid, q, q);
              if (!outer || !outer->left.is_identity()) {
                continue;
              }
              auto g1rest = split_map(outer->right, vt, n1);
              if (!g1rest) {
                continue;
              }
              auto g0rest = split_map(g1rest->right, n0, vs);
              if (!g0rest || !g0rest->right.is_identity()) {
                continue;
              }
              Letter x{l, A.gen, r, A.gen_src, A.gen_tgt};
              Word   v = single(g0rest->left, x, g1rest->left);
              auto   rule = schema(RuleKind::M4, a, q, p, v);
              Word   lhs  = instance_sides(rule).first;
              bool   ok   = true;
              for (std::size_t c = 0; c < a && ok; ++c) {
                ok = lhs.letter(c) == _w.letter(i + c)
                     && (c == 0 || lhs.boundary(c) == _w.boundary(i + c));
              }
              if (!ok) {
                continue;
              }
              auto ul = extensions_through(_w.boundary(i), lhs.boundary(0));
              auto vr = factorizations_through(_w.boundary(i + a), lhs.boundary().back());
              if (ul.empty() || vr.empty()) {
                continue;
              }
              emit(std::move(rule), true, i, ul.front(), vr.front());
            }
          }
        }
      }

      void rel(std::size_t r, bool fwd) {
        Word const& A = fwd ? _rels[r].first : _rels[r].second;
        RuleInstance rule;
        rule.kind = RuleKind::REL;
        rule.rel  = r;
        std::size_t k = _w.size(), j = A.size();
        if (j == 0) {
          FinMap const& Am = A.boundary(0);
          for (std::size_t i = 0; i <= k; ++i) {
            FinMap const& F = _w.boundary(i);
            // Pattern after F: F = Aw ; u.
            for (arity_t q = 0; q + Am.src() <= F.src() && q <= _b.pad_max; ++q) {
              arity_t p = F.src() - Am.src() - q;
              rule.q = q;
              rule.p = p;
              int n  = 0;
              for (auto const& u : extensions_through(F, pad(q, Am, p))) {
                emit(rule, fwd, i, u, identity(F.src()));
                if (++n >= 4) {
                  break;
                }
              }
            }
            // Pattern before F: F = v ; Aw.
            for (arity_t q = 0; q + Am.tgt() <= F.tgt() && q <= _b.pad_max; ++q) {
              arity_t p = F.tgt() - Am.tgt() - q;
              rule.q = q;
              rule.p = p;
              int n  = 0;
              for (auto const& v : factorizations_through(F, pad(q, Am, p))) {
                emit(rule, fwd, i, identity(F.tgt()), v);
                if (++n >= 4) {
                  break;
                }
              }
            }
          }
          return;
        }
        for (std::size_t i = 0; i + j <= k; ++i) {
          Letter const& x = _w.letter(i);
          Letter const& y = A.letter(0);
          if (x.gen != y.gen || x.left < y.left || x.right < y.right) {
            continue;
          }
          rule.q = x.left - y.left;
          rule.p = x.right - y.right;
          Word Aw = whisker(rule.q, A, rule.p);
          bool ok = true;
          for (std::size_t c = 0; c < j && ok; ++c) {
            ok = Aw.letter(c) == _w.letter(i + c) && (c == 0 || Aw.boundary(c) == _w.boundary(i + c));
          }
          if (!ok) {
            continue;
          }
          auto ul = extensions_through(_w.boundary(i), Aw.boundary(0));
          auto vr = factorizations_through(_w.boundary(i + j), Aw.boundary().back());
          int  n  = 0;
          for (auto const& u : ul) {
            for (auto const& v : vr) {
              emit(rule, fwd, i, u, v);
              if (++n >= 16) {
                return;
              }
            }
          }
        }
      }

      Word const&            _w;
      Bounds const&          _b;
      Relations const&       _rels;
      std::vector<Neighbour> _out;
    };

  }  // namespace

  std::vector<Neighbour> rule_instances_matching(Word const&      w,
                                                 Bounds const&    bounds,
                                                 Relations const& rels) {
    return Matcher(w, bounds, rels).run();
  }

}  // namespace eggert
