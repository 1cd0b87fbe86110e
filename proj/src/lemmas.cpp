#include <algorithm>
#include <mutex>

#include "eggert/dsl.hpp"
#include "eggert/present.hpp"

namespace eggert {

  namespace {
    constexpr unsigned kChainMask = kM1Swap | kM1Slide | kRel | kM4Merge;

    Certificate card_cert(Word const& v) {
      RuleInstance r{RuleKind::CARD, v, {}, 0, 0, 0, 0};
      RewriteStep  s{r, true, 0, identity(v.src()), identity(v.tgt())};
      Certificate  c{v, card_canonical(v.src(), v.tgt()), {s}};
      replay(c);
      return c;
    }

    //! Accumulates a certificate along a chain of waypoints.
    class Chain {
     public:
      Chain(std::string name, Presentation pres, std::string const& start)
          : _name(std::move(name)), _pres(std::move(pres)) {
        _cur  = word(start);
        _cert = Certificate{_cur, _cur, {}};
      }

      Word word(std::string const& e) const {
        return parse_word(e, _pres.alphabet);
      }

      //! Connects the current word to the waypoint by bounded search.
      Chain& to(std::string const& e) {
        connect(word(e));
        return *this;
      }

      //! Inserts sub, whiskered by q, p and placed between u and v.
      Chain& lifted(Certificate const& sub,
                    std::string const& u,
                    arity_t            q,
                    arity_t            p,
                    std::string const& v) {
        auto c = lift(sub, word(u), q, p, word(v), _pres.relations);
        connect(c.start);
        append(c);
        return *this;
      }

      Chain& card(std::string const& u,
                  arity_t            q,
                  std::string const& x,
                  arity_t            p,
                  std::string const& v,
                  bool               forward = true) {
        auto c = card_cert(word(x));
        return lifted(forward ? c : reversed(c), u, q, p, v);
      }

      LemmaFixture done(std::string const& end) {
        to(end);
        replay(_cert, _pres.relations);
        return LemmaFixture{_name, _pres, _cert};
      }

     private:
      void connect(Word const& target) {
        if (target == _cur) {
          return;
        }
        Budget b;
        b.max_steps    = 400000;
        b.mask         = kChainMask;
        b.max_word_len = std::max(_cur.size(), target.size()) + 2;
        auto o         = search(_cur, target, b, _pres.relations);
        if (o.verdict != Verdict::Proved) {
          throw Error("fixture " + _name + ": no chain from " + print_word(_cur, _pres.alphabet)
                      + " to " + print_word(target, _pres.alphabet));
        }
        append(*o.certificate);
      }

      void append(Certificate const& c) {
        _cert = concat(_cert, c);
        _cur  = _cert.end;
      }

      std::string  _name;
      Presentation _pres;
      Word         _cur;
      Certificate  _cert;
    };

    Presentation extended(Presentation       p,
                          std::string const& name,
                          arity_t            src,
                          std::string const& lhs,
                          std::string const& rhs) {
      p.alphabet.add(name, src, 1);
      p.relations.emplace_back(parse_word(lhs, p.alphabet), parse_word(rhs, p.alphabet));
      return make_presentation(p.alphabet, p.relations);
    }

    LemmaFixture zg_claim1() {
      Chain c("ZG-claim1", builtin_group_Z(), "dup . (id(1) * gen omega) . gen mu");
      std::string const B = "(dup . (id(1) * gen omega))";
      c.to("dup . (del * dup) . (id(1) * gen omega) . gen mu")
          .to("dup . (del * dup) . (((gen eta * id(1)) . gen mu) * gen omega) . gen mu")
          .to("dup . ((del . gen eta) * " + B + ") . (gen mu * id(1)) . gen mu")
          .card("dup", 0, "gen omega . del", 1,
                "(gen eta * id(1)) . (id(1) * " + B + ") . (gen mu * id(1)) . gen mu", false)
          .to("dup . ((gen omega . dup . (gen omega * id(1)) . gen mu) * " + B
              + ") . (gen mu * id(1)) . gen mu")
          .to("dup . ((dup . (gen omega * gen omega) . (gen omega * id(1)) . gen mu) * " + B
              + ") . (gen mu * id(1)) . gen mu")
          .to("dup . (dup * dup) . ((gen omega . gen omega) * gen omega * id(1) * gen omega)"
              " . (gen mu * id(2)) . (gen mu * id(1)) . gen mu")
          .to("dup . (dup * dup) . ((gen omega . gen omega) * gen omega * id(1) * gen omega)"
              " . (((id(1) * gen mu) . gen mu) * id(1)) . gen mu")
          .to("dup . (dup * id(1)) . ((gen omega . gen omega) * (dup . (gen omega * id(1)) . gen mu)"
              " * gen omega) . (gen mu * id(1)) . gen mu")
          .to("dup . (dup * id(1)) . ((gen omega . gen omega) * (del . gen eta) * gen omega)"
              " . (gen mu * id(1)) . gen mu")
          .to("dup . (dup * id(1)) . ((gen omega . gen omega) * (del . gen eta) * gen omega)"
              " . (id(1) * gen mu) . gen mu")
          .to("dup . (dup * id(1)) . ((gen omega . gen omega) * del * gen omega)"
              " . (id(1) * ((gen eta * id(1)) . gen mu)) . gen mu")
          .to("dup . (dup * id(1)) . ((gen omega . gen omega) * del * gen omega) . gen mu")
          .to("dup . ((gen omega . gen omega) * gen omega) . gen mu")
          .to("gen omega . dup . (gen omega * id(1)) . gen mu")
          .to("gen omega . del . gen eta")
          .card("id(1)", 0, "gen omega . del", 0, "gen eta");
      return c.done("del . gen eta");
    }

    std::vector<LemmaFixture> build() {
      Presentation const Y = builtin_group();
      std::vector<LemmaFixture> out;

      out.push_back(Chain("diag-assoc", Y, "dup . (dup * id(1))").done("dup . (id(1) * dup)"));
      out.push_back(Chain("diag-square", Y, "dup . (dup * dup)")
                        .done("dup . (dup * id(1)) . (id(1) * dup * id(1))"));
      out.push_back(Chain("diag-counit", Y, "dup . (del * id(1))").done("dup . (id(1) * del)"));
      out.push_back(Chain("omega-diag", Y, "dup . (gen omega * gen omega)").done("gen omega . dup"));
      out.push_back(Chain("omega-del", Y, "gen omega . del")
                        .card("id(1)", 0, "gen omega . del", 0, "id(0)")
                        .done("del"));

      {
        auto  P = extended(Y, "etap", 0, "(gen etap * id(1)) . gen mu", "id(1)");
        Chain c("unit-unique", P, "gen etap");
        c.to("(gen etap * gen eta) . gen mu").to("gen eta . (gen etap * id(1)) . gen mu");
        out.push_back(c.done("gen eta"));
      }
      {
        auto P = extended(Y, "omegap", 1, "dup . (gen omegap * id(1)) . gen mu", "del . gen eta");
        Chain       c("inverse-unique", P, "gen omegap");
        std::string const W = "(gen omegap * id(1))";
        c.to("dup . (gen omegap * del)")
            .to("dup . " + W + " . (id(1) * del) . (id(1) * gen eta) . gen mu")
            .to("dup . " + W + " . (id(1) * (dup . (id(1) * gen omega) . gen mu)) . gen mu")
            .to("dup . (gen omegap * (dup . (id(1) * gen omega))) . (id(1) * gen mu) . gen mu")
            .to("dup . (dup * id(1)) . (gen omegap * id(1) * gen omega) . (id(1) * gen mu) . gen mu")
            .to("dup . (dup * id(1)) . (gen omegap * id(1) * gen omega) . (gen mu * id(1)) . gen mu")
            .to("dup . ((dup . " + W + " . gen mu) * gen omega) . gen mu")
            .to("dup . ((del . gen eta) * gen omega) . gen mu")
            .to("gen omega . (gen eta * id(1)) . gen mu");
        out.push_back(c.done("gen omega"));
      }
      {
        Chain c("eta-omega", Y, "gen eta . gen omega");
        c.to("((gen eta . gen omega) * id(0)) . (id(1) * gen eta) . gen mu")
            .to("(gen eta * gen eta) . (gen omega * id(1)) . gen mu")
            .to("gen eta . dup . (gen omega * id(1)) . gen mu")
            .to("gen eta . del . gen eta")
            .card("id(0)", 0, "gen eta . del", 0, "gen eta");
        out.push_back(c.done("gen eta"));
      }
      {
        Chain             c("omega-involution", Y, "gen omega . gen omega");
        std::string const O = "(gen omega . gen omega)";
        c.to("dup . (id(1) * del) . " + O + " . (id(1) * gen eta) . gen mu")
            .to("dup . (" + O + " * (dup . (gen omega * id(1)) . gen mu)) . gen mu")
            .to("dup . (dup * id(1)) . (" + O + " * gen omega * id(1)) . (id(1) * gen mu) . gen mu")
            .to("dup . (dup * id(1)) . (" + O + " * gen omega * id(1)) . (gen mu * id(1)) . gen mu")
            .to("dup . ((dup . (gen omega * gen omega)) * id(1)) . (gen omega * id(2))"
                " . (gen mu * id(1)) . gen mu")
            .to("dup . ((gen omega . dup) * id(1)) . (gen omega * id(2)) . (gen mu * id(1)) . gen mu")
            .to("dup . (gen omega * id(1)) . ((dup . (gen omega * id(1)) . gen mu) * id(1)) . gen mu")
            .to("dup . (gen omega * id(1)) . ((del . gen eta) * id(1)) . gen mu")
            .card("dup", 0, "gen omega . del", 1, "(gen eta * id(1)) . gen mu")
            .to("(gen eta * id(1)) . gen mu");
        out.push_back(c.done("id(1)"));
      }

      auto claim1 = zg_claim1();
      out.push_back(claim1);
      {
        Chain c("ZG-claim2", builtin_group_Z(), "(id(1) * gen eta) . gen mu");
        c.to("dup . (id(1) * (dup . (gen omega * id(1)) . gen mu)) . gen mu")
            .to("dup . (dup * id(1)) . (id(1) * gen omega * id(1)) . (id(1) * gen mu) . gen mu")
            .to("dup . (dup * id(1)) . (id(1) * gen omega * id(1)) . (gen mu * id(1)) . gen mu")
            .lifted(claim1.cert, "dup", 0, 1, "gen mu")
            .to("(gen eta * id(1)) . gen mu");
        out.push_back(c.done("id(1)"));
      }
      return out;
    }
  }  // namespace

  std::vector<LemmaFixture> const& lemma_fixtures() {
    static std::once_flag            once;
    static std::vector<LemmaFixture> cache;
    std::call_once(once, [] { cache = build(); });
    return cache;
  }

}  // namespace eggert
