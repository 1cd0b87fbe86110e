#include "eggert/present.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "eggert/dsl.hpp"

namespace eggert {

  Presentation make_presentation(Alphabet A, Relations rels) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      auto const& [l, r] = rels[i];
      if (l.src() != r.src() || l.tgt() != r.tgt()) {
        throw ArityError("relation " + std::to_string(i) + " relates words of types ("
                         + std::to_string(l.src()) + "," + std::to_string(l.tgt()) + ") and ("
                         + std::to_string(r.src()) + "," + std::to_string(r.tgt()) + ")");
      }
    }
    return Presentation{std::move(A), std::move(rels)};
  }

  Presentation parse_presentation(std::string const& text) {
    Alphabet                                         A;
    std::vector<std::pair<std::string, std::string>> pending;
    std::istringstream                               in(text);
    std::string                                      line;
    std::size_t                                      lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      std::istringstream ls(line.substr(first));
      std::string        kw;
      ls >> kw;
      if (kw == "generator") {
        std::string name;
        long        m = -1, n = -1;
        std::string extra;
        if (!(ls >> name >> m >> n) || m < 0 || n < 0 || (ls >> extra)) {
          throw ParseError("malformed generator line " + std::to_string(lineno), first);
        }
        A.add(name, static_cast<arity_t>(m), static_cast<arity_t>(n));
      } else if (kw == "relation") {
        std::string rest = line.substr(first + kw.size());
        auto        eq   = rest.find("==");
        if (eq == std::string::npos) {
          throw ParseError("relation line " + std::to_string(lineno) + " lacks '=='", first);
        }
        pending.emplace_back(rest.substr(0, eq), rest.substr(eq + 2));
      } else {
        throw ParseError("unknown keyword '" + kw + "' on line " + std::to_string(lineno), first);
      }
    }
    Relations rels;
    for (auto const& [l, r] : pending) {
      rels.emplace_back(parse_word(l, A), parse_word(r, A));
    }
    return make_presentation(std::move(A), std::move(rels));
  }

  namespace {
    Relations group_relations(Alphabet const& A) {
      char const* const sides[5][2] = {
          {"(gen mu * id(1)) . gen mu", "(id(1) * gen mu) . gen mu"},
          {"(gen eta * id(1)) . gen mu", "id(1)"},
          {"(id(1) * gen eta) . gen mu", "id(1)"},
          {"dup . (gen omega * id(1)) . gen mu", "del . gen eta"},
          {"dup . (id(1) * gen omega) . gen mu", "del . gen eta"},
      };
      Relations rels;
      for (auto const& s : sides) {
        rels.emplace_back(parse_word(s[0], A), parse_word(s[1], A));
      }
      return rels;
    }
  }  // namespace

  Presentation builtin_group() {
    Alphabet A = alphabet_group();
    return make_presentation(A, group_relations(A));
  }

  Presentation builtin_group_Z() {
    Alphabet A   = alphabet_group();
    auto     all = group_relations(A);
    return make_presentation(A, {all[0], all[1], all[3]});
  }

  bool AlgebraReport::pass() const {
    return !first_failure().has_value();
  }

  std::optional<std::size_t> AlgebraReport::first_failure() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].pass) {
        return i;
      }
    }
    return std::nullopt;
  }

  AlgebraReport check_algebra(GeneratorAssignment const& g, Presentation const& pres) {
    g.check_complete();
    AlgebraReport rep;
    for (auto const& [l, r] : pres.relations) {
      AlgebraReport::Entry e;
      e.diff = first_difference(eval_word(l, g), eval_word(r, g));
      e.pass = !e.diff;
      rep.entries.push_back(std::move(e));
    }
    return rep;
  }

  GroupTables group_zmod(elem_t n) {
    GroupTables t;
    t.order = n;
    t.unit  = 0;
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        t.mult.push_back((a + b) % n);
      }
      t.inverse.push_back((n - a) % n);
    }
    return t;
  }

  GroupTables group_s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p = {0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](std::array<int, 3> const& x) {
      return static_cast<elem_t>(std::find(perms.begin(), perms.end(), x) - perms.begin());
    };
    GroupTables t;
    t.order = 6;
    t.unit  = 0;
    for (auto const& a : perms) {
      for (auto const& b : perms) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) {
          c[i] = b[a[i]];
        }
        t.mult.push_back(index(c));
      }
      std::array<int, 3> inv{};
      for (int i = 0; i < 3; ++i) {
        inv[a[i]] = i;
      }
      t.inverse.push_back(index(inv));
    }
    return t;
  }

  std::vector<GroupTables> small_groups() {
    std::vector<GroupTables> out;
    for (elem_t n = 1; n <= 6; ++n) {
      out.push_back(group_zmod(n));
    }
    out.push_back(group_s3());
    return out;
  }

  GeneratorAssignment algebra_from_group(GroupTables const& t, Alphabet const& A) {
    elem_t              n = t.order;
    GeneratorAssignment g(A, n);
    for (gen_t i = 0; i < A.size(); ++i) {
      auto const& x = A[i];
      if (x.src == 2 && x.tgt == 1) {
        g.set(i, FinFunction(n, 2, 1, t.mult));
      } else if (x.src == 0 && x.tgt == 1) {
        g.set(i, FinFunction(n, 0, 1, {t.unit}));
      } else if (x.src == 1 && x.tgt == 1) {
        g.set(i, FinFunction(n, 1, 1, t.inverse));
      } else {
        throw ArityError("generator " + x.name + " has no group interpretation");
      }
    }
    return g;
  }

  GroupTables group_from_algebra(GeneratorAssignment const& g) {
    Presentation pres = builtin_group();
    if (!(g.alphabet() == pres.alphabet)) {
      throw Error("assignment is not over the group alphabet");
    }
    auto rep = check_algebra(g, pres);
    if (auto i = rep.first_failure()) {
      throw AlgebraRejected("relation " + std::to_string(*i + 1) + " fails", rep);
    }
    GroupTables t;
    t.order   = g.carrier();
    t.mult    = g[pres.alphabet.id("mu")].table();
    t.unit    = g[pres.alphabet.id("eta")].table().at(0);
    t.inverse = g[pres.alphabet.id("omega")].table();
    elem_t n  = t.order;
    auto   m  = [&](elem_t a, elem_t b) { return t.mult[a * n + b]; };
    for (elem_t a = 0; a < n; ++a) {
      if (m(t.unit, a) != a || m(a, t.unit) != a || m(t.inverse[a], a) != t.unit
          || m(a, t.inverse[a]) != t.unit) {
        throw AlgebraRejected("group axioms fail at element " + std::to_string(a), rep);
      }
      for (elem_t b = 0; b < n; ++b) {
        for (elem_t c = 0; c < n; ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) {
            throw AlgebraRejected("multiplication is not associative", rep);
          }
        }
      }
    }
    return t;
  }

  namespace {
    bool groupish(Alphabet const& A) {
      return std::all_of(A.generators().begin(), A.generators().end(), [](auto const& x) {
        return x.tgt == 1 && x.src <= 2;
      });
    }

    //! Every assignment over the carrier, if there are at most limit of them.
    std::vector<GeneratorAssignment> exhaustive(Alphabet const& A, elem_t M, std::size_t limit) {
      std::vector<std::size_t> cells, choices;
      std::size_t              total = 1;
      for (auto const& x : A.generators()) {
        std::size_t c = ipow(M, x.src) * x.tgt;
        if (c > 24) {
          return {};
        }
        std::size_t k = ipow(M, c);
        cells.push_back(c);
        choices.push_back(k);
        if (total > limit / std::max<std::size_t>(k, 1)) {
          return {};
        }
        total *= k;
      }
      std::vector<GeneratorAssignment> out;
      for (std::size_t code = 0; code < total; ++code) {
        GeneratorAssignment g(A, M);
        std::size_t         rest = code;
        for (gen_t i = 0; i < A.size(); ++i) {
          std::size_t         x = rest % choices[i];
          rest /= choices[i];
          std::vector<elem_t> t(cells[i]);
          for (auto& y : t) {
            y = static_cast<elem_t>(x % M);
            x /= M;
          }
          g.set(i, FinFunction(M, A[i].src, A[i].tgt, std::move(t)));
        }
        out.push_back(std::move(g));
      }
      return out;
    }
  }  // namespace

  std::vector<GeneratorAssignment> model_probes(Presentation const& pres, Budget const& b) {
    std::vector<GeneratorAssignment> cand;
    if (groupish(pres.alphabet)) {
      for (auto const& t : small_groups()) {
        cand.push_back(algebra_from_group(t, pres.alphabet));
      }
    }
    for (auto& g : exhaustive(pres.alphabet, 2, 4096)) {
      cand.push_back(std::move(g));
    }
    for (auto& g : probe_assignments(pres.alphabet, b)) {
      cand.push_back(std::move(g));
    }
    std::vector<GeneratorAssignment> out;
    for (auto& g : cand) {
      if (check_algebra(g, pres).pass()) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  bool validate_witness_mod(Word const&         w,
                            Word const&         wp,
                            Witness const&      x,
                            Presentation const& pres) {
    if (!validate_witness(w, wp, x)) {
      return false;
    }
    return x.arity_mismatch || check_algebra(x.assignment, pres).pass();
  }

  namespace {
    //! Maps the relation indices of a fixture into pres, if every relation
    //! of the fixture occurs there.
    std::optional<std::vector<std::size_t>> embed(Presentation const& from, Presentation const& to) {
      if (!(from.alphabet == to.alphabet)) {
        return std::nullopt;
      }
      std::vector<std::size_t> idx;
      for (auto const& r : from.relations) {
        auto it = std::find(to.relations.begin(), to.relations.end(), r);
        if (it == to.relations.end()) {
          return std::nullopt;
        }
        idx.push_back(static_cast<std::size_t>(it - to.relations.begin()));
      }
      return idx;
    }

    std::optional<Certificate> from_fixtures(Word const& w, Word const& wp, Presentation const& pres) {
      for (auto const& f : lemma_fixtures()) {
        bool fwd = f.cert.start == w && f.cert.end == wp;
        bool bwd = f.cert.start == wp && f.cert.end == w;
        if (!fwd && !bwd) {
          continue;
        }
        auto idx = embed(f.pres, pres);
        if (!idx) {
          continue;
        }
        Certificate c = fwd ? f.cert : reversed(f.cert);
        for (auto& s : c.steps) {
          if (s.rule.kind == RuleKind::REL) {
            s.rule.rel = (*idx)[s.rule.rel];
          }
        }
        replay(c, pres.relations);
        return c;
      }
      return std::nullopt;
    }
  }  // namespace

  Outcome equivalent_mod(Word const&         w,
                         Word const&         wp,
                         Presentation const& pres,
                         Budget const&       b,
                         ModOptions const&   opts) {
    Outcome out;
    if (w.src() != wp.src() || w.tgt() != wp.tgt()) {
      out.verdict = Verdict::Disproved;
      out.witness = Witness{true, {}, {}, {}, {}};
      return out;
    }
    if (w == wp) {
      out.verdict     = Verdict::Proved;
      out.certificate = Certificate{w, wp, {}};
      return out;
    }
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
      auto const& [l, r] = pres.relations[i];
      if ((l == w && r == wp) || (l == wp && r == w)) {
        RuleInstance inst{RuleKind::REL, {}, {}, 0, 0, 0, i};
        RewriteStep  s{inst, l == w, 0, identity(w.src()), identity(w.tgt())};
        out.verdict     = Verdict::Proved;
        out.certificate = Certificate{w, wp, {s}};
        replay(*out.certificate, pres.relations);
        return out;
      }
    }
    if (opts.use_lemmas) {
      if (auto c = from_fixtures(w, wp, pres)) {
        out.verdict     = Verdict::Proved;
        out.certificate = std::move(c);
        return out;
      }
    }
    if (auto x = refute(w, wp, model_probes(pres, b))) {
      if (!validate_witness_mod(w, wp, *x, pres)) {
        throw Error("internal error: refutation witness does not validate");
      }
      out.verdict = Verdict::Disproved;
      out.witness = std::move(x);
      return out;
    }
    return search(w, wp, b, pres.relations);
  }

}  // namespace eggert
