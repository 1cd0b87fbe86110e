#include "eggert/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace eggert {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::Proved:
        return "Proved";
      case Verdict::Disproved:
        return "Disproved";
      case Verdict::Unknown:
        return "Unknown";
    }
    return "?";
  }

  namespace {
    template <typename F>
    GeneratorAssignment uniform(Alphabet const& A, elem_t M, F&& f) {
      GeneratorAssignment g(A, M);
      for (gen_t i = 0; i < A.size(); ++i) {
        auto const& x = A[i];
        g.set(i, FinFunction::tabulate(M, x.src, x.tgt, [&](auto const& in) {
                std::vector<elem_t> out(x.tgt);
                for (arity_t k = 0; k < x.tgt; ++k) {
                  out[k] = f(in, k) % M;
                }
                return out;
              }));
      }
      return g;
    }
  }  // namespace

  std::vector<GeneratorAssignment> probe_assignments(Alphabet const& A, Budget const& b) {
    std::vector<GeneratorAssignment> out;
    arity_t                          width = 1;
    for (auto const& x : A.generators()) {
      width = std::max(width, x.src);
    }
    for (elem_t M : b.probe_carriers) {
      if (M == 0) {
        continue;
      }
      for (arity_t j = 0; j < width; ++j) {
        out.push_back(uniform(A, M, [j](auto const& in, arity_t k) -> elem_t {
          return in.empty() ? 0 : in[(j + k) % in.size()];
        }));
      }
      for (elem_t c = 0; c < M; ++c) {
        out.push_back(uniform(A, M, [c](auto const&, arity_t) -> elem_t { return c; }));
      }
      for (arity_t j = 0; j < width; ++j) {
        out.push_back(uniform(A, M, [j](auto const& in, arity_t k) -> elem_t {
          return in.empty() ? 1 : in[(j + k) % in.size()] + 1;
        }));
      }
      std::mt19937_64 rng(b.seed * 1000003u + M);
      for (std::size_t r = 0; r < b.probe_assignments; ++r) {
        GeneratorAssignment g(A, M);
        for (gen_t i = 0; i < A.size(); ++i) {
          auto const&         x = A[i];
          std::vector<elem_t> t(ipow(M, x.src) * x.tgt);
          for (auto& y : t) {
            y = static_cast<elem_t>(rng() % M);
          }
          g.set(i, FinFunction(M, x.src, x.tgt, std::move(t)));
        }
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  std::optional<Witness> refute(Word const&                             w,
                                Word const&                             wp,
                                std::vector<GeneratorAssignment> const& probes) {
    for (auto const& g : probes) {
      auto d = first_difference(eval_word(w, g), eval_word(wp, g));
      if (d) {
        return Witness{false, g, d->input, d->left, d->right};
      }
    }
    return std::nullopt;
  }

  bool validate_witness(Word const& w, Word const& wp, Witness const& x) {
    if (x.arity_mismatch) {
      return w.src() != wp.src() || w.tgt() != wp.tgt();
    }
    auto f = eval_word(w, x.assignment);
    auto g = eval_word(wp, x.assignment);
    if (x.input.size() != f.src()) {
      return false;
    }
    return f(x.input) == x.left && g(x.input) == x.right && x.left != x.right;
  }

  namespace {
    struct Node {
      Word        word;
      std::size_t parent;
      RewriteStep step;
    };

    arity_t widest(Word const& w) {
      arity_t m = 0;
      for (auto const& f : w.boundary()) {
        m = std::max({m, f.src(), f.tgt()});
      }
      return m;
    }

    Outcome bfs(Word const& w, Word const& wp, Budget const& b, Relations const& rels) {
      Outcome out;
      Bounds bounds;
      bounds.a_max   = b.a_max;
      bounds.pad_max = b.pad_max != 0 ? b.pad_max : std::max(widest(w), widest(wp));
      bounds.max_len = b.max_word_len != 0 ? b.max_word_len : w.size() + wp.size() + 4;
      bounds.mask    = b.mask;

      std::vector<Node>                      nodes[2];
      std::unordered_map<Word, std::size_t>  index[2];
      std::vector<std::size_t>               frontier[2];
      Word const*                            roots[2] = {&w, &wp};
      for (int s = 0; s < 2; ++s) {
        nodes[s].push_back({*roots[s], 0, {}});
        index[s].emplace(*roots[s], 0);
        frontier[s].push_back(0);
      }
      out.visited = 2;

      auto path = [&](int s, std::size_t i) {
        std::vector<RewriteStep> steps;
        while (i != 0) {
          steps.push_back(nodes[s][i].step);
          i = nodes[s][i].parent;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
      };

      while (!frontier[0].empty() || !frontier[1].empty()) {
        int s = frontier[0].empty() ? 1
                : frontier[1].empty()
                    ? 0
                    : (frontier[1].size() < frontier[0].size() ? 1 : 0);
        std::vector<std::size_t> next;
        for (std::size_t i : frontier[s]) {
          Word cur = nodes[s][i].word;
          for (auto& nb : rule_instances_matching(cur, bounds, rels)) {
            if (index[s].count(nb.word)) {
              continue;
            }
            std::size_t id = nodes[s].size();
            index[s].emplace(nb.word, id);
            nodes[s].push_back({nb.word, i, std::move(nb.step)});
            next.push_back(id);
            ++out.visited;
            auto hit = index[1 - s].find(nodes[s][id].word);
            if (hit != index[1 - s].end()) {
              std::size_t i0 = s == 0 ? id : hit->second;
              std::size_t i1 = s == 0 ? hit->second : id;
              Certificate c{w, wp, path(0, i0)};
              Certificate back{wp, nodes[1][i1].word, path(1, i1)};
              auto        tail = reversed(back);
              c.steps.insert(c.steps.end(), tail.steps.begin(), tail.steps.end());
              replay(c, rels);
              out.verdict     = Verdict::Proved;
              out.certificate = std::move(c);
              return out;
            }
            if (out.visited >= b.max_steps) {
              return out;
            }
          }
        }
        frontier[s] = std::move(next);
      }
      return out;
    }
  }  // namespace

  // Interchange rules alone first, on a tenth of the budget.
  Outcome search(Word const& w, Word const& wp, Budget const& b, Relations const& rels) {
    if (w == wp) {
      Outcome out;
      out.verdict     = Verdict::Proved;
      out.certificate = Certificate{w, wp, {}};
      return out;
    }
    constexpr unsigned kM1 = kM1Swap | kM1Slide;
    std::size_t        used = 0;
    if ((b.mask & kM1) == kM1 && b.mask != kM1 && b.max_steps >= 20) {
      Budget first    = b;
      first.mask      = kM1;
      first.max_steps = b.max_steps / 10;
      Outcome o       = bfs(w, wp, first, rels);
      if (o.verdict == Verdict::Proved) {
        return o;
      }
      used = o.visited;
    }
    Budget rest    = b;
    rest.max_steps = b.max_steps - used;
    Outcome o      = bfs(w, wp, rest, rels);
    o.visited += used;
    return o;
  }

  Outcome equivalent(Word const& w, Word const& wp, Alphabet const& A, Budget const& b) {
    Outcome out;
    if (w.src() != wp.src() || w.tgt() != wp.tgt()) {
      out.verdict = Verdict::Disproved;
      out.witness = Witness{true, {}, {}, {}, {}};
      return out;
    }
    if (w == wp) {
      return search(w, wp, b);
    }
    if (auto x = refute(w, wp, probe_assignments(A, b))) {
      out.verdict = Verdict::Disproved;
      out.witness = std::move(x);
      return out;
    }
    return search(w, wp, b);
  }

}  // namespace eggert
