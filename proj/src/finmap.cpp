#include "eggert/finmap.hpp"

#include <algorithm>
#include <numeric>

namespace eggert {

  FinMap::FinMap(arity_t src, arity_t tgt, std::vector<arity_t> table)
      : _src(src), _tgt(tgt), _table(std::move(table)) {
    if (_table.size() != src) {
      throw ArityError("map table has length " + std::to_string(_table.size())
                       + ", expected " + std::to_string(src));
    }
    for (auto x : _table) {
      if (x < 1 || x > tgt) {
        throw ArityError("map entry " + std::to_string(x) + " outside [1,"
                         + std::to_string(tgt) + "]");
      }
    }
  }

  bool FinMap::is_identity() const noexcept {
    if (_src != _tgt) {
      return false;
    }
    for (arity_t i = 0; i < _src; ++i) {
      if (_table[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  bool FinMap::is_injective() const {
    std::vector<bool> seen(_tgt + 1, false);
    for (auto x : _table) {
      if (seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  bool FinMap::is_surjective() const {
    std::vector<bool> seen(_tgt + 1, false);
    for (auto x : _table) {
      seen[x] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  }

  bool FinMap::operator<(FinMap const& that) const {
    return std::tie(_src, _tgt, _table)
           < std::tie(that._src, that._tgt, that._table);
  }

  std::size_t FinMap::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ (std::size_t(_src) << 32) ^ _tgt;
    for (auto x : _table) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string FinMap::to_string() const {
    std::string out = "fm[" + std::to_string(_src) + "->" + std::to_string(_tgt)
                      + ":";
    for (arity_t i = 0; i < _src; ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(_table[i]);
    }
    return out + "]";
  }

  FinMap compose(FinMap const& f, FinMap const& g) {
    if (f.tgt() != g.src()) {
      throw ArityError("cannot compose " + f.to_string() + " with "
                       + g.to_string());
    }
    std::vector<arity_t> t(f.src());
    for (arity_t i = 0; i < f.src(); ++i) {
      t[i] = g.table()[f.table()[i] - 1];
    }
    return FinMap(f.src(), g.tgt(), std::move(t));
  }

  FinMap tensor(FinMap const& f, FinMap const& g) {
    std::vector<arity_t> t(f.table());
    t.reserve(f.src() + g.src());
    for (auto x : g.table()) {
      t.push_back(f.tgt() + x);
    }
    return FinMap(f.src() + g.src(), f.tgt() + g.tgt(), std::move(t));
  }

  FinMap identity(arity_t m) {
    std::vector<arity_t> t(m);
    std::iota(t.begin(), t.end(), 1);
    return FinMap(m, m, std::move(t));
  }

  FinMap braid(arity_t m, arity_t mp) {
    std::vector<arity_t> t(m + mp);
    for (arity_t i = 1; i <= m + mp; ++i) {
      t[i - 1] = i <= m ? i + mp : i - m;
    }
    return FinMap(m + mp, m + mp, std::move(t));
  }

  FinMap branch(arity_t a, arity_t mp) {
    std::vector<arity_t> t(a * mp);
    for (arity_t i = 1; i <= a * mp; ++i) {
      t[i - 1] = (i - 1) % mp + 1;
    }
    return FinMap(a * mp, mp, std::move(t));
  }

  FinMap f2() {
    return FinMap(2, 1, {1, 1});
  }

  FinMap f0() {
    return FinMap(0, 1, {});
  }

  FinMap inverse(FinMap const& f) {
    if (f.src() != f.tgt() || !f.is_injective()) {
      throw ArityError("not a bijection: " + f.to_string());
    }
    std::vector<arity_t> t(f.src());
    for (arity_t i = 1; i <= f.src(); ++i) {
      t[f(i) - 1] = i;
    }
    return FinMap(f.src(), f.src(), std::move(t));
  }

  namespace {
    // Cartesian product of per-position choices.
    std::vector<FinMap> product(arity_t                                 src,
                                arity_t                                 tgt,
                                std::vector<std::vector<arity_t>> const& opts) {
      std::vector<FinMap> out;
      for (auto const& o : opts) {
        if (o.empty()) {
          return out;
        }
      }
      std::vector<std::size_t> idx(src, 0);
      while (true) {
        std::vector<arity_t> t(src);
        for (arity_t i = 0; i < src; ++i) {
          t[i] = opts[i][idx[i]];
        }
        out.emplace_back(src, tgt, std::move(t));
        arity_t k = src;
        while (k > 0) {
          --k;
          if (++idx[k] < opts[k].size()) {
            break;
          }
          idx[k] = 0;
          if (k == 0) {
            return out;
          }
        }
        if (src == 0) {
          return out;
        }
      }
    }
  }  // namespace

  std::vector<FinMap> factorizations_through(FinMap const& h, FinMap const& g) {
    if (h.tgt() != g.tgt()) {
      throw ArityError("factorization needs equal targets");
    }
    std::vector<std::vector<arity_t>> pre(h.tgt() + 1);
    for (arity_t j = 1; j <= g.src(); ++j) {
      pre[g(j)].push_back(j);
    }
    std::vector<std::vector<arity_t>> opts(h.src());
    for (arity_t i = 1; i <= h.src(); ++i) {
      opts[i - 1] = pre[h(i)];
    }
    return product(h.src(), g.src(), opts);
  }

  std::vector<FinMap> extensions_through(FinMap const& h, FinMap const& g) {
    if (h.src() != g.src()) {
      throw ArityError("extension needs equal sources");
    }
    std::vector<arity_t> fixed(g.tgt() + 1, 0);
    for (arity_t i = 1; i <= g.src(); ++i) {
      auto& slot = fixed[g(i)];
      if (slot != 0 && slot != h(i)) {
        return {};
      }
      slot = h(i);
    }
    std::vector<arity_t> all(h.tgt());
    std::iota(all.begin(), all.end(), 1);
    std::vector<std::vector<arity_t>> opts(g.tgt());
    for (arity_t j = 1; j <= g.tgt(); ++j) {
      opts[j - 1] = fixed[j] != 0 ? std::vector<arity_t>{fixed[j]} : all;
    }
    return product(g.tgt(), h.tgt(), opts);
  }

  std::vector<FinMap> all_maps(arity_t m, arity_t n) {
    std::vector<arity_t> all(n);
    std::iota(all.begin(), all.end(), 1);
    return product(m, n, std::vector<std::vector<arity_t>>(m, all));
  }

}  // namespace eggert
