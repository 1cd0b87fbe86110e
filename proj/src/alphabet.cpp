#include "eggert/alphabet.hpp"

#include <cctype>

namespace eggert {

  namespace {
    bool valid_name(std::string const& s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<Generator> gens) {
    for (auto const& g : gens) {
      add(g.name, g.src, g.tgt);
    }
  }

  gen_t Alphabet::add(std::string const& name, arity_t src, arity_t tgt) {
    if (!valid_name(name)) {
      throw Error("invalid generator name \"" + name + "\"");
    }
    if (contains(name)) {
      throw Error("duplicate generator \"" + name + "\"");
    }
    gen_t id = static_cast<gen_t>(_gens.size());
    _gens.push_back({name, src, tgt});
    _ids.emplace(name, id);
    return id;
  }

  gen_t Alphabet::id(std::string const& name) const {
    auto it = _ids.find(name);
    if (it == _ids.end()) {
      throw UnknownGenerator("unknown generator \"" + name + "\"");
    }
    return it->second;
  }

  std::pair<arity_t, arity_t> Alphabet::lookup(std::string const& name) const {
    auto const& g = _gens[id(name)];
    return {g.src, g.tgt};
  }

  Alphabet alphabet_group() {
    return Alphabet({{"mu", 2, 1}, {"eta", 0, 1}, {"omega", 1, 1}});
  }

}  // namespace eggert
