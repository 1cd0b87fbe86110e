#include "eggert/io.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "eggert/dsl.hpp"

namespace eggert {

  Presentation builtin_presentation(std::string const& tag) {
    if (tag == "@group") {
      return builtin_group();
    }
    if (tag == "@group-Z") {
      return builtin_group_Z();
    }
    throw Error("unknown built-in presentation " + tag);
  }

  namespace {
    std::string rule_text(RuleInstance const& r) {
      if (r.kind == RuleKind::REL) {
        return "REL:" + std::to_string(r.rel + 1);
      }
      return to_string(r.kind);
    }

    RuleInstance rule_from_text(std::string const& s) {
      RuleInstance r;
      if (s.rfind("REL:", 0) == 0) {
        r.kind = RuleKind::REL;
        r.rel  = std::stoul(s.substr(4));
        if (r.rel == 0) {
          throw Error("relations are numbered from 1");
        }
        --r.rel;
        return r;
      }
      for (auto k : {RuleKind::M1, RuleKind::M2, RuleKind::M3, RuleKind::M4, RuleKind::CARD}) {
        if (s == to_string(k)) {
          r.kind = k;
          return r;
        }
      }
      throw Error("unknown rule '" + s + "'");
    }

    FinMap map_from_text(std::string const& s) {
      Expr e = parse_expr(s);
      if (e.kind == Expr::Kind::Map) {
        return e.map;
      }
      if (e.kind == Expr::Kind::Id) {
        return identity(e.nums[0]);
      }
      throw Error("expected a map, got '" + s + "'");
    }

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    arity_t to_arity(std::string const& s) {
      std::size_t   used = 0;
      unsigned long v    = std::stoul(s, &used);
      if (used != s.size()) {
        throw Error("not a number: '" + s + "'");
      }
      return static_cast<arity_t>(v);
    }
  }  // namespace

  std::string write_certificate(Certificate const& c, Presentation const& pres, std::string const& tag) {
    Alphabet const&    A = pres.alphabet;
    std::ostringstream out;
    if (tag == "inline") {
      out << "pres: inline\n";
      for (auto const& g : A.generators()) {
        out << "generator " << g.name << " " << g.src << " " << g.tgt << "\n";
      }
      for (auto const& [l, r] : pres.relations) {
        out << "relation " << print_word(l, A) << " == " << print_word(r, A) << "\n";
      }
    } else {
      out << "pres: " << tag << "\n";
    }
    out << "start: " << print_word(c.start, A) << "\n";
    out << "end: " << print_word(c.end, A) << "\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      auto const& s = c.steps[i];
      out << "step " << i + 1 << ": rule=" << rule_text(s.rule) << " dir=" << (s.forward ? "fwd" : "bwd")
          << " split=" << s.split << " a=" << s.rule.a << " q=" << s.rule.q << " p=" << s.rule.p
          << " v=" << print_word(s.rule.v, A);
      if (s.rule.kind == RuleKind::M1) {
        out << " v2=" << print_word(s.rule.v2, A);
      }
      out << " seamL=" << s.seam_left.to_string() << " seamR=" << s.seam_right.to_string() << "\n";
    }
    return out.str();
  }

  CertificateFile read_certificate(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    std::string        tag = "@group";
    std::string        inline_text, start, end;
    std::vector<std::map<std::string, std::string>> steps;
    static std::regex const key(R"((?:^|\s)(rule|dir|split|a|q|p|v|v2|seamL|seamR)=)");
    std::size_t       lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') {
        continue;
      }
      if (t.rfind("pres:", 0) == 0) {
        tag = trim(t.substr(5));
      } else if (t.rfind("generator ", 0) == 0 || t.rfind("relation ", 0) == 0) {
        inline_text += t + "\n";
      } else if (t.rfind("start:", 0) == 0) {
        start = t.substr(6);
      } else if (t.rfind("end:", 0) == 0) {
        end = t.substr(4);
      } else if (t.rfind("step ", 0) == 0) {
        auto colon = t.find(':');
        if (colon == std::string::npos) {
          throw ParseError("step line " + std::to_string(lineno) + " lacks ':'", 0);
        }
        std::string                        body = t.substr(colon + 1);
        std::map<std::string, std::string> fields;
        struct Mark {
          std::string key;
          std::size_t at, value;
        };
        std::vector<Mark> marks;
        for (auto it = std::sregex_iterator(body.begin(), body.end(), key); it != std::sregex_iterator();
             ++it) {
          auto at = static_cast<std::size_t>(it->position(0));
          marks.push_back({(*it)[1].str(), at, at + static_cast<std::size_t>(it->length(0))});
        }
        for (std::size_t k = 0; k < marks.size(); ++k) {
          std::size_t to         = k + 1 < marks.size() ? marks[k + 1].at : body.size();
          fields[marks[k].key] = trim(body.substr(marks[k].value, to - marks[k].value));
        }
        steps.push_back(std::move(fields));
      } else {
        throw ParseError("unrecognised certificate line " + std::to_string(lineno), 0);
      }
    }
    CertificateFile f;
    f.pres = tag == "inline" ? parse_presentation(inline_text) : builtin_presentation(tag);
    if (start.empty() || end.empty()) {
      throw Error("certificate lacks a start or end line");
    }
    Alphabet const& A = f.pres.alphabet;
    f.cert.start      = parse_word(start, A);
    f.cert.end        = parse_word(end, A);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto& m    = steps[i];
      auto  need = [&](char const* k) -> std::string const& {
        auto it = m.find(k);
        if (it == m.end()) {
          throw Error("step " + std::to_string(i + 1) + " lacks field " + k);
        }
        return it->second;
      };
      try {
        RewriteStep s;
        s.rule    = rule_from_text(need("rule"));
        s.rule.a  = to_arity(need("a"));
        s.rule.q  = to_arity(need("q"));
        s.rule.p  = to_arity(need("p"));
        s.rule.v  = parse_word(need("v"), A);
        if (m.count("v2")) {
          s.rule.v2 = parse_word(m["v2"], A);
        }
        std::string const& dir = need("dir");
        if (dir != "fwd" && dir != "bwd") {
          throw Error("bad direction '" + dir + "'");
        }
        s.forward    = dir == "fwd";
        s.split      = to_arity(need("split"));
        s.seam_left  = map_from_text(need("seamL"));
        s.seam_right = map_from_text(need("seamR"));
        f.cert.steps.push_back(std::move(s));
      } catch (ReplayError const&) {
        throw;
      } catch (Error const& e) {
        throw ReplayError("step " + std::to_string(i + 1) + ": " + e.what(), i + 1);
      } catch (std::logic_error const&) {
        throw ReplayError("step " + std::to_string(i + 1) + ": malformed number", i + 1);
      }
    }
    return f;
  }

  GeneratorAssignment parse_assignment(std::string const& text, Alphabet const& A, elem_t carrier) {
    GeneratorAssignment      g(A, carrier);
    std::istringstream       in(text);
    std::string              line, current;
    std::vector<std::string> rows;
    auto                     flush = [&] {
      if (current.empty()) {
        return;
      }
      auto [m, n] = A.lookup(current);
      g.set(current, parse_rows(rows, carrier, m, n));
      rows.clear();
    };
    while (std::getline(in, line)) {
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') {
        continue;
      }
      if (t.rfind("gen ", 0) == 0) {
        flush();
        current = trim(t.substr(4));
      } else {
        if (current.empty()) {
          throw ParseError("table row before any 'gen' line", 0);
        }
        rows.push_back(t);
      }
    }
    flush();
    return g;
  }

  std::string write_assignment(GeneratorAssignment const& g) {
    std::string out;
    for (gen_t i = 0; i < g.alphabet().size(); ++i) {
      out += "gen " + g.alphabet()[i].name + "\n" + g[i].dump();
    }
    return out;
  }

}  // namespace eggert
