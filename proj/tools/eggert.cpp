// Command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eggert/dsl.hpp"
#include "eggert/io.hpp"
#include "eggert/present.hpp"

using namespace eggert;

namespace {
  enum Exit { kOk = 0, kFail = 1, kUnknown = 2, kUsage = 3 };

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  //! A built-in tag or a presentation file. Empty means the free operad on
  //! the group alphabet.
  Presentation load_presentation(std::string const& source) {
    if (source.empty()) {
      return make_presentation(alphabet_group(), {});
    }
    if (source[0] == '@') {
      return builtin_presentation(source);
    }
    return parse_presentation(slurp(source));
  }

  std::string join(std::vector<elem_t> const& xs) {
    std::string s;
    for (auto x : xs) {
      s += (s.empty() ? "" : " ") + std::to_string(x);
    }
    return s;
  }

  void print_witness(Witness const& x) {
    if (x.arity_mismatch) {
      std::cout << "witness: the words have different types\n";
      return;
    }
    std::cout << "witness: carrier " << x.assignment.carrier() << "\n"
              << write_assignment(x.assignment) << "input: " << join(x.input) << "\n"
              << "left: " << join(x.left) << "\n"
              << "right: " << join(x.right) << "\n";
  }

  int report(Outcome const& o, Presentation const& pres, std::string const& tag, std::string const& out) {
    std::cout << to_string(o.verdict) << "\n";
    switch (o.verdict) {
      case Verdict::Proved: {
        std::string text = write_certificate(*o.certificate, pres, tag);
        if (out.empty()) {
          std::cout << text;
        } else {
          std::ofstream(out) << text;
        }
        return kOk;
      }
      case Verdict::Disproved:
        print_witness(*o.witness);
        return kFail;
      case Verdict::Unknown:
        std::cout << "visited " << o.visited << " words\n";
        return kUnknown;
    }
    return kUnknown;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words, evaluation and equivalence for finitely presented operads"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for random probes")->capture_default_str();

  std::string pres_arg, assign_file;
  elem_t      carrier = 2;

  auto* eval = app.add_subcommand("eval", "Evaluate a word under an assignment");
  std::string eval_expr;
  eval->add_option("--carrier", carrier, "Carrier size")->required();
  eval->add_option("--assign", assign_file, "Assignment file")->required();
  eval->add_option("--pres", pres_arg, "Presentation file, @group or @group-Z");
  eval->add_option("expr", eval_expr, "Word expression")->required();

  auto*                    equiv = app.add_subcommand("equiv", "Decide equivalence of two words");
  std::vector<std::string> equiv_args;
  std::size_t              max_steps = 100000;
  bool                     no_lemmas = false;
  std::string              cert_out;
  equiv->add_option("--pres", pres_arg, "Presentation file, @group or @group-Z");
  equiv->add_option("--max-steps", max_steps, "Search budget in discovered words")->capture_default_str();
  equiv->add_flag("--no-lemmas", no_lemmas, "Do not use built-in lemma certificates");
  equiv->add_option("--out", cert_out, "Write the certificate to this file");
  equiv->add_option("args", equiv_args, "[presentation] expr expr")->required()->expected(2, 3);

  auto* check = app.add_subcommand("check-algebra", "Check an assignment against the relations");
  check->add_option("--pres", pres_arg, "Presentation file, @group or @group-Z")->required();
  check->add_option("--assign", assign_file, "Assignment file")->required();
  check->add_option("--carrier", carrier, "Carrier size")->required();

  auto*       verify = app.add_subcommand("verify-cert", "Replay a certificate file");
  std::string cert_file;
  verify->add_option("file", cert_file, "Certificate file")->required();

  auto*       lemmas = app.add_subcommand("lemmas", "Replay the built-in lemma certificates");
  std::string dump_dir;
  lemmas->add_option("--dump", dump_dir, "Write each certificate into this directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      auto pres = load_presentation(pres_arg);
      auto g    = parse_assignment(slurp(assign_file), pres.alphabet, carrier);
      std::cout << eval_word(parse_word(eval_expr, pres.alphabet), g).dump();
      return kOk;
    }
    if (*equiv) {
      std::string tag = pres_arg;
      if (equiv_args.size() == 3) {
        tag = equiv_args[0];
        equiv_args.erase(equiv_args.begin());
      }
      auto pres = load_presentation(tag);
      Word w    = parse_word(equiv_args[0], pres.alphabet);
      Word wp   = parse_word(equiv_args[1], pres.alphabet);
      Budget b;
      b.max_steps = max_steps;
      b.seed      = seed;
      Outcome o   = equivalent_mod(w, wp, pres, b, ModOptions{!no_lemmas});
      if (o.verdict == Verdict::Disproved && !validate_witness_mod(w, wp, *o.witness, pres)) {
        std::cerr << "error: witness failed validation\n";
        return kUsage;
      }
      return report(o, pres, tag.empty() || tag[0] != '@' ? "inline" : tag, cert_out);
    }
    if (*check) {
      auto pres = load_presentation(pres_arg);
      auto g    = parse_assignment(slurp(assign_file), pres.alphabet, carrier);
      auto rep  = check_algebra(g, pres);
      for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        auto const& e = rep.entries[i];
        std::cout << "relation " << i + 1 << ": " << (e.pass ? "pass" : "fail");
        if (e.diff) {
          std::cout << " at input (" << join(e.diff->input) << "): " << join(e.diff->left) << " vs "
                    << join(e.diff->right);
        }
        std::cout << "\n";
      }
      return rep.pass() ? kOk : kFail;
    }
    if (*verify) {
      CertificateFile f;
      try {
        f = read_certificate(slurp(cert_file));
        replay(f.cert, f.pres.relations);
      } catch (ReplayError const& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kFail;
      }
      std::cout << "valid: " << f.cert.steps.size() << " steps\n";
      return kOk;
    }
    if (*lemmas) {
      bool ok = true;
      for (auto const& f : lemma_fixtures()) {
        bool good = true;
        try {
          replay(f.cert, f.pres.relations);
          replay(reversed(f.cert), f.pres.relations);
        } catch (ReplayError const& e) {
          good = false;
          std::cout << f.name << ": " << e.what() << "\n";
        }
        ok = ok && good;
        std::cout << f.name << ": " << f.cert.steps.size() << " steps, " << (good ? "ok" : "FAILED")
                  << "\n";
        if (!dump_dir.empty()) {
          std::ofstream(dump_dir + "/" + f.name + ".cert") << write_certificate(f.cert, f.pres, "inline");
        }
      }
      return ok ? kOk : kFail;
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
