// Command-line front end: computations in M_LD and B_infinity^+, and the
// verification suites.
//
// Exit status: 0 on success or a passing suite, 1 for a failing suite, 2 for
// invalid input or an exhausted reversal budget.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldgarside/braid.hpp"
#include "ldgarside/garside.hpp"
#include "ldgarside/mld.hpp"
#include "ldgarside/term.hpp"
#include "ldgarside/verify.hpp"
#include "ldgarside/word.hpp"

namespace {

  using namespace ldgarside;
  using json = nlohmann::ordered_json;

  constexpr int exit_pass    = 0;
  constexpr int exit_fail    = 1;
  constexpr int exit_invalid = 2;

  // Thrown for malformed command-line values.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::size_t default_budget() {
    char const* env = std::getenv("GARSIDE_BUDGET");
    if (env == nullptr || *env == '\0') {
      return ReversalBudget::default_steps;
    }
    try {
      std::size_t pos = 0;
      auto const  v   = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) {
        throw std::invalid_argument(env);
      }
      return static_cast<std::size_t>(v);
    } catch (std::exception const&) {
      throw UsageError("GARSIDE_BUDGET must be a positive integer, got \""
                       + std::string(env) + "\"");
    }
  }

  std::size_t parse_strands(std::string const& text) {
    try {
      std::size_t pos = 0;
      auto const  n   = std::stoul(text, &pos);
      if (pos == text.size()) {
        return n;
      }
    } catch (std::exception const&) {
    }
    throw UsageError("braid object must be a strand count, got \"" + text + "\"");
  }

  struct Globals {
    std::optional<std::size_t> budget;
    bool                       as_json = false;

    [[nodiscard]] ReversalBudget reversal_budget() const {
      return ReversalBudget(budget ? *budget : default_budget());
    }
  };

  // Prints a single result either as "key: value" lines or as a JSON object.
  void emit(Globals const& g, json const& j) {
    if (g.as_json) {
      std::cout << j.dump(2) << '\n';
      return;
    }
    for (auto const& [k, v] : j.items()) {
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }

  // ---------------------------------------------------------------- verbs

  int cmd_act(Globals const& g, std::string const& term, std::string const& word) {
    auto const t = Term::parse(term);
    auto const w = parse_word<Address>(word);
    auto const r = act(t, w);
    emit(g, {{"term", t.to_string()},
             {"word", format_word(w)},
             {"result", r ? json(r->to_string()) : json(nullptr)}});
    return exit_pass;
  }

  template <GarsideInstance I>
  json render(I const& inst, NormalForm<I> const& nf) {
    json factors = json::array();
    json objects = json::array();
    for (auto const& f : nf.factors) {
      factors.push_back(format_word(f));
    }
    for (auto const& x : nf.objects) {
      objects.push_back(inst.describe(x));
    }
    return {{"factors", factors}, {"objects", objects}};
  }

  template <GarsideInstance I>
  int normalize_in(Globals const&                 g,
                   I const&                       inst,
                   typename I::object_type const& x,
                   std::string const&             word) {
    using A      = typename I::atom_type;
    auto const w = parse_word<A>(word);
    auto const nf = normal_form(inst, x, w);
    json       j{{"object", inst.describe(x)}, {"word", format_word(w)}};
    auto       r = render(inst, nf);
    if (g.as_json) {
      j["factors"] = r["factors"];
      j["objects"] = r["objects"];
      emit(g, j);
    } else {
      std::string line;
      for (auto const& f : r["factors"]) {
        line += (line.empty() ? "" : " | ") + f.template get<std::string>();
      }
      j["normal_form"] = line.empty() ? std::string("ε") : line;
      emit(g, j);
    }
    return exit_pass;
  }

  int cmd_normalize(Globals const&     g,
                    std::string const& instance,
                    std::string const& object,
                    std::string const& word) {
    if (instance == "ld") {
      return normalize_in(g, LdInstance(g.reversal_budget()), Term::parse(object), word);
    }
    return normalize_in(g, BraidInstance(g.reversal_budget()), parse_strands(object), word);
  }

  template <GarsideInstance I>
  int lcm_gcd_in(Globals const&                 g,
                 I const&                       inst,
                 typename I::object_type const& x,
                 bool                           want_lcm,
                 std::string const&             u_text,
                 std::string const&             v_text) {
    using A      = typename I::atom_type;
    auto const u = parse_word<A>(u_text);
    auto const v = parse_word<A>(v_text);
    detail::act_or_throw(inst, x, u, want_lcm ? "lcm" : "gcd");
    detail::act_or_throw(inst, x, v, want_lcm ? "lcm" : "gcd");
    auto const r = want_lcm ? inst.reversing().lcm(u, v) : gcd_at(inst, x, u, v);
    emit(g, {{"object", inst.describe(x)},
             {"u", format_word(u)},
             {"v", format_word(v)},
             {want_lcm ? "lcm" : "gcd", format_word(r)}});
    return exit_pass;
  }

  int cmd_lcm_gcd(Globals const&     g,
                  bool               want_lcm,
                  std::string const& instance,
                  std::string const& object,
                  std::string const& u,
                  std::string const& v) {
    if (instance == "ld") {
      return lcm_gcd_in(g, LdInstance(g.reversal_budget()), Term::parse(object), want_lcm, u, v);
    }
    return lcm_gcd_in(g, BraidInstance(g.reversal_budget()), parse_strands(object), want_lcm,
                      u, v);
  }

  int cmd_delta(Globals const& g, std::string const& term, bool small) {
    auto const t = Term::parse(term);
    LdReversing const rev(LdComplement{}, g.reversal_budget());
    auto const d = small ? delta_small(t) : delta_within(rev, t);
    emit(g, {{"term", t.to_string()},
             {small ? "delta_small" : "delta", format_word(d)},
             {"length", d.size()}});
    return exit_pass;
  }

  int cmd_project(Globals const& g, std::string const& term, std::string const& word) {
    auto const t = Term::parse(term);
    auto const w = parse_word<Address>(word);
    auto const p = project_term_morphism(t, w);
    emit(g, {{"term", t.to_string()},
             {"word", format_word(w)},
             {"source", p.source},
             {"braid", format_word(p.word)},
             {"target", p.target}});
    return exit_pass;
  }

  // ---------------------------------------------------------------- verify

  constexpr std::size_t text_failure_limit = 20;

  json report_json(Report const& r) {
    json params = json::object();
    for (auto const& [k, v] : r.params) {
      params[k] = v;
    }
    json failures = json::array();
    for (auto const& f : r.failures) {
      failures.push_back({{"inputs", f.inputs},
                          {"expected", f.expected},
                          {"actual", f.actual},
                          {"repro", f.repro}});
    }
    json notes = json::object();
    for (auto const& [k, v] : r.notes) {
      notes[k] = v;
    }
    return {{"suite", r.suite},
            {"status", std::string(to_string(r.status()))},
            {"params", params},
            {"cases_checked", r.cases_checked},
            {"failures", failures},
            {"exhausted", r.exhausted},
            {"notes", notes}};
  }

  void print_report(Report const& r) {
    std::cout << "suite:  " << r.suite << '\n' << "status: " << to_string(r.status()) << '\n';
    std::cout << "params:";
    for (auto const& [k, v] : r.params) {
      std::cout << ' ' << k << '=' << v;
    }
    std::cout << '\n' << "cases:  " << r.cases_checked << '\n';
    for (auto const& [k, v] : r.notes) {
      std::cout << "note:   " << k << " = " << v << '\n';
    }
    if (!r.failures.empty()) {
      std::cout << "failures: " << r.failures.size() << '\n';
      for (std::size_t i = 0; i < r.failures.size() && i < text_failure_limit; ++i) {
        auto const& f = r.failures[i];
        std::cout << "  - inputs:   " << f.inputs << '\n'
                  << "    expected: " << f.expected << '\n'
                  << "    actual:   " << f.actual << '\n'
                  << "    repro:    " << f.repro << '\n';
      }
      if (r.failures.size() > text_failure_limit) {
        std::cout << "  ... " << r.failures.size() - text_failure_limit
                  << " more (use --json for the full list)\n";
      }
    }
    if (!r.exhausted.empty()) {
      std::cout << "exhausted: " << r.exhausted.size() << '\n';
      for (std::size_t i = 0; i < r.exhausted.size() && i < text_failure_limit; ++i) {
        std::cout << "  - " << r.exhausted[i] << '\n';
      }
      if (r.exhausted.size() > text_failure_limit) {
        std::cout << "  ... " << r.exhausted.size() - text_failure_limit << " more\n";
      }
    }
  }

  struct VerifyArgs {
    std::string suite;
    std::optional<std::size_t> max_size, max_simple_size, max_addr_len, max_index, samples;
    std::uint64_t seed = 1;
  };

  int cmd_verify(Globals const& g, VerifyArgs const& a) {
    SuiteOptions o;
    o.max_size        = a.max_size;
    o.max_simple_size = a.max_simple_size;
    o.max_addr_len    = a.max_addr_len;
    o.max_index       = a.max_index;
    o.samples         = a.samples;
    o.seed            = a.seed;
    o.budget          = g.reversal_budget().max_steps();
    auto const r      = run_suite(a.suite, o);
    if (g.as_json) {
      std::cout << report_json(r).dump(2) << '\n';
    } else {
      print_report(r);
    }
    switch (r.status()) {
      case Status::pass:
        return exit_pass;
      case Status::fail:
        return exit_fail;
      case Status::exhausted:
        return exit_invalid;
    }
    return exit_invalid;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the monoid M_LD of left self-distributivity, "
               "the positive braid monoid, and their verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Globals g;
  app.add_option("--budget", g.budget,
                 "Reversal step budget (default: $GARSIDE_BUDGET or 1000000)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.as_json, "Print JSON instead of text");

  std::string term, word, object, u, v, instance = "ld";
  bool        small = false;

  auto* act_cmd = app.add_subcommand("act", "Act on a term by an LD word");
  act_cmd->add_option("term", term, "Term, e.g. \"x*(x*x)\"")->required();
  act_cmd->add_option("word", word, "Word, e.g. \"D:ε D:1\"")->required();

  auto* nf_cmd = app.add_subcommand("normalize", "Greedy normal form of a word");
  nf_cmd->add_option("--instance", instance, "ld or braid")
      ->check(CLI::IsMember({"ld", "braid"}));
  nf_cmd->add_option("object", object, "Term (ld) or strand count (braid)")->required();
  nf_cmd->add_option("word", word, "Word acting on the object")->required();

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance, "ld or braid")->check(CLI::IsMember({"ld", "braid"}));
    cmd->add_option("object", object, "Term (ld) or strand count (braid)")->required();
    cmd->add_option("u", u, "First word")->required();
    cmd->add_option("v", v, "Second word")->required();
  };
  auto* lcm_cmd = app.add_subcommand("lcm", "Right lcm of two words");
  add_pair(lcm_cmd);
  auto* gcd_cmd = app.add_subcommand("gcd", "Left gcd of two words acting on an object");
  add_pair(gcd_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "The Garside word Delta_t of a term");
  delta_cmd->add_option("term", term, "Term")->required();
  delta_cmd->add_flag("--small", small, "Print delta_t instead of Delta_t");

  auto* proj_cmd = app.add_subcommand("project", "Braid image of a term morphism");
  proj_cmd->add_option("term", term, "Term")->required();
  proj_cmd->add_option("word", word, "Word acting on the term")->required();

  VerifyArgs va;
  std::string suite_help = "Run a verification suite:";
  for (auto const& name : suite_names()) {
    suite_help += "\n  " + name + "  " + std::string(suite_summary(name));
  }
  auto* verify_cmd = app.add_subcommand("verify", suite_help);
  verify_cmd->add_option("suite", va.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-size", va.max_size, "Largest term size");
  verify_cmd->add_option("--max-simple-size", va.max_simple_size,
                         "Largest term size whose simple divisors are enumerated");
  verify_cmd->add_option("--max-addr-len", va.max_addr_len, "Longest address");
  verify_cmd->add_option("--max-index", va.max_index, "Largest braid generator index");
  verify_cmd->add_option("--samples", va.samples, "Number of random samples");
  verify_cmd->add_option("--seed", va.seed, "Seed of the sampling generator");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_pass : exit_invalid;
  }

  try {
    if (act_cmd->parsed()) {
      return cmd_act(g, term, word);
    }
    if (nf_cmd->parsed()) {
      return cmd_normalize(g, instance, object, word);
    }
    if (lcm_cmd->parsed() || gcd_cmd->parsed()) {
      return cmd_lcm_gcd(g, lcm_cmd->parsed(), instance, object, u, v);
    }
    if (delta_cmd->parsed()) {
      return cmd_delta(g, term, small);
    }
    if (proj_cmd->parsed()) {
      return cmd_project(g, term, word);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(g, va);
    }
  } catch (BudgetExhausted const& e) {
    std::cerr << "exhausted: " << e.what() << '\n';
    return exit_invalid;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
