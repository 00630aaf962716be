#include "ldgarside/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>

#include "ldgarside/braid.hpp"
#include "ldgarside/garside.hpp"
#include "ldgarside/mld.hpp"
#include "ldgarside/reversing.hpp"
#include "ldgarside/term.hpp"

namespace ldgarside {

  std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::exhausted:
        return "exhausted";
    }
    return "?";
  }

  namespace {

    struct SuiteDefaults {
      std::optional<std::size_t> max_size;
      std::optional<std::size_t> max_simple_size;
      std::optional<std::size_t> max_addr_len;
      std::optional<std::size_t> max_index;
      std::optional<std::size_t> samples;
    };

    // Shared state of one suite run.
    class Context {
     public:
      Context(std::string_view name, SuiteOptions const& opts, SuiteDefaults const& d)
          : budget_(opts.budget),
            ld(budget_),
            braid(budget_),
            rng(opts.seed) {
        report.suite = name;
        auto pick    = [](std::optional<std::size_t> a, std::optional<std::size_t> b) {
          return a ? a : b;
        };
        max_size        = pick(d.max_size ? opts.max_size : std::nullopt, d.max_size);
        max_simple_size = pick(d.max_simple_size ? opts.max_simple_size : std::nullopt,
                               d.max_simple_size);
        max_addr_len = pick(d.max_addr_len ? opts.max_addr_len : std::nullopt, d.max_addr_len);
        max_index    = pick(d.max_index ? opts.max_index : std::nullopt, d.max_index);
        samples      = pick(d.samples ? opts.samples : std::nullopt, d.samples);

        command = "ldgarside verify " + std::string(name);
        auto add = [this](char const* key, char const* flag, std::optional<std::size_t> v) {
          if (v) {
            report.params.emplace_back(key, std::to_string(*v));
            command += std::string(" ") + flag + " " + std::to_string(*v);
          }
        };
        add("max_size", "--max-size", max_size);
        add("max_simple_size", "--max-simple-size", max_simple_size);
        add("max_addr_len", "--max-addr-len", max_addr_len);
        add("max_index", "--max-index", max_index);
        add("samples", "--samples", samples);
        if (samples) {
          report.params.emplace_back("seed", std::to_string(opts.seed));
          command += " --seed " + std::to_string(opts.seed);
        }
        report.params.emplace_back("budget", std::to_string(opts.budget));
        command += " --budget " + std::to_string(opts.budget);
      }

      void fail(std::string inputs, std::string expected, std::string actual) {
        report.failures.push_back(
            {std::move(inputs), std::move(expected), std::move(actual), command});
      }

      void note(std::string key, std::string value) {
        report.notes.emplace_back(std::move(key), std::move(value));
      }

      // Runs one case; budget exhaustion and internal errors are recorded
      // against the case instead of aborting the suite.
      template <typename F>
      void run_case(std::string const& inputs, F&& f) {
        try {
          f();
        } catch (BudgetExhausted const& e) {
          report.exhausted.push_back(inputs + ": " + e.what());
        } catch (std::exception const& e) {
          fail(inputs, "no error", std::string("exception: ") + e.what());
        }
      }

      // Uniform index in [0, n); modulo keeps the stream reproducible across
      // standard libraries.
      std::size_t uniform(std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
      }

      Report finish() {
        auto key = [](Failure const& f) {
          return std::tie(f.inputs, f.expected, f.actual);
        };
        std::sort(report.failures.begin(), report.failures.end(),
                  [&](Failure const& a, Failure const& b) { return key(a) < key(b); });
        std::sort(report.exhausted.begin(), report.exhausted.end());
        return std::move(report);
      }

      ReversalBudget             budget_;
      LdInstance                 ld;
      BraidInstance              braid;
      std::mt19937_64            rng;
      std::optional<std::size_t> max_size, max_simple_size, max_addr_len, max_index,
          samples;
      std::string command;
      Report      report;
    };

    // A word for a transcript, elided in the middle beyond 48 letters.
    std::string brief(LdWord const& w) {
      constexpr std::size_t keep = 24;
      if (w.size() <= 2 * keep) {
        return format_word(w);
      }
      return format_word(LdWord(w.begin(), w.begin() + keep)) + " … ("
             + std::to_string(w.size() - 2 * keep) + " letters) … "
             + format_word(LdWord(w.end() - keep, w.end()));
    }

    std::vector<Address> all_addresses(std::size_t max_len) {
      std::vector<Address> out{Address()};
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].length() < max_len) {
          out.push_back(out[i].child(0));
          out.push_back(out[i].child(1));
        }
      }
      return out;
    }

    std::vector<Term> labelled_terms(std::size_t max_size) {
      auto ts = terms_up_to_size(max_size);
      for (auto& t : ts) {
        t = number_leaves(t);
      }
      return ts;
    }

    std::string show(Term const& t) {
      return t.to_string();
    }
    std::string show(std::optional<Term> const& t) {
      return t ? t->to_string() : "undefined";
    }

    // Divisors of Delta_t, computed once per term.
    class DivisorCache {
     public:
      explicit DivisorCache(LdReversing const& rev) : rev_(rev) {}
      std::vector<SimpleDivisor> const& operator()(Term const& t) {
        auto it = cache_.find(t);
        if (it == cache_.end()) {
          it = cache_.emplace(t, simple_divisors(rev_, t)).first;
        }
        return it->second;
      }

     private:
      LdReversing const&                                     rev_;
      std::unordered_map<Term, std::vector<SimpleDivisor>> cache_;
    };

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    void relations_action(Context& c) {
      auto const  addrs = all_addresses(*c.max_addr_len);
      auto const  terms = labelled_terms(*c.max_size);
      auto const& rev   = c.ld.reversing();
      std::size_t both  = 0;
      for (std::size_t i = 0; i < addrs.size(); ++i) {
        for (std::size_t j = i + 1; j < addrs.size(); ++j) {
          auto const& a   = addrs[i];
          auto const& b   = addrs[j];
          LdWord      lhs = concat(LdWord{a}, rev.complement_word(a, b));
          LdWord      rhs = concat(LdWord{b}, rev.complement_word(b, a));
          for (auto const& t : terms) {
            auto l = act(t, lhs);
            auto r = act(t, rhs);
            ++c.report.cases_checked;
            if (l.has_value() != r.has_value() || (l && *l != *r)) {
              c.fail(show(t) + " under " + format_word(lhs) + " = " + format_word(rhs),
                     show(l), show(r));
            }
            both += l.has_value() ? 1 : 0;
          }
        }
      }
      c.note("cases_with_both_sides_defined", std::to_string(both));
      // The critical case, read off the three-letter/four-letter diagram.
      auto const t = Term::parse("x1*(x2*(x3*x4))");
      auto       l = act(t, parse_word<Address>("D: D:1 D:"));
      auto       r = act(t, parse_word<Address>("D:1 D: D:1 D:0"));
      ++c.report.cases_checked;
      if (!l || !r || *l != *r) {
        c.fail("critical case on " + show(t), show(l), show(r));
      }
    }

    void cube_ld(Context& c) {
      auto const  addrs = all_addresses(*c.max_addr_len);
      auto const& rev   = c.ld.reversing();
      for (auto const& a : addrs) {
        for (auto const& b : addrs) {
          for (auto const& d : addrs) {
            std::string const in = format_word(LdWord{a, b, d});
            c.run_case(in, [&] {
              ++c.report.cases_checked;
              if (!rev.cube_check(a, b, d)) {
                c.fail(in, "cube condition", "nonempty remainder");
              }
            });
          }
        }
      }
    }

    void cube_braid(Context& c) {
      auto const& rev = c.braid.reversing();
      auto const  n   = static_cast<Strand>(*c.max_index);
      for (Strand i = 1; i <= n; ++i) {
        for (Strand j = 1; j <= n; ++j) {
          for (Strand k = 1; k <= n; ++k) {
            std::string const in = format_word(BraidWord{i, j, k});
            c.run_case(in, [&] {
              ++c.report.cases_checked;
              if (!rev.cube_check(i, j, k)) {
                c.fail(in, "cube condition", "nonempty remainder");
              }
            });
          }
        }
      }
    }

    void lgloc(Context& c) {
      auto const& rev = c.ld.reversing();
      for (auto const& t : labelled_terms(*c.max_size)) {
        c.run_case(show(t), [&] {
          auto const d = delta_big(t);
          auto       e = act(t, d);
          ++c.report.cases_checked;
          if (!e || *e != phi(t)) {
            c.fail(show(t) + " under Delta", show(phi(t)), show(e));
          }
          for (auto const& a : enabled_atoms(t)) {
            LdWord const da{a};
            ++c.report.cases_checked;
            if (!rev.divides(da, d)) {
              c.fail(format_word(da) + " | Delta at " + show(t), "true", "false");
            }
            auto const rhs = concat(da, delta_big(*apply_ld(t, a)));
            ++c.report.cases_checked;
            if (!rev.divides(d, rhs)) {
              c.fail("Delta | " + format_word(da) + " Delta(t.a) at " + show(t), "true",
                     "false");
            }
          }
        });
      }
    }

    void coherence(Context& c) {
      auto const&  rev   = c.ld.reversing();
      auto const   terms = terms_up_to_size(*c.max_size);
      DivisorCache divisors(rev);
      std::size_t  nontrivial = 0;
      for (std::size_t s = 0; s < *c.samples; ++s) {
        auto const& t2  = terms[c.uniform(terms.size())];
        auto const& ds  = divisors(t2);
        auto const& a   = ds[c.uniform(ds.size())].word;
        std::vector<Term const*> acting;
        for (auto const& t : terms) {
          if (act(t, a)) {
            acting.push_back(&t);
          }
        }
        // t2 itself always qualifies.
        auto const&       t  = *acting[c.uniform(acting.size())];
        std::string const in = show(t) + ", " + show(t2) + ", " + format_word(a);
        c.run_case(in, [&] {
          ++c.report.cases_checked;
          nontrivial += (t != t2 && !a.empty()) ? 1 : 0;
          if (!coherence_check(rev, t, t2, a)) {
            c.fail(in, "a | Delta_t", "a does not divide Delta_t");
          }
        });
      }
      c.note("samples_with_distinct_terms", std::to_string(nontrivial));
    }

    void delta_projection(Context& c) {
      auto const&            rev = c.braid.reversing();
      std::vector<BraidWord> deltas;
      for (auto const& t : terms_up_to_size(*c.max_size)) {
        auto const n = right_height(t);
        if (n == 0) {
          continue;
        }
        while (deltas.size() <= n) {
          deltas.push_back(delta_n(deltas.size()));
        }
        c.run_case(show(t), [&] {
          ++c.report.cases_checked;
          auto const p = pi(delta_big(t));
          if (!rev.equal(p, deltas[n])) {
            c.fail("pi(Delta) at " + show(t), format_word(deltas[n]), format_word(p));
          }
        });
      }
    }

    void proj_compat(Context& c) {
      auto const addrs = all_addresses(*c.max_addr_len);
      for (auto const& a : addrs) {
        for (auto const& b : addrs) {
          std::string const in = format_word(LdWord{a, b});
          c.run_case(in, [&] {
            ++c.report.cases_checked;
            if (!check_proj_compat(c.ld.reversing(), c.braid.reversing(), a, b)) {
              c.fail(in, "pi(C(a,b)) = C(pi a, pi b)",
                     format_word(pi(c.ld.reversing().complement_word(a, b))));
            }
          });
        }
      }
    }

    void lcm_preservation(Context& c) {
      auto const  addrs = all_addresses(*c.max_addr_len);
      auto const& ld    = c.ld.reversing();
      auto const& br    = c.braid.reversing();
      for (auto const& a : addrs) {
        for (auto const& b : addrs) {
          std::string const in = format_word(LdWord{a, b});
          c.run_case(in, [&] {
            ++c.report.cases_checked;
            auto const lhs = pi(ld.lcm({a}, {b}));
            auto const rhs = br.lcm(pi({a}), pi({b}));
            if (!br.equal(lhs, rhs)) {
              c.fail(in, format_word(rhs), format_word(lhs));
            }
          });
        }
      }
    }

    void phi_injective(Context& c) {
      std::unordered_map<Term, Term> seen;
      for (auto const& t : terms_up_to_size(*c.max_size)) {
        ++c.report.cases_checked;
        auto [it, fresh] = seen.emplace(phi(t), t);
        if (!fresh) {
          c.fail("phi(" + show(t) + ") = phi(" + show(it->second) + ")", "distinct images",
                 show(it->first));
        }
      }
      auto const&  rev = c.ld.reversing();
      std::size_t  pairs = 0;
      for (auto const& t : terms_up_to_size(*c.max_simple_size)) {
        c.run_case(show(t), [&] {
          auto const                              ds = simple_divisors(rev, t);
          std::unordered_map<Term, std::vector<std::size_t>> buckets;
          std::vector<LdWord>                     images;
          for (std::size_t i = 0; i < ds.size(); ++i) {
            images.push_back(phi_t(rev, t, ds[i].word));
            buckets[phi(ds[i].target)].push_back(i);
            ++c.report.cases_checked;
          }
          for (auto const& [target, idx] : buckets) {
            for (std::size_t i = 0; i < idx.size(); ++i) {
              for (std::size_t j = i + 1; j < idx.size(); ++j) {
                ++pairs;
                if (rev.equal(images[idx[i]], images[idx[j]])) {
                  c.fail("phi_t at " + show(t) + " of " + format_word(ds[idx[i]].word)
                             + " and " + format_word(ds[idx[j]].word),
                         "distinct images", format_word(images[idx[i]]));
                }
              }
            }
          }
        });
      }
      c.note("simple_pairs_with_same_target", std::to_string(pairs));
    }

    template <GarsideInstance I>
    typename I::word_type random_word(Context&                       c,
                                      I const&                       inst,
                                      typename I::object_type const& x,
                                      std::size_t                    length) {
      typename I::word_type w;
      auto                  here = x;
      for (std::size_t k = 0; k < length; ++k) {
        auto atoms = inst.atoms(here);
        if (atoms.empty()) {
          break;
        }
        auto a = atoms[c.uniform(atoms.size())];
        here   = *inst.act(here, {a});
        w.push_back(a);
      }
      return w;
    }

    template <GarsideInstance I>
    std::string show_nf(I const& inst, NormalForm<I> const& nf) {
      std::string out = "(";
      for (std::size_t i = 0; i < nf.length(); ++i) {
        out += (i ? " | " : "") + format_word(nf.factors[i]);
      }
      (void) inst;
      return out + ")";
    }

    // One sampled case of the normal form checks: x.g = y and w acts on y.
    template <GarsideInstance I>
    void domino_case(Context&                       c,
                     I const&                       inst,
                     typename I::object_type const& x,
                     typename I::word_type const&   g,
                     typename I::word_type const&   w) {
      auto const&       rev = inst.reversing();
      auto const        y   = *inst.act(x, g);
      std::string const in  = inst.describe(x) + ", g = " + format_word(g)
                              + ", w = " + format_word(w);
      c.run_case(in, [&] {
        auto const nf = normal_form(inst, y, w);
        ++c.report.cases_checked;
        if (!rev.equal(nf.product(), w) || !local_check(inst, nf)) {
          c.fail("normal form of " + in, "normal decomposition of w", show_nf(inst, nf));
        }
        auto const again = normal_form(inst, y, nf.product());
        if (!same_normal_form(inst, nf, again)) {
          c.fail("idempotence for " + in, show_nf(inst, nf), show_nf(inst, again));
        }
        for (std::size_t i = 0; i + 1 < nf.length(); ++i) {
          if (!is_normal_pair_by_head(inst, nf.objects[i], nf.factors[i], nf.factors[i + 1])) {
            c.fail("head criterion on " + show_nf(inst, nf), "normal", "not normal");
          }
        }
        // Agreement of the two normality tests on a pair that need not be
        // normal: g followed by the first factor.
        if (nf.length() > 0) {
          bool const a = is_normal_pair(inst, x, g, nf.factors[0]);
          bool const b = is_normal_pair_by_head(inst, x, g, nf.factors[0]);
          if (a != b) {
            c.fail("normality of (g, f1) for " + in, b ? "normal" : "not normal",
                   a ? "normal" : "not normal");
          }
        }
        auto const left = left_multiply_nf(inst, x, g, nf);
        auto const full = normal_form(inst, x, concat(g, w));
        if (!same_normal_form(inst, left, full)) {
          c.fail("left product for " + in, show_nf(inst, full), show_nf(inst, left));
        }
        // Along the phi-orbit of a term the sizes grow exponentially, so the
        // bound is only evaluated here for braids; the LD case is covered by
        // the unit tests on small terms.
        if constexpr (std::is_same_v<I, BraidInstance>) {
          if (!lcm_bound_check(inst, y, w, nf.length())) {
            c.fail("Delta-orbit bound for " + in, "divides", "does not divide");
          }
        }
      });
    }

    void nf_domino(Context& c) {
      auto const terms = terms_up_to_size(*c.max_size);
      for (std::size_t s = 0; s < *c.samples; ++s) {
        auto const& x = terms[c.uniform(terms.size())];
        auto        g = head(c.ld, x, random_word(c, c.ld, x, 1 + c.uniform(3)));
        auto const  y = *act(x, g);
        auto const  w = random_word(c, c.ld, y, c.uniform(5));
        domino_case(c, c.ld, x, g, w);
      }
      for (std::size_t s = 0; s < *c.samples; ++s) {
        std::size_t const n = 2 + c.uniform(*c.max_index);
        auto g = head(c.braid, n, random_word(c, c.braid, n, c.uniform(2 * n)));
        auto w = random_word(c, c.braid, n, c.uniform(10));
        domino_case(c, c.braid, n, g, w);
      }
    }

    // phi_t of every divisor of Delta_t, with the images' complements in
    // Delta_phi(t); the pairwise suites reuse them.
    struct PhiImages {
      Term                t;
      Term                phi_t;
      std::vector<LdWord> image;
      std::vector<LdWord> image_star;
    };

    PhiImages phi_images(LdInstance const& ld, Term const& t,
                         std::vector<SimpleDivisor> const& ds) {
      PhiImages p{t, phi_object(ld, t), {}, {}};
      for (auto const& d : ds) {
        p.image.push_back(phi_op(ld, t, d.word));
        p.image_star.push_back(star(ld, p.phi_t, p.image.back()));
      }
      return p;
    }

    // Index of the divisor equal to w, found among those with the same target.
    std::optional<std::size_t> find_divisor(
        LdReversing const&                                       rev,
        std::vector<SimpleDivisor> const&                        ds,
        std::unordered_map<Term, std::vector<std::size_t>> const& by_target,
        Term const&                                              target,
        LdWord const&                                            w) {
      auto it = by_target.find(target);
      if (it != by_target.end()) {
        for (auto k : it->second) {
          if (rev.equal(ds[k].word, w)) {
            return k;
          }
        }
      }
      return std::nullopt;
    }

    std::unordered_map<Term, std::vector<std::size_t>> index_by_target(
        std::vector<SimpleDivisor> const& ds) {
      std::unordered_map<Term, std::vector<std::size_t>> out;
      for (std::size_t k = 0; k < ds.size(); ++k) {
        out[ds[k].target].push_back(k);
      }
      return out;
    }

    // Atoms among the candidates that left-divide w, sorted.
    std::vector<Address> dividing_atoms(LdReversing const&          rev,
                                        std::vector<Address> const& candidates,
                                        LdWord const&               w) {
      std::vector<Address> out;
      for (auto const& a : candidates) {
        if (rev.divides({a}, w)) {
          out.push_back(a);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Memoized tests "atom a left-divides w" for one fixed word w, evaluated
    // on demand: on phi-images the candidate atoms are numerous and each test
    // is a long reversal, while only a common divisor is ever needed.
    class AtomDivisors {
     public:
      AtomDivisors(LdReversing const& rev, LdWord w) : rev_(&rev), word_(std::move(w)) {}

      bool operator()(Address const& a) {
        auto [it, fresh] = memo_.try_emplace(a, false);
        if (fresh) {
          it->second = (!word_.empty() && word_.front() == a) || rev_->divides({a}, word_);
        }
        return it->second;
      }
      [[nodiscard]] LdWord const& word() const noexcept {
        return word_;
      }

     private:
      LdReversing const*                 rev_;
      LdWord                             word_;
      std::unordered_map<Address, bool> memo_;
    };

    std::optional<Address> common_atom(std::vector<Address> const& candidates,
                                       AtomDivisors& x, AtomDivisors& y) {
      for (auto const& a : candidates) {
        if (x(a) && y(a)) {
          return a;
        }
      }
      return std::nullopt;
    }

    bool meet(std::vector<Address> const& x, std::vector<Address> const& y) {
      auto i = x.begin();
      auto j = y.begin();
      while (i != x.end() && j != y.end()) {
        if (*i == *j) {
          return true;
        }
        *i < *j ? ++i : ++j;
      }
      return false;
    }

    void regularity(Context& c) {
      auto const&  rev = c.ld.reversing();
      DivisorCache divisors(rev);
      struct NormalPair {
        Term   t;
        LdWord f1, f2;
      };
      std::vector<NormalPair> pairs;
      for (auto const& t : terms_up_to_size(*c.max_size)) {
        auto const&              ds = divisors(t);
        std::optional<PhiImages> images;
        c.run_case(show(t), [&] { images = phi_images(c.ld, t, ds); });
        if (!images) {
          continue;
        }
        // A pair of words has a trivial gcd iff no atom divides both, so the
        // normality tests below reduce to intersections of these sets.
        std::vector<std::vector<Address>> divides_f2(ds.size());
        auto const                        atoms_t = enabled_atoms(t);
        for (std::size_t j = 0; j < ds.size(); ++j) {
          divides_f2[j] = dividing_atoms(rev, atoms_t, ds[j].word);
        }
        // The first factors are grouped by their target y, so that each
        // phi_y(f2), which can be very long, is computed once and dropped.
        for (auto const& [y, group] : index_by_target(ds)) {
          auto const phi_y       = *act(images->phi_t, images->image[group.front()]);
          auto const phi_y_atoms = enabled_atoms(phi_y);
          auto const y_atoms     = enabled_atoms(y);
          struct First {
            std::size_t          i;
            std::vector<Address> star_atoms;
            // Atoms dividing phi(f1)*. When there are none, every image
            // pair with first factor phi(f1) is normal.
            std::vector<Address> image_star_atoms;
          };
          std::vector<First> firsts;
          for (auto i : group) {
            if (ds[i].word.empty()) {
              continue;
            }
            c.run_case(show(t) + ", f1 = " + format_word(ds[i].word), [&] {
              firsts.push_back({i, dividing_atoms(rev, y_atoms, ds[i].star),
                                dividing_atoms(rev, phi_y_atoms, images->image_star[i])});
            });
          }
          for (std::size_t j = 0; j < ds.size(); ++j) {
            auto const& f2 = ds[j].word;
            if (f2.empty() || !act(y, f2)) {
              continue;
            }
            auto describe = [&](First const& f) {
              return show(t) + ", (" + format_word(ds[f.i].word) + " | " + format_word(f2) + ")";
            };
            bool simple = false;
            c.run_case(show(y) + ", f2 = " + format_word(f2),
                       [&] { simple = is_simple(c.ld, y, f2); });
            if (!simple) {
              continue;
            }
            std::vector<First const*> open;
            for (auto const& f : firsts) {
              if (meet(f.star_atoms, divides_f2[j])) {
                continue;
              }
              pairs.push_back({t, ds[f.i].word, f2});
              if (f.image_star_atoms.empty()) {
                ++c.report.cases_checked;
              } else {
                open.push_back(&f);
              }
            }
            if (open.empty()) {
              continue;
            }
            std::optional<AtomDivisors> phi2;
            try {
              phi2.emplace(rev, phi_op(c.ld, y, f2));
            } catch (BudgetExhausted const& e) {
              for (auto const* f : open) {
                c.report.exhausted.push_back(describe(*f) + ": phi(f2): " + e.what());
              }
              continue;
            } catch (std::exception const& e) {
              c.fail("phi(f2) at " + show(y) + " for f2 = " + format_word(f2), "no error",
                     std::string("exception: ") + e.what());
              continue;
            }
            for (auto const* f : open) {
              c.run_case(describe(*f), [&] {
                auto const& atoms = f->image_star_atoms;
                auto const  a     = std::find_if(atoms.begin(), atoms.end(),
                                                 [&](Address const& b) { return (*phi2)(b); });
                ++c.report.cases_checked;
                if (a != atoms.end()) {
                  c.fail("phi-image of the normal pair " + describe(*f), "normal pair",
                         "(" + brief(images->image[f->i]) + " | " + brief(phi2->word())
                             + ") is not normal at " + show(images->phi_t) + ": "
                             + format_word(LdWord{*a}) + " divides phi(f1)* and phi(f2)");
                }
              });
            }
          }
        }
      }
      c.note("normal_pairs", std::to_string(pairs.size()));

      // Right-multiplication updates on a deterministic sample of these normal
      // forms, by a simple element at the target (the head of a random word).
      std::size_t right_products = 0;
      for (std::size_t s = 0; s < *c.samples && !pairs.empty(); ++s) {
        auto const& p  = pairs[c.uniform(pairs.size())];
        auto const  nf = make_normal_form(c.ld, p.t, {p.f1, p.f2});
        auto const  w  = random_word(c, c.ld, nf.target(), 1 + c.uniform(4));
        std::string const in = show(p.t) + ", (" + format_word(p.f1) + " | "
                               + format_word(p.f2) + ") times the head of " + format_word(w);
        c.run_case(in, [&] {
          auto const g = head(c.ld, nf.target(), w);
          ++right_products;
          ++c.report.cases_checked;
          auto r = right_multiply_nf(c.ld, nf, g);
          if (auto const* v = std::get_if<RegularityViolation<LdInstance>>(&r)) {
            c.fail("right product " + in, show_nf(c.ld, v->from_scratch),
                   show_nf(c.ld, v->domino));
          }
        });
      }
      c.note("right_products", std::to_string(right_products));
    }

    void gcd_preservation(Context& c) {
      // Beyond this many failures the image gcd is not computed in full; the
      // common atom already witnesses the failure.
      constexpr std::size_t full_transcripts = 16;
      // Pairs with a nontrivial gcd on which the cofactor reduction below is
      // cross-checked against the literal gcd computation.
      constexpr std::size_t cross_check_limit = 64;
      std::size_t           cross_checks      = 0;
      auto const&           rev               = c.ld.reversing();
      for (auto const& t : terms_up_to_size(*c.max_size)) {
        auto const               ds = simple_divisors(rev, t);
        auto const               by_target = index_by_target(ds);
        std::optional<PhiImages> images;
        c.run_case(show(t), [&] { images = phi_images(c.ld, t, ds); });
        if (!images) {
          continue;
        }
        // A gcd is trivial iff no atom divides both words.
        std::vector<std::vector<Address>> source_atoms;
        std::vector<AtomDivisors>         image_atoms;
        auto const                        atoms_t   = enabled_atoms(t);
        auto const                        atoms_phi = enabled_atoms(images->phi_t);
        for (std::size_t i = 0; i < ds.size(); ++i) {
          source_atoms.push_back(dividing_atoms(rev, atoms_t, ds[i].word));
          image_atoms.emplace_back(rev, images->image[i]);
        }
        for (std::size_t i = 0; i < ds.size(); ++i) {
          for (std::size_t j = i; j < ds.size(); ++j) {
            auto const&       a  = ds[i].word;
            auto const&       b  = ds[j].word;
            std::string const in = show(t) + ", " + format_word(a) + " ; " + format_word(b);
            c.run_case(in, [&] {
              ++c.report.cases_checked;
              bool const source_coprime = !meet(source_atoms[i], source_atoms[j]);
              auto const common = common_atom(atoms_phi, image_atoms[i], image_atoms[j]);
              if (source_coprime && !common) {
                return;
              }
              auto image_gcd = [&] {
                return gcd_at(c.ld, images->phi_t, images->image[i], images->image[j]);
              };
              if (source_coprime) {
                c.fail("gcd of phi-images at " + in, "ε",
                       c.report.failures.size() < full_transcripts
                           ? format_word(image_gcd())
                           : "nontrivial, divisible by " + format_word(LdWord{*common}));
                return;
              }
              // With g = gcd(a, b), a = g a' and b = g b' where a', b' are
              // coprime simples at t.g. Since phi is a functor and M_LD is
              // left-cancellative, gcd(phi a, phi b) = phi(g) iff phi(g)
              // divides both images and the cofactors phi(a'), phi(b') have
              // no common atom at phi(t).phi(g).
              auto const g   = gcd_at(c.ld, t, a, b);
              auto const k   = find_divisor(rev, ds, by_target, *act(t, g), g);
              auto const rhs = k ? images->image[*k] : phi_op(c.ld, t, g);
              auto const qa  = rev.quotient(rhs, images->image[i]);
              auto const qb  = rev.quotient(rhs, images->image[j]);
              bool       ok  = qa && qb;
              if (ok) {
                AtomDivisors da(rev, *qa), db(rev, *qb);
                ok = !common_atom(enabled_atoms(*act(images->phi_t, rhs)), da, db);
              }
              if (++cross_checks <= cross_check_limit) {
                bool const literal = rev.equal(common ? image_gcd() : LdWord{}, rhs);
                if (literal != ok) {
                  c.fail("cofactor reduction at " + in, literal ? "holds" : "fails",
                         ok ? "holds" : "fails");
                }
              }
              if (!ok) {
                c.fail("gcd of phi-images at " + in, format_word(rhs),
                       c.report.failures.size() < full_transcripts
                           ? format_word(image_gcd())
                           : "a left-divisor other than phi(gcd(a, b))");
              }
            });
          }
        }
      }
      c.note("literal_cross_checks", std::to_string(std::min(cross_checks, cross_check_limit)));
    }

    void dual(Context& c) {
      auto const& rev = c.ld.reversing();
      for (auto const& t : terms_up_to_size(*c.max_size)) {
        for (auto const& d : simple_divisors(rev, t)) {
          std::string const in = show(t) + ", " + format_word(d.word);
          c.run_case(in, [&] {
            ++c.report.cases_checked;
            if (!dual_check(c.ld, t, d.word)) {
              c.fail("phi(f*) = phi(f)* at " + in,
                     format_word(star(c.ld, phi(t), phi_op(c.ld, t, d.word))),
                     format_word(phi_op(c.ld, d.target, d.star)));
            }
          });
        }
      }
    }

    // Terms reachable from t by associativity steps.
    std::unordered_set<Term> assoc_closure(Term const& t) {
      std::unordered_set<Term> seen{t};
      std::vector<Term>        todo{t};
      while (!todo.empty()) {
        Term u = std::move(todo.back());
        todo.pop_back();
        for (auto const& a : redex_addresses(u)) {
          auto v = *apply_assoc(u, a);
          if (seen.insert(v).second) {
            todo.push_back(std::move(v));
          }
        }
      }
      return seen;
    }

    void assoc_trivial(Context& c) {
      std::unordered_map<Term, std::unordered_set<Term>> closures;
      auto closure = [&](Term const& t) -> std::unordered_set<Term> const& {
        auto it = closures.find(t);
        if (it == closures.end()) {
          it = closures.emplace(t, assoc_closure(t)).first;
        }
        return it->second;
      };
      std::size_t expansions = 0;
      for (auto const& t : labelled_terms(*c.max_size)) {
        auto const target = left_comb(t);
        auto const reach  = closure(t);
        if (!reach.contains(target)) {
          c.fail(show(t), show(target) + " reachable", "not reachable");
        }
        for (auto const& u : reach) {
          ++expansions;
          ++c.report.cases_checked;
          if (!closure(u).contains(target)) {
            c.fail("A-expansion " + show(u) + " of " + show(t),
                   "expands further to " + show(target), "does not");
          }
        }
      }
      c.note("a_expansions", std::to_string(expansions));
    }

    struct SuiteEntry {
      std::string_view name;
      std::string_view summary;
      SuiteDefaults    defaults;
      void (*run)(Context&);
    };

    std::vector<SuiteEntry> const& registry() {
      constexpr auto none = std::nullopt;
      static std::vector<SuiteEntry> const entries{
          {"relations-action",
           "each defining relation of M_LD acts identically on all terms",
           {7, none, 2, none, none},
           relations_action},
          {"cube-ld", "cube condition on LD atom triples", {none, none, 3, none, none}, cube_ld},
          {"cube-braid",
           "cube condition on braid atom triples",
           {none, none, none, 5, none},
           cube_braid},
          {"lgloc",
           "t.Delta_t = phi(t), atoms divide Delta_t, Delta_t | D_a Delta_(t.D_a)",
           {6, none, none, none, none},
           lgloc},
          {"coherence",
           "a | Delta_t' and t.a defined imply a | Delta_t",
           {5, none, none, none, 2000},
           coherence},
          {"delta-projection",
           "pi(Delta_t) = Delta_RH(t)",
           {7, none, none, none, none},
           delta_projection},
          {"proj-compat",
           "pi(C(D_a, D_b)) = C(pi D_a, pi D_b)",
           {none, none, 3, none, none},
           proj_compat},
          {"lcm-preservation",
           "pi(lcm(D_a, D_b)) = lcm(pi D_a, pi D_b)",
           {none, none, 3, none, none},
           lcm_preservation},
          {"phi-injective",
           "phi is injective on terms and on simple elements",
           {8, 4, none, none, none},
           phi_injective},
          {"nf-domino",
           "normal forms: local test, idempotence, left products, Delta-orbit bound",
           {3, none, none, 5, 1000},
           nf_domino},
          {"regularity",
           "phi preserves normal pairs; right products agree with normalization",
           {4, none, none, none, 500},
           regularity},
          {"gcd-preservation",
           "gcd(phi a, phi b) = phi(gcd(a, b)) on simple elements",
           {4, none, none, none, none},
           gcd_preservation},
          {"dual", "phi(f*) = phi(f)* on simple elements", {4, none, none, none, none}, dual},
          {"assoc-trivial",
           "every A-expansion expands further to the left comb",
           {6, none, none, none, none},
           assoc_trivial},
      };
      return entries;
    }

    SuiteEntry const& find_suite(std::string_view name) {
      for (auto const& e : registry()) {
        if (e.name == name) {
          return e;
        }
      }
      throw std::invalid_argument("unknown suite: " + std::string(name));
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& e : registry()) {
        out.emplace_back(e.name);
      }
      return out;
    }();
    return names;
  }

  std::string_view suite_summary(std::string_view name) {
    return find_suite(name).summary;
  }

  Report run_suite(std::string_view name, SuiteOptions const& opts) {
    auto const& entry = find_suite(name);
    Context     c(name, opts, entry.defaults);
    entry.run(c);
    return c.finish();
  }

}  // namespace ldgarside
