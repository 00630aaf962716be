#ifndef LDGARSIDE_GARSIDE_HPP_
#define LDGARSIDE_GARSIDE_HPP_

#include <concepts>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "braid.hpp"
#include "mld.hpp"
#include "reversing.hpp"
#include "term.hpp"
#include "word.hpp"

namespace ldgarside {

  // What the normal form machinery needs to know about a locally left-Garside
  // monoid acting partially on a set of objects:
  //   atoms(x)      the generators acting on x, in atom order;
  //   act(x, w)     x.w, or nullopt;
  //   delta(x)      the local Garside element Delta_x;
  //   reversing()   the reversing engine of the monoid;
  //   describe(x)   a textual rendering of x for reports.
  template <typename I>
  concept GarsideInstance = requires(I const&                         inst,
                                     typename I::object_type const&   x,
                                     typename I::word_type const&     w) {
    typename I::atom_type;
    requires std::same_as<typename I::word_type,
                          std::vector<typename I::atom_type>>;
    { inst.atoms(x) } -> std::convertible_to<std::vector<typename I::atom_type>>;
    { inst.act(x, w) } -> std::same_as<std::optional<typename I::object_type>>;
    { inst.delta(x) } -> std::convertible_to<typename I::word_type>;
    { inst.describe(x) } -> std::convertible_to<std::string>;
    inst.reversing().reverse(w, w);
  };

  // M_LD acting on terms.
  class LdInstance {
   public:
    using object_type = Term;
    using atom_type   = Address;
    using word_type   = LdWord;

    explicit LdInstance(ReversalBudget budget = {}) : rev_(LdComplement{}, budget) {}

    [[nodiscard]] std::vector<Address> atoms(Term const& t) const {
      return enabled_atoms(t);
    }
    [[nodiscard]] std::optional<Term> act(Term const& t, LdWord const& w) const {
      return ldgarside::act(t, w);
    }
    // Memoized: the same Delta words are needed over and over by the normal
    // form and regularity computations. The cache is flushed once it holds
    // more than cache_letters letters in total. Throws BudgetExhausted when
    // Delta_t is longer than the reversal budget.
    [[nodiscard]] LdWord delta(Term const& t) const {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->delta.find(t); it != cache_->delta.end()) {
        return it->second;
      }
      auto d = delta_within(rev_, t);
      if (cache_->letters + d.size() > cache_letters) {
        cache_->delta.clear();
        cache_->letters = 0;
      }
      cache_->letters += d.size();
      return cache_->delta.emplace(t, std::move(d)).first->second;
    }
    [[nodiscard]] LdReversing const& reversing() const noexcept {
      return rev_;
    }
    [[nodiscard]] std::string describe(Term const& t) const {
      return t.to_string();
    }

   private:
    static constexpr std::size_t cache_letters = std::size_t{1} << 22;
    struct Cache {
      std::mutex                       mutex;
      std::unordered_map<Term, LdWord> delta;
      std::size_t                      letters = 0;
    };
    LdReversing            rev_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  };

  // B_infinity^+ acting on strand counts: B_n^+ acts on n.
  class BraidInstance {
   public:
    using object_type = std::size_t;
    using atom_type   = Strand;
    using word_type   = BraidWord;

    explicit BraidInstance(ReversalBudget budget = {})
        : rev_(BraidComplement{}, budget) {}

    [[nodiscard]] std::vector<Strand> atoms(std::size_t n) const {
      std::vector<Strand> out;
      for (Strand i = 1; i < n; ++i) {
        out.push_back(i);
      }
      return out;
    }
    [[nodiscard]] std::optional<std::size_t> act(std::size_t      n,
                                                 BraidWord const& w) const {
      return act_nat(n, w);
    }
    [[nodiscard]] BraidWord delta(std::size_t n) const {
      return delta_n(n);
    }
    [[nodiscard]] BraidReversing const& reversing() const noexcept {
      return rev_;
    }
    [[nodiscard]] std::string describe(std::size_t n) const {
      return std::to_string(n);
    }

   private:
    BraidReversing rev_;
  };

  // Normal form of a morphism with source `source`: factors[i] is simple at
  // objects[i], and objects[i + 1] = objects[i].factors[i]. objects always has
  // one more entry than factors.
  template <GarsideInstance I>
  struct NormalForm {
    using object_type = typename I::object_type;
    using word_type   = typename I::word_type;

    std::vector<word_type>   factors;
    std::vector<object_type> objects;

    [[nodiscard]] object_type const& source() const {
      return objects.front();
    }
    [[nodiscard]] object_type const& target() const {
      return objects.back();
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return factors.size();
    }
    [[nodiscard]] word_type product() const {
      word_type out;
      for (auto const& f : factors) {
        out.insert(out.end(), f.begin(), f.end());
      }
      return out;
    }
  };

  // The outcome of a right-multiplication update that disagrees with the
  // normal form computed from scratch.
  template <GarsideInstance I>
  struct RegularityViolation {
    NormalForm<I> domino;
    NormalForm<I> from_scratch;
  };

  namespace detail {
    template <GarsideInstance I>
    typename I::object_type act_or_throw(I const&                       inst,
                                         typename I::object_type const& x,
                                         typename I::word_type const&   w,
                                         char const*                    what) {
      auto y = inst.act(x, w);
      if (!y) {
        throw std::invalid_argument(std::string(what) + ": "
                                    + format_word(w) + " does not act on "
                                    + inst.describe(x));
      }
      return std::move(*y);
    }
  }  // namespace detail

  // Left-gcd of two words acting on x; the candidate atoms after stripping a
  // common prefix g are those acting on x.g.
  template <GarsideInstance I>
  [[nodiscard]] typename I::word_type gcd_at(I const&                       inst,
                                             typename I::object_type const& x,
                                             typename I::word_type const&   u,
                                             typename I::word_type const&   v) {
    using W = typename I::word_type;
    auto        here = x;
    std::size_t done = 0;
    return inst.reversing().gcd(u, v, [&](W const& g) {
      if (done < g.size()) {
        here = *inst.act(here, W(g.begin() + static_cast<std::ptrdiff_t>(done), g.end()));
        done = g.size();
      }
      return inst.atoms(here);
    });
  }

  // The greatest simple left-divisor of a, namely gcd(a, Delta_x).
  template <GarsideInstance I>
  [[nodiscard]] typename I::word_type head(I const&                       inst,
                                           typename I::object_type const& x,
                                           typename I::word_type const&   a) {
    return gcd_at(inst, x, a, inst.delta(x));
  }

  // Peels off heads from the left. Throws std::invalid_argument if a does not
  // act on x, and BudgetExhausted from reversing.
  template <GarsideInstance I>
  [[nodiscard]] NormalForm<I> normal_form(I const&                       inst,
                                          typename I::object_type const& x,
                                          typename I::word_type          a) {
    detail::act_or_throw(inst, x, a, "normal_form");
    auto const&   rev = inst.reversing();
    NormalForm<I> nf;
    nf.objects.push_back(x);
    while (!a.empty()) {
      auto h = head(inst, nf.target(), a);
      if (h.empty()) {
        throw std::logic_error("normal_form: empty head of the nonempty word "
                               + format_word(a) + " at "
                               + inst.describe(nf.target()));
      }
      a = *rev.quotient(h, a);
      nf.objects.push_back(*inst.act(nf.target(), h));
      nf.factors.push_back(std::move(h));
    }
    return nf;
  }

  // Rebuilds a normal form from its factors, dropping trivial ones.
  template <GarsideInstance I>
  [[nodiscard]] NormalForm<I> make_normal_form(
      I const&                                  inst,
      typename I::object_type const&            x,
      std::vector<typename I::word_type> const& factors) {
    NormalForm<I> nf;
    nf.objects.push_back(x);
    for (auto const& f : factors) {
      if (f.empty()) {
        continue;
      }
      nf.objects.push_back(detail::act_or_throw(inst, nf.target(), f, "factor"));
      nf.factors.push_back(f);
    }
    return nf;
  }

  // Entrywise equality in the monoid.
  template <GarsideInstance I>
  [[nodiscard]] bool same_normal_form(I const&             inst,
                                      NormalForm<I> const& a,
                                      NormalForm<I> const& b) {
    if (a.length() != b.length()) {
      return false;
    }
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (!inst.reversing().equal(a.factors[i], b.factors[i])) {
        return false;
      }
    }
    return true;
  }

  // f* with f f* = Delta_x. Throws std::invalid_argument if f is not simple
  // at x.
  template <GarsideInstance I>
  [[nodiscard]] typename I::word_type star(I const&                       inst,
                                           typename I::object_type const& x,
                                           typename I::word_type const&   f) {
    auto q = inst.reversing().quotient(f, inst.delta(x));
    if (!q) {
      throw std::invalid_argument("star: " + format_word(f)
                                  + " does not divide Delta at "
                                  + inst.describe(x));
    }
    return std::move(*q);
  }

  // f is simple at x.
  template <GarsideInstance I>
  [[nodiscard]] bool is_simple(I const&                       inst,
                               typename I::object_type const& x,
                               typename I::word_type const&   f) {
    return inst.act(x, f) && inst.reversing().divides(f, inst.delta(x));
  }

  // (f1, f2) is normal at x iff f1* and f2 are left-coprime.
  template <GarsideInstance I>
  [[nodiscard]] bool is_normal_pair(I const&                       inst,
                                    typename I::object_type const& x,
                                    typename I::word_type const&   f1,
                                    typename I::word_type const&   f2) {
    auto const y = detail::act_or_throw(inst, x, f1, "is_normal_pair");
    return gcd_at(inst, y, star(inst, x, f1), f2).empty();
  }

  // The defining condition: f1 is the head of f1 f2.
  template <GarsideInstance I>
  [[nodiscard]] bool is_normal_pair_by_head(I const&                       inst,
                                            typename I::object_type const& x,
                                            typename I::word_type const&   f1,
                                            typename I::word_type const&   f2) {
    return inst.reversing().equal(head(inst, x, concat(f1, f2)), f1);
  }

  // Every factor is nontrivial and simple at its object, and every adjacent
  // pair is normal.
  template <GarsideInstance I>
  [[nodiscard]] bool local_check(I const& inst, NormalForm<I> const& nf) {
    for (std::size_t i = 0; i < nf.length(); ++i) {
      if (nf.factors[i].empty() || !is_simple(inst, nf.objects[i], nf.factors[i])) {
        return false;
      }
      if (i + 1 < nf.length()
          && !is_normal_pair(inst, nf.objects[i], nf.factors[i], nf.factors[i + 1])) {
        return false;
      }
    }
    return true;
  }

  // The normal form of g f from that of f, for g simple at x with
  // x.g = nf.source(): left to right, (f'_i, g_i) is the normal form of
  // g_(i-1) f_i, and the result is (f'_1, ..., f'_d, g_d).
  template <GarsideInstance I>
  [[nodiscard]] NormalForm<I> left_multiply_nf(I const&                       inst,
                                               typename I::object_type const& x,
                                               typename I::word_type const&   g,
                                               NormalForm<I> const&           nf) {
    using W = typename I::word_type;
    auto const& rev = inst.reversing();
    if (!is_simple(inst, x, g)) {
      throw std::invalid_argument("left_multiply_nf: " + format_word(g)
                                  + " is not simple at " + inst.describe(x));
    }
    std::vector<W> out;
    W              carry = g;
    auto           here  = x;
    for (auto const& f : nf.factors) {
      W    prod = concat(carry, f);
      W    h    = head(inst, here, prod);
      here      = *inst.act(here, h);
      carry     = *rev.quotient(h, prod);
      out.push_back(std::move(h));
    }
    out.push_back(std::move(carry));
    return make_normal_form(inst, x, out);
  }

  // The normal form of f g from that of f, for g simple at nf.target():
  // right to left, (g_(i-1), f'_i) is the normal form of f_i g_i, and the
  // result is (g_0, f'_1, ..., f'_d). This is only guaranteed when phi
  // preserves normal pairs, so the outcome is compared with the normal form
  // computed from scratch, and a disagreement is returned, never hidden.
  template <GarsideInstance I>
  [[nodiscard]] std::variant<NormalForm<I>, RegularityViolation<I>>
  right_multiply_nf(I const&                     inst,
                    NormalForm<I> const&         nf,
                    typename I::word_type const& g) {
    using W = typename I::word_type;
    if (!is_simple(inst, nf.target(), g)) {
      throw std::invalid_argument("right_multiply_nf: " + format_word(g)
                                  + " is not simple at "
                                  + inst.describe(nf.target()));
    }
    std::vector<W> rev_out;
    W              carry = g;
    for (std::size_t i = nf.length(); i-- > 0;) {
      auto local = normal_form(inst, nf.objects[i], concat(nf.factors[i], carry));
      if (local.length() > 2) {
        // Two simples never need more than two factors; keep the evidence.
        auto full = normal_form(inst, nf.source(), concat(nf.product(), g));
        return RegularityViolation<I>{local, std::move(full)};
      }
      // A single factor h stands for (h, 1).
      W second = local.length() == 2 ? local.factors[1] : W{};
      carry    = local.length() >= 1 ? local.factors[0] : W{};
      rev_out.push_back(std::move(second));
    }
    rev_out.push_back(std::move(carry));
    std::vector<W> out(rev_out.rbegin(), rev_out.rend());
    auto domino = make_normal_form(inst, nf.source(), out);
    auto full   = normal_form(inst, nf.source(), concat(nf.product(), g));
    if (!same_normal_form(inst, domino, full)) {
      return RegularityViolation<I>{std::move(domino), std::move(full)};
    }
    return domino;
  }

  // phi(f), defined by Delta_x phi(f) = f Delta_(x.f). For simple f, left
  // cancellation of f in f f* phi(f) = f Delta_(x.f) gives phi(f) =
  // f* \ Delta_(x.f), which reverses the short word f* instead of Delta_x.
  template <GarsideInstance I>
  [[nodiscard]] typename I::word_type phi_op(I const&                       inst,
                                             typename I::object_type const& x,
                                             typename I::word_type const&   f) {
    auto const  y   = detail::act_or_throw(inst, x, f, "phi_op");
    auto const& rev = inst.reversing();
    auto const  dx  = inst.delta(x);
    if (auto f_star = rev.quotient(f, dx)) {
      if (auto q = rev.quotient(*f_star, inst.delta(y))) {
        return std::move(*q);
      }
      throw std::logic_error("phi_op: f* does not divide Delta(x.f) at "
                             + inst.describe(x) + " for f = " + format_word(f));
    }
    auto q = rev.quotient(dx, concat(f, inst.delta(y)));
    if (!q) {
      throw std::logic_error("phi_op: Delta does not divide f Delta(x.f) at "
                             + inst.describe(x) + " for f = " + format_word(f));
    }
    return std::move(*q);
  }

  // phi(x) = x.Delta_x.
  template <GarsideInstance I>
  [[nodiscard]] typename I::object_type phi_object(I const&                       inst,
                                                   typename I::object_type const& x) {
    return detail::act_or_throw(inst, x, inst.delta(x), "phi_object");
  }

  // For (f1, f2) normal at x: (phi(f1), phi(f2)) is normal at phi(x).
  template <GarsideInstance I>
  [[nodiscard]] bool regularity_pair_check(I const&                       inst,
                                           typename I::object_type const& x,
                                           typename I::word_type const&   f1,
                                           typename I::word_type const&   f2) {
    auto const y = detail::act_or_throw(inst, x, f1, "regularity_pair_check");
    return is_normal_pair(inst, phi_object(inst, x), phi_op(inst, x, f1),
                          phi_op(inst, y, f2));
  }

  // gcd(phi(a), phi(b)) = phi(gcd(a, b)) for a, b simple at x.
  template <GarsideInstance I>
  [[nodiscard]] bool gcd_preservation_check(I const&                       inst,
                                            typename I::object_type const& x,
                                            typename I::word_type const&   a,
                                            typename I::word_type const&   b) {
    auto const lhs = gcd_at(inst, phi_object(inst, x), phi_op(inst, x, a),
                            phi_op(inst, x, b));
    auto const rhs = phi_op(inst, x, gcd_at(inst, x, a, b));
    return inst.reversing().equal(lhs, rhs);
  }

  // phi(f*) = phi(f)* for f simple at x.
  template <GarsideInstance I>
  [[nodiscard]] bool dual_check(I const&                       inst,
                                typename I::object_type const& x,
                                typename I::word_type const&   f) {
    auto const y   = detail::act_or_throw(inst, x, f, "dual_check");
    auto const lhs = phi_op(inst, y, star(inst, x, f));
    auto const rhs = star(inst, phi_object(inst, x), phi_op(inst, x, f));
    return inst.reversing().equal(lhs, rhs);
  }

  // A product of d simples divides Delta(x) Delta(phi(x)) ... Delta(phi^(d-1)(x)).
  template <GarsideInstance I>
  [[nodiscard]] bool lcm_bound_check(I const&                       inst,
                                     typename I::object_type const& x,
                                     typename I::word_type const&   a,
                                     std::size_t                    d) {
    typename I::word_type bound;
    auto                  here = x;
    for (std::size_t i = 0; i < d; ++i) {
      auto const dx = inst.delta(here);
      bound.insert(bound.end(), dx.begin(), dx.end());
      here = detail::act_or_throw(inst, here, dx, "lcm_bound_check");
    }
    return inst.reversing().divides(a, bound);
  }

}  // namespace ldgarside

#endif  // LDGARSIDE_GARSIDE_HPP_
