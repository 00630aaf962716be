#ifndef LDGARSIDE_BRAID_HPP_
#define LDGARSIDE_BRAID_HPP_

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mld.hpp"
#include "reversing.hpp"
#include "term.hpp"
#include "word.hpp"

namespace ldgarside {

  // The complement of the positive braid monoid:
  //   s_i s_j = s_j s_i          for |i - j| >= 2,
  //   s_i s_j s_i = s_j s_i s_j  for |i - j| = 1.
  struct BraidComplement {
    using atom_type = Strand;
    InlineWord<Strand, 2> operator()(Strand i, Strand j) const;
  };

  using BraidReversing = Reversing<BraidComplement>;

  // Raises every index by k.
  [[nodiscard]] BraidWord shift(BraidWord const& w, Strand k = 1);

  // D_(1^i) -> s_(i+1); every other generator is erased.
  [[nodiscard]] BraidWord pi(LdWord const& w);

  // The Garside element of B_n^+, obtained as the image of Delta of the right
  // comb of right height n. Delta_0 and Delta_1 are empty.
  [[nodiscard]] BraidWord delta_n(std::size_t n);

  // w left-divides Delta_n (and only uses s_1, ..., s_(n-1)).
  [[nodiscard]] bool is_simple_braid(BraidReversing const& rev,
                                     BraidWord const&      w,
                                     std::size_t           n);

  // Independent criterion: w is a positive braid on n strands in which no two
  // strands cross twice.
  [[nodiscard]] bool crosses_at_most_once(BraidWord const& w, std::size_t n);

  // The permutation of {0, ..., n-1} induced by w: entry p is the final
  // position of the strand starting at p.
  [[nodiscard]] std::vector<std::size_t> braid_permutation(BraidWord const& w,
                                                           std::size_t n);

  // pi(C(D_a, D_b)) = C(pi(D_a), pi(D_b)) in B^+, where the right-hand side
  // is the braid complement of the images (empty if one of them is trivial).
  [[nodiscard]] bool check_proj_compat(LdReversing const&    ld,
                                       BraidReversing const& braid,
                                       Address const&        a,
                                       Address const&        b);

  // B_n^+ acting on the single object n.
  [[nodiscard]] std::optional<std::size_t> act_nat(std::size_t      n,
                                                   BraidWord const& w);

  // s_i exchanges the entries i and i+1 (1-based).
  template <typename T>
  [[nodiscard]] std::optional<std::vector<T>> act_seq(std::vector<T>   s,
                                                      BraidWord const& w) {
    for (Strand i : w) {
      if (i == 0 || i >= s.size()) {
        return std::nullopt;
      }
      std::swap(s[i - 1], s[i]);
    }
    return s;
  }

  // The image of a morphism t -> t.a of the LD category: RH(t) -> RH(t) in
  // the braid category.
  struct ProjectedMorphism {
    std::size_t source;
    BraidWord   word;
    std::size_t target;
  };

  // Throws std::invalid_argument if a does not act on t.
  [[nodiscard]] ProjectedMorphism project_term_morphism(Term const&   t,
                                                        LdWord const& a);

  ////////////////////////////////////////////////////////////////////////
  // LD-systems
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  concept LdSystem = requires(S const& s, typename S::element_type const& x) {
    { s.op(x, x) } -> std::convertible_to<typename S::element_type>;
  };

  // The trivial LD-system x op y = y on positive integers; braids then act on
  // sequences by permuting entries.
  struct RightProjection {
    using element_type = std::uint64_t;
    element_type op(element_type, element_type y) const {
      return y;
    }
  };

  // The Laver table A_n on {1, ..., 2^n}: p op 1 = p + 1 mod 2^n and
  // p op (q op 1) = (p op q) op (p + 1).
  class LaverTable {
   public:
    using element_type = std::uint32_t;

    // Throws std::invalid_argument unless 0 <= n <= 12.
    explicit LaverTable(unsigned n);

    [[nodiscard]] element_type size() const noexcept {
      return size_;
    }
    [[nodiscard]] element_type op(element_type p, element_type q) const;
    [[nodiscard]] std::vector<element_type> carrier() const;

   private:
    element_type              size_;
    std::vector<element_type> table_;  // row-major, 0-based rows and columns
  };

  // The dihedral quandle x op y = 2x - y mod n.
  class DihedralQuandle {
   public:
    using element_type = std::uint32_t;

    // Throws std::invalid_argument if n == 0.
    explicit DihedralQuandle(element_type n);

    [[nodiscard]] element_type op(element_type x, element_type y) const;
    [[nodiscard]] std::vector<element_type> carrier() const;

   private:
    element_type n_;
  };

  // Braid group elements as freely reduced words over s_i^(+-1) (a letter is
  // a nonzero integer, negative for an inverse), with
  //   x op y = x sh(y) s_1 sh(x)^-1.
  // Only free reduction is performed: two words may denote the same braid
  // without being equal here, so this system is used structurally only.
  struct FreeBraidSystem {
    using element_type = std::vector<std::int32_t>;
    element_type op(element_type const& x, element_type const& y) const;
  };

  // s_i maps (..., x_i, x_(i+1), ...) to (..., x_i op x_(i+1), x_i, ...).
  template <LdSystem S>
  [[nodiscard]] std::optional<std::vector<typename S::element_type>> act_ld(
      S const&                              s,
      std::vector<typename S::element_type> seq,
      BraidWord const&                      w) {
    for (Strand i : w) {
      if (i == 0 || i >= seq.size()) {
        return std::nullopt;
      }
      auto x       = seq[i - 1];
      seq[i - 1]   = s.op(x, seq[i]);
      seq[i]       = std::move(x);
    }
    return seq;
  }

  template <LdSystem S>
  using Assignment = std::function<typename S::element_type(Variable)>;

  template <LdSystem S>
  [[nodiscard]] typename S::element_type eval_term(S const&             s,
                                                   Assignment<S> const& x,
                                                   Term const&          t) {
    if (t.is_var()) {
      return x(t.index());
    }
    return s.op(eval_term(s, x, t.left()), eval_term(s, x, t.right()));
  }

  // Evaluations of the subterms at 0, 10, ..., 1^(n-1)0, where n = RH(t).
  template <LdSystem S>
  [[nodiscard]] std::vector<typename S::element_type> project_pi_s(
      S const&             s,
      Assignment<S> const& x,
      Term const&          t) {
    std::vector<typename S::element_type> out;
    Term                                  cur = t;
    while (!cur.is_var()) {
      out.push_back(eval_term(s, x, cur.left()));
      cur = cur.right();
    }
    return out;
  }

  // Exhaustive check of x op (y op z) = (x op y) op (x op z) over a finite
  // carrier. Returns the first failing triple, if any.
  template <LdSystem S>
  auto ld_law_counterexample(
      S const&                                     s,
      std::vector<typename S::element_type> const& carrier)
      -> std::optional<std::array<typename S::element_type, 3>> {
    for (auto const& x : carrier) {
      for (auto const& y : carrier) {
        auto const xy = s.op(x, y);
        for (auto const& z : carrier) {
          if (s.op(x, s.op(y, z)) != s.op(xy, s.op(x, z))) {
            return std::array<typename S::element_type, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace ldgarside

#endif  // LDGARSIDE_BRAID_HPP_
