#ifndef LDGARSIDE_REVERSING_HPP_
#define LDGARSIDE_REVERSING_HPP_

#include <algorithm>
#include <array>
#include <initializer_list>
#include <ranges>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace ldgarside {

  // A complement on a set of atoms: c(a, b) is the word C(a, b) such that the
  // defining relations are a C(a, b) = b C(b, a), with C(a, a) empty. The
  // result may be any range of atoms, so that complements with short values
  // need not allocate.
  template <typename C>
  concept Complement = requires(C const& c, typename C::atom_type const& a) {
    requires std::ranges::forward_range<decltype(c(a, a))>;
    requires std::convertible_to<std::ranges::range_value_t<decltype(c(a, a))>,
                                 typename C::atom_type>;
  };

  // A word of at most N atoms stored inline.
  template <typename Atom, std::size_t N>
  class InlineWord {
   public:
    InlineWord() = default;
    InlineWord(std::initializer_list<Atom> atoms) {
      for (auto const& a : atoms) {
        push_back(a);
      }
    }
    void push_back(Atom a) {
      if (size_ == N) {
        throw std::length_error("InlineWord capacity exceeded");
      }
      atoms_[size_++] = std::move(a);
    }
    [[nodiscard]] Atom const* begin() const noexcept {
      return atoms_.data();
    }
    [[nodiscard]] Atom const* end() const noexcept {
      return atoms_.data() + size_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return size_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return size_ == 0;
    }
    [[nodiscard]] Atom const& operator[](std::size_t i) const {
      return atoms_[i];
    }
    operator std::vector<Atom>() const {
      return std::vector<Atom>(begin(), end());
    }
    friend bool operator==(InlineWord const& x, std::vector<Atom> const& y) {
      return std::equal(x.begin(), x.end(), y.begin(), y.end());
    }

   private:
    std::array<Atom, N> atoms_{};
    std::size_t         size_ = 0;
  };

  // Upper bound on the number of complement applications of one reversal.
  class ReversalBudget {
   public:
    static constexpr std::size_t default_steps = 1'000'000;

    ReversalBudget() = default;
    explicit ReversalBudget(std::size_t max_steps) : max_steps_(max_steps) {
      if (max_steps == 0) {
        throw std::invalid_argument("reversal budget must be positive");
      }
    }
    [[nodiscard]] std::size_t max_steps() const noexcept {
      return max_steps_;
    }

   private:
    std::size_t max_steps_ = default_steps;
  };

  // Raised when reversing did not terminate within its budget. This is never
  // converted into a negative answer.
  class BudgetExhausted : public std::runtime_error {
   public:
    explicit BudgetExhausted(std::size_t steps)
        : std::runtime_error("subword reversing exceeded its budget of "
                             + std::to_string(steps) + " steps"),
          steps_(steps) {}
    [[nodiscard]] std::size_t steps() const noexcept {
      return steps_;
    }

   private:
    std::size_t steps_;
  };

  // Right reversing for a monoid presented by a complement.
  //
  // reverse(u, v) transforms u^-1 v into a word of the form p q^-1 by
  // repeatedly replacing a^-1 b with C(a, b) C(b, a)^-1, and returns
  // (p, q) = (Ĉ(u, v), Ĉ(v, u)), so that u Ĉ(u, v) = v Ĉ(v, u). When the
  // complement satisfies the cube condition the result is the right-lcm
  // computation, and u left-divides v iff Ĉ(v, u) is empty.
  template <Complement C>
  class Reversing {
   public:
    using atom_type = typename C::atom_type;
    using word_type = std::vector<atom_type>;

    struct Result {
      word_type right;  // Ĉ(u, v)
      word_type left;   // Ĉ(v, u)
    };

    explicit Reversing(C complement = C{}, ReversalBudget budget = {})
        : complement_(std::move(complement)), budget_(budget) {}

    [[nodiscard]] C const& complement() const noexcept {
      return complement_;
    }
    // C(a, b) as a word.
    [[nodiscard]] word_type complement_word(atom_type const& a,
                                            atom_type const& b) const {
      auto const c = complement_(a, b);
      return word_type(std::ranges::begin(c), std::ranges::end(c));
    }
    [[nodiscard]] ReversalBudget budget() const noexcept {
      return budget_;
    }

    // Throws BudgetExhausted.
    [[nodiscard]] Result reverse(word_type const& u, word_type const& v) const {
      struct Letter {
        atom_type atom;
        bool      negative;
      };
      // Letters still to be read; the back is the next one.
      std::vector<Letter> pending;
      pending.reserve(u.size() + v.size());
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        pending.push_back({*it, false});
      }
      for (auto const& a : u) {
        pending.push_back({a, true});
      }
      word_type   positive;
      word_type   negative;
      std::size_t steps = 0;
      while (!pending.empty()) {
        Letter x = std::move(pending.back());
        pending.pop_back();
        if (x.negative) {
          negative.push_back(std::move(x.atom));
        } else if (negative.empty()) {
          positive.push_back(std::move(x.atom));
        } else {
          if (++steps > budget_.max_steps()) {
            throw BudgetExhausted(budget_.max_steps());
          }
          atom_type a = std::move(negative.back());
          negative.pop_back();
          // a^-1 b  ->  C(a, b) C(b, a)^-1
          auto const cab = complement_(a, x.atom);
          auto const cba = complement_(x.atom, a);
          for (auto const& d : cba) {
            pending.push_back({d, true});
          }
          auto const n = pending.size();
          for (auto const& d : cab) {
            pending.push_back({d, false});
          }
          std::reverse(pending.begin() + static_cast<std::ptrdiff_t>(n), pending.end());
        }
      }
      std::reverse(negative.begin(), negative.end());
      return {std::move(positive), std::move(negative)};
    }

    // u left-divides v.
    [[nodiscard]] bool divides(word_type const& u, word_type const& v) const {
      return reverse(u, v).left.empty();
    }

    // The w with u w = v, or nullopt if u does not left-divide v.
    [[nodiscard]] std::optional<word_type> quotient(word_type const& u,
                                                    word_type const& v) const {
      auto r = reverse(u, v);
      if (!r.left.empty()) {
        return std::nullopt;
      }
      return std::move(r.right);
    }

    [[nodiscard]] word_type lcm(word_type const& u, word_type const& v) const {
      return concat(u, reverse(u, v).right);
    }

    [[nodiscard]] bool equal(word_type const& u, word_type const& v) const {
      if (u == v) {
        return true;
      }
      auto r = reverse(u, v);
      return r.left.empty() && r.right.empty();
    }

    // Left-gcd by iterated stripping. candidates(g) must return every atom
    // that may left-divide the remainders after the common prefix g has been
    // stripped; atoms are tried in the order returned.
    template <typename Candidates>
      requires std::invocable<Candidates const&, word_type const&>
    [[nodiscard]] word_type gcd(word_type         u,
                                word_type         v,
                                Candidates const& candidates) const {
      word_type g;
      while (!u.empty() && !v.empty()) {
        bool found = false;
        for (auto const& a : candidates(g)) {
          word_type const atom{a};
          auto            qu = quotient(atom, u);
          if (!qu) {
            continue;
          }
          auto qv = quotient(atom, v);
          if (!qv) {
            continue;
          }
          g.push_back(a);
          u     = std::move(*qu);
          v     = std::move(*qv);
          found = true;
          break;
        }
        if (!found) {
          break;
        }
      }
      return g;
    }

    // Left-gcd with a fixed candidate set.
    [[nodiscard]] word_type gcd(word_type const&              u,
                                word_type const&              v,
                                std::vector<atom_type> const& candidates) const {
      return gcd(u, v, [&candidates](word_type const&) -> auto const& {
        return candidates;
      });
    }

    // The cube condition on three atoms:
    // Ĉ(Ĉ(Ĉ(a,b), Ĉ(a,c)), Ĉ(Ĉ(b,a), Ĉ(b,c))) is empty.
    [[nodiscard]] bool cube_check(atom_type const& a,
                                  atom_type const& b,
                                  atom_type const& c) const {
      word_type const ab = complement_word(a, b);
      word_type const ac = complement_word(a, c);
      word_type const ba = complement_word(b, a);
      word_type const bc = complement_word(b, c);
      auto const      x  = reverse(ab, ac).right;
      auto const      y  = reverse(ba, bc).right;
      return reverse(x, y).right.empty();
    }

   private:
    C              complement_;
    ReversalBudget budget_;
  };

  // A complement given by an explicit finite table, for presentations supplied
  // at run time. Pairs absent from the table are rejected.
  template <typename Atom>
  class TableComplement {
   public:
    using atom_type = Atom;
    using word_type = std::vector<Atom>;

    // Records the relation a C(a,b) = b C(b,a).
    void add(Atom const& a, Atom const& b, word_type cab, word_type cba) {
      if (a == b) {
        throw std::invalid_argument("complement of an atom with itself is "
                                    "always empty");
      }
      table_[{a, b}] = std::move(cab);
      table_[{b, a}] = std::move(cba);
    }

    word_type const& operator()(Atom const& a, Atom const& b) const {
      static word_type const empty;
      if (a == b) {
        return empty;
      }
      auto it = table_.find({a, b});
      if (it == table_.end()) {
        throw std::out_of_range("complement undefined for "
                                + AtomTraits<Atom>::name(a) + ", "
                                + AtomTraits<Atom>::name(b));
      }
      return it->second;
    }

   private:
    std::map<std::pair<Atom, Atom>, word_type> table_;
  };

}  // namespace ldgarside

#endif  // LDGARSIDE_REVERSING_HPP_
