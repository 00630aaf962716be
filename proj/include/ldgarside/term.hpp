#ifndef LDGARSIDE_TERM_HPP_
#define LDGARSIDE_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "address.hpp"

namespace ldgarside {

  using Variable = std::uint32_t;

  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A finite binary tree whose leaves are variables x1, x2, ...
  //
  // Terms are immutable and share structure; copying is a reference count
  // increment. Equality is structural.
  class Term {
   public:
    // Throws std::invalid_argument if index is 0.
    static Term var(Variable index);
    static Term op(Term const& left, Term const& right);

    [[nodiscard]] bool is_var() const noexcept;
    // Index of a leaf; 0 for an inner node.
    [[nodiscard]] Variable index() const noexcept;
    // Precondition: !is_var().
    [[nodiscard]] Term left() const;
    [[nodiscard]] Term right() const;

    // Number of inner nodes; 0 for a variable.
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] std::size_t hash() const noexcept;
    // Index of the rightmost variable.
    [[nodiscard]] Variable rightmost_var() const noexcept;

    // Outer parentheses omitted, e.g. "x1*(x2*x3)".
    [[nodiscard]] std::string to_string() const;

    // Grammar: term := var | "(" term "*" term ")", var := "x" [1-9][0-9]*;
    // a bare "x" reads as x1 and the outermost parentheses may be dropped.
    static Term parse(std::string_view text);

    friend bool operator==(Term const& a, Term const& b);

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    void write(std::string& out, bool outer) const;

    std::shared_ptr<Node const> node_;
  };

  std::ostream& operator<<(std::ostream& os, Term const& t);

  inline Term operator*(Term const& a, Term const& b) {
    return Term::op(a, b);
  }

  // A word over addresses, i.e. a sequence of generators D_a.
  using LdWord = std::vector<Address>;

  [[nodiscard]] std::optional<Term> subterm(Term const& t, Address const& a);

  // Replaces the subterm at a by s; nullopt if a is not an address of t.
  [[nodiscard]] std::optional<Term> replace_subterm(Term const& t,
                                                    Address const& a,
                                                    Term const& s);

  // Expands t0*(t1*t2) at a into (t0*t1)*(t0*t2).
  [[nodiscard]] std::optional<Term> apply_ld(Term const& t, Address const& a);

  // Left-to-right action of a word of D_a's; nullopt as soon as a step is
  // undefined.
  [[nodiscard]] std::optional<Term> act(Term const& t,
                                        std::span<Address const> w);

  // Addresses a such that t has a subterm at a11, i.e. where LD (or
  // associativity) can be applied. Sorted by length, then lexicographically.
  [[nodiscard]] std::vector<Address> redex_addresses(Term const& t);

  // t ⊙ x_i = t*x_i and t ⊙ (u1*u2) = (t ⊙ u1)*(t ⊙ u2).
  [[nodiscard]] Term dist(Term const& t, Term const& u);

  // The fundamental expansion: phi(x_i) = x_i, phi(t0*t1) = phi(t0) ⊙ phi(t1).
  [[nodiscard]] Term phi(Term const& t);

  // Length of the rightmost branch.
  [[nodiscard]] std::size_t right_height(Term const& t);

  // Rightmost variables of the subterms at 0, 10, ..., 1^(n-1)0 where n is the
  // right height. Throws std::domain_error if t is a variable.
  [[nodiscard]] std::vector<Variable> pi_hat(Term const& t);

  // Left-to-right sequence of leaf indices.
  [[nodiscard]] std::vector<Variable> leaves(Term const& t);

  // Replaces t1*(t2*t3) at a by (t1*t2)*t3.
  [[nodiscard]] std::optional<Term> apply_assoc(Term const& t,
                                                Address const& a);

  // The fully left-bracketed term with the same leaves.
  [[nodiscard]] Term left_comb(Term const& t);

  // x*(x*(...*x)) with n inner nodes.
  [[nodiscard]] Term right_comb(std::size_t n, Variable v = 1);

  // All terms with exactly n inner nodes, every leaf labelled v, in a fixed
  // deterministic order.
  [[nodiscard]] std::vector<Term> terms_of_size(std::size_t n, Variable v = 1);

  // All terms with at most n inner nodes, by increasing size.
  [[nodiscard]] std::vector<Term> terms_up_to_size(std::size_t n,
                                                   Variable v = 1);

  // Relabels leaves left to right with first, first+1, ...
  [[nodiscard]] Term number_leaves(Term const& t, Variable first = 1);

}  // namespace ldgarside

template <>
struct std::hash<ldgarside::Term> {
  std::size_t operator()(ldgarside::Term const& t) const noexcept {
    return t.hash();
  }
};

#endif  // LDGARSIDE_TERM_HPP_
