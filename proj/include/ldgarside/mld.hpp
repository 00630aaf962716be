#ifndef LDGARSIDE_MLD_HPP_
#define LDGARSIDE_MLD_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "address.hpp"
#include "reversing.hpp"
#include "term.hpp"
#include "word.hpp"

namespace ldgarside {

  // The complement of the self-distributivity monoid M_LD on the generators
  // D_a. With b ranging over arbitrary addresses:
  //   a, b parallel:   D_a   . D_b             = D_b   . D_a
  //   nested case 1:   D_a0b . D_a             = D_a   . D_a00b D_a10b
  //   nested case 2:   D_a10b. D_a             = D_a   . D_a01b
  //   nested case 3:   D_a11b. D_a             = D_a   . D_a11b
  //   critical case:   D_a   . D_a1 D_a        = D_a1  . D_a D_a1 D_a0
  struct LdComplement {
    using atom_type = Address;
    InlineWord<Address, 3> operator()(Address const& a, Address const& b) const;
  };

  using LdReversing = Reversing<LdComplement>;

  // Prepends g to every address of w.
  [[nodiscard]] LdWord shift(Address const& g, LdWord const& w);

  // delta_x = 1, delta_(t0*t1) = D_ε sh0(delta_t0) sh1(delta_t1).
  [[nodiscard]] LdWord delta_small(Term const& t);

  // Delta_x = 1, Delta_(t0*t1) = sh0(Delta_t0) sh1(Delta_t1) delta_phi(t1).
  // The expansion of t by Delta_t is phi(t).
  [[nodiscard]] LdWord delta_big(Term const& t);

  // |Delta_t|, computed without building the word; saturates at the maximum
  // of std::uint64_t. Delta_t grows exponentially with the size of t.
  [[nodiscard]] std::uint64_t delta_length(Term const& t);

  // Delta_t, counted against the reversal budget: one step per letter.
  // Throws BudgetExhausted when |Delta_t| exceeds it.
  [[nodiscard]] LdWord delta_within(LdReversing const& rev, Term const& t);

  // Generators acting on t, in atom order.
  [[nodiscard]] inline std::vector<Address> enabled_atoms(Term const& t) {
    return redex_addresses(t);
  }

  // Left-gcd of two words that both act on t.
  [[nodiscard]] LdWord gcd_at(LdReversing const& rev,
                              Term const&        t,
                              LdWord const&      u,
                              LdWord const&      v);

  // phi_t(a), defined by Delta_t phi_t(a) = a Delta_(t.a). Throws
  // std::invalid_argument if a does not act on t.
  [[nodiscard]] LdWord phi_t(LdReversing const& rev,
                             Term const&        t,
                             LdWord const&      a);

  // A left-divisor of Delta_source, with its complement in Delta_source.
  struct SimpleDivisor {
    LdWord word;
    LdWord star;    // word . star = Delta_source
    Term   target;  // source . word
  };

  // All left-divisors of Delta_t up to equality in M_LD, breadth first from
  // the empty word; each class is represented by the first word reached.
  [[nodiscard]] std::vector<SimpleDivisor> simple_divisors(
      LdReversing const& rev,
      Term const&        t);

  // Exponents e_a of the expression of a simple element as the product of
  // the blocks D_a^(e_a), taken over addresses in decreasing order for the
  // ordering in which a > a0b > a1c. A std::map iterates in exactly that
  // order, since a prefix sorts first and 0 sorts before 1.
  using Coordinates = std::map<Address, unsigned>;

  // The block D_a^(e) = D_a1^(e-1) ... D_a1 D_a, deepest letter first. With
  // the letters in the other order the products above are neither
  // exhaustive nor unique: D_1 D_ε, for instance, is not reached.
  [[nodiscard]] LdWord power_block(Address const& a, unsigned e);

  // Concatenates the blocks in the order of decreasing addresses.
  [[nodiscard]] LdWord from_coordinates(Coordinates const& c);

  // Addresses at which a letter of a word representing a divisor of
  // Delta_witness may act.
  [[nodiscard]] std::vector<Address> relevant_addresses(
      std::vector<SimpleDivisor> const& divisors);

  // Coordinates of a simple element a, given a term witness with
  // a | Delta_witness: addresses are visited in decreasing order, and at each
  // one the longest block dividing what is left is stripped. Throws
  // std::invalid_argument if a is not such a divisor, and std::logic_error if
  // stripping leaves a remainder.
  [[nodiscard]] Coordinates coordinates(LdReversing const& rev,
                                        LdWord const&      a,
                                        Term const&        witness);

  // Same, with the witness's divisors already enumerated.
  [[nodiscard]] Coordinates coordinates(
      LdReversing const&                rev,
      LdWord const&                     a,
      std::vector<Address> const&       relevant);

  // (t.a defined and a | Delta_t') implies a | Delta_t.
  [[nodiscard]] bool coherence_check(LdReversing const& rev,
                                     Term const&        t,
                                     Term const&        t2,
                                     LdWord const&      a);

}  // namespace ldgarside

#endif  // LDGARSIDE_MLD_HPP_
