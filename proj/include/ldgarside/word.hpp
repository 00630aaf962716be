#ifndef LDGARSIDE_WORD_HPP_
#define LDGARSIDE_WORD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "address.hpp"
#include "term.hpp"

namespace ldgarside {

  // Braid generator index i >= 1, standing for sigma_i.
  using Strand    = std::uint32_t;
  using BraidWord = std::vector<Strand>;

  // Serialization of generators: "D:<bits>" for D_a (so "D:" is D_ε) and
  // "s<i>" for sigma_i. Words are whitespace-separated lists of atoms.
  template <typename Atom>
  struct AtomTraits;

  template <>
  struct AtomTraits<Address> {
    static std::string name(Address const& a) {
      return "D:" + a.bits();
    }
    // Throws ParseError.
    static Address parse(std::string_view token);
  };

  template <>
  struct AtomTraits<Strand> {
    static std::string name(Strand i) {
      return "s" + std::to_string(i);
    }
    static Strand parse(std::string_view token);
  };

  // Length-then-lexicographic order on serialized names. Used wherever atoms
  // have to be visited in a canonical order.
  template <typename Atom>
  bool atom_order(Atom const& a, Atom const& b) {
    auto const x = AtomTraits<Atom>::name(a);
    auto const y = AtomTraits<Atom>::name(b);
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  }

  template <typename Atom>
  std::string format_word(std::vector<Atom> const& w) {
    if (w.empty()) {
      return "ε";
    }
    std::string out;
    for (auto const& a : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += AtomTraits<Atom>::name(a);
    }
    return out;
  }

  // Both "" and "ε" (or "1") denote the empty word.
  template <typename Atom>
  std::vector<Atom> parse_word(std::string_view text) {
    std::vector<Atom> w;
    std::size_t       i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n'
                                 || text[i] == ',')) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t'
             && text[j] != '\n' && text[j] != ',') {
        ++j;
      }
      if (j > i) {
        auto token = text.substr(i, j - i);
        if (token != "ε" && token != "1") {
          w.push_back(AtomTraits<Atom>::parse(token));
        }
      }
      i = j;
    }
    return w;
  }

  template <typename Atom>
  std::vector<Atom> concat(std::vector<Atom> a, std::vector<Atom> const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

}  // namespace ldgarside

#endif  // LDGARSIDE_WORD_HPP_
