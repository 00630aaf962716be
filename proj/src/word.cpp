#include "ldgarside/word.hpp"

#include <charconv>

namespace ldgarside {

  Address AtomTraits<Address>::parse(std::string_view token) {
    if (token.substr(0, 2) != "D:") {
      throw ParseError("expected an LD generator \"D:<bits>\", got \""
                       + std::string(token) + "\"");
    }
    auto bits = token.substr(2);
    if (bits == "ε") {
      return Address();
    }
    try {
      return Address(bits);
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

  Strand AtomTraits<Strand>::parse(std::string_view token) {
    if (token.size() < 2 || token[0] != 's') {
      throw ParseError("expected a braid generator \"s<i>\", got \""
                       + std::string(token) + "\"");
    }
    Strand i   = 0;
    auto   end = token.data() + token.size();
    auto [p, ec] = std::from_chars(token.data() + 1, end, i);
    if (ec != std::errc() || p != end || i == 0) {
      throw ParseError("invalid braid generator \"" + std::string(token)
                       + "\"");
    }
    return i;
  }

}  // namespace ldgarside
