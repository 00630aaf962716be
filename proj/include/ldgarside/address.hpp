#ifndef LDGARSIDE_ADDRESS_HPP_
#define LDGARSIDE_ADDRESS_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ldgarside {

  // A binary address locating a subterm: 0 forks left, 1 forks right. The
  // empty address is the root.
  //
  // Addresses are packed bit strings of at most max_length bits, first bit in
  // the most significant position, so that they are cheap to copy inside the
  // reversing loop. A term of size n has depth at most n and so does phi(t),
  // which keeps every address met at desk scale far below the limit.
  //
  // The built-in ordering is lexicographic with prefixes first, i.e. the
  // preorder of the infinite binary tree. In that ordering a < b holds exactly
  // when a > b holds for the linear order with a > a0b > a1c used by the
  // coordinates of simple elements.
  class Address {
   public:
    static constexpr std::size_t max_length = 256;

    Address() = default;

    // Throws std::invalid_argument if bits contains anything but '0'/'1', and
    // std::length_error beyond max_length bits.
    explicit Address(std::string_view bits);

    static Address ones(std::size_t n);

    [[nodiscard]] std::size_t length() const noexcept {
      return len_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return len_ == 0;
    }
    [[nodiscard]] int operator[](std::size_t i) const noexcept {
      return static_cast<int>((words_[i >> 6] >> (63 - (i & 63))) & 1U);
    }
    // The address as a string of '0' and '1'.
    [[nodiscard]] std::string bits() const;

    [[nodiscard]] Address child(int bit) const {
      Address a(*this);
      a.push_back(bit);
      return a;
    }

    // Concatenation: this address followed by other.
    [[nodiscard]] Address operator+(Address const& other) const;

    [[nodiscard]] Address prefix(std::size_t n) const noexcept {
      Address a(*this);
      if (n < len_) {
        a.len_ = static_cast<std::uint16_t>(n);
        a.clear_tail();
      }
      return a;
    }

    // The bits from position n on.
    [[nodiscard]] Address suffix_from(std::size_t n) const noexcept;

    // Length of the longest common prefix.
    [[nodiscard]] std::size_t common_prefix_length(Address const& other) const noexcept {
      std::size_t const n = len_ < other.len_ ? len_ : other.len_;
      for (std::size_t k = 0; k * 64 < n; ++k) {
        if (auto const x = words_[k] ^ other.words_[k]; x != 0) {
          std::size_t const i = k * 64 + static_cast<std::size_t>(std::countl_zero(x));
          return i < n ? i : n;
        }
      }
      return n;
    }

    // Prefix order, reflexive.
    [[nodiscard]] bool is_prefix_of(Address const& other) const noexcept {
      return len_ <= other.len_ && common_prefix_length(other) == len_;
    }

    [[nodiscard]] bool is_one_power() const noexcept {
      std::size_t n = 0;
      for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n == len_;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
      std::size_t h = len_;
      for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

    friend bool operator==(Address const&, Address const&) = default;
    // Unused bits are zero, so comparing the packed words and then the
    // lengths gives the prefix-first lexicographic order.
    friend std::strong_ordering operator<=>(Address const& a, Address const& b) noexcept {
      if (auto c = a.words_ <=> b.words_; c != 0) {
        return c;
      }
      return a.len_ <=> b.len_;
    }

   private:
    void push_back(int bit);
    void clear_tail() noexcept;

    std::array<std::uint64_t, max_length / 64> words_{};
    std::uint16_t                               len_ = 0;
  };

  // Neither address is a prefix of the other.
  [[nodiscard]] inline bool parallel(Address const& a, Address const& b) {
    return !a.is_prefix_of(b) && !b.is_prefix_of(a);
  }

  // The order a > a0b > a1c, i.e. strict preorder precedence.
  [[nodiscard]] inline bool coordinate_greater(Address const& a,
                                               Address const& b) {
    return a < b;
  }

  std::ostream& operator<<(std::ostream& os, Address const& a);

}  // namespace ldgarside

template <>
struct std::hash<ldgarside::Address> {
  std::size_t operator()(ldgarside::Address const& a) const noexcept {
    return a.hash();
  }
};

#endif  // LDGARSIDE_ADDRESS_HPP_
