#include "ldgarside/address.hpp"

#include <ostream>
#include <stdexcept>

namespace ldgarside {

  namespace {
    [[noreturn]] void too_long(std::size_t n) {
      throw std::length_error("address of " + std::to_string(n) + " bits exceeds the limit of "
                              + std::to_string(Address::max_length));
    }
  }  // namespace

  Address::Address(std::string_view bits) {
    if (bits.size() > max_length) {
      too_long(bits.size());
    }
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("invalid address \"" + std::string(bits)
                                    + "\": expected a string of 0s and 1s");
      }
      push_back(c - '0');
    }
  }

  Address Address::ones(std::size_t n) {
    if (n > max_length) {
      too_long(n);
    }
    Address a;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(1);
    }
    return a;
  }

  std::string Address::bits() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if ((*this)[i]) {
        s[i] = '1';
      }
    }
    return s;
  }

  void Address::push_back(int bit) {
    if (len_ == max_length) {
      too_long(max_length + 1);
    }
    if (bit) {
      words_[len_ >> 6] |= std::uint64_t{1} << (63 - (len_ & 63));
    }
    ++len_;
  }

  void Address::clear_tail() noexcept {
    std::size_t const k = len_ >> 6;
    std::size_t const r = len_ & 63;
    if (k < words_.size()) {
      words_[k] &= r == 0 ? 0 : ~std::uint64_t{0} << (64 - r);
      for (std::size_t i = k + 1; i < words_.size(); ++i) {
        words_[i] = 0;
      }
    }
  }

  Address Address::operator+(Address const& other) const {
    std::size_t const total = std::size_t{len_} + other.len_;
    if (total > max_length) {
      too_long(total);
    }
    Address           a(*this);
    std::size_t const q = len_ >> 6;
    std::size_t const r = len_ & 63;
    for (std::size_t k = 0; q + k < words_.size(); ++k) {
      auto const v = other.words_[k];
      if (v == 0) {
        continue;
      }
      a.words_[q + k] |= v >> r;
      if (r != 0 && q + k + 1 < words_.size()) {
        a.words_[q + k + 1] |= v << (64 - r);
      }
    }
    a.len_ = static_cast<std::uint16_t>(total);
    return a;
  }

  Address Address::suffix_from(std::size_t n) const noexcept {
    Address a;
    if (n >= len_) {
      return a;
    }
    std::size_t const q = n >> 6;
    std::size_t const r = n & 63;
    for (std::size_t k = 0; q + k < words_.size(); ++k) {
      std::uint64_t v = words_[q + k] << r;
      if (r != 0 && q + k + 1 < words_.size()) {
        v |= words_[q + k + 1] >> (64 - r);
      }
      a.words_[k] = v;
    }
    a.len_ = static_cast<std::uint16_t>(len_ - n);
    return a;
  }

  std::ostream& operator<<(std::ostream& os, Address const& a) {
    return os << (a.empty() ? std::string("ε") : a.bits());
  }

}  // namespace ldgarside
