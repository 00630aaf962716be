#include "ldgarside/braid.hpp"

#include <algorithm>
#include <numeric>

namespace ldgarside {

  InlineWord<Strand, 2> BraidComplement::operator()(Strand i, Strand j) const {
    if (i == j) {
      return {};
    }
    if (i + 1 == j || j + 1 == i) {
      return {j, i};
    }
    return {j};
  }

  BraidWord shift(BraidWord const& w, Strand k) {
    BraidWord out(w);
    for (auto& i : out) {
      i += k;
    }
    return out;
  }

  BraidWord pi(LdWord const& w) {
    BraidWord out;
    for (auto const& a : w) {
      if (a.is_one_power()) {
        out.push_back(static_cast<Strand>(a.length() + 1));
      }
    }
    return out;
  }

  BraidWord delta_n(std::size_t n) {
    if (n <= 1) {
      return {};
    }
    return pi(delta_big(right_comb(n)));
  }

  bool is_simple_braid(BraidReversing const& rev,
                       BraidWord const&      w,
                       std::size_t           n) {
    if (!act_nat(n, w)) {
      return false;
    }
    return rev.divides(w, delta_n(n));
  }

  std::vector<std::size_t> braid_permutation(BraidWord const& w,
                                             std::size_t      n) {
    // at[q] = strand currently at position q
    std::vector<std::size_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (Strand i : w) {
      if (i == 0 || i >= n) {
        throw std::invalid_argument("braid_permutation: s"
                                    + std::to_string(i) + " is not in B_"
                                    + std::to_string(n));
      }
      std::swap(at[i - 1], at[i]);
    }
    std::vector<std::size_t> out(n);
    for (std::size_t q = 0; q < n; ++q) {
      out[at[q]] = q;
    }
    return out;
  }

  bool crosses_at_most_once(BraidWord const& w, std::size_t n) {
    if (!act_nat(n, w)) {
      return false;
    }
    std::vector<std::size_t>       at(n);
    std::vector<std::vector<bool>> crossed(n, std::vector<bool>(n, false));
    std::iota(at.begin(), at.end(), 0);
    for (Strand i : w) {
      auto p = at[i - 1];
      auto q = at[i];
      if (crossed[p][q]) {
        return false;
      }
      crossed[p][q] = crossed[q][p] = true;
      std::swap(at[i - 1], at[i]);
    }
    return true;
  }

  bool check_proj_compat(LdReversing const&    ld,
                         BraidReversing const& braid,
                         Address const&        a,
                         Address const&        b) {
    auto const lhs = pi(ld.complement_word(a, b));
    auto const pa  = pi({a});
    auto const pb  = pi({b});
    BraidWord  rhs;
    if (pa.empty()) {
      rhs = pb;
    } else if (!pb.empty()) {
      rhs = braid.complement_word(pa.front(), pb.front());
    }
    return braid.equal(lhs, rhs);
  }

  std::optional<std::size_t> act_nat(std::size_t n, BraidWord const& w) {
    for (Strand i : w) {
      if (i == 0 || i >= n) {
        return std::nullopt;
      }
    }
    return n;
  }

  ProjectedMorphism project_term_morphism(Term const& t, LdWord const& a) {
    if (!act(t, a)) {
      throw std::invalid_argument("project_term_morphism: "
                                  + format_word(a) + " does not act on "
                                  + t.to_string());
    }
    auto const n = right_height(t);
    return {n, pi(a), n};
  }

  LaverTable::LaverTable(unsigned n) {
    if (n > 12) {
      throw std::invalid_argument("LaverTable: order must be at most 12");
    }
    size_ = element_type{1} << n;
    table_.assign(static_cast<std::size_t>(size_) * size_, 0);
    auto at = [this](element_type p, element_type q) -> element_type& {
      return table_[static_cast<std::size_t>(p - 1) * size_ + (q - 1)];
    };
    // Row 2^n is the identity map; each row p is filled from p op 1 using
    // rows > p, which are already known since p op q > p for p < 2^n.
    for (element_type q = 1; q <= size_; ++q) {
      at(size_, q) = q;
    }
    for (element_type p = size_ - 1; p >= 1; --p) {
      at(p, 1) = p + 1;
      for (element_type q = 1; q < size_; ++q) {
        at(p, q + 1) = at(at(p, q), p + 1);
      }
    }
  }

  LaverTable::element_type LaverTable::op(element_type p,
                                          element_type q) const {
    if (p == 0 || q == 0 || p > size_ || q > size_) {
      throw std::out_of_range("LaverTable: element out of range");
    }
    return table_[static_cast<std::size_t>(p - 1) * size_ + (q - 1)];
  }

  std::vector<LaverTable::element_type> LaverTable::carrier() const {
    std::vector<element_type> out(size_);
    std::iota(out.begin(), out.end(), 1);
    return out;
  }

  DihedralQuandle::DihedralQuandle(element_type n) : n_(n) {
    if (n == 0) {
      throw std::invalid_argument("DihedralQuandle: order must be positive");
    }
  }

  DihedralQuandle::element_type DihedralQuandle::op(element_type x,
                                                    element_type y) const {
    return static_cast<element_type>((2 * std::uint64_t{x % n_} + n_ - y % n_)
                                     % n_);
  }

  std::vector<DihedralQuandle::element_type> DihedralQuandle::carrier() const {
    std::vector<element_type> out(n_);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  namespace {
    using Signed = FreeBraidSystem::element_type;

    void push_reduced(Signed& w, std::int32_t letter) {
      if (!w.empty() && w.back() == -letter) {
        w.pop_back();
      } else {
        w.push_back(letter);
      }
    }
  }  // namespace

  FreeBraidSystem::element_type FreeBraidSystem::op(
      element_type const& x,
      element_type const& y) const {
    Signed out;
    for (auto c : x) {
      push_reduced(out, c);
    }
    for (auto c : y) {
      push_reduced(out, c > 0 ? c + 1 : c - 1);
    }
    push_reduced(out, 1);
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
      push_reduced(out, *it > 0 ? -(*it + 1) : -(*it - 1));
    }
    return out;
  }

}  // namespace ldgarside
