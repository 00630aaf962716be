#include <doctest.h>

#include <random>
#include <vector>

#include "ldgarside/braid.hpp"
#include "oracles.hpp"

using namespace ldgarside;

namespace {

  Term T(char const* s) {
    return Term::parse(s);
  }
  LdWord W(char const* s) {
    return parse_word<Address>(s);
  }
  BraidWord B(char const* s) {
    return parse_word<Strand>(s);
  }
  oracle::Braid O(BraidWord const& w) {
    return {w.begin(), w.end()};
  }

  BraidReversing const braid_rev;
  LdReversing const    ld_rev;

  std::vector<BraidWord> braid_words_up_to(std::size_t n, Strand k) {
    std::vector<BraidWord> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < n) {
        for (Strand s = 1; s <= k; ++s) {
          auto v = out[i];
          v.push_back(s);
          out.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  std::vector<Address> addresses_up_to(std::size_t n) {
    std::vector<Address> out{Address()};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].length() < n) {
        out.push_back(out[i].child(0));
        out.push_back(out[i].child(1));
      }
    }
    return out;
  }

  // The classical half twist: s1 (s2 s1) (s3 s2 s1) ...
  BraidWord half_twist(std::size_t n) {
    BraidWord out;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = k; i >= 1; --i) {
        out.push_back(static_cast<Strand>(i));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("braid complement") {
  CHECK(BraidComplement{}(1, 1).empty());
  CHECK(BraidComplement{}(1, 3) == BraidWord{3});
  CHECK(BraidComplement{}(1, 2) == BraidWord{2, 1});
}

TEST_CASE("Delta_n") {
  // pi(D:1 D: D:0 D:1), the same element as s1 s2 s1.
  CHECK(delta_n(3) == B("s2 s1 s2"));
  CHECK(braid_rev.equal(delta_n(3), B("s1 s2 s1")));
  CHECK(delta_n(1).empty());
  CHECK(delta_n(0).empty());
  CHECK(oracle::braid_equal(O(delta_n(4)), O(concat(shift(delta_n(3)), B("s1 s2 s3")))));
  for (std::size_t n = 2; n <= 7; ++n) {
    auto const d = delta_n(n);
    CHECK(d.size() == n * (n - 1) / 2);
    CHECK(braid_rev.equal(d, half_twist(n)));
    // The half twist reverses the strands.
    auto const p = braid_permutation(d, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(p[i] == n - 1 - i);
    }
  }
}

TEST_CASE("projection of LD words") {
  CHECK(pi(W("D: D:1 D:")) == B("s1 s2 s1"));
  CHECK(pi(W("D:0 D:1")) == B("s2"));
  CHECK(pi({}).empty());
  CHECK(pi(W("D:11 D:10 D:111")) == B("s3 s4"));
}

TEST_CASE("simplicity: divisibility, crossings and the permutation oracle agree") {
  for (auto const& w : braid_words_up_to(6, 3)) {
    bool const by_div = is_simple_braid(braid_rev, w, 4);
    CHECK(by_div == crosses_at_most_once(w, 4));
    CHECK(by_div == oracle::is_permutation_braid(O(w), 4));
  }
  CHECK(!is_simple_braid(braid_rev, B("s4"), 4));
}

TEST_CASE("projection compatibility, complement and lcm") {
  CHECK(pi(ld_rev.complement_word(Address("1"), Address())) == B("s1 s2"));
  CHECK(check_proj_compat(ld_rev, braid_rev, Address("1"), Address()));
  CHECK(check_proj_compat(ld_rev, braid_rev, Address("01"), Address("01")));
  auto const as = addresses_up_to(3);
  for (auto const& a : as) {
    for (auto const& b : as) {
      CHECK(check_proj_compat(ld_rev, braid_rev, a, b));
      auto const lhs = pi(ld_rev.lcm({a}, {b}));
      auto const rhs = braid_rev.lcm(pi({a}), pi({b}));
      CHECK(braid_rev.equal(lhs, rhs));
    }
  }
}

TEST_CASE("projection of Delta_t") {
  for (auto const& t : terms_up_to_size(6)) {
    if (right_height(t) >= 1) {
      CHECK(braid_rev.equal(pi(delta_big(t)), delta_n(right_height(t))));
    }
  }
}

TEST_CASE("actions on integers and sequences") {
  CHECK(act_nat(3, B("s1 s2")) == std::optional<std::size_t>(3));
  CHECK(!act_nat(3, B("s3")));
  CHECK(act_seq(std::vector<int>{1, 2, 2}, B("s1")) == std::vector<int>{2, 1, 2});
  CHECK(act_seq(std::vector<int>{1, 2, 2}, {}) == std::vector<int>{1, 2, 2});
  CHECK(!act_seq(std::vector<int>{1, 2}, B("s2")));
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        std::vector<int> const s{a, b, c};
        CHECK(act_seq(s, B("s1 s2 s1")) == act_seq(s, B("s2 s1 s2")));
      }
    }
  }
}

TEST_CASE("LD systems") {
  // A_2, known by hand.
  LaverTable const a2(2);
  std::vector<std::vector<unsigned>> const expected{
      {2, 4, 2, 4}, {3, 4, 3, 4}, {4, 4, 4, 4}, {1, 2, 3, 4}};
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned q = 1; q <= 4; ++q) {
      CHECK(a2.op(p, q) == expected[p - 1][q - 1]);
    }
  }
  // The period of the first row of A_n.
  std::vector<unsigned> const period{1, 1, 2, 4, 4, 8, 8, 8, 8, 16, 16, 16};
  for (unsigned n = 0; n <= 11; ++n) {
    LaverTable const a(n);
    unsigned         per = 1;
    while (a.op(1, per) != a.size()) {
      ++per;
    }
    CHECK(per == period[n]);
  }
  CHECK_THROWS_AS(LaverTable(13), std::invalid_argument);
  CHECK_THROWS_AS((void)a2.op(0, 1), std::out_of_range);

  for (unsigned n = 0; n <= 5; ++n) {
    LaverTable const a(n);
    CHECK(!ld_law_counterexample(a, a.carrier()));
  }
  for (unsigned n = 1; n <= 9; ++n) {
    DihedralQuandle const d(n);
    CHECK(!ld_law_counterexample(d, d.carrier()));
  }
  // Composition of the right projection with a shift is not LD.
  struct Shifted {
    using element_type = unsigned;
    element_type op(element_type x, element_type y) const {
      return (x + y) % 3;
    }
  };
  CHECK(ld_law_counterexample(Shifted{}, {0U, 1U, 2U}));
}

TEST_CASE("actions of braids on sequences from an LD system") {
  // The right projection reduces to permutations.
  std::vector<std::uint64_t> const s{1, 2, 2, 3};
  for (auto const& w : braid_words_up_to(4, 3)) {
    CHECK(act_ld(RightProjection{}, s, w) == act_seq(s, w));
  }
  CHECK(act_ld(RightProjection{}, s, {}) == s);

  // The braid relations hold on every sequence over small LD systems.
  LaverTable const a3(3);
  for (auto x : a3.carrier()) {
    for (auto y : a3.carrier()) {
      for (auto z : a3.carrier()) {
        std::vector<std::uint32_t> const v{x, y, z};
        CHECK(act_ld(a3, v, B("s1 s2 s1")) == act_ld(a3, v, B("s2 s1 s2")));
      }
    }
  }
  DihedralQuandle const d5(5);
  for (auto x : d5.carrier()) {
    for (auto y : d5.carrier()) {
      for (auto z : d5.carrier()) {
        for (auto u : d5.carrier()) {
          std::vector<std::uint32_t> const v{x, y, z, u};
          CHECK(act_ld(d5, v, B("s1 s3")) == act_ld(d5, v, B("s3 s1")));
        }
      }
    }
  }

  // The free braid system: structural use only.
  FreeBraidSystem const fb;
  CHECK(fb.op({}, {}) == FreeBraidSystem::element_type{1});
  CHECK(fb.op({1}, {}) == FreeBraidSystem::element_type{1, 1, -2});
}

TEST_CASE("evaluation and the braid-valued projection") {
  // pi_hat is the projection into the right-projection system.
  Assignment<RightProjection> const index = [](Variable p) { return std::uint64_t{p}; };
  for (auto const& shape : terms_up_to_size(6)) {
    auto const t = number_leaves(shape);
    if (t.is_var()) {
      continue;
    }
    auto const ph = pi_hat(t);
    auto const ps = project_pi_s(RightProjection{}, index, t);
    CHECK(std::vector<std::uint64_t>(ph.begin(), ph.end()) == ps);
  }

  // The projection factors through the action of pi(a).
  LaverTable const            a3(3);
  std::mt19937_64             rng(23);
  Assignment<LaverTable> const value = [](Variable p) {
    return static_cast<std::uint32_t>(1 + (p * 5) % 8);
  };
  for (auto const& shape : terms_up_to_size(5)) {
    auto const t = number_leaves(shape);
    Term       u = t;
    LdWord     a;
    for (int i = 0; i < 3; ++i) {
      auto const atoms = enabled_atoms(u);
      if (atoms.empty()) {
        break;
      }
      a.push_back(atoms[rng() % atoms.size()]);
      u = *apply_ld(u, a.back());
    }
    if (t.is_var()) {
      continue;
    }
    auto const lhs = project_pi_s(a3, value, u);
    auto const rhs = act_ld(a3, project_pi_s(a3, value, t), pi(a));
    REQUIRE(rhs);
    CHECK(lhs == *rhs);

    auto const p = project_term_morphism(t, a);
    CHECK(p.source == right_height(t));
    CHECK(p.target == right_height(t));
    for (auto i : p.word) {
      CHECK(i < right_height(t));
    }
  }
  CHECK(eval_term(a3, value, T("x1*x2")) == a3.op(value(1), value(2)));
  CHECK_THROWS_AS((void)project_term_morphism(T("x*x"), W("D:")), std::invalid_argument);
}
