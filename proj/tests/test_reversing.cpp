#include <doctest.h>

#include <random>
#include <vector>

#include "ldgarside/braid.hpp"
#include "ldgarside/mld.hpp"
#include "ldgarside/reversing.hpp"
#include "oracles.hpp"

using namespace ldgarside;

namespace {

  LdWord W(char const* s) {
    return parse_word<Address>(s);
  }
  BraidWord B(char const* s) {
    return parse_word<Strand>(s);
  }

  oracle::Braid O(BraidWord const& w) {
    return {w.begin(), w.end()};
  }

  // All positive braid words on generators 1..k of length n.
  std::vector<BraidWord> braid_words(std::size_t n, Strand k) {
    std::vector<BraidWord> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BraidWord> next;
      for (auto const& w : out) {
        for (Strand s = 1; s <= k; ++s) {
          auto v = w;
          v.push_back(s);
          next.push_back(std::move(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<BraidWord> braid_words_up_to(std::size_t n, Strand k) {
    std::vector<BraidWord> out;
    for (std::size_t i = 0; i <= n; ++i) {
      auto ws = braid_words(i, k);
      out.insert(out.end(), ws.begin(), ws.end());
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

  BraidReversing const braid_rev;
  LdReversing const    ld_rev;

}  // namespace

TEST_CASE("atom and word serialization") {
  CHECK(W("D: D:1 D:0") == LdWord{Address(), Address("1"), Address("0")});
  CHECK(W("D:ε") == LdWord{Address()});
  CHECK(W("ε").empty());
  CHECK(format_word(W("D: D:01")) == "D: D:01");
  CHECK(format_word(LdWord{}) == "ε");
  CHECK(B("s1 s2 s1") == BraidWord{1, 2, 1});
  CHECK(format_word(B("s3 s1")) == "s3 s1");
  CHECK_THROWS_AS(W("D:2"), ParseError);
  CHECK_THROWS_AS(W("x"), ParseError);
  CHECK_THROWS_AS(B("s0"), ParseError);
  CHECK_THROWS_AS(B("t1"), ParseError);
}

TEST_CASE("reversing examples") {
  auto r = braid_rev.reverse(B("s1"), B("s2"));
  CHECK(r.right == B("s2 s1"));
  CHECK(r.left == B("s1 s2"));

  auto l = ld_rev.reverse(W("D:"), W("D:1"));
  CHECK(l.right == W("D:1 D:"));
  CHECK(l.left == W("D: D:1 D:0"));

  auto e = braid_rev.reverse(B("s1 s3"), {});
  CHECK(e.right.empty());
  CHECK(e.left == B("s1 s3"));
}

TEST_CASE("divisibility, lcm, equality and gcd examples") {
  CHECK(braid_rev.divides(B("s1"), B("s1 s2")));
  CHECK(*braid_rev.quotient(B("s1"), B("s1 s2")) == B("s2"));
  CHECK(braid_rev.divides(B("s1"), B("s2 s1 s2")));
  CHECK(oracle::braid_divides({1}, {2, 1, 2}));
  CHECK(!ld_rev.divides(W("D:0"), W("D:1")));
  CHECK(!ld_rev.quotient(W("D:0"), W("D:1")));

  CHECK(braid_rev.lcm(B("s1"), B("s2")) == B("s1 s2 s1"));
  CHECK(ld_rev.lcm(W("D:"), W("D:1")) == W("D: D:1 D:"));
  CHECK(braid_rev.lcm(B("s1 s2"), B("s1 s2")) == B("s1 s2"));

  CHECK(ld_rev.equal(W("D:1 D: D:0 D:1"), W("D: D:1 D:")));
  CHECK(*oracle::ld_equal(W("D:1 D: D:0 D:1"), W("D: D:1 D:"), 6));
  CHECK(!braid_rev.equal(B("s1 s2"), B("s2 s1")));
  CHECK(!oracle::braid_equal({1, 2}, {2, 1}));

  auto const ld_atoms = std::vector<Address>{Address(), Address("0"), Address("1")};
  CHECK(ld_rev.gcd(W("D:0 D:1"), W("D:"), ld_atoms).empty());
  CHECK(braid_rev.gcd(B("s1 s2"), B("s1 s3"), {1, 2, 3}) == B("s1"));
  CHECK(oracle::braid_gcd({1, 2}, {1, 3}) == oracle::Braid{1});
  CHECK(braid_rev.gcd(B("s2 s1 s2"), B("s2 s1 s2"), {1, 2}).size() == 3);
}

TEST_CASE("braid reversing agrees with the rewriting oracle") {
  auto const ws = braid_words_up_to(4, 3);
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      if (u.size() > 3 && v.size() > 3) {
        continue;
      }
      CHECK(braid_rev.equal(u, v) == oracle::braid_equal(O(u), O(v)));
      CHECK(braid_rev.divides(u, v) == oracle::braid_divides(O(u), O(v)));
    }
  }
}

TEST_CASE("braid gcd agrees with the brute-force common prefix") {
  auto const           ws = braid_words_up_to(3, 3);
  std::vector<Strand> const atoms{1, 2, 3};
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      auto const g = braid_rev.gcd(u, v, atoms);
      CHECK(oracle::braid_equal(O(g), oracle::braid_gcd(O(u), O(v))));
    }
  }
}

TEST_CASE("lcm and gcd laws") {
  auto const                ws = braid_words_up_to(3, 4);
  std::vector<Strand> const atoms{1, 2, 3, 4};
  std::vector<Strand> const reversed{4, 3, 2, 1};
  std::mt19937_64           rng(7);
  for (int k = 0; k < 1500; ++k) {
    auto const& u = ws[rng() % ws.size()];
    auto const& v = ws[rng() % ws.size()];
    auto const  m = braid_rev.lcm(u, v);
    CHECK(braid_rev.divides(u, m));
    CHECK(braid_rev.divides(v, m));
    CHECK(braid_rev.equal(m, braid_rev.lcm(v, u)));
    CHECK(braid_rev.equal(u, u));

    auto const g = braid_rev.gcd(u, v, atoms);
    CHECK(braid_rev.divides(g, u));
    CHECK(braid_rev.divides(g, v));
    // The stripping order does not change the result.
    CHECK(braid_rev.equal(g, braid_rev.gcd(u, v, reversed)));
    for (Strand a : atoms) {
      if (braid_rev.divides({a}, u) && braid_rev.divides({a}, v)) {
        CHECK(braid_rev.divides({a}, g));
      }
    }
  }
}

TEST_CASE("every complement relation holds") {
  for (auto const& a : addresses_up_to(3)) {
    for (auto const& b : addresses_up_to(3)) {
      CHECK(ld_rev.equal(concat(LdWord{a}, ld_rev.complement_word(a, b)),
                         concat(LdWord{b}, ld_rev.complement_word(b, a))));
    }
  }
  for (Strand i = 1; i <= 5; ++i) {
    for (Strand j = 1; j <= 5; ++j) {
      CHECK(braid_rev.equal(concat(BraidWord{i}, braid_rev.complement_word(i, j)),
                            concat(BraidWord{j}, braid_rev.complement_word(j, i))));
    }
  }
}

TEST_CASE("cube condition") {
  CHECK(braid_rev.cube_check(1, 2, 3));
  CHECK(braid_rev.cube_check(2, 2, 2));
  CHECK(ld_rev.cube_check(Address("1"), Address("1"), Address("1")));
  auto const as = addresses_up_to(2);
  for (auto const& a : as) {
    for (auto const& b : as) {
      for (auto const& c : as) {
        CHECK(ld_rev.cube_check(a, b, c));
      }
    }
  }
}

TEST_CASE("budget exhaustion is an outcome, not a wrong answer") {
  LdReversing const tiny(LdComplement{}, ReversalBudget(3));
  auto const        d = delta_big(Term::parse("x*(x*(x*(x*x)))"));
  CHECK_THROWS_AS((void)tiny.reverse(d, W("D:1 D:11")), BudgetExhausted);
  CHECK_THROWS_AS(ReversalBudget(0), std::invalid_argument);
  CHECK(ReversalBudget().max_steps() == 1'000'000);
}

TEST_CASE("table complements") {
  TableComplement<Strand> table;
  table.add(1, 2, {2, 1}, {1, 2});
  table.add(1, 3, {3}, {1});
  table.add(2, 3, {3, 2}, {2, 3});
  Reversing<TableComplement<Strand>> const rev(table);
  CHECK(rev.equal(B("s1 s2 s1"), B("s2 s1 s2")));
  CHECK(rev.cube_check(1, 2, 3));
  CHECK_THROWS_AS(table.add(1, 1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(table(1, 4), std::out_of_range);
  CHECK(table(2, 2).empty());
}
