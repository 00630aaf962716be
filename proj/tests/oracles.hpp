// Brute-force reference implementations used by the unit tests. They work on
// plain strings and integers and share no code with the library's complement
// tables or reversing engine.
#ifndef LDGARSIDE_TESTS_ORACLES_HPP_
#define LDGARSIDE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ldgarside/term.hpp"
#include "ldgarside/word.hpp"

namespace oracle {

  // ------------------------------------------------------------ braids
  //
  // Positive braid relations preserve length, so the class of a positive word
  // is finite and can be listed by closing under the relations.

  using Braid = std::vector<unsigned>;

  inline std::set<Braid> braid_class(Braid const& w) {
    std::set<Braid>   seen{w};
    std::deque<Braid> todo{w};
    while (!todo.empty()) {
      Braid const u = todo.front();
      todo.pop_front();
      auto visit = [&](Braid v) {
        if (seen.insert(v).second) {
          todo.push_back(std::move(v));
        }
      };
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        unsigned const a = u[i];
        unsigned const b = u[i + 1];
        if (a > b + 1 || b > a + 1) {
          Braid v = u;
          std::swap(v[i], v[i + 1]);
          visit(v);
        }
        if (i + 2 < u.size() && u[i + 2] == a && (a == b + 1 || b == a + 1)) {
          Braid v = u;
          v[i]     = b;
          v[i + 1] = a;
          v[i + 2] = b;
          visit(v);
        }
      }
    }
    return seen;
  }

  inline bool braid_equal(Braid const& u, Braid const& v) {
    return u.size() == v.size() && braid_class(u).contains(v);
  }

  // u divides v on the left iff some word of the class of v starts with u.
  inline bool braid_divides(Braid const& u, Braid const& v) {
    for (auto const& w : braid_class(v)) {
      if (w.size() >= u.size() && std::equal(u.begin(), u.end(), w.begin())) {
        return true;
      }
    }
    return false;
  }

  // Common left divisors of maximal length, over all rewritings.
  inline Braid braid_gcd(Braid const& u, Braid const& v) {
    Braid best;
    auto  cu = braid_class(u);
    auto  cv = braid_class(v);
    for (auto const& x : cu) {
      for (auto const& y : cv) {
        std::size_t k = 0;
        while (k < x.size() && k < y.size() && x[k] == y[k]) {
          ++k;
        }
        if (k > best.size()) {
          best.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        }
      }
    }
    return best;
  }

  // A positive word is a permutation braid iff its length equals the number
  // of inversions of the permutation it induces (no two strands cross
  // twice).
  inline bool is_permutation_braid(Braid const& w, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = i;
    }
    for (unsigned i : w) {
      if (i == 0 || i >= n) {
        return false;
      }
      std::swap(p[i - 1], p[i]);
    }
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        inv += p[i] > p[j] ? 1 : 0;
      }
    }
    return inv == w.size();
  }

  // Greedy normal form by brute force: the head is the longest permutation
  // braid prefix over all rewritings, then recurse on the remainder.
  inline std::vector<Braid> braid_normal_form(Braid w, std::size_t n) {
    std::vector<Braid> out;
    while (!w.empty()) {
      Braid best_head;
      Braid best_rest;
      for (auto const& x : braid_class(w)) {
        for (std::size_t k = x.size(); k > best_head.size(); --k) {
          Braid head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
          if (is_permutation_braid(head, n)) {
            best_head = std::move(head);
            best_rest.assign(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
            break;
          }
        }
      }
      out.push_back(best_head);
      w = best_rest;
    }
    return out;
  }

  // ------------------------------------------------------------ LD words
  //
  // Words are lists of bit strings. Neighbours apply one LD relation, in
  // either direction, at one position:
  //   D_a D_b = D_b D_a                      for a, b parallel
  //   D_a0c D_a = D_a D_a00c D_a10c
  //   D_a10c D_a = D_a D_a01c
  //   D_a11c D_a = D_a D_a11c
  //   D_a D_a1 D_a = D_a1 D_a D_a1 D_a0

  using LdWord = std::vector<std::string>;

  inline bool starts_with(std::string const& s, std::string const& p) {
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
  }

  inline std::set<LdWord> ld_neighbours(LdWord const& w) {
    std::set<LdWord> out;
    auto             splice = [&](std::size_t i, std::size_t len, LdWord mid) {
      LdWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.end(), mid.begin(), mid.end());
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
      out.insert(std::move(v));
    };
    std::size_t const n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n) {
        auto const& a = w[i];
        auto const& b = w[i + 1];
        if (!starts_with(a, b) && !starts_with(b, a)) {
          splice(i, 2, {b, a});
        }
        if (a.size() > b.size() && starts_with(a, b)) {
          auto const k = b.size();
          if (a[k] == '0') {
            auto const r = a.substr(k + 1);
            splice(i, 2, {b, b + "00" + r, b + "10" + r});
          } else if (a.size() > k + 1 && a[k + 1] == '0') {
            splice(i, 2, {b, b + "01" + a.substr(k + 2)});
          } else if (a.size() > k + 1) {
            splice(i, 2, {b, a});
          }
        }
        if (b.size() > a.size() + 1 && starts_with(b, a)) {
          auto const k = a.size();
          if (b[k] == '1' && b[k + 1] == '1') {
            splice(i, 2, {b, a});
          }
          if (b[k] == '0' && b[k + 1] == '1') {
            splice(i, 2, {a + "10" + b.substr(k + 2), a});
          }
        }
      }
      if (i + 2 < n) {
        auto const& a = w[i];
        auto const& b = w[i + 1];
        auto const& c = w[i + 2];
        if (starts_with(b, a + "00") && c == a + "10" + b.substr(a.size() + 2)) {
          splice(i, 3, {a + "0" + b.substr(a.size() + 2), a});
        }
        if (b == a + "1" && c == a) {
          splice(i, 3, {a + "1", a, a + "1", a + "0"});
        }
      }
      if (i + 3 < n) {
        auto const& a = w[i];
        auto const& b = w[i + 1];
        if (!a.empty() && a.back() == '1' && b == a.substr(0, a.size() - 1) && w[i + 2] == a
            && w[i + 3] == b + "0") {
          splice(i, 4, {b, a, b});
        }
      }
    }
    return out;
  }

  inline LdWord to_strings(ldgarside::LdWord const& w) {
    LdWord out;
    for (auto const& a : w) {
      out.push_back(a.bits());
    }
    return out;
  }

  // Proves u = v in M_LD by a two-sided search through words of length at
  // most max_len, after cancelling literal common prefixes and suffixes.
  // Returns true on success and nullopt when the search gives up; it never
  // proves inequality.
  inline std::optional<bool> ld_equal(ldgarside::LdWord const& u_in,
                                      ldgarside::LdWord const& v_in,
                                      std::size_t              max_len,
                                      std::size_t              limit = 2'000'000) {
    LdWord u = to_strings(u_in);
    LdWord v = to_strings(v_in);
    while (!u.empty() && !v.empty() && u.front() == v.front()) {
      u.erase(u.begin());
      v.erase(v.begin());
    }
    while (!u.empty() && !v.empty() && u.back() == v.back()) {
      u.pop_back();
      v.pop_back();
    }
    if (u == v) {
      return true;
    }
    std::map<LdWord, int> side{{u, 0}, {v, 1}};
    std::deque<LdWord>    todo{u, v};
    while (!todo.empty() && side.size() < limit) {
      LdWord const w = todo.front();
      todo.pop_front();
      int const s = side.at(w);
      for (auto& x : ld_neighbours(w)) {
        if (x.size() > max_len) {
          continue;
        }
        auto [it, fresh] = side.emplace(x, s);
        if (!fresh) {
          if (it->second != s) {
            return true;
          }
          continue;
        }
        todo.push_back(x);
      }
    }
    return std::nullopt;
  }

  // Two words acting on a term with different results are different
  // elements of M_LD.
  inline bool ld_distinct_by_action(ldgarside::Term const&   t,
                                    ldgarside::LdWord const& u,
                                    ldgarside::LdWord const& v) {
    auto const x = ldgarside::act(t, u);
    auto const y = ldgarside::act(t, v);
    return x && y && !(*x == *y);
  }

}  // namespace oracle

#endif  // LDGARSIDE_TESTS_ORACLES_HPP_
