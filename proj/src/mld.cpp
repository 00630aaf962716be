#include "ldgarside/mld.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ldgarside {

  InlineWord<Address, 3> LdComplement::operator()(Address const& a,
                                                Address const& b) const {
    auto const na = a.length();
    auto const nb = b.length();
    auto const k  = a.common_prefix_length(b);
    if (k == na) {
      if (na == nb) {
        return {};
      }
      // b extends a.
      if (b[na] == 0) {
        auto const rest = b.suffix_from(na + 1);
        return {a.child(0).child(0) + rest, a.child(1).child(0) + rest};
      }
      if (nb == na + 1) {
        return {b, a};
      }
      if (b[na + 1] == 0) {
        return {a.child(0).child(1) + b.suffix_from(na + 2)};
      }
      return {b};
    }
    if (k == nb && na == nb + 1 && a[nb] == 1) {
      return {b, a, b.child(0)};
    }
    return {b};
  }

  LdWord shift(Address const& g, LdWord const& w) {
    LdWord out;
    out.reserve(w.size());
    for (auto const& a : w) {
      out.push_back(g + a);
    }
    return out;
  }

  namespace {
    void delta_small_into(LdWord& out, Term const& t, Address const& at) {
      if (t.is_var()) {
        return;
      }
      out.push_back(at);
      delta_small_into(out, t.left(), at.child(0));
      delta_small_into(out, t.right(), at.child(1));
    }

    void delta_big_into(LdWord& out, Term const& t, Address const& at) {
      if (t.is_var()) {
        return;
      }
      delta_big_into(out, t.left(), at.child(0));
      delta_big_into(out, t.right(), at.child(1));
      delta_small_into(out, phi(t.right()), at);
    }
  }  // namespace

  LdWord delta_small(Term const& t) {
    LdWord out;
    out.reserve(t.size());
    delta_small_into(out, t, Address());
    return out;
  }

  LdWord delta_big(Term const& t) {
    LdWord out;
    delta_big_into(out, t, Address());
    return out;
  }

  namespace {
    struct DeltaSize {
      std::uint64_t delta;       // |Delta_t|
      std::uint64_t phi_leaves;  // leaves of phi(t)
    };

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
      return a > UINT64_MAX - b ? UINT64_MAX : a + b;
    }
    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      return b != 0 && a > UINT64_MAX / b ? UINT64_MAX : a * b;
    }

    // |delta_s| is the number of inner nodes of s, and phi(t0*t1) replaces
    // each leaf of phi(t1) by phi(t0)*leaf.
    DeltaSize delta_size(Term const& t) {
      if (t.is_var()) {
        return {0, 1};
      }
      auto const l = delta_size(t.left());
      auto const r = delta_size(t.right());
      return {sat_add(sat_add(l.delta, r.delta), r.phi_leaves - 1),
              sat_mul(r.phi_leaves, sat_add(l.phi_leaves, 1))};
    }
  }  // namespace

  std::uint64_t delta_length(Term const& t) {
    return delta_size(t).delta;
  }

  LdWord delta_within(LdReversing const& rev, Term const& t) {
    auto const max = rev.budget().max_steps();
    if (delta_length(t) > max) {
      throw BudgetExhausted(max);
    }
    return delta_big(t);
  }

  LdWord gcd_at(LdReversing const& rev,
                Term const&        t,
                LdWord const&      u,
                LdWord const&      v) {
    // The running object is tracked alongside the stripped prefix.
    Term   here = t;
    LdWord done;
    return rev.gcd(u, v, [&](LdWord const& g) {
      while (done.size() < g.size()) {
        here = *apply_ld(here, g[done.size()]);
        done.push_back(g[done.size()]);
      }
      return enabled_atoms(here);
    });
  }

  LdWord phi_t(LdReversing const& rev, Term const& t, LdWord const& a) {
    auto target = act(t, a);
    if (!target) {
      throw std::invalid_argument("phi_t: " + format_word(a)
                                  + " does not act on " + t.to_string());
    }
    auto q = rev.quotient(delta_within(rev, t), concat(a, delta_within(rev, *target)));
    if (!q) {
      throw std::logic_error("phi_t: Delta_t does not divide a Delta_(t.a) for t = "
                             + t.to_string() + ", a = " + format_word(a));
    }
    return std::move(*q);
  }

  std::vector<SimpleDivisor> simple_divisors(LdReversing const& rev,
                                             Term const&        t) {
    std::vector<SimpleDivisor> out;
    out.push_back({{}, delta_within(rev, t), t});
    std::unordered_map<Term, std::vector<std::size_t>> by_target;
    by_target[t].push_back(0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      // Copy: out may reallocate below.
      SimpleDivisor const d = out[i];
      for (auto const& a : enabled_atoms(d.target)) {
        auto q = rev.quotient({a}, d.star);
        if (!q) {
          continue;
        }
        LdWord w = d.word;
        w.push_back(a);
        Term  target = *apply_ld(d.target, a);
        auto& bucket = by_target[target];
        bool  known  = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t j) {
          return rev.equal(out[j].word, w);
        });
        if (!known) {
          bucket.push_back(out.size());
          out.push_back({std::move(w), std::move(*q), std::move(target)});
        }
      }
    }
    return out;
  }

  LdWord power_block(Address const& a, unsigned e) {
    LdWord out;
    out.reserve(e);
    std::string bits = a.bits() + std::string(e, '1');
    for (unsigned i = e; i > 0; --i) {
      bits.pop_back();
      out.emplace_back(bits);
    }
    return out;
  }

  LdWord from_coordinates(Coordinates const& c) {
    LdWord out;
    for (auto const& [a, e] : c) {
      auto b = power_block(a, e);
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  }

  std::vector<Address> relevant_addresses(
      std::vector<SimpleDivisor> const& divisors) {
    std::vector<Address> out;
    for (auto const& d : divisors) {
      auto atoms = enabled_atoms(d.target);
      out.insert(out.end(), atoms.begin(), atoms.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Coordinates coordinates(LdReversing const&          rev,
                          LdWord const&               a,
                          std::vector<Address> const& relevant) {
    // relevant is sorted, and ascending order on addresses is the
    // decreasing coordinate order.
    auto is_relevant = [&relevant](Address const& x) {
      return std::binary_search(relevant.begin(), relevant.end(), x);
    };
    Coordinates c;
    LdWord      rest = a;
    for (auto const& alpha : relevant) {
      if (rest.empty()) {
        break;
      }
      // Divisibility by the blocks is not monotone in e (each block starts
      // with a different letter), so every admissible length is tried.
      unsigned best = 0;
      LdWord   best_rest;
      Address  top = alpha;
      for (unsigned e = 1; is_relevant(top); ++e, top = top.child(1)) {
        if (auto q = rev.quotient(power_block(alpha, e), rest)) {
          best      = e;
          best_rest = std::move(*q);
        }
      }
      if (best > 0) {
        c[alpha] = best;
        rest     = std::move(best_rest);
      }
    }
    if (!rest.empty()) {
      throw std::logic_error("coordinates: greedy stripping of "
                             + format_word(a) + " left " + format_word(rest));
    }
    return c;
  }

  Coordinates coordinates(LdReversing const& rev,
                          LdWord const&      a,
                          Term const&        witness) {
    if (!rev.divides(a, delta_within(rev, witness))) {
      throw std::invalid_argument("coordinates: " + format_word(a)
                                  + " does not divide Delta of "
                                  + witness.to_string());
    }
    return coordinates(rev, a, relevant_addresses(simple_divisors(rev, witness)));
  }

  bool coherence_check(LdReversing const& rev,
                       Term const&        t,
                       Term const&        t2,
                       LdWord const&      a) {
    if (!act(t, a) || !rev.divides(a, delta_within(rev, t2))) {
      return true;
    }
    return rev.divides(a, delta_within(rev, t));
  }

}  // namespace ldgarside
