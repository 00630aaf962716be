#include "ldgarside/term.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ldgarside {

  struct Term::Node {
    Variable                    index = 0;
    std::shared_ptr<Node const> left;
    std::shared_ptr<Node const> right;
    std::size_t                 size  = 0;
    std::size_t                 hash  = 0;
    Variable                    last  = 0;
  };

  namespace {
    std::size_t mix(std::size_t h) {
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      return h;
    }
  }  // namespace

  Term Term::var(Variable index) {
    if (index == 0) {
      throw std::invalid_argument("variable indices start at 1");
    }
    auto n   = std::make_shared<Node>();
    n->index = index;
    n->hash  = mix(index);
    n->last  = index;
    return Term(std::move(n));
  }

  Term Term::op(Term const& left, Term const& right) {
    auto n   = std::make_shared<Node>();
    n->left  = left.node_;
    n->right = right.node_;
    n->size  = left.node_->size + right.node_->size + 1;
    n->hash  = mix(left.node_->hash * 31 + 0x9e3779b97f4a7c15ULL)
              ^ (right.node_->hash * 0x2545f4914f6cdd1dULL + 7);
    n->last = right.node_->last;
    return Term(std::move(n));
  }

  bool Term::is_var() const noexcept {
    return node_->index != 0;
  }
  Variable Term::index() const noexcept {
    return node_->index;
  }
  Term Term::left() const {
    return Term(node_->left);
  }
  Term Term::right() const {
    return Term(node_->right);
  }
  std::size_t Term::size() const noexcept {
    return node_->size;
  }
  std::size_t Term::hash() const noexcept {
    return node_->hash;
  }
  Variable Term::rightmost_var() const noexcept {
    return node_->last;
  }

  bool operator==(Term const& a, Term const& b) {
    if (a.node_ == b.node_) {
      return true;
    }
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size
        || a.node_->index != b.node_->index) {
      return false;
    }
    if (a.is_var()) {
      return true;
    }
    return a.left() == b.left() && a.right() == b.right();
  }

  void Term::write(std::string& out, bool outer) const {
    if (is_var()) {
      out += 'x';
      out += std::to_string(index());
      return;
    }
    if (!outer) {
      out += '(';
    }
    left().write(out, false);
    out += '*';
    right().write(out, false);
    if (!outer) {
      out += ')';
    }
  }

  std::string Term::to_string() const {
    std::string out;
    write(out, true);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Term const& t) {
    return os << t.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TermParser {
     public:
      explicit TermParser(std::string_view text) : text_(text) {}

      Term parse() {
        Term t = primary();
        skip_space();
        if (peek() == '*') {
          ++pos_;
          Term r = primary();
          t      = t * r;
        }
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected trailing input");
        }
        return t;
      }

     private:
      Term primary() {
        skip_space();
        char c = peek();
        if (c == '(') {
          ++pos_;
          Term l = primary();
          expect('*');
          Term r = primary();
          expect(')');
          return l * r;
        }
        if (c == 'x') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            return Term::var(1);
          }
          if (peek() == '0') {
            fail("variable index must not start with 0");
          }
          Variable v = 0;
          while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > 100'000'000) {
              fail("variable index too large");
            }
            v = v * 10 + static_cast<Variable>(peek() - '0');
            ++pos_;
          }
          return Term::var(v);
        }
        fail("expected a variable or '('");
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("cannot parse term \"" + std::string(text_)
                         + "\" at offset " + std::to_string(pos_) + ": "
                         + what);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Term Term::parse(std::string_view text) {
    return TermParser(text).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subterms and the LD action
  ////////////////////////////////////////////////////////////////////////

  std::optional<Term> subterm(Term const& t, Address const& a) {
    Term s = t;
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (s.is_var()) {
        return std::nullopt;
      }
      s = a[i] == 0 ? s.left() : s.right();
    }
    return s;
  }

  namespace {
    // Rebuilds the spine of t above position i of a, with f applied to the
    // subterm at a.
    template <typename F>
    std::optional<Term> rebuild(Term const&    t,
                                Address const& a,
                                std::size_t    i,
                                F&&            f) {
      if (i == a.length()) {
        return f(t);
      }
      if (t.is_var()) {
        return std::nullopt;
      }
      if (a[i] == 0) {
        auto l = rebuild(t.left(), a, i + 1, f);
        if (!l) {
          return std::nullopt;
        }
        return *l * t.right();
      }
      auto r = rebuild(t.right(), a, i + 1, f);
      if (!r) {
        return std::nullopt;
      }
      return t.left() * *r;
    }
  }  // namespace

  std::optional<Term> replace_subterm(Term const&    t,
                                      Address const& a,
                                      Term const&    s) {
    return rebuild(t, a, 0, [&s](Term const&) -> std::optional<Term> {
      return s;
    });
  }

  std::optional<Term> apply_ld(Term const& t, Address const& a) {
    return rebuild(t, a, 0, [](Term const& s) -> std::optional<Term> {
      if (s.is_var() || s.right().is_var()) {
        return std::nullopt;
      }
      Term t0 = s.left();
      Term t1 = s.right().left();
      Term t2 = s.right().right();
      return (t0 * t1) * (t0 * t2);
    });
  }

  std::optional<Term> act(Term const& t, std::span<Address const> w) {
    std::optional<Term> cur = t;
    for (auto const& a : w) {
      cur = apply_ld(*cur, a);
      if (!cur) {
        return std::nullopt;
      }
    }
    return cur;
  }

  namespace {
    void collect_redexes(Term const& t, Address& here, std::vector<Address>& out) {
      if (t.is_var()) {
        return;
      }
      if (!t.right().is_var()) {
        out.push_back(here);
      }
      here = here.child(0);
      collect_redexes(t.left(), here, out);
      here = here.prefix(here.length() - 1).child(1);
      collect_redexes(t.right(), here, out);
      here = here.prefix(here.length() - 1);
    }
  }  // namespace

  std::vector<Address> redex_addresses(Term const& t) {
    std::vector<Address> out;
    Address              here;
    collect_redexes(t, here, out);
    std::sort(out.begin(), out.end(), [](Address const& a, Address const& b) {
      return a.length() != b.length() ? a.length() < b.length() : a < b;
    });
    return out;
  }

  Term dist(Term const& t, Term const& u) {
    if (u.is_var()) {
      return t * u;
    }
    return dist(t, u.left()) * dist(t, u.right());
  }

  Term phi(Term const& t) {
    if (t.is_var()) {
      return t;
    }
    return dist(phi(t.left()), phi(t.right()));
  }

  std::size_t right_height(Term const& t) {
    std::size_t n = 0;
    for (Term s = t; !s.is_var(); s = s.right()) {
      ++n;
    }
    return n;
  }

  std::vector<Variable> pi_hat(Term const& t) {
    if (t.is_var()) {
      throw std::domain_error("pi_hat requires a term of right height >= 1, got "
                              + t.to_string());
    }
    std::vector<Variable> out;
    for (Term s = t; !s.is_var(); s = s.right()) {
      out.push_back(s.left().rightmost_var());
    }
    return out;
  }

  namespace {
    void collect_leaves(Term const& t, std::vector<Variable>& out) {
      if (t.is_var()) {
        out.push_back(t.index());
        return;
      }
      collect_leaves(t.left(), out);
      collect_leaves(t.right(), out);
    }
  }  // namespace

  std::vector<Variable> leaves(Term const& t) {
    std::vector<Variable> out;
    collect_leaves(t, out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Associativity
  ////////////////////////////////////////////////////////////////////////

  std::optional<Term> apply_assoc(Term const& t, Address const& a) {
    return rebuild(t, a, 0, [](Term const& s) -> std::optional<Term> {
      if (s.is_var() || s.right().is_var()) {
        return std::nullopt;
      }
      return (s.left() * s.right().left()) * s.right().right();
    });
  }

  Term left_comb(Term const& t) {
    auto const xs = leaves(t);
    Term       c  = Term::var(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      c = c * Term::var(xs[i]);
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  Term right_comb(std::size_t n, Variable v) {
    Term x = Term::var(v);
    Term t = x;
    for (std::size_t i = 0; i < n; ++i) {
      t = x * t;
    }
    return t;
  }

  std::vector<Term> terms_of_size(std::size_t n, Variable v) {
    std::vector<std::vector<Term>> by_size{{Term::var(v)}};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Term> level;
      for (std::size_t l = 0; l < k; ++l) {
        for (auto const& a : by_size[l]) {
          for (auto const& b : by_size[k - 1 - l]) {
            level.push_back(a * b);
          }
        }
      }
      by_size.push_back(std::move(level));
    }
    return by_size[n];
  }

  std::vector<Term> terms_up_to_size(std::size_t n, Variable v) {
    std::vector<Term> out;
    for (std::size_t k = 0; k <= n; ++k) {
      auto level = terms_of_size(k, v);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  namespace {
    Term relabel(Term const& t, Variable& next) {
      if (t.is_var()) {
        return Term::var(next++);
      }
      Term l = relabel(t.left(), next);
      return l * relabel(t.right(), next);
    }
  }  // namespace

  Term number_leaves(Term const& t, Variable first) {
    return relabel(t, first);
  }

}  // namespace ldgarside
