#include "ddisc/text.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace ddisc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (pos_ < text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = signed_factor();
    while (true) {
      if (accept('*')) {
        acc *= signed_factor();
      } else if (accept('/')) {
        skip_space();
        std::size_t at = pos_;
        Integer d = integer();
        if (d == 0) throw SyntaxError("division by zero", at);
        acc *= Rational(Integer(1), d);
      } else {
        return acc;
      }
    }
  }

  Polynomial signed_factor() {
    if (accept('-')) return -signed_factor();
    if (accept('+')) return signed_factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      Integer e = integer();
      if (e > Monomial::kMaxExponent) throw SyntaxError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = integer();
      reject_juxtaposition();
      return Polynomial(ring_, Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw UnknownVariable(name);
      reject_juxtaposition();
      return Polynomial::variable(ring_, *idx);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  // "2 x", "x y" and "2(x)" are not products.
  void reject_juxtaposition() {
    std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
        throw SyntaxError("implicit multiplication is not allowed", pos_);
    }
    pos_ = save;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Ring& ring, const Monomial& m) {
  bool first = true;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.name(v);
    if (m[v] > 1) {
      out += '^';
      out += std::to_string(m[v]);
    }
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto slash = s.find('/');
  auto check = [&](const std::string& part, bool allow_sign) {
    std::size_t i = (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw SyntaxError("malformed rational '" + s + "'", 0);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw SyntaxError("malformed rational '" + s + "'", i);
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check(num, true);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num));
  } else {
    std::string den = s.substr(slash + 1);
    check(den, false);
    Integer d(den);
    if (d == 0) throw SyntaxError("zero denominator", slash);
    q = Rational(Integer(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::vector<const Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  auto grevlex = MonomialOrder::grevlex();
  std::sort(order.begin(), order.end(),
            [&](const Term* a, const Term* b) { return grevlex.compare(a->monomial, b->monomial) > 0; });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coefficient;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t->monomial.is_one()) {
      out += c.get_str();
      continue;
    }
    if (c != 1) {
      out += c.get_str();
      out += '*';
    }
    append_monomial(out, ring, t->monomial);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace ddisc
