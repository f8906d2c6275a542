#include "masure/parse.hpp"

#include <cctype>

namespace masure {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalU run() {
    RationalU v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RationalU expr() {
    RationalU v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RationalU term() {
    RationalU v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        RationalU d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalU unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  std::int64_t exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("expected integer exponent");
    std::string digits(s_.substr(st, i_ - st));
    if (digits.size() > 18) throw Overflow("exponent " + digits + " exceeds 64-bit range");
    std::int64_t e = std::stoll(digits);
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  RationalU power() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == 'w' || c == 'u') {
      ++i_;
      std::int64_t e = 1;
      if (eat('^')) e = exponent();
      if (c == 'w') return RationalU(RationalFunc::w_power(e));
      return RationalU(LaurentU::monomial(RationalFunc(1), e));
    }
    RationalU base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      mpz_class z(std::string(s_.substr(st, i_ - st)));
      base = RationalU(RationalFunc(Coeff::from_rational(mpq_class(z))));
    } else if (c == '(') {
      ++i_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (eat('^')) {
      std::int64_t e = exponent();
      if (e < 0) {
        if (base.is_zero()) fail("negative power of zero");
        base = base.inverse();
        e = -e;
      }
      RationalU r(1);
      RationalU b = base;
      while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
      }
      return r;
    }
    return base;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

RationalU parse_rational_u(std::string_view text) { return Parser(text).run(); }

RationalFunc parse_ratfunc(std::string_view text) {
  RationalU v = parse_rational_u(text);
  if (!v.is_laurent() || !v.num().is_constant()) throw ParseError("expected an element of k(w): \"" + std::string(text) + "\"");
  return v.num().coeff(0);
}

mpq_class parse_rational_number(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t st = 0;
  while (st < t.size() && std::isspace(static_cast<unsigned char>(t[st]))) ++st;
  t = t.substr(st);
  if (t.empty()) throw ParseError("empty rational");
  for (std::size_t k = 0; k < t.size(); ++k) {
    char c = t[k];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && (k == 0 || t[k - 1] == '/'))))
      throw ParseError("bad rational \"" + t + "\"");
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational \"" + t + "\"");
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + t + "\"");
  q.canonicalize();
  return q;
}

}  // namespace masure
