#include "repzeta/ratfn.hpp"

#include <cctype>

namespace repzeta {

RationalFn::RationalFn(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(Errc::invalid_args, "zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  Rational c = den_.content_signed();
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  MultiPoly n = num_ * o.den_ + o.num_ * den_;
  MultiPoly d = den_ * o.den_;
  *this = RationalFn(std::move(n), std::move(d));
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
  MultiPoly n = num_ * o.den_ - o.num_ * den_;
  MultiPoly d = den_ * o.den_;
  *this = RationalFn(std::move(n), std::move(d));
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  *this = RationalFn(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.num_.is_zero()) fail(Errc::invalid_args, "division by zero rational function");
  *this = RationalFn(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFn pow(const RationalFn& base, long e) {
  if (e < 0) {
    if (base.is_zero()) fail(Errc::invalid_args, "negative power of zero");
    return pow(RationalFn(base.den(), base.num()), -e);
  }
  RationalFn result(1);
  RationalFn b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1ul) result *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return result;
}

RationalFn subst_ratfn(const MultiPoly& p, Var v, const RationalFn& value) {
  const int vi = static_cast<int>(v);
  RationalFn out(0);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents rest = e;
    rest[vi] = 0;
    out += RationalFn(MultiPoly::monomial(c, rest)) * pow(value, e[vi]);
  }
  return out;
}

RationalFn RationalFn::subst(Var v, const RationalFn& value) const {
  RationalFn n = subst_ratfn(num_, v, value);
  RationalFn d = subst_ratfn(den_, v, value);
  if (d.is_zero()) fail(Errc::specialization_pole, "denominator vanishes under substitution");
  return n / d;
}

RationalFn RationalFn::eval_partial(Var v, const Rational& value) const {
  MultiPoly d = den_.eval_partial(v, value);
  if (d.is_zero()) fail(Errc::specialization_pole, "denominator vanishes at specialization");
  return RationalFn(num_.eval_partial(v, value), std::move(d));
}

Rational RationalFn::eval(const std::array<Rational, kNumVars>& point) const {
  Rational d = den_.eval(point);
  if (d == 0) fail(Errc::specialization_pole, "denominator vanishes at point");
  return num_.eval(point) / d;
}

std::string RationalFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string RationalFn::latex() const {
  if (is_polynomial()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

// ---------------------------------------------------------------------------
// Expression parser for the canonical text form. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' ['-'] integer]
//   base   := integer | variable | '(' expr ')'
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(Errc::parse_error, err("trailing input"));
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  std::string err(const std::string& msg) const {
    return "parse error at offset " + std::to_string(pos_) + ": " + msg;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFn expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    RationalFn r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFn term() {
    RationalFn r = factor();
    for (;;) {
      if (eat('*'))
        r *= factor();
      else if (eat('/'))
        r /= factor();
      else
        return r;
    }
  }

  RationalFn factor() {
    RationalFn b = base();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer_literal();
      return pow(b, neg ? -e : e);
    }
    return b;
  }

  long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(Errc::parse_error, err("expected integer"));
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFn base() {
    skip_ws();
    if (pos_ >= text_.size()) fail(Errc::parse_error, err("unexpected end of input"));
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!eat(')')) fail(Errc::parse_error, err("expected ')'"));
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFn(Rational(Int(std::string(text_.substr(start, pos_ - start)))));
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (c == kVarNames[i]) {
        ++pos_;
        return RationalFn::var(static_cast<Var>(i));
      }
    }
    fail(Errc::parse_error, err(std::string("unexpected character '") + c + "'"));
  }
};

}  // namespace

RationalFn RationalFn::parse(std::string_view text) { return Parser(text).parse(); }

MultiPoly MultiPoly::parse(std::string_view text) {
  RationalFn f = RationalFn::parse(text);
  if (!f.den().is_constant())
    fail(Errc::invalid_args, "expression is not a polynomial: " + std::string(text));
  Rational d = f.den().constant_value();
  MultiPoly out = f.num();
  out *= 1 / d;
  return out;
}

}  // namespace repzeta
