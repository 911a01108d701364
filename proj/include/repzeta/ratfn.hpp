#ifndef REPZETA_RATFN_HPP
#define REPZETA_RATFN_HPP

#include <string>
#include <string_view>

#include "repzeta/multipoly.hpp"

namespace repzeta {

// Quotient of MultiPolys. Never reduced by polynomial gcd; equality is the
// cross-multiplication test. Normalization on construction: denominator
// content 1 with positive first canonical coefficient.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}
  RationalFn(const Rational& c) : num_(c), den_(1) {}
  RationalFn(MultiPoly n) : num_(std::move(n)), den_(1) {}
  RationalFn(MultiPoly n, MultiPoly d);

  static RationalFn var(Var v, std::uint32_t e = 1) { return RationalFn(MultiPoly::var(v, e)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MultiPoly(1); }

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { a += b; return a; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { a -= b; return a; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { a *= b; return a; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { a /= b; return a; }
  RationalFn operator-() const { return RationalFn(-num_, den_); }

  // a/b == c/d iff a*d == c*b structurally.
  bool operator==(const RationalFn& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn subst(Var v, const RationalFn& value) const;
  RationalFn eval_partial(Var v, const Rational& value) const;
  // specialization_pole when the denominator vanishes at the point.
  Rational eval(const std::array<Rational, kNumVars>& point) const;

  std::string str() const;
  std::string latex() const;
  static RationalFn parse(std::string_view text);

 private:
  MultiPoly num_, den_;
  void normalize();
};

inline bool ratfn_eq(const RationalFn& a, const RationalFn& b) { return a == b; }

RationalFn pow(const RationalFn& base, long e);
// Substitute a rational function for a variable of a polynomial.
RationalFn subst_ratfn(const MultiPoly& p, Var v, const RationalFn& value);

}  // namespace repzeta

#endif  // REPZETA_RATFN_HPP
