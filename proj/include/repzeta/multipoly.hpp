#ifndef REPZETA_MULTIPOLY_HPP
#define REPZETA_MULTIPOLY_HPP

#include <map>
#include <string>
#include <string_view>

#include "repzeta/core.hpp"

namespace repzeta {

// Sparse multivariate polynomial over the fixed universe {q,t,X,Y,Z,s} with
// exact rational coefficients. Canonical form: terms keyed by exponent vector
// in ascending lexicographic order (std::map), no zero coefficients.
class MultiPoly {
 public:
  using Exponents = std::array<std::uint32_t, kNumVars>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;  // zero polynomial: empty term map
  MultiPoly(long c) { add_term(Exponents{}, Rational(c)); }
  MultiPoly(const Int& c) { add_term(Exponents{}, Rational(c)); }
  MultiPoly(const Rational& c) { add_term(Exponents{}, c); }

  static MultiPoly var(Var v, std::uint32_t e = 1);
  static MultiPoly monomial(const Rational& c, const Exponents& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the constant term (0 when absent).
  Rational constant_term() const;
  // Value of a constant polynomial; invalid_args otherwise.
  Rational constant_value() const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool uses(Var v) const;
  std::uint32_t degree(Var v) const;
  std::uint32_t min_degree(Var v) const;
  // Coefficient of v^k, a polynomial in the remaining variables.
  MultiPoly coeff_of(Var v, std::uint32_t k) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { a *= c; return a; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { a *= c; return a; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Polynomial substitution v := value.
  MultiPoly subst(Var v, const MultiPoly& value) const;
  // Specialize v to a rational number.
  MultiPoly eval_partial(Var v, const Rational& value) const;
  // Full evaluation at a point (all used variables must be assigned).
  Rational eval(const std::array<Rational, kNumVars>& point) const;

  // Exact division by a monomial; invalid_args when not divisible.
  MultiPoly divide_by_monomial(const Exponents& e) const;

  // gcd of coefficient numerators over lcm of denominators, sign of the
  // first canonical term. Zero polynomial has content 0.
  Rational content_signed() const;

  std::string str() const;
  std::string latex() const;

  // Parses the canonical text form (and general +,-,*,/,^ expressions whose
  // denominator is constant). parse_error / invalid_args on failure.
  static MultiPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, std::uint32_t e);

}  // namespace repzeta

#endif  // REPZETA_MULTIPOLY_HPP
