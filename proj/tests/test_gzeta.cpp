#include <doctest.h>

#include "repzeta/gzeta.hpp"
#include "repzeta/poincare.hpp"

using namespace repzeta;

namespace {
const MultiPoly one(1);
const MultiPoly q = MultiPoly::var(Var::q);
const MultiPoly t = MultiPoly::var(Var::t);
const MultiPoly s = MultiPoly::var(Var::s);

RationalFn invert_q_t(const RationalFn& f) {
  RationalFn qinv = pow(RationalFn::var(Var::q), -1);
  RationalFn tinv = pow(RationalFn::var(Var::t), -1);
  return f.subst(Var::q, qinv).subst(Var::t, tinv);
}
}  // namespace

TEST_CASE("f_I on frozen examples") {
  CHECK(f_I(1, 1, OrderedSubset{0}) == one - MultiPoly::var(Var::X));
  CHECK(f_I(2, 3, OrderedSubset{}) == one);
  MultiPoly expected = x_multinomial(2, OrderedSubset{0, 1}) *
                       pochhammer(MultiPoly::var(Var::X), MultiPoly::var(Var::X), 2);
  CHECK(f_I(2, 2, OrderedSubset{0, 1}) == expected);
  CHECK_THROWS_AS(f_I(2, 2, OrderedSubset{2}), Error);
}

TEST_CASE("local zeta closed forms for small families") {
  CHECK(local_additive(1, 1) == RationalFn(one - t, one - q * t));
  CHECK(local_additive(1, 2) == RationalFn(one - t, one - MultiPoly::var(Var::q, 2) * t));
  // G_{2x2}: (1-t)(1-qt) / ((1-q^2 t)(1-q^3 t))
  RationalFn sv((one - t) * (one - q * t),
                (one - MultiPoly::var(Var::q, 2) * t) * (one - MultiPoly::var(Var::q, 3) * t));
  CHECK(local_additive(2, 2) == sv);
  CHECK(local_multiplicative(2, 2) == sv);

  CHECK(local_multiplicative(1, 1) == RationalFn(one - t, one - q * t));
  RationalFn m23((one - t) * (one - q * t),
                 (one - MultiPoly::var(Var::q, 3) * t) * (one - MultiPoly::var(Var::q, 4) * t));
  CHECK(local_multiplicative(2, 3) == m23);
}

TEST_CASE("triple equality of the closed forms") {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = m; n <= 3; ++n) {
      RationalFn additive = local_additive(m, n);
      RationalFn multiplicative = local_multiplicative(m, n);
      CHECK(additive == multiplicative);
      CHECK(multiplicative == local_product_form(m, n).expand());
    }
}

TEST_CASE("product form and symmetry") {
  CycloFactorization f11 = local_product_form(1, 1);
  REQUIRE(f11.factors().size() == 2);
  CHECK(f11.factors()[0] == CycloFactor{0, 1, +1});
  CHECK(f11.factors()[1] == CycloFactor{1, 1, -1});

  CycloFactorization f22 = local_product_form(2, 2);
  CHECK(f22.factors() == std::vector<CycloFactor>{{0, 1, 1}, {1, 1, 1}, {2, 1, -1}, {3, 1, -1}});

  CHECK(local_product_form(1, 3) == local_product_form(3, 1));
  CHECK(local_product_form(1, 2).str() == "(1 - t) / (1 - q^2*t)");
}

TEST_CASE("functional equation with factor q^{mn}") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = m; n <= 4; ++n) {
      RationalFn f = local_multiplicative(m, n);
      RationalFn lhs = invert_q_t(f);
      RationalFn rhs = RationalFn::var(Var::q, m * n) * f;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("oracle equality against brute enumeration") {
  struct Fixture { unsigned m, n; long p; unsigned K; };
  for (Fixture f : {Fixture{1, 1, 2, 6}, Fixture{1, 1, 3, 4}, Fixture{1, 2, 2, 4}}) {
    DirichletTrunc closed = series_of_ratfn_at(local_additive(f.m, f.n), f.K, Int(f.p));
    DirichletTrunc brute = brute_poincare(make_G_mn(f.m, f.n), Int(f.p), f.K);
    CHECK(closed == brute);
  }
}

TEST_CASE("global dirichlet coefficients") {
  // m = n = 1: zeta(s-1)/zeta(s) has coefficients phi(i)
  std::vector<Int> coeffs = global_dirichlet_coeffs(1, 1, 50);
  auto phi = [](unsigned v) {
    unsigned result = v;
    for (unsigned p = 2; p * p <= v; ++p)
      if (v % p == 0) {
        while (v % p == 0) v /= p;
        result -= result / p;
      }
    if (v > 1) result -= result / v;
    return result;
  };
  for (unsigned i = 1; i <= 50; ++i) CHECK(coeffs[i] == Int(static_cast<long>(phi(i))));

  // a_1 = 1 always
  CHECK(global_dirichlet_coeffs(2, 3, 10)[1] == 1);
  // m=1, n=2: a_p = p^2 - 1
  std::vector<Int> c12 = global_dirichlet_coeffs(1, 2, 12);
  for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(c12[static_cast<unsigned>(p)] == Int(p * p - 1));
}

TEST_CASE("dirichlet coefficients are nonnegative integers at prime powers") {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = m; n <= 3; ++n)
      for (long p : {2L, 3L, 5L}) {
        DirichletTrunc s6 = series_of_ratfn_at(local_multiplicative(m, n), 6, Int(p));
        for (unsigned k = 0; k <= 6; ++k) {
          Rational c = s6.coeff(k).constant_value();
          CHECK(c.get_den() == 1);
          CHECK(c >= 0);
        }
      }
}

TEST_CASE("splitting-data coefficients") {
  // Q(i)-style toy data: residue cardinalities for a split, an inert, and a ramified place
  std::vector<Int> split{Int(5), Int(5), Int(9), Int(2)};
  std::map<Int, Int> coeffs = global_dirichlet_coeffs_splitting(1, 1, 30, split);
  CHECK(coeffs[Int(1)] == 1);
  // norm 25: the two q=5 places paired (4*4), or either one squared (q^2-q = 20 twice)
  CHECK(coeffs[Int(25)] == Int(4 * 4 + 20 + 20));
  CHECK(coeffs[Int(2)] == Int(1));
  CHECK(coeffs[Int(9)] == Int(8));
}

TEST_CASE("topological zeta functions") {
  CHECK(topological(1, 1) == RationalFn(s, s - one));
  CHECK(topological(2, 2) == RationalFn(s * (s - one), (s - MultiPoly(2)) * (s - MultiPoly(3))));
  CHECK(topological(1, 5) == RationalFn(s, s - MultiPoly(5)));
}

TEST_CASE("topological via first-order expansion of the factorization") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = m; n <= 4; ++n)
      CHECK(topo_of_factorization(local_product_form(m, n)) == topological(m, n));

  CycloFactorization cancel;
  cancel.add(0, 1, +1);
  cancel.add(0, 1, -1);
  CHECK(topo_of_factorization(cancel) == RationalFn(1));

  CycloFactorization pair;
  pair.add(2, 1, +1);
  pair.add(5, 1, -1);
  CHECK(topo_of_factorization(pair) == RationalFn(s - MultiPoly(2), s - MultiPoly(5)));

  CycloFactorization unbalanced;
  unbalanced.add(1, 1, -1);
  unbalanced.add(0, 1, -1);
  try {
    topo_of_factorization(unbalanced);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbalanced_degrees);
  }
}

TEST_CASE("abscissae") {
  CHECK(local_abscissa(local_product_form(2, 3)) == Rational(4));
  CHECK(local_abscissa(local_product_form(1, 1)) == Rational(1));
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = m; n <= 3; ++n)
      CHECK(local_abscissa(local_product_form(m, n)) == Rational(static_cast<long>(n + m - 1)));

  CycloFactorization entire;
  entire.add(0, 1, +1);
  try {
    local_abscissa(entire);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::entire_function);
  }
}

TEST_CASE("central products") {
  CycloFactorization h = local_product_form(1, 1);
  CHECK(central_product(h, 1) == h);
  CycloFactorization h2 = central_product(h, 2);
  MultiPoly t2 = MultiPoly::var(Var::t, 2);
  CHECK(h2.expand() == RationalFn(one - t2, one - q * t2));

  // Snocken rationals: global abscissa (m + n)/k
  CHECK(global_abscissa(central_product(local_product_form(1, 4), 3)) == make_rational(5, 3));
  CHECK(global_abscissa(central_product(local_product_form(2, 3), 2)) == make_rational(5, 2));
  CHECK(global_abscissa(central_product(local_product_form(1, 1), 5)) == make_rational(2, 5));
  // and the local abscissa under s -> ks is (m + n - 1)/k
  CHECK(local_abscissa(central_product(local_product_form(1, 4), 3)) == make_rational(4, 3));
}

TEST_CASE("euler products") {
  // empty splitting: the empty product
  EulerEval empty = global_euler(1, 1, {}, Rational(3));
  CHECK(empty.value == Rational(1));

  // divergence guard at the abscissa
  CHECK_THROWS_AS(global_euler(1, 1, {Int(2)}, Rational(2)), Error);
  try {
    global_euler(1, 1, {Int(2)}, Rational(2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::divergent_region);
  }

  // partial product over small primes approximates zeta(2)/zeta(3)
  std::vector<Int> primes = primes_below(100);
  EulerEval ev = global_euler(1, 1, primes, Rational(3));
  CHECK(ev.exact);
  const double target = 1.3684327776;  // zeta(2)/zeta(3) to 10 digits
  CHECK(std::abs(ev.approx - target) < 1e-3);

  // non-integer rational s: dyadic evaluation with a stated bound
  EulerEval half = global_euler(1, 1, primes, make_rational(7, 2));
  CHECK_FALSE(half.exact);
  CHECK(half.error_bound < 1e-20);
  CHECK(half.approx > 1.0);
  CHECK(half.approx < 2.0);

  CHECK_THROWS_AS(global_euler(1, 1, {Int(6)}, Rational(3)), Error);  // 6 is not a prime power
}
