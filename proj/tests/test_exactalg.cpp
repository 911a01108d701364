#include <doctest.h>

#include <random>

#include "repzeta/ratfn.hpp"
#include "repzeta/series.hpp"

using namespace repzeta;

namespace {

const MultiPoly q = MultiPoly::var(Var::q);
const MultiPoly t = MultiPoly::var(Var::t);
const MultiPoly X = MultiPoly::var(Var::X);
const MultiPoly one(1);

// Small random polynomials for property checks.
MultiPoly random_poly(std::mt19937_64& rng, std::initializer_list<Var> vars, bool unit_constant = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  MultiPoly p = unit_constant ? MultiPoly(1) : MultiPoly();
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    MultiPoly::Exponents e{};
    for (Var v : vars) e[static_cast<int>(v)] = static_cast<std::uint32_t>(exp(rng));
    if (unit_constant && e == MultiPoly::Exponents{}) continue;
    p.add_term(e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  CHECK(X * X == MultiPoly::var(Var::X, 2));
  CHECK((one - X) * (one + X) == one - MultiPoly::var(Var::X, 2));
  MultiPoly qt = one - q * t;
  CHECK(qt * one + MultiPoly() == qt);
  CHECK((X - X).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    MultiPoly a = random_poly(rng, {Var::q, Var::t});
    MultiPoly b = random_poly(rng, {Var::q, Var::t});
    MultiPoly c = random_poly(rng, {Var::q, Var::t});
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
  }
}

TEST_CASE("canonical form is idempotent and order-independent") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    MultiPoly a = random_poly(rng, {Var::q, Var::X});
    // Rebuild from terms in reverse order; must compare equal.
    MultiPoly b;
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms(a.terms().begin(), a.terms().end());
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) b.add_term(it->first, it->second);
    CHECK(a == b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("rational function equality by cross multiplication") {
  RationalFn lhs(one - MultiPoly::var(Var::X, 2), one - X);
  RationalFn rhs(one + X);
  CHECK(lhs == rhs);

  RationalFn a(t, one - t);
  RationalFn b(t, one - q * t);
  CHECK(a != b);

  RationalFn f(one - t, one - q * t);
  RationalFn g((one - t) * (one - X), (one - q * t) * (one - X));
  CHECK(f == g);
}

TEST_CASE("expand_factor matches the geometric series") {
  DirichletTrunc e1 = expand_factor(1, 1, 2);
  CHECK(e1.coeff(0) == one);
  CHECK(e1.coeff(1) == q);
  CHECK(e1.coeff(2) == MultiPoly::var(Var::q, 2));

  DirichletTrunc e2 = expand_factor(0, 2, 3);
  CHECK(e2.coeff(0) == one);
  CHECK(e2.coeff(1).is_zero());
  CHECK(e2.coeff(2) == one);
  CHECK(e2.coeff(3).is_zero());

  DirichletTrunc e3 = expand_factor(2, 1, 3);
  CHECK(e3.coeff(3) == MultiPoly::var(Var::q, 6));
}

TEST_CASE("series_of_ratfn long division") {
  RationalFn f(one - t, one - q * t);
  DirichletTrunc s = series_of_ratfn(f, 3);
  CHECK(s.coeff(0) == one);
  CHECK(s.coeff(1) == q - one);
  CHECK(s.coeff(2) == MultiPoly::var(Var::q, 2) - q);
  CHECK(s.coeff(3) == MultiPoly::var(Var::q, 3) - MultiPoly::var(Var::q, 2));

  DirichletTrunc geo = series_of_ratfn(RationalFn(one, one - t), 2);
  CHECK(geo.coeff(0) == one);
  CHECK(geo.coeff(1) == one);
  CHECK(geo.coeff(2) == one);

  // (1 - t^2)/(1 - q t^2) at q = 2, truncated at K = 4.
  MultiPoly t2 = MultiPoly::var(Var::t, 2);
  DirichletTrunc at2 = series_of_ratfn_at(RationalFn(one - t2, one - q * t2), 4, Int(2));
  CHECK(at2.coeff(0) == one);
  CHECK(at2.coeff(2) == one);
  CHECK(at2.coeff(4) == MultiPoly(2));
  CHECK(at2.coeff(1).is_zero());
  CHECK(at2.coeff(3).is_zero());
}

TEST_CASE("series_of_ratfn rejects non-unit denominators") {
  RationalFn f(one, t);
  CHECK_THROWS_AS(series_of_ratfn(f, 2), Error);
  try {
    series_of_ratfn(f, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_unit_denominator);
  }
}

TEST_CASE("series multiplicativity on random inputs") {
  std::mt19937_64 rng(99);
  const unsigned K = 4;
  for (int iter = 0; iter < 40; ++iter) {
    MultiPoly fn = random_poly(rng, {Var::q, Var::t});
    MultiPoly fd = random_poly(rng, {Var::q, Var::t}, /*unit_constant=*/true);
    MultiPoly gn = random_poly(rng, {Var::q, Var::t});
    MultiPoly gd = random_poly(rng, {Var::q, Var::t}, /*unit_constant=*/true);
    RationalFn f(fn, fd), g(gn, gd);
    DirichletTrunc lhs = series_of_ratfn(f * g, K);
    DirichletTrunc rhs = series_of_ratfn(f, K).mul_trunc(series_of_ratfn(g, K));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("expand_factor agrees with series_of_ratfn") {
  for (long a : {0L, 1L, 3L}) {
    for (unsigned b : {1u, 2u}) {
      RationalFn f(one, one - MultiPoly::var(Var::q, static_cast<unsigned>(a)) * MultiPoly::var(Var::t, b));
      CHECK(expand_factor(a, b, 5) == series_of_ratfn(f, 5));
    }
  }
}

TEST_CASE("canonical text form round-trips") {
  RationalFn f(one - MultiPoly::var(Var::q, 2) * t, one - MultiPoly::var(Var::q, 3) * t);
  CHECK(f.str() == "(1 - q^2*t) / (1 - q^3*t)");
  CHECK(RationalFn::parse(f.str()) == f);

  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 60; ++iter) {
    MultiPoly n = random_poly(rng, {Var::q, Var::t, Var::X});
    MultiPoly d = random_poly(rng, {Var::q, Var::t}, true);
    RationalFn g(n, d);
    RationalFn parsed = RationalFn::parse(g.str());
    CHECK(parsed == g);
    CHECK(parsed.str() == g.str());  // print-parse-print is stable
    MultiPoly back = MultiPoly::parse(n.str());
    CHECK(back == n);
  }
}

TEST_CASE("parser handles coefficients, powers, and errors") {
  CHECK(MultiPoly::parse("3/2*q^2*t - 1") == MultiPoly(make_rational(3, 2)) * MultiPoly::var(Var::q, 2) * t - one);
  CHECK(RationalFn::parse("q^-1") == RationalFn(one, q));
  CHECK_THROWS_AS(RationalFn::parse("q +"), Error);
  CHECK_THROWS_AS(RationalFn::parse("(1 - w)"), Error);
  CHECK_THROWS_AS(MultiPoly::parse("1/(1-t)"), Error);
}
