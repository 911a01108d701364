#include "repzeta/qcomb.hpp"

#include <cmath>

#include "repzeta/snf.hpp"

namespace repzeta {

OrderedSubset::OrderedSubset(std::vector<unsigned> xs) : elems(std::move(xs)) {
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i - 1] >= elems[i]) fail(Errc::invalid_args, "ordered subset must be strictly increasing");
}

OrderedSubset OrderedSubset::shifted(unsigned a) const {
  OrderedSubset out;
  out.elems.reserve(elems.size());
  for (unsigned e : elems) out.elems.push_back(e + a);
  return out;
}

std::vector<OrderedSubset> OrderedSubset::subsets_of(unsigned j) {
  if (j >= 31) fail(Errc::too_large, "subset enumeration bound too large");
  std::vector<OrderedSubset> out;
  out.reserve(1u << j);
  for (unsigned mask = 0; mask < (1u << j); ++mask) {
    OrderedSubset s;
    for (unsigned i = 0; i < j; ++i)
      if (mask & (1u << i)) s.elems.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

MultiPoly q_bracket_factorial(unsigned N) {
  MultiPoly out(1);
  for (unsigned i = 1; i <= N; ++i) out *= MultiPoly(1) - MultiPoly::var(Var::X, i);
  return out;
}

MultiPoly gauss_binomial(unsigned a, unsigned b) {
  if (b > a) fail(Errc::invalid_args, "gauss_binomial requires b <= a");
  // q-Pascal: C(n,k) = C(n-1,k-1) + X^k C(n-1,k); row-by-row, exact.
  std::vector<MultiPoly> row{MultiPoly(1)};
  for (unsigned n = 1; n <= a; ++n) {
    std::vector<MultiPoly> next(std::min(n, b) + 1);
    next[0] = MultiPoly(1);
    for (unsigned k = 1; k < next.size(); ++k) {
      MultiPoly val = k <= n - 1 ? MultiPoly::var(Var::X, k) * row[k] : MultiPoly();
      if (k - 1 < row.size()) val += row[k - 1];
      next[k] = std::move(val);
    }
    row = std::move(next);
  }
  return row[b];
}

MultiPoly pochhammer(const MultiPoly& base, const MultiPoly& ratio, unsigned k) {
  MultiPoly out(1);
  MultiPoly rp(1);
  for (unsigned i = 0; i < k; ++i) {
    out *= MultiPoly(1) - base * rp;
    rp *= ratio;
  }
  return out;
}

RationalFn pochhammer_rf(const RationalFn& base, const RationalFn& ratio, unsigned k) {
  RationalFn out(1);
  RationalFn rp(1);
  for (unsigned i = 0; i < k; ++i) {
    out *= RationalFn(1) - base * rp;
    rp *= ratio;
  }
  return out;
}

MultiPoly x_multinomial(unsigned j, const OrderedSubset& I) {
  if (!I.within(j)) fail(Errc::invalid_args, "subset exceeds ambient bound");
  MultiPoly out(1);
  unsigned upper = j;
  for (std::size_t k = I.size(); k-- > 0;) {
    out *= gauss_binomial(upper, I.elems[k]);
    upper = I.elems[k];
  }
  return out;
}

RationalFn gp(const RationalFn& w) { return w / (RationalFn(1) - w); }

MultiPoly rank_count(unsigned i, unsigned j, unsigned r) {
  if (i > j || r > i) fail(Errc::invalid_args, "rank_count requires r <= i <= j");
  const unsigned k = i - r;
  const RationalFn qinv = pow(RationalFn::var(Var::q), -1);
  RationalFn rf = subst_ratfn(gauss_binomial(j, j - i + k), Var::X, qinv);
  rf *= pochhammer_rf(pow(RationalFn::var(Var::q), -long(k) - 1), qinv, i - k);
  rf *= RationalFn::var(Var::q, (i - k) * (j + k));
  // Denominator is a pure power of q after normalization; clear it.
  const MultiPoly& den = rf.den();
  if (den.is_constant()) {
    MultiPoly out = rf.num();
    out *= 1 / den.constant_value();
    return out;
  }
  if (den.term_count() != 1) fail(Errc::invalid_args, "rank_count: unexpected denominator");
  MultiPoly out = rf.num().divide_by_monomial(den.terms().begin()->first);
  out *= 1 / den.terms().begin()->second;
  return out;
}

Int rank_count_at(unsigned i, unsigned j, unsigned r, const Int& p) {
  Rational v = rank_count(i, j, r).eval_partial(Var::q, Rational(p)).constant_value();
  if (v.get_den() != 1) fail(Errc::invalid_args, "rank_count specialization is not integral");
  return v.get_num();
}

Int brute_rank_count(unsigned i, unsigned j, unsigned r, const Int& p) {
  if (i > j || r > i) fail(Errc::invalid_args, "brute_rank_count requires r <= i <= j");
  if (!is_prime(p)) fail(Errc::invalid_args, "brute_rank_count requires a prime");
  const double points = std::pow(p.get_d(), double(i) * j);
  if (points > 1e7) fail(Errc::too_large, "brute_rank_count guard p^(i*j) <= 1e7 exceeded");
  const std::int64_t pl = p.get_si();
  const std::int64_t total = static_cast<std::int64_t>(std::llround(points));
  Int count = 0;
  ModMat M(i, j);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t v = idx;
    for (unsigned a = 0; a < i; ++a)
      for (unsigned b = 0; b < j; ++b) {
        M(a, b) = v % pl;
        v /= pl;
      }
    if (rank_mod_p(M, pl) == static_cast<int>(r)) ++count;
  }
  return count;
}

bool verify_translation_lemma(unsigned a, unsigned j, const OrderedSubset& I) {
  if (!I.within(j)) fail(Errc::invalid_args, "subset exceeds ambient bound");
  const unsigned i1 = I.empty() ? j : I.front();
  const MultiPoly X = MultiPoly::var(Var::X);
  MultiPoly lhs = x_multinomial(j + a, I.shifted(a)) * pochhammer(MultiPoly::var(Var::X, i1 + 1), X, j - i1);
  MultiPoly rhs = x_multinomial(j, I) * pochhammer(MultiPoly::var(Var::X, i1 + 1 + a), X, j - i1);
  return lhs == rhs;
}

namespace {

// Both sides of the summation identity as rational functions of X, Y, Z.
RationalFn sv_lhs(unsigned j) {
  const RationalFn X = RationalFn::var(Var::X);
  const RationalFn Y = RationalFn::var(Var::Y);
  const RationalFn Z = RationalFn::var(Var::Z);
  const RationalFn Xinv = pow(X, -1);
  RationalFn lhs(0);
  for (const OrderedSubset& I : OrderedSubset::subsets_of(j)) {
    const unsigned i1 = I.empty() ? j : I.front();
    RationalFn term = subst_ratfn(x_multinomial(j, I), Var::X, Xinv);
    term *= pochhammer_rf(Y * pow(X, -long(i1) - 1), Xinv, j - i1);
    for (unsigned i : I.elems) term *= gp(pow(pow(X, i) * Z, j - i));
    lhs += term;
  }
  return lhs;
}

RationalFn sv_rhs(unsigned j) {
  const RationalFn X = RationalFn::var(Var::X);
  const RationalFn Y = RationalFn::var(Var::Y);
  const RationalFn Z = RationalFn::var(Var::Z);
  return pochhammer_rf(pow(X, -long(j)) * Y * Z, X, j) / pochhammer_rf(Z, X, j);
}

Rational gp_at(const Rational& w) {
  if (w == 1) fail(Errc::specialization_pole, "gp pole at w = 1");
  return w / (1 - w);
}

Rational pochhammer_at(const Rational& base, const Rational& ratio, unsigned k) {
  Rational out(1), rp(1);
  for (unsigned i = 0; i < k; ++i) {
    out *= 1 - base * rp;
    rp *= ratio;
  }
  return out;
}

}  // namespace

bool verify_sv_identity(unsigned j, unsigned symbolic_bound) {
  if (j < 1) fail(Errc::invalid_args, "identity requires j >= 1");
  if (j > symbolic_bound)
    fail(Errc::invalid_args, "symbolic verification bounded at j <= " + std::to_string(symbolic_bound));
  return sv_lhs(j) == sv_rhs(j);
}

bool verify_sv_identity_at(unsigned j, const Rational& x, const Rational& y, const Rational& z) {
  if (j < 1) fail(Errc::invalid_args, "identity requires j >= 1");
  if (x == 0) fail(Errc::specialization_pole, "X = 0 is singular");
  const Rational xinv = 1 / x;
  Rational lhs(0);
  for (const OrderedSubset& I : OrderedSubset::subsets_of(j)) {
    const unsigned i1 = I.empty() ? j : I.front();
    std::array<Rational, kNumVars> at{};
    at[static_cast<int>(Var::X)] = xinv;
    Rational term = x_multinomial(j, I).eval(at);
    term *= pochhammer_at(y * pow_rational(x, -long(i1) - 1), xinv, j - i1);
    for (unsigned i : I.elems) term *= gp_at(pow_rational(pow_rational(x, i) * z, j - i));
    lhs += term;
  }
  Rational rhs_den = pochhammer_at(z, x, j);
  if (rhs_den == 0) fail(Errc::specialization_pole, "(Z; X)_j vanishes");
  Rational rhs = pochhammer_at(pow_rational(x, -long(j)) * y * z, x, j) / rhs_den;
  return lhs == rhs;
}

}  // namespace repzeta
