#include "repzeta/series.hpp"

namespace repzeta {

namespace {

// Exact division in Q[q]; used by the series recurrence when the t-constant
// denominator coefficient is not a scalar.
MultiPoly divide_exact_q(const MultiPoly& num, const MultiPoly& div) {
  if (div.is_zero()) fail(Errc::invalid_args, "division by zero polynomial");
  if (div.is_constant()) {
    MultiPoly out = num;
    out *= 1 / div.constant_value();
    return out;
  }
  // Long division by leading q-coefficient; only q may occur.
  auto check_q_only = [](const MultiPoly& p) {
    for (int i = 0; i < kNumVars; ++i)
      if (static_cast<Var>(i) != Var::q && p.uses(static_cast<Var>(i)))
        fail(Errc::invalid_args, "series coefficient involves a variable other than q");
  };
  check_q_only(num);
  check_q_only(div);
  const std::uint32_t dd = div.degree(Var::q);
  const Rational lead = div.coeff_of(Var::q, dd).constant_value();
  MultiPoly rem = num;
  MultiPoly quot;
  while (!rem.is_zero()) {
    std::uint32_t rd = rem.degree(Var::q);
    if (rd < dd) fail(Errc::invalid_args, "series coefficient is not a polynomial in q");
    Rational c = rem.coeff_of(Var::q, rd).constant_value() / lead;
    MultiPoly mono = MultiPoly::var(Var::q, rd - dd) * c;
    quot += mono;
    rem -= mono * div;
  }
  return quot;
}

std::vector<MultiPoly> t_coefficients(const MultiPoly& p, unsigned K) {
  std::vector<MultiPoly> out(K + 1);
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t et = e[static_cast<int>(Var::t)];
    if (et > K) continue;
    MultiPoly::Exponents rest = e;
    rest[static_cast<int>(Var::t)] = 0;
    out[et].add_term(rest, c);
  }
  return out;
}

}  // namespace

DirichletTrunc DirichletTrunc::mul_trunc(const DirichletTrunc& o) const {
  DirichletTrunc out(std::min(order_, o.order_), mode_, prime_);
  for (unsigned k = 0; k <= out.order(); ++k) {
    MultiPoly c;
    for (unsigned j = 0; j <= k; ++j) c += coeffs_[j] * o.coeffs_[k - j];
    out.set_coeff(k, std::move(c));
  }
  return out;
}

std::string DirichletTrunc::str() const {
  std::string out;
  bool first = true;
  for (unsigned k = 0; k <= order_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    const MultiPoly& c = coeffs_[k];
    std::string cs = c.str();
    const bool simple = c.term_count() == 1 && cs.front() != '-';
    if (!first) out += " + ";
    first = false;
    if (k == 0) {
      out += simple ? cs : "(" + cs + ")";
      continue;
    }
    std::string tpow = k == 1 ? "t" : "t^" + std::to_string(k);
    if (c == MultiPoly(1))
      out += tpow;
    else
      out += (simple ? cs : "(" + cs + ")") + "*" + tpow;
  }
  if (first) out += "0";
  out += " + O(t^" + std::to_string(order_ + 1) + ")";
  return out;
}

DirichletTrunc expand_factor(long a, unsigned b, unsigned K) {
  if (a < 0) fail(Errc::invalid_args, "expand_factor requires a >= 0");
  if (b == 0) fail(Errc::invalid_args, "expand_factor requires b >= 1");
  DirichletTrunc out(K);
  for (unsigned j = 0; std::uint64_t(j) * b <= K; ++j) {
    MultiPoly::Exponents e{};
    e[static_cast<int>(Var::q)] = static_cast<std::uint32_t>(a) * j;
    out.set_coeff(j * b, MultiPoly::monomial(Rational(1), e));
  }
  return out;
}

DirichletTrunc series_of_ratfn(const RationalFn& f, unsigned K) {
  for (Var v : {Var::X, Var::Y, Var::Z, Var::s})
    if (f.num().uses(v) || f.den().uses(v))
      fail(Errc::invalid_args, "series expansion is only defined in q and t");
  std::vector<MultiPoly> num = t_coefficients(f.num(), K);
  std::vector<MultiPoly> den = t_coefficients(f.den(), K);
  if (den[0].is_zero())
    fail(Errc::non_unit_denominator, "denominator vanishes at t = 0");
  DirichletTrunc out(K);
  std::vector<MultiPoly> c(K + 1);
  for (unsigned k = 0; k <= K; ++k) {
    MultiPoly acc = num[k];
    for (unsigned j = 1; j <= k; ++j) acc -= den[j] * c[k - j];
    c[k] = divide_exact_q(acc, den[0]);
    out.set_coeff(k, c[k]);
  }
  return out;
}

DirichletTrunc series_of_ratfn_at(const RationalFn& f, unsigned K, const Int& p) {
  RationalFn g = f.eval_partial(Var::q, Rational(p));
  DirichletTrunc sym = series_of_ratfn(g, K);
  DirichletTrunc out(K, QMode::numeric, p);
  for (unsigned k = 0; k <= K; ++k) out.set_coeff(k, sym.coeff(k));
  return out;
}

}  // namespace repzeta
