#include "repzeta/gzeta.hpp"

#include <algorithm>
#include <cmath>

namespace repzeta {

void CycloFactorization::add(long a, unsigned b, long e) {
  if (b == 0) fail(Errc::invalid_args, "factor needs b >= 1");
  if (e == 0) return;
  auto it = std::find_if(factors_.begin(), factors_.end(),
                         [&](const CycloFactor& f) { return f.a == a && f.b == b; });
  if (it != factors_.end()) {
    it->e += e;
    if (it->e == 0) factors_.erase(it);
  } else {
    factors_.push_back({a, b, e});
  }
  std::sort(factors_.begin(), factors_.end(), [](const CycloFactor& x, const CycloFactor& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
}

RationalFn CycloFactorization::expand() const {
  RationalFn out = RationalFn::var(Var::t, pre_t_);
  out *= pow(RationalFn::var(Var::q), pre_q_);
  for (const CycloFactor& f : factors_) {
    RationalFn base = RationalFn(1) - pow(RationalFn::var(Var::q), f.a) * RationalFn::var(Var::t, f.b);
    out *= pow(base, f.e);
  }
  return out;
}

namespace {

std::string factor_str(const CycloFactor& f, bool with_abs_exp) {
  std::string base = "1 - ";
  if (f.a != 0) base += f.a == 1 ? "q*" : "q^" + std::to_string(f.a) + "*";
  base += f.b == 1 ? "t" : "t^" + std::to_string(f.b);
  const long e = with_abs_exp ? std::labs(f.e) : f.e;
  std::string out = "(" + base + ")";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string CycloFactorization::str() const {
  std::string num, den;
  for (const CycloFactor& f : factors_) {
    std::string fs = factor_str(f, true);
    if (f.e > 0)
      num += (num.empty() ? "" : " * ") + fs;
    else
      den += (den.empty() ? "" : " * ") + fs;
  }
  std::string pre;
  if (pre_q_ != 0) pre += "q^" + std::to_string(pre_q_);
  if (pre_t_ != 0) pre += (pre.empty() ? "" : "*") + std::string(pre_t_ == 1 ? "t" : "t^" + std::to_string(pre_t_));
  if (!pre.empty()) num = num.empty() ? pre : pre + " * " + num;
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  std::string ns = num.find(" * ") != std::string::npos ? "(" + num + ")" : num;
  std::string ds = den.find(" * ") != std::string::npos ? "(" + den + ")" : den;
  return ns + " / " + ds;
}

MultiPoly f_I(unsigned m, unsigned n, const OrderedSubset& I) {
  if (m < 1 || n < m) fail(Errc::invalid_args, "f_I requires 1 <= m <= n");
  if (!I.within(m)) fail(Errc::invalid_args, "f_I requires I within [m-1]_0");
  if (I.empty()) return MultiPoly(1);
  const unsigned i1 = I.front();
  MultiPoly out = x_multinomial(n, I.shifted(n - m));
  out *= pochhammer(MultiPoly::var(Var::X, i1 + 1), MultiPoly::var(Var::X), m - i1);
  return out;
}

RationalFn local_additive(unsigned m, unsigned n, const std::optional<Int>& q_value) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "local_additive requires m, n >= 1");
  if (m > n) std::swap(m, n);  // G_{m x n} and G_{n x m} are isomorphic
  const RationalFn q = q_value ? RationalFn(Rational(*q_value)) : RationalFn::var(Var::q);
  const RationalFn qinv = pow(q, -1);
  RationalFn sum(0);
  for (const OrderedSubset& I : OrderedSubset::subsets_of(m)) {
    RationalFn term = subst_ratfn(f_I(m, n, I), Var::X, qinv);
    for (unsigned i : I.elems) {
      RationalFn w = pow(q, (m - i) * (n + i)) * RationalFn::var(Var::t, m - i);
      term *= gp(w);
    }
    sum += term;
  }
  return sum;
}

RationalFn local_multiplicative(unsigned m, unsigned n) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "local_multiplicative requires m, n >= 1");
  if (m > n) std::swap(m, n);
  MultiPoly num(1), den(1);
  for (unsigned i = 0; i < m; ++i) {
    MultiPoly::Exponents en{};
    en[static_cast<int>(Var::q)] = i;
    en[static_cast<int>(Var::t)] = 1;
    num *= MultiPoly(1) - MultiPoly::monomial(Rational(1), en);
    MultiPoly::Exponents ed{};
    ed[static_cast<int>(Var::q)] = n + i;
    ed[static_cast<int>(Var::t)] = 1;
    den *= MultiPoly(1) - MultiPoly::monomial(Rational(1), ed);
  }
  return RationalFn(std::move(num), std::move(den));
}

CycloFactorization local_product_form(unsigned m, unsigned n) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "local_product_form requires m, n >= 1");
  if (m > n) std::swap(m, n);
  CycloFactorization F;
  for (unsigned i = 0; i < m; ++i) {
    F.add(static_cast<long>(i), 1, +1);
    F.add(static_cast<long>(n + i), 1, -1);
  }
  return F;
}

CycloFactorization central_product(const CycloFactorization& F, unsigned k) {
  if (k < 1) fail(Errc::invalid_args, "central_product requires k >= 1");
  CycloFactorization out;
  out.set_prefactor(F.prefactor_q(), F.prefactor_t() * k);
  for (const CycloFactor& f : F.factors()) out.add(f.a, f.b * k, f.e);
  return out;
}

RationalFn topo_of_factorization(const CycloFactorization& F) {
  long balance = 0;
  for (const CycloFactor& f : F.factors()) balance += f.e;
  if (balance != 0)
    fail(Errc::unbalanced_degrees, "factor counts differ; the (q-1)-constant term is 0 or infinite");
  RationalFn out(1);
  const RationalFn s = RationalFn::var(Var::s);
  for (const CycloFactor& f : F.factors()) {
    RationalFn lin = RationalFn(Rational(static_cast<long>(f.b))) * s - RationalFn(Rational(f.a));
    out *= pow(lin, f.e);
  }
  return out;
}

RationalFn topological(unsigned m, unsigned n) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "topological requires m, n >= 1");
  if (m > n) std::swap(m, n);
  MultiPoly num(1), den(1);
  const MultiPoly s = MultiPoly::var(Var::s);
  for (unsigned i = 0; i < m; ++i) {
    num *= s - MultiPoly(static_cast<long>(i));
    den *= s - MultiPoly(static_cast<long>(n + i));
  }
  return RationalFn(std::move(num), std::move(den));
}

namespace {

Rational abscissa_impl(const CycloFactorization& F, long shift) {
  bool have = false;
  Rational best;
  for (const CycloFactor& f : F.factors()) {
    if (f.e >= 0) continue;
    Rational cand = make_rational(Int(f.a + shift), Int(static_cast<long>(f.b)));
    if (!have || cand > best) {
      have = true;
      best = cand;
    }
  }
  if (!have) fail(Errc::entire_function, "no denominator factors: entire function");
  return best;
}

}  // namespace

Rational local_abscissa(const CycloFactorization& F) { return abscissa_impl(F, 0); }
Rational global_abscissa(const CycloFactorization& F) { return abscissa_impl(F, 1); }

std::vector<Int> global_dirichlet_coeffs(unsigned m, unsigned n, unsigned K) {
  std::vector<Int> out(K + 1, Int(0));
  if (K == 0) return out;
  out[1] = 1;
  const RationalFn local = local_multiplicative(m, n);
  // smallest prime factor sieve
  std::vector<unsigned> spf(K + 1, 0);
  for (unsigned i = 2; i <= K; ++i)
    if (spf[i] == 0)
      for (unsigned j = i; j <= K; j += i)
        if (spf[j] == 0) spf[j] = i;
  // a_{p^k} per prime
  std::map<unsigned, std::vector<Int>> prime_coeffs;
  for (unsigned i = 2; i <= K; ++i) {
    if (spf[i] != i) continue;
    unsigned kmax = 0;
    unsigned long pw = 1;
    while (pw <= K / i) {
      pw *= i;
      ++kmax;
    }
    DirichletTrunc series = series_of_ratfn_at(local, kmax, Int(static_cast<long>(i)));
    std::vector<Int> coeffs(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
      Rational c = series.coeff(k).constant_value();
      if (c.get_den() != 1) fail(Errc::invalid_args, "non-integral Dirichlet coefficient");
      coeffs[k] = c.get_num();
    }
    prime_coeffs[i] = std::move(coeffs);
  }
  for (unsigned i = 2; i <= K; ++i) {
    const unsigned p = spf[i];
    unsigned rest = i, k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    out[i] = prime_coeffs[p][k] * out[rest];
  }
  return out;
}

std::map<Int, Int> global_dirichlet_coeffs_splitting(unsigned m, unsigned n, unsigned K,
                                                     const std::vector<Int>& splitting) {
  const RationalFn local = local_multiplicative(m, n);
  std::map<Int, Int> coeffs;
  coeffs[Int(1)] = 1;
  for (const Int& q : splitting) {
    if (q < 2 || !is_prime_power(q))
      fail(Errc::invalid_args, "residue cardinalities must be prime powers >= 2");
    if (q > K) continue;
    unsigned kmax = 0;
    Int pw = 1;
    while (pw * q <= K) {
      pw *= q;
      ++kmax;
    }
    if (kmax == 0) continue;
    DirichletTrunc series = series_of_ratfn_at(local, kmax, q);
    std::map<Int, Int> next = coeffs;
    for (const auto& [norm, val] : coeffs) {
      Int nq = norm;
      for (unsigned k = 1; k <= kmax; ++k) {
        nq *= q;
        if (nq > K) break;
        Rational c = series.coeff(k).constant_value();
        if (c.get_den() != 1) fail(Errc::invalid_args, "non-integral Dirichlet coefficient");
        next[nq] += val * c.get_num();
      }
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

namespace {

Rational local_factor_exact(unsigned m, unsigned n, const Int& q, const Rational& t) {
  Rational num(1), den(1), qp(1);
  for (unsigned i = 0; i < m; ++i) {
    num *= 1 - qp * t;
    den *= 1 - qp * Rational(pow_int(q, n)) * t;
    qp *= Rational(q);
  }
  return num / den;
}

Rational product_tree(const std::vector<Rational>& vals, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return vals[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(vals, lo, mid) * product_tree(vals, mid, hi);
}

}  // namespace

EulerEval global_euler(unsigned m, unsigned n, const std::vector<Int>& splitting,
                       const Rational& s, unsigned prec_bits) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "global_euler requires m, n >= 1");
  if (m > n) std::swap(m, n);
  if (s <= Rational(static_cast<long>(m + n)))
    fail(Errc::divergent_region, "Euler product diverges for s <= m + n");
  for (const Int& q : splitting)
    if (q < 2 || !is_prime_power(q))
      fail(Errc::invalid_args, "residue cardinalities must be prime powers >= 2");

  EulerEval out;
  out.places = splitting.size();
  if (splitting.empty()) {
    out.exact = s.get_den() == 1;
    out.value = 1;
    out.approx = 1.0;
    return out;
  }
  if (s.get_den() == 1) {
    const unsigned long si = s.get_num().get_ui();
    std::vector<Rational> vals;
    vals.reserve(splitting.size());
    for (const Int& q : splitting) vals.push_back(local_factor_exact(m, n, q, 1 / Rational(pow_int(q, si))));
    out.exact = true;
    out.value = product_tree(vals, 0, vals.size());
    out.approx = out.value.get_d();
    return out;
  }
  // Non-integer rational s = a/b: t = q^{-s} as a dyadic rational computed by
  // an exact integer root, product over interval endpoints for the bound.
  const unsigned long a = s.get_num().get_ui();
  const unsigned long b = s.get_den().get_ui();
  const unsigned B = prec_bits;
  const Rational eps = make_rational(Int(2), pow_int(Int(2), B));  // |t_hat - t| <= 2^{1-B}
  std::vector<Rational> mid, lo, hi;
  mid.reserve(splitting.size());
  for (const Int& q : splitting) {
    Int qa = pow_int(q, a);
    Int scaled = pow_int(Int(2), static_cast<unsigned long>(b) * B) / qa;
    Int root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), b);
    Rational t_hat = make_rational(root, pow_int(Int(2), B));
    mid.push_back(local_factor_exact(m, n, q, t_hat));
    lo.push_back(local_factor_exact(m, n, q, t_hat - eps));
    hi.push_back(local_factor_exact(m, n, q, t_hat + eps));
  }
  out.exact = false;
  out.value = product_tree(mid, 0, mid.size());
  out.approx = out.value.get_d();
  Rational p_lo = product_tree(lo, 0, lo.size());
  Rational p_hi = product_tree(hi, 0, hi.size());
  Rational spread1 = p_hi - out.value;
  Rational spread2 = out.value - p_lo;
  Rational spread = spread1 > spread2 ? spread1 : spread2;
  if (spread < 0) spread = -spread;
  out.error_bound = spread.get_d();
  return out;
}

}  // namespace repzeta
