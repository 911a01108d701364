#ifndef REPZETA_GZETA_HPP
#define REPZETA_GZETA_HPP

#include <map>
#include <optional>

#include "repzeta/qcomb.hpp"
#include "repzeta/series.hpp"

namespace repzeta {

// A zeta function as a signed multiset of factors (1 - q^a t^b)^e with an
// optional monomial prefactor q^pre_q t^pre_t.
struct CycloFactor {
  long a = 0;
  unsigned b = 1;
  long e = 1;
  bool operator==(const CycloFactor& o) const { return a == o.a && b == o.b && e == o.e; }
};

class CycloFactorization {
 public:
  void add(long a, unsigned b, long e);
  void set_prefactor(long q_exp, unsigned t_exp) { pre_q_ = q_exp; pre_t_ = t_exp; }

  const std::vector<CycloFactor>& factors() const { return factors_; }
  long prefactor_q() const { return pre_q_; }
  unsigned prefactor_t() const { return pre_t_; }

  RationalFn expand() const;
  std::string str() const;

  bool operator==(const CycloFactorization& o) const {
    return factors_ == o.factors_ && pre_q_ == o.pre_q_ && pre_t_ == o.pre_t_;
  }

 private:
  std::vector<CycloFactor> factors_;  // sorted by (a, b), merged, e != 0
  long pre_q_ = 0;
  unsigned pre_t_ = 0;
};

// f^I(X) = (n choose I+n-m)_X (X^{i_1+1}; X)_{m-i_1};  f^{emptyset} = 1.
MultiPoly f_I(unsigned m, unsigned n, const OrderedSubset& I);

// sum_I f^I(q^-1) prod_{i in I} q^{(m-i)(n+i)} t^{m-i} / (1 - q^{(m-i)(n+i)} t^{m-i}).
// Symbolic in (q, t), or with q specialized when a prime is supplied.
RationalFn local_additive(unsigned m, unsigned n, const std::optional<Int>& q_value = {});

// (q^{-s}; q)_m / (q^{n-s}; q)_m with t = q^{-s}.
RationalFn local_multiplicative(unsigned m, unsigned n);

// Numerator factors (1 - q^i t), denominator (1 - q^{n+i} t), i = 0..m-1.
CycloFactorization local_product_form(unsigned m, unsigned n);

// Substitute s -> k s, i.e. t-degrees scale by k.
CycloFactorization central_product(const CycloFactorization& F, unsigned k);

// First-order (q-1)-expansion: each factor (1 - q^{a-bs})^e becomes (bs-a)^e.
// UnbalancedDegrees unless the signed factor count is zero.
RationalFn topo_of_factorization(const CycloFactorization& F);

// prod_{i=0}^{m-1} (s - i)/(s - n - i).
RationalFn topological(unsigned m, unsigned n);

// Abscissa of the local factor: max a/b over denominator factors.
Rational local_abscissa(const CycloFactorization& F);
// Abscissa of the assembled global Euler product: max (a+1)/b.
Rational global_abscissa(const CycloFactorization& F);

// Dirichlet coefficients of the global zeta over Q: multiplicative, with
// prime-power values read off the local series at q = p. out[i] for i <= K.
std::vector<Int> global_dirichlet_coeffs(unsigned m, unsigned n, unsigned K);

// Coefficients indexed by ideal norms for user-supplied residue cardinalities.
std::map<Int, Int> global_dirichlet_coeffs_splitting(unsigned m, unsigned n, unsigned K,
                                                     const std::vector<Int>& splitting);

struct EulerEval {
  bool exact = false;       // integer s: the partial product is an exact rational
  Rational value;           // the computed partial product
  double approx = 0.0;
  double error_bound = 0.0; // dyadic-approximation bound (0 when exact)
  std::size_t places = 0;
};

// Truncated Euler product over the supplied residue cardinalities at real
// part s; DivergentRegion unless s > m + n.
EulerEval global_euler(unsigned m, unsigned n, const std::vector<Int>& splitting,
                       const Rational& s, unsigned prec_bits = 128);

}  // namespace repzeta

#endif  // REPZETA_GZETA_HPP
