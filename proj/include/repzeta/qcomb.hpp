#ifndef REPZETA_QCOMB_HPP
#define REPZETA_QCOMB_HPP

#include <initializer_list>
#include <vector>

#include "repzeta/ratfn.hpp"

namespace repzeta {

// Ordered subset {i_1 < i_2 < ... < i_l} of the naturals.
struct OrderedSubset {
  std::vector<unsigned> elems;

  OrderedSubset() = default;
  OrderedSubset(std::initializer_list<unsigned> xs) : OrderedSubset(std::vector<unsigned>(xs)) {}
  explicit OrderedSubset(std::vector<unsigned> xs);

  bool empty() const { return elems.empty(); }
  std::size_t size() const { return elems.size(); }
  unsigned front() const { return elems.front(); }
  unsigned back() const { return elems.back(); }

  // I + a, elementwise shift.
  OrderedSubset shifted(unsigned a) const;
  // Largest element < bound, i.e. subset of [bound-1]_0 = {0,...,bound-1}.
  bool within(unsigned bound) const { return empty() || back() < bound; }

  // All subsets of [j-1]_0, by increasing bitmask.
  static std::vector<OrderedSubset> subsets_of(unsigned j);
};

// (1-X)(1-X^2)...(1-X^N); the empty product for N = 0.
MultiPoly q_bracket_factorial(unsigned N);

// Gauss polynomial (a choose b)_X. InvalidArgs when b > a.
MultiPoly gauss_binomial(unsigned a, unsigned b);

// Pochhammer symbol with k factors: prod_{i=0}^{k-1} (1 - base*ratio^i).
MultiPoly pochhammer(const MultiPoly& base, const MultiPoly& ratio, unsigned k);
RationalFn pochhammer_rf(const RationalFn& base, const RationalFn& ratio, unsigned k);

// X-multinomial (j choose I)_X = (j choose i_l)(i_l choose i_{l-1})...(i_2 choose i_1).
MultiPoly x_multinomial(unsigned j, const OrderedSubset& I);

// gp(w) = w/(1-w), the folded geometric series.
RationalFn gp(const RationalFn& w);

// Number of i x j matrices over F_q of rank r, as a polynomial in q.
MultiPoly rank_count(unsigned i, unsigned j, unsigned r);
Int rank_count_at(unsigned i, unsigned j, unsigned r, const Int& p);

// Exhaustive count over F_p; guard p^(i*j) <= 10^7 (TooLarge).
Int brute_rank_count(unsigned i, unsigned j, unsigned r, const Int& p);

// (j+a choose I+a)_X = (j choose I)_X (X^{i_1+1+a};X)_{j-i_1} / (X^{i_1+1};X)_{j-i_1},
// checked as a cleared polynomial identity.
bool verify_translation_lemma(unsigned a, unsigned j, const OrderedSubset& I);

// sum_{I subset [j-1]_0} (j choose I)_{X^-1} (Y X^{-i_1-1}; X^-1)_{j-i_1}
//   prod_{i in I} gp((X^i Z)^{j-i})  =  (X^-j Y Z; X)_j / (Z; X)_j.
bool verify_sv_identity(unsigned j, unsigned symbolic_bound = 3);
bool verify_sv_identity_at(unsigned j, const Rational& x, const Rational& y, const Rational& z);

}  // namespace repzeta

#endif  // REPZETA_QCOMB_HPP
