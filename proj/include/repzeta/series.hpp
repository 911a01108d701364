#ifndef REPZETA_SERIES_HPP
#define REPZETA_SERIES_HPP

#include <optional>
#include <vector>

#include "repzeta/ratfn.hpp"

namespace repzeta {

enum class QMode { symbolic, numeric };

// Truncated power series in t with coefficients that are exact polynomials in
// q (symbolic mode) or exact rationals (numeric mode, q specialized to a
// prime). Equality compares order and coefficients; the mode is metadata.
class DirichletTrunc {
 public:
  DirichletTrunc(unsigned order, QMode mode = QMode::symbolic, Int prime = 0)
      : order_(order), coeffs_(order + 1), mode_(mode), prime_(std::move(prime)) {}

  unsigned order() const { return order_; }
  QMode mode() const { return mode_; }
  const Int& prime() const { return prime_; }

  const MultiPoly& coeff(unsigned k) const { return coeffs_.at(k); }
  void set_coeff(unsigned k, MultiPoly c) { coeffs_.at(k) = std::move(c); }
  void add_coeff(unsigned k, const MultiPoly& c) { coeffs_.at(k) += c; }

  bool operator==(const DirichletTrunc& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const DirichletTrunc& o) const { return !(*this == o); }

  DirichletTrunc mul_trunc(const DirichletTrunc& o) const;

  std::string str() const;

 private:
  unsigned order_;
  std::vector<MultiPoly> coeffs_;
  QMode mode_;
  Int prime_;
};

// Truncation of 1/(1 - q^a t^b) to order K; a >= 0, b >= 1.
DirichletTrunc expand_factor(long a, unsigned b, unsigned K);

// Power-series expansion in t of a rational function of q and t whose
// denominator is a unit at t = 0 (non_unit_denominator otherwise).
DirichletTrunc series_of_ratfn(const RationalFn& f, unsigned K);

// Same, with q specialized to p first; coefficients are exact rationals.
DirichletTrunc series_of_ratfn_at(const RationalFn& f, unsigned K, const Int& p);

}  // namespace repzeta

#endif  // REPZETA_SERIES_HPP
