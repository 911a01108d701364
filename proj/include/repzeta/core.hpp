#ifndef REPZETA_CORE_HPP
#define REPZETA_CORE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

// Dense Eigen types over GMP scalars. Enough NumTraits for storage,
// block ops and coefficient arithmetic; no decompositions are used.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 120,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace repzeta {

using Int = mpz_class;
using Rational = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
// Residue arithmetic is done in machine words (primes here are tiny).
using ModMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ModVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

enum class Errc {
  invalid_args,
  too_large,
  overflow,
  non_unit_denominator,
  specialization_pole,
  pairing_violation,
  not_unimodular,
  not_adapted,
  length_mismatch,
  not_a_sequence,
  no_admissible_omega,
  divergent_region,
  entire_function,
  unbalanced_degrees,
  parse_error,
  validation_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// The closed variable universe. Canonical order q < t < X < Y < Z < s.
enum class Var : int { q = 0, t = 1, X = 2, Y = 3, Z = 4, s = 5 };
inline constexpr int kNumVars = 6;
inline constexpr std::array<char, kNumVars> kVarNames = {'q', 't', 'X', 'Y', 'Z', 's'};

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::invalid_args, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational make_rational(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

Int pow_int(const Int& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

// p-adic valuation of a nonzero integer.
unsigned p_valuation(const Int& n, const Int& p);

bool is_prime(const Int& n);
bool is_prime_power(const Int& n);
std::vector<Int> primes_below(unsigned long bound);

std::string to_string(const Int& n);
std::string to_string(const Rational& r);

// FNV-1a, used for provenance hashes of canonical serializations.
std::uint64_t fnv1a(std::string_view data);

}  // namespace repzeta

#endif  // REPZETA_CORE_HPP
