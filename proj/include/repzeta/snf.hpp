#ifndef REPZETA_SNF_HPP
#define REPZETA_SNF_HPP

#include <cstdint>
#include <vector>

#include "repzeta/core.hpp"

namespace repzeta {

inline constexpr unsigned kValInfinity = 0xffffffffu;

struct SnfResult {
  std::vector<Int> diagonal;  // nonnegative, d_i | d_{i+1}, zeros last
  int rank = 0;               // count of nonzero diagonal entries
};

// Exact Smith normal form by fraction-free elimination with smallest-pivot
// selection and in-loop divisibility enforcement.
SnfResult smith_normal_form(IntMat A);

struct SnfTransform {
  SnfResult snf;
  IntMat V;  // unimodular; A*V has column i zero iff diagonal[i] = 0 (or i >= #rows)
};
SnfTransform smith_normal_form_with_transform(IntMat A);

// p-adic valuations of the SNF diagonal, ascending; zeros map to kValInfinity.
std::vector<unsigned> elementary_divisor_valuations(const IntMat& M, const Int& p);

Int det_bareiss(IntMat A);

// Basis (columns) of {v in Z^n : Mv = 0}, saturated (quotient torsion-free).
IntMat saturated_kernel(const IntMat& M);

// --- mod-p linear algebra in machine words -------------------------------

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
ModMat reduce_mod_p(const IntMat& M, std::int64_t p);
int rank_mod_p(ModMat M, std::int64_t p);
int rank_mod_p(const IntMat& M, const Int& p);
// Columns form an echelonized basis of the mod-p null space.
ModMat kernel_mod_p(ModMat M, std::int64_t p);
ModMat kernel_mod_p(const IntMat& M, const Int& p);
// One solution of Ax = b mod p, or empty if inconsistent.
bool solve_mod_p(ModMat A, ModVec b, std::int64_t p, ModVec& x);

// --- canonical B matrices -------------------------------------------------

// The i x j block matrix with identity k-block and zeros elsewhere.
struct CanonicalB {
  int rows, cols, k;
};

// True iff M has Smith normal form B over the p-local integers: rational
// rank k and all nonzero elementary divisors of valuation 0.
bool snf_equals_B(const IntMat& M, const CanonicalB& B, const Int& p);

// --- nu vectors -----------------------------------------------------------

struct NuVector {
  std::vector<unsigned> entries;  // nondecreasing, capped at level
  unsigned level = 0;
  bool operator==(const NuVector& o) const { return entries == o.entries && level == o.level; }
};

// Paired elementary-divisor valuations of an (alternating) evaluation,
// capped at r: the first 2h valuations must pair up as (a_1,a_1,...,a_h,a_h).
NuVector nu_vector_of_matrix(const IntMat& M, unsigned r, const Int& p);

}  // namespace repzeta

#endif  // REPZETA_SNF_HPP
