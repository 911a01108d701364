#ifndef REPZETA_LATTICE_HPP
#define REPZETA_LATTICE_HPP

#include <string>
#include <vector>

#include "repzeta/core.hpp"

namespace repzeta {

// 2-nilpotent Lie lattice over Z in an adapted basis: the last d' basis
// elements span the derived sublattice, all brackets land there.
// Structure constants are stored as d' slices: slice k is the d x d
// antisymmetric matrix of lambda_{ij}^k.
class LieLattice {
 public:
  LieLattice(int d, int dprime, std::string name = "");

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // [b_i, b_j] = sum_k coeffs[k] b_{d-d'+k}; stores the antisymmetric pair.
  void set_bracket(int i, int j, const IntVec& coeffs);
  IntVec bracket_coeffs(int i, int j) const;
  // Bilinear extension to coordinate vectors of length d (or d - d').
  IntVec bracket_of(const IntVec& u, const IntVec& v) const;

  const std::vector<IntMat>& slices() const { return slices_; }

  // Unchecked single-entry write; exists so validate() can be pointed at
  // deliberately broken data.
  void set_lambda_raw(int i, int j, int k, const Int& v) { slices_.at(k)(i, j) = v; }

  std::string canonical_json() const;

 private:
  int d_, dprime_;
  std::string name_;
  std::vector<IntMat> slices_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieLattice& L);

// The lattice <c_1..c_{m+n}, z_11..z_mn | [c_i, c_{m+j}] = z_ij>.
LieLattice make_G_mn(unsigned m, unsigned n);

// L + an abelian complement of the given rank (inserted before the derived block).
LieLattice direct_sum_abelian(const LieLattice& L, int extra_rank);

// Matrix of linear forms sum_k lambda_{ij}^k X_k; trimmed drops the zero
// rows/columns belonging to the derived block.
struct CommutatorMatrix {
  int size = 0;
  bool trimmed = false;
  std::vector<IntMat> slices;  // one per variable X_k

  int dprime() const { return static_cast<int>(slices.size()); }
};

CommutatorMatrix commutator_matrix(const LieLattice& L, bool trimmed);

// Evaluation at an integer point w of length d' (LengthMismatch otherwise).
IntMat evaluate_matrix(const CommutatorMatrix& Cm, const IntVec& w);

// Rewrite in the basis whose elements are the columns of U. U must be
// unimodular (NotUnimodular) and block-compatible with the adapted basis
// (NotAdapted: the top-right (d-d') x d' block must vanish).
LieLattice base_change(const LieLattice& L, const IntMat& U);

// --- file format -----------------------------------------------------------
// {"name": str, "d": int, "d_prime": int,
//  "brackets": [{"i": int, "j": int, "coeffs": [int; d_prime]}, ...]}
// 1-based indices, only i < j entries, omitted pairs are zero.

LieLattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const LieLattice& L);
LieLattice load_lattice(const std::string& path);

std::uint64_t lattice_hash(const LieLattice& L);

}  // namespace repzeta

#endif  // REPZETA_LATTICE_HPP
