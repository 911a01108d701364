#ifndef REPZETA_POINCARE_HPP
#define REPZETA_POINCARE_HPP

#include <optional>

#include "repzeta/lattice.hpp"
#include "repzeta/qcomb.hpp"
#include "repzeta/series.hpp"
#include "repzeta/snf.hpp"

namespace repzeta {

struct EnumLimits {
  double max_enum_points = 1e8;   // brute-force points per level
  double max_class_points = 1e7;  // p^{d'} for classification-style scans
  bool unsafe = false;

  void check(double points, double bound, const char* what) const {
    if (!unsafe && points > bound)
      fail(Errc::too_large, std::string(what) + ": enumeration guard exceeded (" +
                                std::to_string(points) + " points)");
  }
};

// A pattern (I, r_I): I = {i_1 < ... < i_l} in [h-1]_0, r_j >= 1.
struct PatternKey {
  std::vector<unsigned> I;
  std::vector<unsigned> r;
  unsigned h = 0;

  unsigned level() const;   // N = sum r_j
  unsigned weight() const;  // sum r_j (h - i_j)
  // (0^{mu_l}, r_l^{mu_{l-1}}, (r_l+r_{l-1})^{mu_{l-2}}, ..., N^{mu_0}), capped at N.
  std::vector<unsigned> target_nu() const;
};

std::vector<PatternKey> patterns_up_to_weight(unsigned h, unsigned K);

// nu_{R,r}(w): capped paired elementary-divisor valuations of R(w).
inline NuVector nu_vector(const CommutatorMatrix& Cm, const IntVec& w, unsigned r, const Int& p) {
  return nu_vector_of_matrix(evaluate_matrix(Cm, w), r, p);
}

// Coefficient-exact Poincare series of the trimmed commutator matrix up to
// t-weight K, by direct enumeration of primitive vectors per pattern level.
DirichletTrunc brute_poincare(const LieLattice& L, const Int& p, unsigned K, int threads = 1,
                              const EnumLimits& limits = {});

struct KernelClass {
  int d_c = 0;        // dim ker R-bar (full-matrix convention)
  int d_prime_c = 0;  // dim (ker R-bar)'
  std::vector<std::int64_t> members;  // encoded points of F_p^{d'}

  long long size() const { return static_cast<long long>(members.size()); }
};

struct KernelClassification {
  Int p;
  std::int64_t pl = 0;
  int d = 0, dprime = 0;
  std::vector<KernelClass> classes;
  std::vector<std::int32_t> class_of;  // encoded point -> class id

  ModVec decode(std::int64_t index) const;
  std::int64_t encode(const ModVec& x) const;
  int class_with(int d_c, int d_prime_c) const;  // -1 when absent
};

// Partition of F_p^{d'} by (dim ker, dim (ker)').
KernelClassification classify_kernels(const LieLattice& L, const Int& p,
                                      const EnumLimits& limits = {});

// |F_S| for a sequence of kernel classes with strictly monotone d_c, given by
// class ids into the classification. NotASequence if d_c values repeat.
long long enumerate_F_S(const KernelClassification& cls, const LieLattice& L,
                        std::vector<int> class_ids);
// Convenience: classes selected by their (d_c, d'_c) labels.
long long enumerate_F_S(const LieLattice& L, const Int& p,
                        const std::vector<std::pair<int, int>>& classes,
                        const EnumLimits& limits = {});

enum class ProbeStatus { pass, fail, inconclusive };
const char* to_string(ProbeStatus s);

struct SmoothnessReport {
  ProbeStatus status = ProbeStatus::pass;
  // Points whose lifting condition could not be certified by any tried lift.
  std::vector<ModVec> inconclusive_points;
  struct Witness {
    ModVec point;
    IntVec lift;
    std::vector<unsigned> derived_valuations;
  };
  std::optional<Witness> fail_witness;  // genuine violation of the isolation condition
  long long points_checked = 0;
  long long canonical_lift_ok = 0;
  long long forced_lift_ok = 0;
};

// Probes geometric smoothness of the rank loci over all nonzero residue
// points: per point, certify the lifting condition (canonical lift, then a
// kernel-forcing lift), and test isolation of the kernel's derived sublattice
// on every certified lift. A definitive counterexample to isolation is FAIL;
// unresolved lifting points make the report INCONCLUSIVE.
SmoothnessReport smoothness_probe(const LieLattice& L, const Int& p,
                                  const EnumLimits& limits = {});

struct ThmTechResult {
  RationalFn zeta;  // rational function in t, q specialized to p
  std::optional<ProbeStatus> probe;
};

// Kernel-class evaluation of the Poincare series:
//   sum_I sum_{S in K_I} |F_S| q^{-(d'-d'_{c_1})} prod_c gp(q^{d'-d'_c} t^{(d-d_c)/2})
// with c_1 the class of smallest d_c in S.
ThmTechResult thm_tech_eval(const LieLattice& L, const Int& p, bool run_probe = true,
                            const EnumLimits& limits = {});

struct AlphaStratum {
  int dim_rad = 0;
  int dim_rad_derived = 0;
  std::optional<Rational> root;  // absent for the degenerate stratum
  long long points = 0;
};

struct AlphaReport {
  Rational alpha;
  ModVec witness;
  std::vector<AlphaStratum> strata;
};

// max over nondegenerate functionals of the root of
// rho_w(s) = 2(d' - dim (rad w)') - (d - dim rad w) s.
AlphaReport alpha_invariant(const LieLattice& L, const Int& p, const EnumLimits& limits = {});

}  // namespace repzeta

#endif  // REPZETA_POINCARE_HPP
