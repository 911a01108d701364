#include "repzeta/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace repzeta {

unsigned PatternKey::level() const {
  unsigned n = 0;
  for (unsigned rj : r) n += rj;
  return n;
}

unsigned PatternKey::weight() const {
  unsigned w = 0;
  for (std::size_t j = 0; j < I.size(); ++j) w += r[j] * (h - I[j]);
  return w;
}

std::vector<unsigned> PatternKey::target_nu() const {
  const std::size_t l = I.size();
  std::vector<unsigned> bounds;  // i_0 = 0, i_1..i_l, i_{l+1} = h
  bounds.push_back(0);
  for (unsigned i : I) bounds.push_back(i);
  bounds.push_back(h);
  std::vector<unsigned> out;
  out.reserve(h);
  unsigned value = 0;
  for (std::size_t j = l;; --j) {
    const unsigned mu = bounds[j + 1] - bounds[j];
    for (unsigned c = 0; c < mu; ++c) out.push_back(value);
    if (j == 0) break;
    value += r[j - 1];
  }
  return out;
}

std::vector<PatternKey> patterns_up_to_weight(unsigned h, unsigned K) {
  std::vector<PatternKey> out;
  if (h == 0) return out;
  for (const OrderedSubset& I : OrderedSubset::subsets_of(h)) {
    if (I.empty()) continue;
    PatternKey pk;
    pk.I = I.elems;
    pk.h = h;
    pk.r.assign(I.size(), 0);
    // DFS over r_1..r_l with the partial weight bounded by K.
    auto rec = [&](auto&& self, std::size_t j, unsigned weight) -> void {
      if (j == pk.I.size()) {
        out.push_back(pk);
        return;
      }
      const unsigned unit = pk.h - pk.I[j];
      unsigned remaining_min = 0;  // each later r is at least 1
      for (std::size_t k = j + 1; k < pk.I.size(); ++k) remaining_min += pk.h - pk.I[k];
      for (unsigned rj = 1; weight + rj * unit + remaining_min <= K; ++rj) {
        pk.r[j] = rj;
        self(self, j + 1, weight + rj * unit);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

namespace {

std::vector<ModMat> trimmed_mod_slices(const LieLattice& L, std::int64_t pl) {
  const int base = L.d() - L.dprime();
  std::vector<ModMat> out;
  out.reserve(L.dprime());
  for (const IntMat& S : L.slices()) {
    ModMat M(base, base);
    Int pp(static_cast<long>(pl)), r;
    for (int i = 0; i < base; ++i)
      for (int j = 0; j < base; ++j) {
        mpz_fdiv_r(r.get_mpz_t(), S(i, j).get_mpz_t(), pp.get_mpz_t());
        M(i, j) = r.get_si();
      }
    out.push_back(std::move(M));
  }
  return out;
}

ModMat eval_mod(const std::vector<ModMat>& slices, const ModVec& x, std::int64_t pl) {
  const int n = slices.empty() ? 0 : static_cast<int>(slices[0].rows());
  ModMat out = ModMat::Zero(n, n);
  for (std::size_t k = 0; k < slices.size(); ++k) {
    if (x(static_cast<int>(k)) == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += x(static_cast<int>(k)) * slices[k](i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, j) %= pl;
      if (out(i, j) < 0) out(i, j) += pl;
    }
  return out;
}

// Bracket of two trimmed-coordinate vectors mod p, as a vector of length d'.
ModVec bracket_mod(const std::vector<ModMat>& slices, const ModVec& u, const ModVec& v,
                   std::int64_t pl) {
  const int n = static_cast<int>(u.size());
  ModVec out = ModVec::Zero(static_cast<int>(slices.size()));
  for (std::size_t k = 0; k < slices.size(); ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) {
      if (u(i) == 0) continue;
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j) row += slices[k](i, j) * v(j);
      acc = (acc + u(i) * (row % pl)) % pl;
    }
    out(static_cast<int>(k)) = (acc % pl + pl) % pl;
  }
  return out;
}

// Echelonized basis (rows) of the span of the given rows mod p.
ModMat row_span_basis(ModMat rows, std::int64_t pl) {
  if (rows.rows() == 0) return ModMat(0, rows.cols());
  ModMat M = rows;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      M(i, j) %= pl;
      if (M(i, j) < 0) M(i, j) += pl;
    }
  // reuse rank elimination, keeping nonzero rows
  int row = 0;
  for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < M.rows(); ++i)
      if (M(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) M.row(pr).swap(M.row(row));
    const std::int64_t inv = mod_inverse(M(row, col), pl);
    for (int j = col; j < M.cols(); ++j) M(row, j) = (M(row, j) * inv) % pl;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, col) == 0) continue;
      const std::int64_t f = M(i, col);
      for (int j = col; j < M.cols(); ++j) {
        M(i, j) = (M(i, j) - f * M(row, j)) % pl;
        if (M(i, j) < 0) M(i, j) += pl;
      }
    }
    ++row;
  }
  return ModMat(M.topRows(row));
}

// Derived subspace of ker R-bar(x): echelon basis rows in F_p^{d'}.
ModMat kernel_derived_basis(const std::vector<ModMat>& slices, const ModMat& kernel_cols,
                            std::int64_t pl) {
  const int kdim = static_cast<int>(kernel_cols.cols());
  const int dp = static_cast<int>(slices.size());
  const int pairs = kdim * (kdim - 1) / 2;
  ModMat W(pairs, dp);
  int row = 0;
  for (int a = 0; a < kdim; ++a)
    for (int b = a + 1; b < kdim; ++b, ++row) {
      ModVec br = bracket_mod(slices, ModVec(kernel_cols.col(a)), ModVec(kernel_cols.col(b)), pl);
      for (int k = 0; k < dp; ++k) W(row, k) = br(k);
    }
  return row_span_basis(std::move(W), pl);
}

}  // namespace

// --- brute force ------------------------------------------------------------

DirichletTrunc brute_poincare(const LieLattice& L, const Int& p, unsigned K, int threads,
                              const EnumLimits& limits) {
  if (!is_prime(p)) fail(Errc::invalid_args, "brute_poincare requires a prime");
  const CommutatorMatrix Cm = commutator_matrix(L, true);
  const unsigned h = static_cast<unsigned>(Cm.size) / 2;
  const int dp = L.dprime();
  DirichletTrunc out(K, QMode::numeric, p);
  out.set_coeff(0, MultiPoly(1));
  std::vector<PatternKey> pats = patterns_up_to_weight(h, K);
  std::map<unsigned, std::vector<const PatternKey*>> by_level;
  for (const PatternKey& pk : pats) by_level[pk.level()].push_back(&pk);

  const std::int64_t pl = p.get_si();
  for (const auto& [N, list] : by_level) {
    limits.check(std::pow(p.get_d(), double(N) * dp), limits.max_enum_points, "brute_poincare");
    const Int total_i = pow_int(p, static_cast<unsigned long>(N) * dp);
    if (!total_i.fits_slong_p()) fail(Errc::too_large, "brute_poincare: level too large");
    const std::int64_t total = total_i.get_si();
    std::int64_t pN = 1;
    for (unsigned i = 0; i < N; ++i) pN *= pl;

    std::vector<std::vector<unsigned>> targets;
    targets.reserve(list.size());
    for (const PatternKey* pk : list) targets.push_back(pk->target_nu());

    const int nthreads = std::max(1, threads);
    std::vector<std::vector<long long>> counts(nthreads, std::vector<long long>(list.size(), 0));
    auto worker = [&](int tid, std::int64_t lo, std::int64_t hi) {
      IntVec w(dp);
      for (std::int64_t idx = lo; idx < hi; ++idx) {
        std::int64_t v = idx;
        bool primitive = false;
        for (int k = 0; k < dp; ++k) {
          const std::int64_t digit = v % pN;
          v /= pN;
          w(k) = static_cast<long>(digit);
          primitive |= digit % pl != 0;
        }
        if (!primitive) continue;
        NuVector nu = nu_vector(Cm, w, N, p);
        for (std::size_t s = 0; s < targets.size(); ++s)
          if (nu.entries == targets[s]) ++counts[tid][s];
      }
    };
    if (nthreads == 1) {
      worker(0, 0, total);
    } else {
      std::vector<std::thread> pool;
      const std::int64_t chunk = (total + nthreads - 1) / nthreads;
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(worker, t, t * chunk, std::min<std::int64_t>(total, (t + 1) * chunk));
      for (std::thread& th : pool) th.join();
    }
    for (std::size_t s = 0; s < list.size(); ++s) {
      long long c = 0;
      for (int t = 0; t < nthreads; ++t) c += counts[t][s];
      if (c != 0) out.add_coeff(list[s]->weight(), MultiPoly(Rational(static_cast<long>(c))));
    }
  }
  return out;
}

// --- kernel classes -----------------------------------------------------------

ModVec KernelClassification::decode(std::int64_t index) const {
  ModVec x(dprime);
  for (int k = 0; k < dprime; ++k) {
    x(k) = index % pl;
    index /= pl;
  }
  return x;
}

std::int64_t KernelClassification::encode(const ModVec& x) const {
  std::int64_t idx = 0;
  for (int k = dprime - 1; k >= 0; --k) idx = idx * pl + x(k);
  return idx;
}

int KernelClassification::class_with(int d_c, int d_prime_c) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].d_c == d_c && classes[i].d_prime_c == d_prime_c) return static_cast<int>(i);
  return -1;
}

KernelClassification classify_kernels(const LieLattice& L, const Int& p,
                                      const EnumLimits& limits) {
  if (!is_prime(p)) fail(Errc::invalid_args, "classify_kernels requires a prime");
  const int dp = L.dprime();
  limits.check(std::pow(p.get_d(), dp), limits.max_class_points, "classify_kernels");
  KernelClassification cls;
  cls.p = p;
  cls.pl = p.get_si();
  cls.d = L.d();
  cls.dprime = dp;
  const Int total_i = pow_int(p, dp);
  if (!total_i.fits_slong_p()) fail(Errc::too_large, "classify_kernels: p^{d'} too large");
  const std::int64_t total = total_i.get_si();
  const std::vector<ModMat> slices = trimmed_mod_slices(L, cls.pl);

  std::map<std::pair<int, int>, int> ids;
  cls.class_of.assign(total, -1);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    ModVec x = cls.decode(idx);
    ModMat Mbar = eval_mod(slices, x, cls.pl);
    ModMat ker = kernel_mod_p(Mbar, cls.pl);
    const int d_c = static_cast<int>(ker.cols()) + dp;
    const int d_prime_c = static_cast<int>(kernel_derived_basis(slices, ker, cls.pl).rows());
    auto [it, inserted] = ids.emplace(std::make_pair(d_c, d_prime_c), static_cast<int>(cls.classes.size()));
    if (inserted) {
      KernelClass kc;
      kc.d_c = d_c;
      kc.d_prime_c = d_prime_c;
      cls.classes.push_back(std::move(kc));
    }
    cls.classes[it->second].members.push_back(idx);
    cls.class_of[idx] = static_cast<std::int32_t>(it->second);
  }
  // Deterministic order: decreasing d_c (zero point's class first).
  std::vector<int> order(cls.classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cls.classes[a].d_c != cls.classes[b].d_c) return cls.classes[a].d_c > cls.classes[b].d_c;
    return cls.classes[a].d_prime_c > cls.classes[b].d_prime_c;
  });
  std::vector<int> inv(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<int>(i);
  std::vector<KernelClass> sorted;
  sorted.reserve(order.size());
  for (int o : order) sorted.push_back(std::move(cls.classes[o]));
  cls.classes = std::move(sorted);
  for (std::int32_t& c : cls.class_of) c = inv[c];
  return cls;
}

long long enumerate_F_S(const KernelClassification& cls, const LieLattice& L,
                        std::vector<int> class_ids) {
  if (class_ids.empty()) return 1;  // F_emptyset = { () }
  for (int id : class_ids)
    if (id < 0 || id >= static_cast<int>(cls.classes.size()))
      fail(Errc::invalid_args, "unknown kernel class id");
  const std::size_t l = class_ids.size();
  // Normalize to d_c increasing along the sequence (c_1 = smallest kernel).
  bool increasing = true, decreasing = true;
  for (std::size_t j = 1; j < l; ++j) {
    const int prev = cls.classes[class_ids[j - 1]].d_c;
    const int cur = cls.classes[class_ids[j]].d_c;
    if (prev == cur) fail(Errc::not_a_sequence, "kernel-class d_c values must be strictly monotone");
    increasing &= prev < cur;
    decreasing &= prev > cur;
  }
  if (!increasing && !decreasing)
    fail(Errc::not_a_sequence, "kernel-class d_c values must be strictly monotone");
  if (decreasing && l > 1) std::reverse(class_ids.begin(), class_ids.end());

  const std::vector<ModMat> slices = trimmed_mod_slices(L, cls.pl);
  long long count = 0;
  // y_l ranges over the largest-d_c class; x_{j-1} over (ker R-bar(y_j))'.
  auto rec = [&](auto&& self, std::size_t j, const ModVec& y) -> void {
    if (j == 1) {
      ++count;
      return;
    }
    ModMat Mbar = eval_mod(slices, y, cls.pl);
    ModMat ker = kernel_mod_p(Mbar, cls.pl);
    ModMat basis = kernel_derived_basis(slices, ker, cls.pl);
    const int delta = static_cast<int>(basis.rows());
    std::int64_t combos = 1;
    for (int i = 0; i < delta; ++i) combos *= cls.pl;
    ModVec x(cls.dprime), ynext(cls.dprime);
    for (std::int64_t ci = 0; ci < combos; ++ci) {
      std::int64_t v = ci;
      x.setZero();
      for (int a = 0; a < delta; ++a) {
        const std::int64_t ca = v % cls.pl;
        v /= cls.pl;
        if (ca == 0) continue;
        for (int k = 0; k < cls.dprime; ++k) x(k) = (x(k) + ca * basis(a, k)) % cls.pl;
      }
      for (int k = 0; k < cls.dprime; ++k) ynext(k) = (y(k) + x(k)) % cls.pl;
      if (cls.class_of[cls.encode(ynext)] == class_ids[j - 2]) self(self, j - 1, ynext);
    }
  };
  for (std::int64_t member : cls.classes[class_ids[l - 1]].members) rec(rec, l, cls.decode(member));
  return count;
}

long long enumerate_F_S(const LieLattice& L, const Int& p,
                        const std::vector<std::pair<int, int>>& classes,
                        const EnumLimits& limits) {
  KernelClassification cls = classify_kernels(L, p, limits);
  std::vector<int> ids;
  ids.reserve(classes.size());
  for (const auto& [d_c, d_prime_c] : classes) {
    int id = cls.class_with(d_c, d_prime_c);
    if (id < 0)
      fail(Errc::invalid_args, "no kernel class with (d_c, d'_c) = (" + std::to_string(d_c) +
                                   ", " + std::to_string(d_prime_c) + ")");
    ids.push_back(id);
  }
  return enumerate_F_S(cls, L, ids);
}

// --- theorem evaluation -------------------------------------------------------

ThmTechResult thm_tech_eval(const LieLattice& L, const Int& p, bool run_probe,
                            const EnumLimits& limits) {
  KernelClassification cls = classify_kernels(L, p, limits);
  const int d = L.d(), dp = L.dprime();
  const unsigned h = static_cast<unsigned>(d - dp) / 2;
  RationalFn zeta(1);  // the I = emptyset term
  for (const OrderedSubset& I : OrderedSubset::subsets_of(h)) {
    if (I.empty()) continue;
    // Candidate classes per position: d_c = d - 2(h - i_j).
    std::vector<std::vector<int>> cand(I.size());
    bool feasible = true;
    for (std::size_t j = 0; j < I.size() && feasible; ++j) {
      const int want = d - 2 * static_cast<int>(h - I.elems[j]);
      for (std::size_t c = 0; c < cls.classes.size(); ++c)
        if (cls.classes[c].d_c == want) cand[j].push_back(static_cast<int>(c));
      feasible = !cand[j].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> pick(I.size(), 0);
    for (;;) {
      std::vector<int> ids(I.size());
      for (std::size_t j = 0; j < I.size(); ++j) ids[j] = cand[j][pick[j]];
      const long long cnt = enumerate_F_S(cls, L, ids);
      if (cnt != 0) {
        const KernelClass& c1 = cls.classes[ids.front()];  // smallest d_c
        Rational pref = Rational(static_cast<long>(cnt)) /
                        Rational(pow_int(p, static_cast<unsigned long>(dp - c1.d_prime_c)));
        RationalFn term{MultiPoly(pref)};
        for (int id : ids) {
          const KernelClass& c = cls.classes[id];
          const unsigned A = static_cast<unsigned>(dp - c.d_prime_c);
          const unsigned B = static_cast<unsigned>(d - c.d_c) / 2;
          MultiPoly::Exponents e{};
          e[static_cast<int>(Var::t)] = B;
          MultiPoly w = MultiPoly::monomial(Rational(pow_int(p, A)), e);
          term *= gp(RationalFn(w));
        }
        zeta += term;
      }
      // next choice tuple
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == cand[j].size()) {
        pick[j] = 0;
        ++j;
      }
      if (j == pick.size()) break;
    }
  }
  ThmTechResult out{std::move(zeta), std::nullopt};
  if (run_probe) out.probe = smoothness_probe(L, p, limits).status;
  return out;
}

// --- smoothness probe ----------------------------------------------------------

const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::pass: return "pass";
    case ProbeStatus::fail: return "fail";
    case ProbeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Solve R(x) k = 0 over Z for all lifted kernel vectors k, then pick a
// solution congruent to xbar. Returns an empty optional when the saturated
// solution lattice misses xbar mod p.
std::optional<IntVec> kernel_forcing_lift(const CommutatorMatrix& Cm,
                                          const std::vector<ModMat>& slices, const ModVec& xbar,
                                          std::int64_t pl) {
  const int size = Cm.size;
  const int dp = Cm.dprime();
  ModMat Mbar = eval_mod(slices, xbar, pl);
  ModMat ker = kernel_mod_p(Mbar, pl);
  const int kdim = static_cast<int>(ker.cols());
  if (kdim == 0) return std::nullopt;
  IntMat A = IntMat::Zero(kdim * size, dp);
  for (int v = 0; v < kdim; ++v) {
    IntVec kv(size);
    for (int i = 0; i < size; ++i) kv(i) = static_cast<long>(ker(i, v));
    for (int k = 0; k < dp; ++k) {
      for (int row = 0; row < size; ++row) {
        Int acc(0);
        for (int j = 0; j < size; ++j) acc += Cm.slices[k](row, j) * kv(j);
        A(v * size + row, k) = acc;
      }
    }
  }
  IntMat S = saturated_kernel(A);
  if (S.cols() == 0) return std::nullopt;
  ModMat Sbar(S.rows(), S.cols());
  Int pp(static_cast<long>(pl)), r;
  for (int i = 0; i < S.rows(); ++i)
    for (int j = 0; j < S.cols(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), S(i, j).get_mpz_t(), pp.get_mpz_t());
      Sbar(i, j) = r.get_si();
    }
  ModVec c;
  if (!solve_mod_p(Sbar, xbar, pl, c)) return std::nullopt;
  IntVec x = IntVec::Zero(dp);
  for (int j = 0; j < S.cols(); ++j) {
    if (c(j) == 0) continue;
    for (int i = 0; i < dp; ++i) x(i) += Int(static_cast<long>(c(j))) * S(i, j);
  }
  return x;
}

}  // namespace

SmoothnessReport smoothness_probe(const LieLattice& L, const Int& p, const EnumLimits& limits) {
  if (!is_prime(p)) fail(Errc::invalid_args, "smoothness_probe requires a prime");
  const int dp = L.dprime();
  limits.check(std::pow(p.get_d(), dp), limits.max_class_points, "smoothness_probe");
  const CommutatorMatrix Cm = commutator_matrix(L, true);
  const std::int64_t pl = p.get_si();
  const std::vector<ModMat> slices = trimmed_mod_slices(L, pl);
  const Int total_i = pow_int(p, dp);
  if (!total_i.fits_slong_p()) fail(Errc::too_large, "smoothness_probe: p^{d'} too large");
  const std::int64_t total = total_i.get_si();

  SmoothnessReport rep;
  ModVec xbar(dp);
  for (std::int64_t idx = 1; idx < total; ++idx) {  // nonzero residue points only
    std::int64_t v = idx;
    for (int k = 0; k < dp; ++k) {
      xbar(k) = v % pl;
      v /= pl;
    }
    ++rep.points_checked;
    const int rank = rank_mod_p(eval_mod(slices, xbar, pl), pl);
    IntVec lift(dp);
    for (int k = 0; k < dp; ++k) lift(k) = static_cast<long>(xbar(k));
    const CanonicalB want{Cm.size, Cm.size, rank};
    bool certified = snf_equals_B(evaluate_matrix(Cm, lift), want, p);
    if (certified) {
      ++rep.canonical_lift_ok;
    } else {
      std::optional<IntVec> forced = kernel_forcing_lift(Cm, slices, xbar, pl);
      if (forced && snf_equals_B(evaluate_matrix(Cm, *forced), want, p)) {
        lift = *forced;
        certified = true;
        ++rep.forced_lift_ok;
      }
    }
    if (!certified) {
      rep.inconclusive_points.push_back(xbar);
      continue;
    }
    // Isolation of (ker R(lift))' — universally quantified, so any violation
    // on a certified B-form lift is a genuine counterexample.
    IntMat kernel = saturated_kernel(evaluate_matrix(Cm, lift));
    const int kdim = static_cast<int>(kernel.cols());
    if (kdim >= 2) {
      IntMat W(kdim * (kdim - 1) / 2, dp);
      int row = 0;
      for (int a = 0; a < kdim; ++a)
        for (int b = a + 1; b < kdim; ++b, ++row) {
          IntVec br = L.bracket_of(IntVec(kernel.col(a)), IntVec(kernel.col(b)));
          for (int k = 0; k < dp; ++k) W(row, k) = br(k);
        }
      std::vector<unsigned> vals = elementary_divisor_valuations(W, p);
      for (unsigned val : vals) {
        if (val != kValInfinity && val > 0) {
          rep.fail_witness = SmoothnessReport::Witness{xbar, lift, vals};
          rep.status = ProbeStatus::fail;
          return rep;
        }
      }
    }
  }
  rep.status = rep.inconclusive_points.empty() ? ProbeStatus::pass : ProbeStatus::inconclusive;
  return rep;
}

// --- alpha ---------------------------------------------------------------------

AlphaReport alpha_invariant(const LieLattice& L, const Int& p, const EnumLimits& limits) {
  KernelClassification cls = classify_kernels(L, p, limits);
  const int d = L.d(), dp = L.dprime();
  AlphaReport rep;
  bool have = false;
  int best = -1;
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const KernelClass& kc = cls.classes[c];
    AlphaStratum st;
    st.dim_rad = kc.d_c;
    st.dim_rad_derived = kc.d_prime_c;
    st.points = kc.size();
    if (kc.d_c < d)  // omega vanishing on no bracket direction: rho not identically 0
      st.root = make_rational(Int(2 * (dp - kc.d_prime_c)), Int(d - kc.d_c));
    rep.strata.push_back(st);
    if (st.root && (!have || *st.root > rep.alpha)) {
      have = true;
      rep.alpha = *st.root;
      best = static_cast<int>(c);
    }
  }
  if (!have)
    fail(Errc::no_admissible_omega,
         "every functional is degenerate (abelian reduction mod p)");
  rep.witness = cls.decode(cls.classes[best].members.front());
  return rep;
}

}  // namespace repzeta
