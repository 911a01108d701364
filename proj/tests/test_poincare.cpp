#include <doctest.h>

#include <random>

#include "repzeta/gzeta.hpp"
#include "repzeta/poincare.hpp"

using namespace repzeta;

namespace {

DirichletTrunc series_constants(std::initializer_list<long> coeffs, const Int& p) {
  DirichletTrunc out(static_cast<unsigned>(coeffs.size()) - 1, QMode::numeric, p);
  unsigned k = 0;
  for (long c : coeffs) out.set_coeff(k++, MultiPoly(c));
  return out;
}

// Random adapted unimodular matrix: shears inside the diagonal blocks, a free
// mixing block from the derived part into the rest, and a few sign flips.
IntMat random_adapted_unimodular(int d, int dp, std::mt19937_64& rng) {
  const int base = d - dp;
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> pick(0, 99);
  IntMat U = IntMat::Zero(d, d);
  for (int i = 0; i < d; ++i) U(i, i) = 1;
  auto shear = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> idx(lo, hi - 1);
    int a = idx(rng), b = idx(rng);
    if (a == b) return;
    for (int r = 0; r < d; ++r) U(r, a) += Int(small(rng)) * U(r, b);
  };
  for (int iter = 0; iter < 8; ++iter) {
    shear(0, base);
    shear(base, d);
    // C block: c_i picks up a derived component
    if (base > 0 && dp > 0 && pick(rng) < 60) {
      std::uniform_int_distribution<int> ci(0, base - 1), zi(base, d - 1);
      U(zi(rng), ci(rng)) += small(rng);
    }
  }
  if (pick(rng) < 50 && base > 0) U.col(0) = -U.col(0);
  return U;
}

}  // namespace

TEST_CASE("pattern keys") {
  PatternKey pk;
  pk.h = 2;
  pk.I = {0, 1};
  pk.r = {1, 2};
  CHECK(pk.level() == 3);
  CHECK(pk.weight() == 1 * 2 + 2 * 1);
  CHECK(pk.target_nu() == std::vector<unsigned>{0, 2});

  PatternKey single;
  single.h = 2;
  single.I = {1};
  single.r = {3};
  CHECK(single.weight() == 3);
  CHECK(single.target_nu() == std::vector<unsigned>{0, 3});

  PatternKey left;
  left.h = 2;
  left.I = {0};
  left.r = {2};
  CHECK(left.weight() == 4);
  CHECK(left.target_nu() == std::vector<unsigned>{0, 0});
}

TEST_CASE("brute poincare for the Heisenberg lattice") {
  LieLattice h = make_G_mn(1, 1);
  CHECK(brute_poincare(h, Int(2), 3) == series_constants({1, 1, 2, 4}, Int(2)));
  CHECK(brute_poincare(h, Int(3), 2) == series_constants({1, 2, 6}, Int(3)));
}

TEST_CASE("brute poincare agrees with the closed form") {
  struct Fixture { unsigned m, n; long p; unsigned K; };
  for (Fixture f : {Fixture{1, 2, 2, 3}, Fixture{2, 2, 2, 3}, Fixture{1, 3, 2, 3}}) {
    LieLattice L = make_G_mn(f.m, f.n);
    DirichletTrunc brute = brute_poincare(L, Int(f.p), f.K);
    DirichletTrunc closed = series_of_ratfn_at(local_multiplicative(f.m, f.n), f.K, Int(f.p));
    CHECK(brute == closed);
  }
}

TEST_CASE("brute poincare coefficients are nonnegative with constant term 1") {
  LieLattice L = make_G_mn(1, 2);
  DirichletTrunc s = brute_poincare(L, Int(3), 3);
  CHECK(s.coeff(0) == MultiPoly(1));
  for (unsigned k = 0; k <= s.order(); ++k) {
    Rational c = s.coeff(k).constant_value();
    CHECK(c >= 0);
    CHECK(c.get_den() == 1);
  }
}

TEST_CASE("brute poincare is thread-count independent") {
  LieLattice L = make_G_mn(1, 2);
  CHECK(brute_poincare(L, Int(2), 4, 1) == brute_poincare(L, Int(2), 4, 4));
}

TEST_CASE("brute poincare guard") {
  LieLattice L = make_G_mn(3, 3);
  CHECK_THROWS_AS(brute_poincare(L, Int(3), 8), Error);
}

TEST_CASE("kernel classification of the Heisenberg lattice") {
  LieLattice h = make_G_mn(1, 1);
  KernelClassification cls = classify_kernels(h, Int(2));
  REQUIRE(cls.classes.size() == 2);
  // full-matrix convention: zero point has d_c = d = 3
  CHECK(cls.classes[0].d_c == 3);
  CHECK(cls.classes[0].d_prime_c == 1);
  CHECK(cls.classes[0].size() == 1);
  CHECK(cls.classes[1].d_c == 1);
  CHECK(cls.classes[1].d_prime_c == 0);
  CHECK(cls.classes[1].size() == 1);
}

TEST_CASE("kernel classification of G_{2x2} follows the rank strata") {
  const int m = 2, n = 2, d = 8, dp = 4;
  for (long p : {2L, 3L}) {
    LieLattice L = make_G_mn(m, n);
    KernelClassification cls = classify_kernels(L, Int(p));
    REQUIRE(cls.classes.size() == 3);  // ranks 0, 1, 2
    for (const KernelClass& c : cls.classes) {
      const int rank = (d - c.d_c) / 2;  // rank of the 2x2 matrix stratum
      const int k = m - rank;
      CHECK(d - c.d_c == 2 * m - 2 * k);
      CHECK(dp - c.d_prime_c == (m - k) * (n + k));
      CHECK(c.size() == rank_count_at(m, n, rank, Int(p)));
    }
    long long total = 0;
    for (const KernelClass& c : cls.classes) total += c.size();
    CHECK(Int(static_cast<long>(total)) == pow_int(Int(p), dp));
  }
}

TEST_CASE("abelian lattice classifies as a single class") {
  LieLattice ab(3, 0, "abelian");
  KernelClassification cls = classify_kernels(ab, Int(5));
  REQUIRE(cls.classes.size() == 1);
  CHECK(cls.classes[0].d_c == 3);
  CHECK(cls.classes[0].d_prime_c == 0);
}

TEST_CASE("F_S enumeration") {
  LieLattice h = make_G_mn(1, 1);
  KernelClassification cls = classify_kernels(h, Int(2));
  CHECK(enumerate_F_S(cls, h, {}) == 1);
  // the nonzero class of F_2: exactly one point
  CHECK(enumerate_F_S(h, Int(2), {{1, 0}}) == 1);

  // G_{2x2}: |F_{rank2 > rank1}| = |rank-1 matrices| * |rank-1 1x1 matrices|
  for (long p : {2L, 3L}) {
    LieLattice L = make_G_mn(2, 2);
    KernelClassification cls22 = classify_kernels(L, Int(p));
    const int rank2 = cls22.class_with(4, 0);
    const int rank1 = cls22.class_with(6, 1);
    REQUIRE(rank2 >= 0);
    REQUIRE(rank1 >= 0);
    long long expect = Int(rank_count_at(2, 2, 1, Int(p)) * rank_count_at(1, 1, 1, Int(p))).get_si();
    CHECK(enumerate_F_S(cls22, L, {rank2, rank1}) == expect);
    // order-insensitive up to normalization
    CHECK(enumerate_F_S(cls22, L, {rank1, rank2}) == expect);
  }

  // repeated d_c is not a sequence
  LieLattice L = make_G_mn(2, 2);
  KernelClassification c2 = classify_kernels(L, Int(2));
  const int r2 = c2.class_with(4, 0);
  CHECK_THROWS_AS(enumerate_F_S(c2, L, std::vector<int>{r2, r2}), Error);
}

TEST_CASE("rank-jump counts match products of rank_count") {
  // F over the full stratification of G_{m x n}: each step multiplies by the
  // count of k1 x (n - m + k1) matrices of rank k1 - k2.
  for (long p : {2L, 3L}) {
    LieLattice L = make_G_mn(2, 3);
    KernelClassification cls = classify_kernels(L, Int(p));
    const int d = L.d();
    // classes: rank r has d_c = d - 2r and d'_c = d' - r(n + m - r)
    const int c_r2 = cls.class_with(d - 4, 6 - 2 * 3);
    const int c_r1 = cls.class_with(d - 2, 6 - 1 * 4);
    REQUIRE(c_r2 >= 0);
    REQUIRE(c_r1 >= 0);
    // |F_{(rank2, rank1)}| = #rank-1(2x3) * #rank-1 of the 1x2 residual block
    long long expect = Int(rank_count_at(2, 3, 1, Int(p)) * rank_count_at(1, 2, 1, Int(p))).get_si();
    CHECK(enumerate_F_S(cls, L, {c_r2, c_r1}) == expect);
  }
}

TEST_CASE("thm_tech_eval closed forms") {
  for (long p : {2L, 3L, 5L}) {
    ThmTechResult r = thm_tech_eval(make_G_mn(1, 1), Int(p), /*run_probe=*/false);
    RationalFn expected(MultiPoly(1) - MultiPoly::var(Var::t),
                        MultiPoly(1) - MultiPoly(Rational(p)) * MultiPoly::var(Var::t));
    CHECK(r.zeta == expected);
  }
  ThmTechResult g12 = thm_tech_eval(make_G_mn(1, 2), Int(2), false);
  CHECK(g12.zeta == local_multiplicative(1, 2).eval_partial(Var::q, Rational(2)));

  LieLattice ab(2, 0, "ab");
  ThmTechResult flat = thm_tech_eval(ab, Int(3), false);
  CHECK(flat.zeta == RationalFn(1));
}

TEST_CASE("thm_tech_eval stamps the probe status") {
  ThmTechResult r = thm_tech_eval(make_G_mn(1, 2), Int(2), true);
  REQUIRE(r.probe.has_value());
  CHECK(*r.probe == ProbeStatus::pass);
}

TEST_CASE("smoothness probe on the family and fixtures") {
  CHECK(smoothness_probe(make_G_mn(2, 2), Int(2)).status == ProbeStatus::pass);
  CHECK(smoothness_probe(make_G_mn(1, 3), Int(3)).status == ProbeStatus::pass);

  // rescaled Heisenberg [c1,c2] = p z: inconclusive at the lifting condition
  for (long p : {2L, 3L}) {
    LieLattice resc(3, 1, "rescaled");
    IntVec c(1);
    c(0) = p;
    resc.set_bracket(0, 1, c);
    SmoothnessReport rep = smoothness_probe(resc, Int(p));
    CHECK(rep.status == ProbeStatus::inconclusive);
    CHECK(rep.inconclusive_points.size() == static_cast<std::size_t>(p - 1));
    CHECK_FALSE(rep.fail_witness.has_value());
  }

  LieLattice ab(3, 0, "abelian");
  CHECK(smoothness_probe(ab, Int(2)).status == ProbeStatus::pass);
}

TEST_CASE("alpha invariant") {
  for (long p : {2L, 3L, 5L}) {
    AlphaReport h = alpha_invariant(make_G_mn(1, 1), Int(p));
    CHECK(h.alpha == Rational(1));
  }
  // G_{m x n}: alpha = m + n - 1, stable across p
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned n = m; n <= 3; ++n)
      for (long p : {2L, 3L}) {
        AlphaReport rep = alpha_invariant(make_G_mn(m, n), Int(p));
        CHECK(rep.alpha == Rational(static_cast<long>(m + n - 1)));
      }
  // witness attains the max
  AlphaReport rep = alpha_invariant(make_G_mn(2, 2), Int(2));
  bool witness_found = false;
  for (const AlphaStratum& st : rep.strata)
    if (st.root && *st.root == rep.alpha) witness_found = true;
  CHECK(witness_found);

  // direct sum with an abelian block does not change alpha
  AlphaReport sum = alpha_invariant(direct_sum_abelian(make_G_mn(1, 1), 2), Int(3));
  CHECK(sum.alpha == Rational(1));

  // all functionals degenerate: error
  LieLattice resc(3, 1, "rescaled");
  IntVec c(1);
  c(0) = 3;
  resc.set_bracket(0, 1, c);
  try {
    alpha_invariant(resc, Int(3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_admissible_omega);
  }
}

TEST_CASE("poincare series is base-change invariant") {
  std::mt19937_64 rng(20240811);
  LieLattice L = make_G_mn(1, 2);
  DirichletTrunc reference = brute_poincare(L, Int(2), 3);
  for (int iter = 0; iter < 10; ++iter) {
    IntMat U = random_adapted_unimodular(L.d(), L.dprime(), rng);
    LieLattice moved = base_change(L, U);
    CHECK(validate(moved).ok());
    CHECK(brute_poincare(moved, Int(2), 3) == reference);
  }
}
