#include "repzeta/snf.hpp"

namespace repzeta {

namespace {

struct Eliminator {
  IntMat& A;
  IntMat* V;  // optional column-transform accumulator

  void swap_rows(int a, int b) {
    if (a != b) A.row(a).swap(A.row(b));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    A.col(a).swap(A.col(b));
    if (V) V->col(a).swap(V->col(b));
  }
  // row a -= f * row b
  void add_row(int a, int b, const Int& f) {
    if (f == 0) return;
    for (int j = 0; j < A.cols(); ++j) A(a, j) -= f * A(b, j);
  }
  // col a -= f * col b
  void add_col(int a, int b, const Int& f) {
    if (f == 0) return;
    for (int i = 0; i < A.rows(); ++i) A(i, a) -= f * A(i, b);
    if (V)
      for (int i = 0; i < V->rows(); ++i) (*V)(i, a) -= f * (*V)(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < A.cols(); ++j) A(a, j) = -A(a, j);
  }

  bool find_min_pivot(int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = t; i < A.rows(); ++i)
      for (int j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        Int mag = abs(A(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  void diagonalize() {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
      int pr, pc;
      if (!find_min_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool restart = false;
        for (int i = t + 1; i < m && !restart; ++i) {
          if (A(i, t) == 0) continue;
          add_row(i, t, Int(A(i, t) / A(t, t)));
          if (A(i, t) != 0) {
            swap_rows(i, t);  // strictly smaller pivot
            restart = true;
          }
        }
        if (restart) continue;
        for (int j = t + 1; j < n && !restart; ++j) {
          if (A(t, j) == 0) continue;
          add_col(j, t, Int(A(t, j) / A(t, t)));
          if (A(t, j) != 0) {
            swap_cols(j, t);
            restart = true;
          }
        }
        if (restart) continue;
        // Row and column are clear; enforce pivot | remaining submatrix.
        bool fixed = false;
        for (int i = t + 1; i < m && !fixed; ++i)
          for (int j = t + 1; j < n && !fixed; ++j)
            if (A(i, j) % A(t, t) != 0) {
              // Pull row i into play; gcd appears at the pivot next rounds.
              for (int jj = 0; jj < n; ++jj) A(t, jj) += A(i, jj);
              fixed = true;
            }
        if (!fixed) break;
      }
      if (A(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(IntMat A) {
  Eliminator e{A, nullptr};
  e.diagonalize();
  SnfResult out;
  const int k = static_cast<int>(std::min(A.rows(), A.cols()));
  out.diagonal.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.diagonal.push_back(A(i, i));
    if (A(i, i) != 0) ++out.rank;
  }
  return out;
}

SnfTransform smith_normal_form_with_transform(IntMat A) {
  IntMat V = IntMat::Zero(A.cols(), A.cols());
  for (int i = 0; i < A.cols(); ++i) V(i, i) = 1;
  Eliminator e{A, &V};
  e.diagonalize();
  SnfTransform out;
  const int k = static_cast<int>(std::min(A.rows(), A.cols()));
  out.snf.diagonal.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.snf.diagonal.push_back(A(i, i));
    if (A(i, i) != 0) ++out.snf.rank;
  }
  out.V = std::move(V);
  return out;
}

std::vector<unsigned> elementary_divisor_valuations(const IntMat& M, const Int& p) {
  SnfResult s = smith_normal_form(M);
  std::vector<unsigned> out;
  out.reserve(s.diagonal.size());
  for (const Int& d : s.diagonal) out.push_back(d == 0 ? kValInfinity : p_valuation(d, p));
  return out;
}

Int det_bareiss(IntMat A) {
  if (A.rows() != A.cols()) fail(Errc::invalid_args, "determinant of non-square matrix");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          pr = i;
          break;
        }
      if (pr < 0) return 0;
      A.row(k).swap(A.row(pr));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        A(i, j) = v / prev;  // exact by Bareiss
      }
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : Int(-A(n - 1, n - 1));
}

IntMat saturated_kernel(const IntMat& M) {
  SnfTransform st = smith_normal_form_with_transform(M);
  const int n = static_cast<int>(M.cols());
  const int r = st.snf.rank;
  IntMat out(n, n - r);
  int c = 0;
  const int diag_len = static_cast<int>(st.snf.diagonal.size());
  for (int i = 0; i < n; ++i) {
    const bool zero_col = i >= diag_len || st.snf.diagonal[i] == 0;
    if (zero_col) out.col(c++) = st.V.col(i);
  }
  return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(Errc::invalid_args, "non-invertible element mod p");
  return t < 0 ? t + p : t;
}

ModMat reduce_mod_p(const IntMat& M, std::int64_t p) {
  ModMat out(M.rows(), M.cols());
  Int pp(static_cast<long>(p)), r;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), M(i, j).get_mpz_t(), pp.get_mpz_t());
      out(i, j) = r.get_si();
    }
  return out;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelonize(ModMat& M, std::int64_t p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < M.rows(); ++i)
      if (M(i, col) % p != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) M.row(pr).swap(M.row(row));
    const std::int64_t inv = mod_inverse(M(row, col), p);
    for (int j = col; j < M.cols(); ++j) M(row, j) = (M(row, j) * inv) % p;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, col) == 0) continue;
      const std::int64_t f = M(i, col);
      for (int j = col; j < M.cols(); ++j) {
        M(i, j) = (M(i, j) - f * M(row, j)) % p;
        if (M(i, j) < 0) M(i, j) += p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_mod_p(ModMat M, std::int64_t p) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      M(i, j) %= p;
      if (M(i, j) < 0) M(i, j) += p;
    }
  return static_cast<int>(echelonize(M, p).size());
}

int rank_mod_p(const IntMat& M, const Int& p) {
  return rank_mod_p(reduce_mod_p(M, p.get_si()), p.get_si());
}

ModMat kernel_mod_p(ModMat M, std::int64_t p) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      M(i, j) %= p;
      if (M(i, j) < 0) M(i, j) += p;
    }
  const std::vector<int> pivots = echelonize(M, p);
  const int n = static_cast<int>(M.cols());
  const int r = static_cast<int>(pivots.size());
  ModMat K = ModMat::Zero(n, n - r);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  int kcol = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    K(free, kcol) = 1;
    for (int i = 0; i < r; ++i) {
      const std::int64_t v = M(i, free);
      if (v != 0) K(pivots[i], kcol) = (p - v) % p;
    }
    ++kcol;
  }
  return K;
}

ModMat kernel_mod_p(const IntMat& M, const Int& p) {
  return kernel_mod_p(reduce_mod_p(M, p.get_si()), p.get_si());
}

bool solve_mod_p(ModMat A, ModVec b, std::int64_t p, ModVec& x) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  ModMat aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      aug(i, j) = A(i, j) % p;
      if (aug(i, j) < 0) aug(i, j) += p;
    }
    aug(i, n) = b(i) % p;
    if (aug(i, n) < 0) aug(i, n) += p;
  }
  std::vector<int> pivots = echelonize(aug, p);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == n) return false;  // inconsistent
  x = ModVec::Zero(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = aug(static_cast<int>(k), n);
  return true;
}

bool snf_equals_B(const IntMat& M, const CanonicalB& B, const Int& p) {
  if (M.rows() != B.rows || M.cols() != B.cols) return false;
  SnfResult s = smith_normal_form(M);
  if (s.rank != B.k) return false;
  for (int i = 0; i < s.rank; ++i)
    if (p_valuation(s.diagonal[i], p) != 0) return false;
  return true;
}

NuVector nu_vector_of_matrix(const IntMat& M, unsigned r, const Int& p) {
  std::vector<unsigned> vals = elementary_divisor_valuations(M, p);
  const unsigned h = static_cast<unsigned>(std::min(M.rows(), M.cols())) / 2;
  NuVector out;
  out.level = r;
  out.entries.reserve(h);
  for (unsigned i = 0; i < h; ++i) {
    unsigned a = std::min(vals[2 * i], r);
    unsigned b = std::min(vals[2 * i + 1], r);
    if (a != b)
      fail(Errc::pairing_violation,
           "elementary divisors do not pair at positions " + std::to_string(2 * i) + "," +
               std::to_string(2 * i + 1));
    out.entries.push_back(a);
  }
  return out;
}

}  // namespace repzeta
