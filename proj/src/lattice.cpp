#include "repzeta/lattice.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "repzeta/snf.hpp"

namespace repzeta {

LieLattice::LieLattice(int d, int dprime, std::string name)
    : d_(d), dprime_(dprime), name_(std::move(name)) {
  if (d < 0 || dprime < 0 || dprime > d) fail(Errc::invalid_args, "need 0 <= d' <= d");
  slices_.assign(dprime, IntMat::Zero(d, d));
}

void LieLattice::set_bracket(int i, int j, const IntVec& coeffs) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_ || i == j)
    fail(Errc::invalid_args, "bracket indices out of range");
  if (coeffs.size() != dprime_) fail(Errc::length_mismatch, "bracket coefficient length != d'");
  for (int k = 0; k < dprime_; ++k) {
    slices_[k](i, j) = coeffs(k);
    slices_[k](j, i) = -coeffs(k);
  }
}

IntVec LieLattice::bracket_coeffs(int i, int j) const {
  IntVec out(dprime_);
  for (int k = 0; k < dprime_; ++k) out(k) = slices_[k](i, j);
  return out;
}

IntVec LieLattice::bracket_of(const IntVec& u, const IntVec& v) const {
  const int n = static_cast<int>(u.size());
  if (v.size() != n || (n != d_ && n != d_ - dprime_))
    fail(Errc::length_mismatch, "bracket operands must have length d or d - d'");
  IntVec out = IntVec::Zero(dprime_);
  for (int k = 0; k < dprime_; ++k) {
    Int acc(0);
    for (int i = 0; i < n; ++i) {
      if (u(i) == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (v(j) == 0) continue;
        const Int& lam = slices_[k](i, j);
        if (lam != 0) acc += u(i) * v(j) * lam;
      }
    }
    out(k) = acc;
  }
  return out;
}

ValidationReport validate(const LieLattice& L) {
  ValidationReport rep;
  const int d = L.d(), dp = L.dprime();
  for (int k = 0; k < dp; ++k) {
    const IntMat& S = L.slices()[k];
    for (int i = 0; i < d; ++i) {
      if (S(i, i) != 0)
        rep.violations.push_back("antisymmetry: lambda_" + std::to_string(i + 1) + "," +
                                 std::to_string(i + 1) + "^" + std::to_string(k + 1) + " != 0");
      for (int j = i + 1; j < d; ++j)
        if (S(i, j) != -S(j, i))
          rep.violations.push_back("antisymmetry: lambda_" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + " vs " + std::to_string(j + 1) + "," +
                                   std::to_string(i + 1) + " at k=" + std::to_string(k + 1));
    }
  }
  for (int k = 0; k < dp; ++k) {
    const IntMat& S = L.slices()[k];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (S(i, j) != 0 && (i >= d - dp || j >= d - dp)) {
          rep.violations.push_back("2-nilpotency: bracket of derived element (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          i = j = d;  // one report per slice is enough
        }
  }
  if (dp > 0) {
    // Derived-rank tightness: bracket coordinate vectors span rank d' over Q.
    const int pairs = d * (d - 1) / 2;
    IntMat B = IntMat::Zero(pairs, dp);
    int r = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j, ++r)
        for (int k = 0; k < dp; ++k) B(r, k) = L.slices()[k](i, j);
    if (smith_normal_form(B).rank != dp)
      rep.violations.push_back("derived rank: bracket span has rank < d'");
  }
  // Jacobi; automatic in class 2, checked as a guard.
  for (int i = 0; i < d && rep.ok(); ++i)
    for (int j = i + 1; j < d && rep.ok(); ++j)
      for (int k = j + 1; k < d && rep.ok(); ++k) {
        IntVec acc = IntVec::Zero(dp);
        const int base = d - dp;
        auto add_term = [&](int a, int b, int c) {
          // [b_a, [b_b, b_c]]
          IntVec inner = L.bracket_coeffs(b, c);
          for (int l = 0; l < dp; ++l)
            if (inner(l) != 0) acc += inner(l) * L.bracket_coeffs(a, base + l);
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (int l = 0; l < dp; ++l)
          if (acc(l) != 0) rep.violations.push_back("jacobi identity fails");
      }
  return rep;
}

LieLattice make_G_mn(unsigned m, unsigned n) {
  if (m < 1 || n < 1) fail(Errc::invalid_args, "make_G_mn requires m, n >= 1");
  const int d = static_cast<int>(m + n + m * n);
  const int dp = static_cast<int>(m * n);
  LieLattice L(d, dp, "G_" + std::to_string(m) + "x" + std::to_string(n));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      IntVec e = IntVec::Zero(dp);
      e((i - 1) * n + (j - 1)) = 1;  // z_ij, row-major
      L.set_bracket(static_cast<int>(i) - 1, static_cast<int>(m + j) - 1, e);
    }
  return L;
}

LieLattice direct_sum_abelian(const LieLattice& L, int extra_rank) {
  if (extra_rank < 0) fail(Errc::invalid_args, "abelian rank must be nonnegative");
  const int d = L.d(), dp = L.dprime(), base = d - dp;
  LieLattice out(d + extra_rank, dp, L.name() + "+ab" + std::to_string(extra_rank));
  for (int i = 0; i < base; ++i)
    for (int j = i + 1; j < base; ++j) {
      IntVec c = L.bracket_coeffs(i, j);
      bool nonzero = false;
      for (int k = 0; k < dp; ++k) nonzero |= c(k) != 0;
      if (nonzero) out.set_bracket(i, j, c);
    }
  return out;
}

CommutatorMatrix commutator_matrix(const LieLattice& L, bool trimmed) {
  CommutatorMatrix out;
  out.trimmed = trimmed;
  out.size = trimmed ? L.d() - L.dprime() : L.d();
  out.slices.reserve(L.dprime());
  for (const IntMat& S : L.slices())
    out.slices.push_back(trimmed ? IntMat(S.topLeftCorner(out.size, out.size)) : S);
  return out;
}

IntMat evaluate_matrix(const CommutatorMatrix& Cm, const IntVec& w) {
  if (w.size() != Cm.dprime()) fail(Errc::length_mismatch, "evaluation point must have length d'");
  IntMat out = IntMat::Zero(Cm.size, Cm.size);
  for (int k = 0; k < Cm.dprime(); ++k) {
    if (w(k) == 0) continue;
    for (int i = 0; i < Cm.size; ++i)
      for (int j = 0; j < Cm.size; ++j) {
        const Int& lam = Cm.slices[k](i, j);
        if (lam != 0) out(i, j) += w(k) * lam;
      }
  }
  return out;
}

namespace {

// Exact solve D x = w for unimodular D (Gauss over Q, result integral).
IntVec solve_unimodular(const IntMat& D, const IntVec& w) {
  const int n = static_cast<int>(D.rows());
  RatMat A(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = Rational(D(i, j));
    A(i, n) = Rational(w(i));
  }
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (A(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) fail(Errc::invalid_args, "singular system");
    if (pr != row) A.row(pr).swap(A.row(row));
    Rational inv = 1 / A(row, col);
    for (int j = col; j <= n; ++j) A(row, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || A(i, col) == 0) continue;
      Rational f = A(i, col);
      for (int j = col; j <= n; ++j) A(i, j) -= f * A(row, j);
    }
  }
  IntVec x(n);
  for (int i = 0; i < n; ++i) {
    if (A(i, n).get_den() != 1) fail(Errc::invalid_args, "non-integral solution");
    x(i) = A(i, n).get_num();
  }
  return x;
}

}  // namespace

LieLattice base_change(const LieLattice& L, const IntMat& U) {
  const int d = L.d(), dp = L.dprime(), base = d - dp;
  if (U.rows() != d || U.cols() != d) fail(Errc::invalid_args, "base change matrix must be d x d");
  Int det = det_bareiss(U);
  if (det != 1 && det != -1) fail(Errc::not_unimodular, "base change matrix has determinant " + to_string(det));
  for (int i = 0; i < base; ++i)
    for (int k = base; k < d; ++k)
      if (U(i, k) != 0)
        fail(Errc::not_adapted, "new derived basis leaves the derived span");
  const IntMat D = U.bottomRightCorner(dp, dp);
  LieLattice out(d, dp, L.name());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      IntVec w = L.bracket_of(IntVec(U.col(i)), IntVec(U.col(j)));
      bool nonzero = false;
      for (int k = 0; k < dp; ++k) nonzero |= w(k) != 0;
      if (nonzero) out.set_bracket(i, j, solve_unimodular(D, w));
    }
  return out;
}

// --- JSON ------------------------------------------------------------------

std::string LieLattice::canonical_json() const { return lattice_to_json(*this); }

std::string lattice_to_json(const LieLattice& L) {
  nlohmann::json j;
  j["name"] = L.name();
  j["d"] = L.d();
  j["d_prime"] = L.dprime();
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < L.d(); ++i)
    for (int jj = i + 1; jj < L.d(); ++jj) {
      IntVec c = L.bracket_coeffs(i, jj);
      bool nonzero = false;
      for (int k = 0; k < L.dprime(); ++k) nonzero |= c(k) != 0;
      if (!nonzero) continue;
      nlohmann::json entry;
      entry["i"] = i + 1;
      entry["j"] = jj + 1;
      nlohmann::json coeffs = nlohmann::json::array();
      for (int k = 0; k < L.dprime(); ++k) {
        if (!c(k).fits_slong_p())
          fail(Errc::validation_error, "structure constant exceeds the file format range");
        coeffs.push_back(c(k).get_si());
      }
      entry["coeffs"] = coeffs;
      brackets.push_back(entry);
    }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

LieLattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("lattice file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("d_prime"))
    fail(Errc::parse_error, "lattice file: missing d / d_prime");
  const int d = j["d"].get<int>();
  const int dp = j["d_prime"].get<int>();
  if (d < 1 || dp < 0 || dp > d) fail(Errc::validation_error, "lattice file: need 0 <= d' <= d");
  LieLattice L(d, dp, j.value("name", std::string{}));
  for (const auto& entry : j.value("brackets", nlohmann::json::array())) {
    const int i = entry.at("i").get<int>();
    const int jj = entry.at("j").get<int>();
    if (i < 1 || jj < 1 || i > d || jj > d)
      fail(Errc::validation_error, "lattice file: bracket index out of range");
    if (i >= jj) fail(Errc::validation_error, "lattice file: only i < j entries are allowed");
    const auto& coeffs = entry.at("coeffs");
    if (static_cast<int>(coeffs.size()) != dp)
      fail(Errc::validation_error, "lattice file: coeffs length != d_prime");
    IntVec c(dp);
    for (int k = 0; k < dp; ++k) c(k) = Int(coeffs[k].get<long>());
    L.set_bracket(i - 1, jj - 1, c);
  }
  ValidationReport rep = validate(L);
  if (!rep.ok()) {
    std::string msg = "lattice file: invalid lattice:";
    for (const std::string& v : rep.violations) msg += "\n  - " + v;
    fail(Errc::validation_error, msg);
  }
  return L;
}

LieLattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open lattice file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return lattice_from_json(ss.str());
}

std::uint64_t lattice_hash(const LieLattice& L) { return fnv1a(lattice_to_json(L)); }

}  // namespace repzeta
