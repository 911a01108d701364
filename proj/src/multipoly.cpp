#include "repzeta/multipoly.hpp"

#include <sstream>

namespace repzeta {

namespace {

constexpr std::uint32_t kMaxExp = 1u << 24;

std::uint32_t checked_exp_add(std::uint32_t a, std::uint32_t b) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s >= kMaxExp) fail(Errc::overflow, "exponent overflow");
  return static_cast<std::uint32_t>(s);
}

}  // namespace

MultiPoly MultiPoly::var(Var v, std::uint32_t e) {
  MultiPoly p;
  Exponents exps{};
  exps[static_cast<int>(v)] = e;
  p.add_term(exps, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& e) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{};
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) fail(Errc::invalid_args, "polynomial is not constant: " + str());
  return constant_term();
}

bool MultiPoly::uses(Var v) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<int>(v)] > 0) return true;
  return false;
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

std::uint32_t MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = kMaxExp;
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<int>(v)]);
  return d;
}

MultiPoly MultiPoly::coeff_of(Var v, std::uint32_t k) const {
  MultiPoly out;
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : terms_) {
    if (e[vi] != k) continue;
    Exponents rest = e;
    rest[vi] = 0;
    out.add_term(rest, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e;
      for (int i = 0; i < kNumVars; ++i) e[i] = checked_exp_add(ea[i], eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly pow(const MultiPoly& base, std::uint32_t e) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  const int vi = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[vi] = 0;
    out += monomial(c, rest) * pow(value, e[vi]);
  }
  return out;
}

MultiPoly MultiPoly::eval_partial(Var v, const Rational& value) const {
  const int vi = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[vi] = 0;
    out.add_term(rest, c * pow_rational(value, e[vi]));
  }
  return out;
}

Rational MultiPoly::eval(const std::array<Rational, kNumVars>& point) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > 0) term *= pow_rational(point[i], e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::divide_by_monomial(const Exponents& e) const {
  MultiPoly out;
  for (const auto& [te, c] : terms_) {
    Exponents r;
    for (int i = 0; i < kNumVars; ++i) {
      if (te[i] < e[i]) fail(Errc::invalid_args, "monomial division is not exact");
      r[i] = te[i] - e[i];
    }
    out.add_term(r, c);
  }
  return out;
}

Rational MultiPoly::content_signed() const {
  if (terms_.empty()) return Rational(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (terms_.begin()->second < 0) content = -content;
  return content;
}

namespace {

void append_monomial(std::string& out, const MultiPoly::Exponents& e, bool latex) {
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!first) out += latex ? " " : "*";
    first = false;
    out += kVarNames[i];
    if (e[i] > 1) {
      if (latex)
        out += "^{" + std::to_string(e[i]) + "}";
      else
        out += "^" + std::to_string(e[i]);
    }
  }
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-c) : c;
    const bool has_vars = e != Exponents{};
    if (!has_vars) {
      out += to_string(mag);
    } else {
      if (mag != 1) {
        out += to_string(mag);
        out += "*";
      }
      append_monomial(out, e, false);
    }
  }
  return out;
}

std::string MultiPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-c) : c;
    const bool has_vars = e != Exponents{};
    std::string coeff;
    if (mag.get_den() != 1)
      coeff = "\\tfrac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else
      coeff = mag.get_num().get_str();
    if (!has_vars) {
      out += coeff;
    } else {
      if (mag != 1) out += coeff + " ";
      append_monomial(out, e, true);
    }
  }
  return out;
}

}  // namespace repzeta
