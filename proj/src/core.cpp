#include "repzeta/core.hpp"

namespace repzeta {

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) fail(Errc::invalid_args, "negative power of zero");
    return Rational(0);
  }
  Rational r;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (exp < 0) {
    Rational inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  return r;
}

unsigned p_valuation(const Int& n, const Int& p) {
  if (n == 0) fail(Errc::invalid_args, "valuation of zero");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime_power(const Int& n) {
  if (n < 2) return false;
  if (is_prime(n)) return true;
  for (unsigned long k = 2; Int(1) << k <= n; ++k) {
    Int root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), k);
    if (rem == 0 && is_prime(root)) return true;
  }
  return false;
}

std::vector<Int> primes_below(unsigned long bound) {
  std::vector<Int> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (unsigned long i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.emplace_back(static_cast<unsigned long>(i));
    for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace repzeta
