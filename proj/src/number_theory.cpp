#include "qcseq/number_theory.hpp"

#include <numeric>
#include <vector>

namespace qcseq {

namespace {

// Construction cap on p^m; keeps the root search cheap and every
// intermediate product far inside int64.
constexpr std::int64_t kMaxPrimePower = 2'000'000;
constexpr std::int64_t kMaxPrime = 10'000;

std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Order check without iterating the whole cycle: a has order phi mod q
// exactly when a^(phi/f) != 1 for every prime factor f of phi.
bool has_order(std::int64_t a, std::int64_t modulus, std::int64_t phi,
               const std::vector<std::int64_t>& phi_factors) {
  if (mod_pow(a, phi, modulus) != 1) return false;
  for (std::int64_t f : phi_factors) {
    if (mod_pow(a, phi / f, modulus) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  std::int64_t b = ((base % modulus) + modulus) % modulus;
  std::int64_t r = 1;
  while (exp > 0) {
    if (exp & 1) r = r * b % modulus;
    b = b * b % modulus;
    exp >>= 1;
  }
  return r;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  std::int64_t r = ((a % modulus) + modulus) % modulus;
  if (std::gcd(r, modulus) != 1) {
    throw std::invalid_argument("multiplicative_order: arguments are not coprime");
  }
  std::int64_t x = r % modulus;
  std::int64_t k = 1;
  while (x != 1) {
    x = x * r % modulus;
    ++k;
  }
  return k;
}

std::int64_t find_odd_primitive_root(std::int64_t p, std::int64_t m) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("find_odd_primitive_root: p must be an odd prime");
  }
  if (m < 1) throw std::invalid_argument("find_odd_primitive_root: m must be >= 1");

  std::int64_t q = 1;
  for (std::int64_t i = 0; i < m; ++i) q *= p;
  const std::int64_t phi = q / p * (p - 1);
  const auto factors = prime_factors(phi);

  // A primitive root of p^m below q always exists and one of {g0, g0 + q}
  // is odd, so the search stays under 2q.
  for (std::int64_t g = 3; g < 2 * q; g += 2) {
    if (g % p == 0) continue;
    if (has_order(g, q, phi, factors)) return g;
  }
  throw std::logic_error("find_odd_primitive_root: search exhausted");
}

int qr_class(std::int64_t n, std::int64_t p) {
  std::int64_t r = ((n % p) + p) % p;
  if (r == 0) throw std::invalid_argument("qr_class: n is divisible by p");
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 0 : 1;
}

PrimePowerParams PrimePowerParams::make(std::int64_t p, std::int64_t m) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
  if (p > kMaxPrime) throw std::invalid_argument("p is beyond the supported range");
  if (m < 1) throw std::invalid_argument("m must be >= 1");

  std::int64_t q = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxPrimePower) {
      throw resource_limit_error("p^m exceeds the construction cap");
    }
  }

  PrimePowerParams out;
  out.p = p;
  out.m = m;
  out.q = q;
  out.n = 2 * q;
  out.phi = q / p * (p - 1);
  out.g = find_odd_primitive_root(p, m);
  // g must generate the units of both q and 2q.
  if (multiplicative_order(out.g % q, q) != out.phi ||
      multiplicative_order(out.g % out.n, out.n) != out.phi) {
    throw std::logic_error("primitive root postcondition failed");
  }
  return out;
}

}  // namespace qcseq
