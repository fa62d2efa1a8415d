#pragma once

#include <cstdint>
#include <stdexcept>

namespace qcseq {

/// Thrown when an input would exceed one of the library's hard size caps.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters fixing one sequence-family instance: an odd prime power
/// q = p^m, the doubled period n = 2q, and an odd primitive root g common
/// to q and 2q.
struct PrimePowerParams {
  std::int64_t p = 0;    ///< odd prime
  std::int64_t m = 0;    ///< exponent, >= 1
  std::int64_t q = 0;    ///< p^m
  std::int64_t n = 0;    ///< 2 p^m, the period of the interleaved sequence
  std::int64_t g = 0;    ///< smallest odd primitive root of p^m
  std::int64_t phi = 0;  ///< p^(m-1)(p-1) = |Z_q^*|

  /// p^(m-1), the scale factor appearing in every closed form.
  std::int64_t pm1() const { return q / p; }

  /// Validates (p, m), finds g, and fills the derived fields.
  /// Throws std::invalid_argument for bad p or m, resource_limit_error when
  /// q exceeds the construction cap.
  static PrimePowerParams make(std::int64_t p, std::int64_t m);
};

/// Deterministic trial division; intended for desk-scale inputs.
bool is_prime(std::int64_t v);

/// base^exp reduced into [0, modulus). Requires modulus >= 2.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t modulus);

/// Least k >= 1 with a^k = 1 (mod modulus). Requires gcd(a, modulus) = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t modulus);

/// Smallest odd g > 1 whose multiplicative order mod p^m is p^(m-1)(p-1).
/// Such a g is automatically a primitive root of 2 p^j and p^j for j <= m.
std::int64_t find_odd_primitive_root(std::int64_t p, std::int64_t m);

/// 0 if n is a quadratic residue mod p, 1 otherwise, by Euler's criterion.
/// Requires gcd(n, p) = 1; n may be any integer (reduced internally).
int qr_class(std::int64_t n, std::int64_t p);

}  // namespace qcseq
