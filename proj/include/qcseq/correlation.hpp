#pragma once

#include <cstdint>
#include <vector>

#include "qcseq/cyclotomy.hpp"
#include "qcseq/sequences.hpp"

namespace qcseq {

/// Exact value re + im*w, where w is the fixed primitive 4th root of unity
/// with omega_power(1) = (0, 1). Closed under addition and negation, which
/// is all a correlation sum needs.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }

  constexpr GaussianInt operator-() const { return {-re, -im}; }
  constexpr GaussianInt operator+(const GaussianInt& o) const {
    return {re + o.re, im + o.im};
  }
  constexpr GaussianInt operator-(const GaussianInt& o) const {
    return {re - o.re, im - o.im};
  }
  constexpr GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// w^e for e reduced mod 4: (1,0), (0,1), (-1,0), (0,-1).
constexpr GaussianInt omega_power(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// One full period of shifts of an exact correlation.
struct CorrelationProfile {
  std::int64_t period = 0;
  SeqKind lhs = SeqKind::S;
  SeqKind rhs = SeqKind::S;
  std::vector<GaussianInt> values;

  const GaussianInt& at(std::int64_t tau) const {
    return values[static_cast<std::size_t>(((tau % period) + period) % period)];
  }
};

/// values[tau] = sum_n w^(a(n+tau) - b(n)), exact, by the O(L^2) double loop.
/// Shifts may be partitioned across `threads` workers; the result is
/// bit-identical for any worker count. Throws std::invalid_argument on a
/// length mismatch and resource_limit_error when the period exceeds
/// kMaxCorrelationPeriod.
CorrelationProfile cross_correlation(const QuaternarySequence& a,
                                     const QuaternarySequence& b,
                                     int threads = 1);

CorrelationProfile autocorrelation(const QuaternarySequence& a, int threads = 1);

/// The four difference-count families behind the closed forms.
enum class DiffKind : std::uint8_t { U, V, UV, VU };

/// Membership tables for the characteristic sets of u and v:
/// C_0^(q) = D_0^(q), C_1^(q) = D_1^(q) plus the multiples of p;
/// C_0^(2q) = D_0^(2q), C_1^(2q) = D_1^(2q) plus the odd multiples of p.
struct CharacteristicSets {
  explicit CharacteristicSets(const ClassTable& table);

  PrimePowerParams params;
  std::vector<std::int8_t> u_class;  ///< size q, values 0/1
  std::vector<std::int8_t> v_class;  ///< size 2q, values 0/1 on odds, -1 on evens
};

/// Brute-force count for the given family and class pair (i, j):
///   U : |C_i^(q)  n (C_j^(q)  + t)|        over Z_q
///   V : |C_i^(2q) n (C_j^(2q) + 2t)|       over Z_2q
///   UV: |2C_i^(q) n (C_j^(2q) + 2t - 1)|   over Z_2q
///   VU: |C_i^(2q) n (2C_j^(q) + 2t - 1)|   over Z_2q
std::int64_t difference_count(DiffKind kind, int i, int j, std::int64_t shift,
                              const CharacteristicSets& sets);

/// The (i, j) = (1, 0) count the closed forms are stated for.
std::int64_t difference_count(DiffKind kind, std::int64_t shift,
                              const ClassTable& table);

}  // namespace qcseq
