#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qcseq/cyclotomy.hpp"
#include "qcseq/number_theory.hpp"

namespace qcseq {

enum class SeqKind : std::uint8_t { S, S1, S2 };
enum class BinKind : std::uint8_t { U, V };

/// Symbols over Z_4. Kind S has period 2 p^m; S1 and S2 have period p^m and
/// interleave into S at even/odd positions.
struct QuaternarySequence {
  PrimePowerParams params;
  SeqKind kind = SeqKind::S;
  std::vector<std::uint8_t> symbols;

  std::int64_t size() const { return static_cast<std::int64_t>(symbols.size()); }
  std::uint8_t operator[](std::int64_t i) const {
    return symbols[static_cast<std::size_t>(i)];
  }
};

/// Characteristic sequences over {0,1} of period p^m.
struct BinarySequence {
  PrimePowerParams params;
  BinKind kind = BinKind::U;
  std::vector<std::uint8_t> symbols;

  std::int64_t size() const { return static_cast<std::int64_t>(symbols.size()); }
  std::uint8_t operator[](std::int64_t i) const {
    return symbols[static_cast<std::size_t>(i)];
  }
};

/// The interleaved quaternary sequence of period 2 p^m:
/// 0 at n = 0 (2p), 2 at n = p (2p), 0/1 on D_0/D_1 at level 2p^m,
/// 2/3 on 2 D_0 / 2 D_1 at level p^m.
QuaternarySequence build_s(const PrimePowerParams& params);

/// Even-position component: 0 on multiples of p, 2 on D_0^(p^m), 3 on D_1^(p^m).
QuaternarySequence build_s1(const PrimePowerParams& params);

/// Odd-position component, keyed on 2n+1: 2 when 2n+1 = p (mod 2p),
/// 0/1 when 2n+1 lies in D_0/D_1 at level 2p^m.
QuaternarySequence build_s2(const PrimePowerParams& params);

/// u(n) = 1 iff n lies in D_1^(p^m) or is a multiple of p.
BinarySequence build_u(const PrimePowerParams& params);

/// v(n) = 1 iff 2n+1 lies in D_1^(2p^m) or is an odd multiple of p.
BinarySequence build_v(const PrimePowerParams& params);

struct BalanceStats {
  std::array<std::int64_t, 4> counts{};
  bool balanced = false;  ///< max count - min count <= 1
};

BalanceStats balance_stats(const QuaternarySequence& seq);

}  // namespace qcseq
