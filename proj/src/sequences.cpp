#include "qcseq/sequences.hpp"

#include <algorithm>

namespace qcseq {

QuaternarySequence build_s(const PrimePowerParams& params) {
  QuaternarySequence seq{params, SeqKind::S, {}};
  seq.symbols.resize(static_cast<std::size_t>(params.n));
  for (std::int64_t n = 0; n < params.n; ++n) {
    const ResidueLabel label = fast_class(n, params);
    std::uint8_t sym = 0;
    switch (label.kind) {
      case LabelKind::ZeroMod2p: sym = 0; break;
      case LabelKind::PMod2p: sym = 2; break;
      case LabelKind::Unit2pm: sym = label.cls == 0 ? 0 : 1; break;
      case LabelKind::TwoUnit: sym = label.cls == 0 ? 2 : 3; break;
    }
    seq.symbols[static_cast<std::size_t>(n)] = sym;
  }
  return seq;
}

QuaternarySequence build_s1(const PrimePowerParams& params) {
  QuaternarySequence seq{params, SeqKind::S1, {}};
  seq.symbols.resize(static_cast<std::size_t>(params.q));
  for (std::int64_t n = 0; n < params.q; ++n) {
    std::uint8_t sym = 0;
    if (n % params.p != 0) sym = qr_class(n, params.p) == 0 ? 2 : 3;
    seq.symbols[static_cast<std::size_t>(n)] = sym;
  }
  return seq;
}

QuaternarySequence build_s2(const PrimePowerParams& params) {
  QuaternarySequence seq{params, SeqKind::S2, {}};
  seq.symbols.resize(static_cast<std::size_t>(params.q));
  for (std::int64_t n = 0; n < params.q; ++n) {
    const std::int64_t t = (2 * n + 1) % params.n;
    std::uint8_t sym = 2;
    if (t % params.p != 0) sym = qr_class(t, params.p) == 0 ? 0 : 1;
    seq.symbols[static_cast<std::size_t>(n)] = sym;
  }
  return seq;
}

BinarySequence build_u(const PrimePowerParams& params) {
  BinarySequence seq{params, BinKind::U, {}};
  seq.symbols.resize(static_cast<std::size_t>(params.q));
  for (std::int64_t n = 0; n < params.q; ++n) {
    const bool one = (n % params.p == 0) || qr_class(n, params.p) == 1;
    seq.symbols[static_cast<std::size_t>(n)] = one ? 1 : 0;
  }
  return seq;
}

BinarySequence build_v(const PrimePowerParams& params) {
  BinarySequence seq{params, BinKind::V, {}};
  seq.symbols.resize(static_cast<std::size_t>(params.q));
  for (std::int64_t n = 0; n < params.q; ++n) {
    const std::int64_t t = (2 * n + 1) % params.n;
    const bool one = (t % params.p == 0) || qr_class(t, params.p) == 1;
    seq.symbols[static_cast<std::size_t>(n)] = one ? 1 : 0;
  }
  return seq;
}

BalanceStats balance_stats(const QuaternarySequence& seq) {
  BalanceStats stats;
  for (std::uint8_t sym : seq.symbols) stats.counts[sym] += 1;
  const auto [lo, hi] = std::minmax_element(stats.counts.begin(), stats.counts.end());
  stats.balanced = (*hi - *lo) <= 1;
  return stats;
}

}  // namespace qcseq
