#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcseq/number_theory.hpp"

namespace qcseq {

/// Hard cap on 2 p^m for class-table construction.
inline constexpr std::int64_t kMaxTableModulus = 1'000'000;

/// Hard cap on the period of an O(L^2) correlation sweep.
inline constexpr std::int64_t kMaxCorrelationPeriod = 20'000;

enum class LabelKind : std::uint8_t {
  ZeroMod2p,  ///< n = 0 (mod 2p)
  PMod2p,     ///< n = p (mod 2p)
  Unit2pm,    ///< n in D_cls^(2p^m)
  TwoUnit,    ///< n in 2 D_cls^(p^m)
};

/// Position of a residue of Z_{2p^m} in the class partition.
struct ResidueLabel {
  LabelKind kind = LabelKind::ZeroMod2p;
  int cls = 0;  ///< 0 or 1; meaningful for Unit2pm and TwoUnit only

  friend bool operator==(const ResidueLabel&, const ResidueLabel&) = default;
};

std::string to_string(const ResidueLabel& label);

/// Generalized cyclotomic classes of order 2, enumerated at every level
/// j = 1..m for both moduli p^j and 2p^j, plus a label array covering all of
/// Z_{2p^m}. Immutable after construction; safe to share across threads.
struct ClassTable {
  PrimePowerParams params;

  /// units_pm[j-1][i] = sorted D_i^(p^j); units_2pm[j-1][i] = sorted D_i^(2p^j).
  std::vector<std::array<std::vector<std::int64_t>, 2>> units_pm;
  std::vector<std::array<std::vector<std::int64_t>, 2>> units_2pm;

  /// label_of[n] for every n in [0, 2p^m).
  std::vector<ResidueLabel> label_of;

  const std::vector<std::int64_t>& d_pm(int level, int cls) const;
  const std::vector<std::int64_t>& d_2pm(int level, int cls) const;
};

/// Enumerates every class by iterating powers of g. Throws
/// resource_limit_error when 2 p^m exceeds kMaxTableModulus.
ClassTable build_class_table(const PrimePowerParams& params);

/// Table lookup. Requires 0 <= n < 2 p^m.
ResidueLabel classify(std::int64_t n, const ClassTable& table);

/// Same result as classify without the table: the class of a unit of
/// Z_{2p^j} or Z_{p^j} is decided by its residue mod p alone, so one Euler
/// test suffices. Requires 0 <= n < 2 p^m.
ResidueLabel fast_class(std::int64_t n, const PrimePowerParams& params);

/// |(D_i^(q) + 1) n D_j^(q)| by direct set intersection.
std::int64_t cyclotomic_number_bf(int i, int j, const ClassTable& table);

/// The same count in closed form, branching on p mod 4.
std::int64_t cyclotomic_number_cf(int i, int j, const PrimePowerParams& params);

}  // namespace qcseq
